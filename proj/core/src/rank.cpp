#include "kummer/rank.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <map>
#include <set>

#include "kummer/errors.hpp"
#include "kummer/periods.hpp"
#include "kummer/serialize.hpp"

namespace kummer {

namespace {

FieldElement mono_frac(int mask, Poly den) {
    FieldElement e;
    e.set_coeff(mask, Rat(Poly(1), std::move(den)));
    return e;
}

FieldElement mono_poly(int mask, Poly num) {
    FieldElement e;
    e.set_coeff(mask, Rat(std::move(num)));
    return e;
}

Poly poly_a() { return Poly::variable(Var::A); }
Poly poly_b() { return Poly::variable(Var::B); }

// The distinguished elements that move the seed onto the other two
// canonical families: rho_a flips the sign of sqrt(1-a) only; rho_b swaps
// sqrt(a) <-> sqrt(1-a) and sqrt(b) <-> sqrt(1-b) over (1 oo)^2.
GXElement rho_a_element() {
    return GXElement(Perm4(), Perm4(), GTFactorElement(Perm3(), +1, -1), GTFactorElement(), 0);
}

GXElement rho_b_element() {
    const Perm4 one_inf({0, 3, 2, 1});
    const Perm3 swap01({1, 0, 2});
    return GXElement(one_inf, one_inf, GTFactorElement(swap01, +1, +1),
                     GTFactorElement(swap01, +1, +1), 0);
}

std::array<std::pair<FieldElement, FieldElement>, 3> stored_canonical() {
    const Rat scale(Poly(2), poly_a() - poly_b());
    std::array<std::pair<FieldElement, FieldElement>, 3> v;
    v[0] = {FieldElement(scale), FieldElement(-scale)};
    // ratio sqrt(1-b)/sqrt(1-a) and its mirror
    v[1] = {mono_frac(kSqrtOneMinusA | kSqrtOneMinusB, Poly(1) - poly_a()) * scale,
            -(mono_frac(kSqrtOneMinusA | kSqrtOneMinusB, Poly(1) - poly_b()) * scale)};
    v[2] = {mono_frac(kSqrtA | kSqrtB, poly_a()) * scale,
            -(mono_frac(kSqrtA | kSqrtB, poly_b()) * scale)};
    return v;
}

}  // namespace

std::pair<FieldElement, FieldElement> seed_image() { return inhomogeneous_rhs(); }

std::array<NormalFunctionImage, 3> canonical_images() {
    const auto stored = stored_canonical();
    // Derivation from the seed: Theta_{rho_a}(seed) is the image of the sum
    // family, Theta_{rho_b}(seed) the image of the 0-minus-infinity family.
    const auto seed = seed_image();
    const Rat half(Poly(1), Poly(2));
    auto sum = theta_action(rho_a_element(), seed);
    std::pair<FieldElement, FieldElement> derived0 = {(sum.first - seed.first) * half,
                                                      (sum.second - seed.second) * half};
    std::pair<FieldElement, FieldElement> derived1 = {(sum.first + seed.first) * half,
                                                      (sum.second + seed.second) * half};
    auto diff_inf = theta_action(rho_b_element(), seed);
    std::pair<FieldElement, FieldElement> derived2 = {derived0.first - diff_inf.first,
                                                      derived0.second - diff_inf.second};
    const std::array<std::pair<FieldElement, FieldElement>, 3> derived = {derived0, derived1,
                                                                          derived2};
    for (int k = 0; k < 3; ++k) {
        if (!(derived[k].first == stored[k].first) || !(derived[k].second == stored[k].second))
            throw DerivationMismatch("canonical_images: Theta-derived triple differs from stored");
    }
    std::array<NormalFunctionImage, 3> out;
    for (int k = 0; k < 3; ++k) out[k] = {CycleLabel{GXElement::identity(), k}, stored[k]};
    return out;
}

GXElement lift_rho(const Perm4& target1, const Perm4& target2) {
    if (target1(2) != 2 || target2(2) != 2)
        throw DomainError("lift_rho: targets must lie in S({0,1,oo})");
    Perm3 u1 = underline(target1), u2 = underline(target2);
    GTFactorElement t1(u1, +1, +1), t2(u2, +1, +1);  // first branch pair in enumeration order
    int zeta_pow = (u1.sign() * u2.sign() > 0) ? 0 : 1;
    return GXElement(target1, target2, t1, t2, zeta_pow);
}

const std::vector<Rat>& f1_catalog() {
    static const std::vector<Rat> cat = [] {
        const Poly a = poly_a(), b = poly_b(), one = Poly(1);
        std::vector<Poly> dens = {a - b,         a + b - one, a * b - a - b,
                                  a * b - b + one, a * b - one, a - a * b - one};
        std::vector<Rat> out;
        for (auto& d : dens) out.emplace_back(Poly(1), d);
        return out;
    }();
    return cat;
}

const std::vector<FieldElement>& f2_catalog() {
    static const std::vector<FieldElement> cat = [] {
        const Poly a = poly_a(), b = poly_b();
        const Poly oma = Poly(1) - a, omb = Poly(1) - b;
        std::vector<FieldElement> out;
        out.push_back(FieldElement(1));                                    // 1
        out.push_back(mono_frac(kSqrtA | kSqrtB, a));                      // sqrt(b)/sqrt(a)
        out.push_back(mono_frac(kSqrtOneMinusA | kSqrtOneMinusB, oma));    // sqrt(1-b)/sqrt(1-a)
        out.push_back(mono_frac(kSqrtA | kSqrtOneMinusB, a));              // sqrt(1-b)/sqrt(a)
        out.push_back(mono_frac(kSqrtOneMinusA | kSqrtB, oma));            // sqrt(b)/sqrt(1-a)
        out.push_back(mono_frac(kSqrtOneMinusA, oma));                     // 1/sqrt(1-a)
        out.push_back(mono_poly(kSqrtOneMinusB, Poly(1)));                 // sqrt(1-b)
        out.push_back(mono_frac(kSqrtA, a));                               // 1/sqrt(a)
        out.push_back(mono_poly(kSqrtB, Poly(1)));                         // sqrt(b)
        return out;
    }();
    return cat;
}

namespace {

// Mirror catalog for second components: the same nine shapes with the roles
// of a and b exchanged.
const std::vector<FieldElement>& g2_catalog() {
    static const std::vector<FieldElement> cat = [] {
        const Poly a = poly_a(), b = poly_b();
        const Poly oma = Poly(1) - a, omb = Poly(1) - b;
        std::vector<FieldElement> out;
        out.push_back(FieldElement(1));
        out.push_back(mono_frac(kSqrtA | kSqrtB, b));                      // sqrt(a)/sqrt(b)
        out.push_back(mono_frac(kSqrtOneMinusA | kSqrtOneMinusB, omb));    // sqrt(1-a)/sqrt(1-b)
        out.push_back(mono_frac(kSqrtOneMinusA | kSqrtB, b));              // sqrt(1-a)/sqrt(b)
        out.push_back(mono_frac(kSqrtA | kSqrtOneMinusB, omb));            // sqrt(a)/sqrt(1-b)
        out.push_back(mono_frac(kSqrtOneMinusB, omb));                     // 1/sqrt(1-b)
        out.push_back(mono_poly(kSqrtOneMinusA, Poly(1)));                 // sqrt(1-a)
        out.push_back(mono_frac(kSqrtB, b));                               // 1/sqrt(b)
        out.push_back(mono_poly(kSqrtA, Poly(1)));                         // sqrt(a)
        return out;
    }();
    return cat;
}

struct EntrySpec {
    int zeta_pow;      // i^k factor
    int f2;            // first-component catalog index
    int g2;            // second-component mirror index
    int g2_sign;       // sign of the second component
};

std::pair<FieldElement, FieldElement> build_entry(int f1, const EntrySpec& e) {
    FieldElement scale = FieldElement::root_of_unity(e.zeta_pow) * FieldElement(2) *
                         FieldElement(f1_catalog()[f1]);
    FieldElement first = scale * f2_catalog()[e.f2];
    FieldElement second = scale * g2_catalog()[e.g2];
    if (e.g2_sign < 0) second = -second;
    return {first, second};
}

}  // namespace

const std::vector<Table2Entry>& table2_reference() {
    static const std::vector<Table2Entry> table = [] {
        const Perm4 id4;
        const Perm4 targets[6] = {
            Perm4(),                 // id
            Perm4({1, 0, 2, 3}),     // (0 1)
            Perm4({0, 3, 2, 1}),     // (1 oo)
            Perm4({1, 3, 2, 0}),     // (0 1 oo)
            Perm4({3, 1, 2, 0}),     // (0 oo)
            Perm4({3, 0, 2, 1}),     // (0 oo 1)
        };
        const int f1_of_row[6] = {0, 2, 1, 3, 4, 5};
        // {zeta_pow, F2, G2, sign} per bullet.
        const EntrySpec entries[6][3] = {
            {{0, 0, 0, -1}, {0, 2, 2, -1}, {0, 1, 1, -1}},  // id
            {{0, 6, 5, +1}, {0, 5, 6, +1}, {1, 1, 1, -1}},  // (0 1)
            {{1, 0, 0, -1}, {1, 4, 3, -1}, {1, 3, 4, -1}},  // (1 oo)
            {{1, 8, 7, +1}, {1, 5, 6, +1}, {0, 3, 4, -1}},  // (0 1 oo)
            {{0, 8, 7, +1}, {1, 2, 2, -1}, {0, 7, 8, +1}},  // (0 oo)
            {{1, 6, 5, +1}, {0, 4, 3, -1}, {1, 7, 8, +1}},  // (0 oo 1)
        };
        std::vector<Table2Entry> out;
        for (int r = 0; r < 6; ++r)
            for (int bullet = 0; bullet < 3; ++bullet)
                out.push_back(Table2Entry{id4, targets[r], bullet,
                                          build_entry(f1_of_row[r], entries[r][bullet])});
        return out;
    }();
    return table;
}

std::vector<Table2Row> table2() {
    const auto canon = canonical_images();
    std::vector<Table2Row> rows;
    for (const auto& entry : table2_reference()) {
        GXElement g = lift_rho(entry.target1, entry.target2);
        auto computed = theta_action(g, canon[entry.bullet].d_image);
        int zeta_class = -1;
        for (int k = 0; k < 4; ++k) {
            FieldElement u = FieldElement::root_of_unity(k);
            if (computed.first == u * entry.stored.first &&
                computed.second == u * entry.stored.second) {
                zeta_class = k;
                break;
            }
        }
        if (zeta_class < 0)
            throw Table2Mismatch("table2: no mu_4 factor reconciles row (" +
                                 perm4_str(entry.target2) + ", bullet " +
                                 std::to_string(entry.bullet) + ")");
        FirstFactorization fac = factor_first_component(computed.first);
        rows.push_back(Table2Row{NormalFunctionImage{CycleLabel{g, entry.bullet}, computed},
                                 zeta_class, fac.f1_index, fac.f2_index});
    }
    return rows;
}

FirstFactorization factor_first_component(const FieldElement& f) {
    int mask = -1;
    for (int m = 0; m < FieldElement::kSlots; ++m) {
        if (f.coeff(m).is_zero()) continue;
        if (mask >= 0) throw FactorizationFailure("first component is not a single monomial");
        mask = m;
    }
    if (mask < 0) throw FactorizationFailure("first component is zero");
    const auto& f1s = f1_catalog();
    const auto& f2s = f2_catalog();
    for (size_t i = 0; i < f1s.size(); ++i) {
        for (size_t j = 0; j < f2s.size(); ++j) {
            const FieldElement& f2 = f2s[j];
            if (f2.coeff(mask).is_zero()) continue;
            Rat cand = Rat(2) * f1s[i] * f2.coeff(mask);
            Rat ratio = f.coeff(mask) / cand;
            if (!ratio.is_constant()) continue;
            GaussianRational c = ratio.constant_value();
            for (int k = 0; k < 4; ++k) {
                if (c == GaussianRational::root_of_unity(k))
                    return FirstFactorization{k, static_cast<int>(i), static_cast<int>(j)};
            }
        }
    }
    throw FactorizationFailure("first component escapes the catalog");
}

int structural_rank(const std::vector<NormalFunctionImage>& rows) {
    std::set<std::pair<int, int>> pairs;
    for (const auto& r : rows) {
        FirstFactorization f = factor_first_component(r.d_image.first);
        pairs.insert({f.f1_index, f.f2_index});
    }
    return static_cast<int>(pairs.size());
}

int numeric_rank(const std::vector<NormalFunctionImage>& rows,
                 const std::vector<BranchPoint>& points) {
    if (points.size() < rows.size())
        throw DomainError("numeric_rank: need at least as many points as rows");
    Eigen::MatrixXcd m(points.size(), rows.size());
    for (size_t p = 0; p < points.size(); ++p)
        for (size_t r = 0; r < rows.size(); ++r)
            m(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(r)) =
                rows[r].d_image.first.eval(points[p]);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index k = 0; k < sigma.size(); ++k)
        if (sigma(k) / sigma(0) >= 1e-8) ++rank;
    return rank;
}

namespace {

struct OrbitImage {
    int f1, f2, zeta_mod2;
    std::pair<FieldElement, FieldElement> v;  // sign-normalized representative
};

// Exact Q-rank of a set of sign-normalized images: first components with
// distinct (F1, F2) are independent over C, so only images sharing a factor
// pair can be Q-dependent, and there dependence means a rational
// proportionality of the full vector.
int rank_of_images(const std::map<std::string, OrbitImage>& images) {
    std::map<std::pair<int, int>, std::vector<const OrbitImage*>> groups;
    for (const auto& [key, img] : images) groups[{img.f1, img.f2}].push_back(&img);
    int rank = 0;
    for (const auto& [fp, vec] : groups) {
        std::vector<const OrbitImage*> basis;
        for (const OrbitImage* img : vec) {
            bool dependent = false;
            for (const OrbitImage* b : basis) {
                int mask = 0;
                for (int m = 0; m < FieldElement::kSlots; ++m)
                    if (!b->v.first.coeff(m).is_zero()) mask = m;
                Rat ratio = img->v.first.coeff(mask) / b->v.first.coeff(mask);
                if (!ratio.is_constant()) continue;
                GaussianRational c = ratio.constant_value();
                if (!c.is_rational()) continue;
                if (img->v.second == b->v.second * ratio) {
                    dependent = true;
                    break;
                }
            }
            if (!dependent) basis.push_back(img);
        }
        rank += static_cast<int>(basis.size());
    }
    return rank;
}

}  // namespace

int orbit_rank(const std::vector<GXElement>& elements) {
    const auto canon = canonical_images();
    // Theta depends only on (tau, zeta); memoize the three images per class.
    std::map<std::tuple<int, int, int>, std::array<OrbitImage, 3>> memo;
    std::map<std::string, OrbitImage> images;
    for (const auto& g : elements) {
        auto key = std::make_tuple(gt_factor_index(g.tau1()), gt_factor_index(g.tau2()),
                                   g.zeta_pow());
        auto it = memo.find(key);
        if (it == memo.end()) {
            std::array<OrbitImage, 3> trio;
            for (int bullet = 0; bullet < 3; ++bullet) {
                auto img = theta_action(g, canon[bullet].d_image);
                FirstFactorization fac = factor_first_component(img.first);
                int z = fac.zeta_pow;
                if (z >= 2) {  // normalize modulo sign
                    img.first = -img.first;
                    img.second = -img.second;
                    z -= 2;
                }
                trio[bullet] = OrbitImage{fac.f1_index, fac.f2_index, z, img};
            }
            it = memo.emplace(key, trio).first;
        }
        for (const auto& img : it->second) {
            std::string k = std::to_string(img.f1) + "|" + std::to_string(img.f2) + "|" +
                            std::to_string(img.zeta_mod2) + "|" + to_string(img.v.first) + "|" +
                            to_string(img.v.second);
            images.emplace(std::move(k), img);
        }
    }
    return rank_of_images(images);
}

int orbit_rank_full() { return orbit_rank(gx_all()); }

int orbit_rank_subgroup_h() {
    std::vector<GXElement> elems;
    for (const auto& g : gx_all())
        if (in_subgroup_h(g)) elems.push_back(g);
    return orbit_rank(elems);
}

int orbit_rank_subgroup_i() {
    std::vector<GXElement> elems;
    for (const auto& g : gx_all())
        if (in_subgroup_i(g)) elems.push_back(g);
    return orbit_rank(elems);
}

}  // namespace kummer
