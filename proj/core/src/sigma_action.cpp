#include "kummer/sigma_action.hpp"

#include <map>

#include "kummer/errors.hpp"

namespace kummer {

namespace {

Poly lin(long c0, long c1) {  // c0 + c1 * c
    Poly p(c0);
    p.add_term(Mono{1, 0}, GaussianRational(c1));
    return p;
}

Rat mob(long alpha, long beta, long gamma, long delta) {  // (alpha*c + beta)/(gamma*c + delta)
    return Rat(lin(beta, alpha), lin(delta, gamma));
}

SigmaAction rec(std::array<uint8_t, 4> img, Rat c, Poly p, Poly q, Poly r, Poly s) {
    return SigmaAction{Perm4(img), std::move(c), {std::move(p), std::move(q), std::move(r), std::move(s)}};
}

std::vector<SigmaAction> build_table() {
    const Poly one = lin(1, 0), zero = lin(0, 0), c = lin(0, 1);
    const Poly onemc = lin(1, -1), cm1 = lin(-1, 1);
    std::vector<SigmaAction> t;
    t.reserve(24);
    // identity
    t.push_back(rec({0, 1, 2, 3}, mob(1, 0, 0, 1), one, zero, zero, one));
    // transpositions
    t.push_back(rec({1, 0, 2, 3}, mob(1, 0, 1, -1), -one, one, zero, one));    // (0 1): 1-z
    t.push_back(rec({2, 1, 0, 3}, mob(-1, 1, 0, 1), -c, one, zero, onemc));    // (0 1/c): (1-cz)/(1-c)
    t.push_back(rec({3, 1, 2, 0}, mob(0, 1, 1, 0), zero, one, one, zero));     // (0 oo): 1/z
    t.push_back(rec({0, 1, 3, 2}, mob(1, 0, 1, -1), onemc, zero, -c, one));    // (1/c oo): (1-c)z/(1-cz)
    t.push_back(rec({0, 3, 2, 1}, mob(-1, 1, 0, 1), one, zero, one, -one));    // (1 oo): z/(z-1)
    t.push_back(rec({0, 2, 1, 3}, mob(0, 1, 1, 0), c, zero, zero, one));       // (1 1/c): cz
    // double transpositions
    t.push_back(rec({1, 0, 3, 2}, mob(1, 0, 0, 1), -one, one, -c, one));       // (0 1)(1/c oo)
    t.push_back(rec({2, 3, 0, 1}, mob(1, 0, 0, 1), -c, one, -c, c));           // (0 1/c)(1 oo)
    t.push_back(rec({3, 2, 1, 0}, mob(1, 0, 0, 1), zero, one, c, zero));       // (0 oo)(1 1/c)
    // 3-cycles
    t.push_back(rec({1, 2, 0, 3}, mob(0, 1, -1, 1), -c, one, zero, one));      // (0 1 1/c): 1-cz
    t.push_back(rec({2, 0, 1, 3}, mob(1, -1, 1, 0), -c, c, zero, cm1));        // (0 1/c 1): c(1-z)/(c-1)
    t.push_back(rec({3, 0, 2, 1}, mob(0, 1, -1, 1), one, -one, one, zero));    // (0 oo 1): (z-1)/z
    t.push_back(rec({1, 3, 2, 0}, mob(1, -1, 1, 0), zero, one, -one, one));    // (0 1 oo): 1/(1-z)
    t.push_back(rec({2, 1, 3, 0}, mob(0, 1, -1, 1), zero, onemc, -c, one));    // (0 1/c oo): (1-c)/(1-cz)
    t.push_back(rec({3, 1, 0, 2}, mob(1, 0, 1, -1), -c, one, onemc, zero));    // (0 oo 1/c): (1-cz)/((1-c)z)
    t.push_back(rec({0, 3, 1, 2}, mob(0, 1, -1, 1), cm1, zero, -one, one));    // (1 oo 1/c): (c-1)z/(1-z)
    t.push_back(rec({0, 2, 3, 1}, mob(1, -1, 1, 0), c, zero, c, -one));        // (1 1/c oo): cz/(cz-1)
    // 4-cycles
    t.push_back(rec({2, 3, 1, 0}, mob(1, 0, 1, -1), zero, cm1, -c, c));        // (0 1/c 1 oo): (c-1)/(c(1-z))
    t.push_back(rec({1, 2, 3, 0}, mob(-1, 1, 0, 1), zero, one, -c, one));      // (0 1 1/c oo): 1/(1-cz)
    t.push_back(rec({1, 3, 0, 2}, mob(0, 1, 1, 0), -c, one, -one, one));       // (0 1 oo 1/c): (1-cz)/(1-z)
    t.push_back(rec({3, 2, 0, 1}, mob(1, 0, 1, -1), c, -one, c, zero));        // (0 oo 1 1/c): (cz-1)/(cz)
    t.push_back(rec({3, 0, 1, 2}, mob(-1, 1, 0, 1), -one, one, cm1, zero));    // (0 oo 1/c 1): (1-z)/((c-1)z)
    t.push_back(rec({2, 0, 3, 1}, mob(0, 1, 1, 0), -c, c, -c, one));           // (0 1/c oo 1): c(1-z)/(1-cz)
    return t;
}

}  // namespace

const std::vector<SigmaAction>& sigma_table_all() {
    static const std::vector<SigmaAction> table = build_table();
    return table;
}

const SigmaAction& sigma_table(const Perm4& perm) {
    for (const auto& r : sigma_table_all())
        if (r.perm == perm) return r;
    throw NoMatch("sigma_table: permutation missing from table");
}

Perm3 mobius_point_action(const Rat& m) {
    // Exact images of 0, 1, oo under t -> num(t)/den(t).
    const Poly &num = m.num(), &den = m.den();
    auto value_at = [&](int which) -> int {  // returns 0, 1 or 2 (= oo)
        GaussianRational n, d;
        if (which == 0) {  // t = 0: constant terms
            n = num.constant_value();
            d = den.constant_value();
        } else if (which == 1) {  // t = 1: coefficient sums
            for (const auto& [mo, co] : num.terms()) n += co;
            for (const auto& [mo, co] : den.terms()) d += co;
        } else {  // t = oo: compare degrees
            int dn = num.degree_a(), dd = den.degree_a();
            if (dn > dd) return 2;
            if (dn < dd) return 0;
            n = num.leading_coeff();
            d = den.leading_coeff();
        }
        if (d.is_zero()) {
            if (n.is_zero()) throw NoMatch("mobius_point_action: indeterminate value");
            return 2;
        }
        GaussianRational v = n / d;
        if (v.is_zero()) return 0;
        if (v.is_one()) return 1;
        throw NoMatch("mobius_point_action: image escapes {0,1,oo}");
    };
    std::array<uint8_t, 3> img{};
    bool hit[3] = {};
    for (int v = 0; v < 3; ++v) {
        int w = value_at(v);
        img[v] = static_cast<uint8_t>(w);
        if (hit[w]) throw NoMatch("mobius_point_action: not a bijection on {0,1,oo}");
        hit[w] = true;
    }
    return Perm3(img);
}

Perm3 underline(const SigmaAction& rec) { return mobius_point_action(rec.c_image); }
Perm3 underline(const Perm4& rho) { return underline(sigma_table(rho)); }

Rat mobius_of_perm3(const Perm3& p) {
    // The coordinate formula of the point map is also its pullback on c.
    // Interpolate the Moebius map through p(0), p(1), p(oo).
    static const std::map<std::array<uint8_t, 3>, std::array<long, 4>> kCoeffs = {
        {{0, 1, 2}, {1, 0, 0, 1}},    // c
        {{1, 0, 2}, {-1, 1, 0, 1}},   // 1 - c
        {{0, 2, 1}, {1, 0, 1, -1}},   // c/(c-1)
        {{2, 1, 0}, {0, 1, 1, 0}},    // 1/c
        {{1, 2, 0}, {0, 1, -1, 1}},   // 1/(1-c)   (0 1 oo)
        {{2, 0, 1}, {1, -1, 1, 0}},   // (c-1)/c   (0 oo 1)
    };
    std::array<uint8_t, 3> key = {p(0), p(1), p(2)};
    auto it = kCoeffs.find(key);
    if (it == kCoeffs.end()) throw NoMatch("mobius_of_perm3: invalid permutation data");
    const auto& k = it->second;
    Poly num(k[1]);
    num.add_term(Mono{1, 0}, GaussianRational(k[0]));
    Poly den(k[3]);
    den.add_term(Mono{1, 0}, GaussianRational(k[2]));
    return Rat(num, den);
}

namespace {

// M_g with c substituted by m_h, denominators cleared entry-wise to a common
// power, then multiplied by M_h.  Compared projectively against the stored
// record of the composed permutation.
bool closure_pair_ok(const SigmaAction& g, const SigmaAction& h, const SigmaAction& stored) {
    // c-part: m_g o m_h must equal the stored Moebius exactly (Rat is canonical).
    Rat comp_c = g.c_image.substitute(h.c_image.num(), h.c_image.den(), Poly(0), Poly(1));
    if (!(comp_c == stored.c_image)) return false;

    // z-part.
    const Poly& nh = h.c_image.num();
    const Poly& dh = h.c_image.den();
    int maxdeg = 0;
    for (const auto& e : g.z_image) maxdeg = std::max(maxdeg, e.degree_a());
    std::array<Poly, 4> gz;
    for (int k = 0; k < 4; ++k) {
        auto [num, den] = g.z_image[k].substitute(nh, dh, Poly(0), Poly(1));
        gz[k] = num * Poly::pow(dh, maxdeg - g.z_image[k].degree_a());
    }
    // 2x2 product (gz o m_h) * M_h.
    std::array<Poly, 4> prod = {
        gz[0] * h.z_image[0] + gz[1] * h.z_image[2], gz[0] * h.z_image[1] + gz[1] * h.z_image[3],
        gz[2] * h.z_image[0] + gz[3] * h.z_image[2], gz[2] * h.z_image[1] + gz[3] * h.z_image[3]};
    // Projective equality with the stored matrix.
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(prod[i] * stored.z_image[j] == prod[j] * stored.z_image[i])) return false;
    // Rule out the degenerate all-zero case.
    bool nonzero = false;
    for (const auto& e : prod) nonzero = nonzero || !e.is_zero();
    return nonzero;
}

}  // namespace

std::vector<std::pair<Perm4, Perm4>> sigma_closure_failures(const std::vector<SigmaAction>& table) {
    auto find = [&table](const Perm4& p) -> const SigmaAction* {
        for (const auto& r : table)
            if (r.perm == p) return &r;
        return nullptr;
    };
    std::vector<std::pair<Perm4, Perm4>> failures;
    for (const auto& g : table) {
        for (const auto& h : table) {
            const SigmaAction* stored = find(g.perm * h.perm);
            bool ok = false;
            if (stored != nullptr) {
                try {
                    ok = closure_pair_ok(g, h, *stored);
                } catch (const std::exception&) {
                    ok = false;
                }
            }
            if (!ok) failures.emplace_back(g.perm, h.perm);
        }
    }
    return failures;
}

}  // namespace kummer
