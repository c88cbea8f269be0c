#include "kummer/gt_factor.hpp"

#include <stdexcept>

#include "kummer/sigma_action.hpp"

namespace kummer {

namespace {

struct RootPair {
    FieldElement sqrt_c, sqrt_1mc;
};

// Canonical (+,+) generator images for each base, in variable v.  Every
// pullback of c and 1-c has an explicit square root inside the field; 1/sqrt
// values are normalized as sqrt(x)/x so the module rank stays 16.
RootPair canonical_images(const Perm3& base, Var v) {
    const int lo = v == Var::A ? kSqrtA : kSqrtB;
    const int hi = v == Var::A ? kSqrtOneMinusA : kSqrtOneMinusB;
    const Poly x = Poly::variable(v);
    const Poly one_minus_x = Poly(1) - x;
    const FieldElement rl = FieldElement::root(static_cast<RootBit>(lo));
    const FieldElement rh = FieldElement::root(static_cast<RootBit>(hi));
    const FieldElement i = FieldElement::i();

    const FieldElement inv_x(Rat(Poly(1), x));
    const FieldElement inv_1mx(Rat(Poly(1), one_minus_x));

    const std::array<uint8_t, 3> key = {base(0), base(1), base(2)};
    if (key == std::array<uint8_t, 3>{0, 1, 2})  // id
        return {rl, rh};
    if (key == std::array<uint8_t, 3>{1, 0, 2})  // (0 1): c -> 1-c
        return {rh, rl};
    if (key == std::array<uint8_t, 3>{0, 2, 1})  // (1 oo): c -> c/(c-1)
        return {i * rl * rh * inv_1mx, rh * inv_1mx};
    if (key == std::array<uint8_t, 3>{2, 1, 0})  // (0 oo): c -> 1/c
        return {rl * inv_x, i * rl * rh * inv_x};
    if (key == std::array<uint8_t, 3>{1, 2, 0})  // (0 1 oo): c -> 1/(1-c)
        return {rh * inv_1mx, i * rl * rh * inv_1mx};
    if (key == std::array<uint8_t, 3>{2, 0, 1})  // (0 oo 1): c -> (c-1)/c
        return {i * rl * rh * inv_x, rl * inv_x};
    throw std::logic_error("canonical_images: invalid base");
}

}  // namespace

const std::vector<GTFactorElement>& GTFactorElement::all() {
    static const std::vector<GTFactorElement> elems = [] {
        std::vector<GTFactorElement> out;
        out.reserve(24);
        for (const Perm3& base : Perm3::all())
            for (int sc : {+1, -1})
                for (int s1 : {+1, -1}) out.emplace_back(base, sc, s1);
        return out;
    }();
    return elems;
}

Rat GTFactorElement::base_mobius(Var v) const {
    Rat m = mobius_of_perm3(base_);
    if (v == Var::A) return m;
    // Rename a -> b (no b occurs in m, so the b-image below is never used).
    return m.substitute(Poly::variable(Var::B), Poly(1), Poly(0), Poly(1));
}

FieldElement GTFactorElement::sqrt_c_image(Var v) const {
    FieldElement e = canonical_images(base_, v).sqrt_c;
    return sign_c_ > 0 ? e : -e;
}

FieldElement GTFactorElement::sqrt_1mc_image(Var v) const {
    FieldElement e = canonical_images(base_, v).sqrt_1mc;
    return sign_1mc_ > 0 ? e : -e;
}

FieldHom GTFactorElement::hom(Var v) const {
    if (v == Var::A) {
        return FieldHom(base_mobius(Var::A), Rat::variable(Var::B), sqrt_c_image(Var::A),
                        sqrt_1mc_image(Var::A), FieldElement::root(kSqrtB),
                        FieldElement::root(kSqrtOneMinusB));
    }
    return FieldHom(Rat::variable(Var::A), base_mobius(Var::B), FieldElement::root(kSqrtA),
                    FieldElement::root(kSqrtOneMinusA), sqrt_c_image(Var::B),
                    sqrt_1mc_image(Var::B));
}

GTFactorElement operator*(const GTFactorElement& g, const GTFactorElement& h) {
    Perm3 base = g.base() * h.base();
    FieldHom hh = h.hom(Var::A);
    FieldElement sc = hh.apply(g.sqrt_c_image(Var::A));
    FieldElement s1 = hh.apply(g.sqrt_1mc_image(Var::A));
    RootPair canon = canonical_images(base, Var::A);
    int sign_c, sign_1mc;
    if (sc == canon.sqrt_c)
        sign_c = +1;
    else if (sc == -canon.sqrt_c)
        sign_c = -1;
    else
        throw std::logic_error("GTFactorElement: product escapes the 24-element set");
    if (s1 == canon.sqrt_1mc)
        sign_1mc = +1;
    else if (s1 == -canon.sqrt_1mc)
        sign_1mc = -1;
    else
        throw std::logic_error("GTFactorElement: product escapes the 24-element set");
    return GTFactorElement(base, sign_c, sign_1mc);
}

GTFactorElement GTFactorElement::inverse() const {
    for (const auto& cand : all())
        if ((*this * cand).is_identity()) return cand;
    throw std::logic_error("GTFactorElement: no inverse found");
}

std::string GTFactorElement::str() const {
    std::string s = perm3_str(base_);
    s += sign_c_ > 0 ? "[+" : "[-";
    s += sign_1mc_ > 0 ? "+]" : "-]";
    return s;
}

int gt_factor_index(const GTFactorElement& t) {
    const auto& all = GTFactorElement::all();
    for (size_t k = 0; k < all.size(); ++k)
        if (all[k] == t) return static_cast<int>(k);
    throw std::logic_error("gt_factor_index: element not in table");
}

}  // namespace kummer
