#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kummer/field_hom.hpp"
#include "kummer/permutation.hpp"

namespace kummer {

/// One factor of G_T: an automorphism of Spec A_0[sqrt(c), sqrt(1-c)] lying
/// over a base automorphism of S_0.  It is determined by the base point
/// permutation of {0, 1, oo} and the two branch signs of the generator
/// images, 6 x 4 = 24 elements in total.
class GTFactorElement {
public:
    GTFactorElement() : base_(), sign_c_(+1), sign_1mc_(+1) {}
    GTFactorElement(Perm3 base, int sign_c, int sign_1mc)
        : base_(base), sign_c_(static_cast<int8_t>(sign_c)), sign_1mc_(static_cast<int8_t>(sign_1mc)) {}

    static GTFactorElement identity() { return GTFactorElement(); }

    /// All 24 elements: bases in lexicographic order, signs in the order
    /// (+,+), (+,-), (-,+), (-,-).  lift_rho picks the first match herein.
    static const std::vector<GTFactorElement>& all();

    const Perm3& base() const { return base_; }
    int sign_c() const { return sign_c_; }
    int sign_1mc() const { return sign_1mc_; }
    bool is_identity() const { return base_.is_identity() && sign_c_ == 1 && sign_1mc_ == 1; }

    /// Pullback of the coordinate under the base automorphism, in variable v.
    Rat base_mobius(Var v) const;

    /// Images of sqrt(c) and sqrt(1-c) written in variable v.
    FieldElement sqrt_c_image(Var v) const;
    FieldElement sqrt_1mc_image(Var v) const;

    /// The pullback homomorphism acting on variable v only (identity on the
    /// other variable).
    FieldHom hom(Var v) const;

    /// Group law compatible with composition of point maps: h acts first,
    /// so the pullback of (g * h) is h-pullback after g-pullback.
    friend GTFactorElement operator*(const GTFactorElement& g, const GTFactorElement& h);

    GTFactorElement inverse() const;

    friend bool operator==(const GTFactorElement& x, const GTFactorElement& y) {
        return x.base_ == y.base_ && x.sign_c_ == y.sign_c_ && x.sign_1mc_ == y.sign_1mc_;
    }
    friend bool operator!=(const GTFactorElement& x, const GTFactorElement& y) { return !(x == y); }
    friend bool operator<(const GTFactorElement& x, const GTFactorElement& y) {
        if (!(x.base_ == y.base_)) return x.base_ < y.base_;
        if (x.sign_c_ != y.sign_c_) return x.sign_c_ > y.sign_c_;
        return x.sign_1mc_ > y.sign_1mc_;
    }

    std::string str() const;

private:
    Perm3 base_;
    int8_t sign_c_, sign_1mc_;
};

/// Position of an element in GTFactorElement::all().
int gt_factor_index(const GTFactorElement& t);

}  // namespace kummer
