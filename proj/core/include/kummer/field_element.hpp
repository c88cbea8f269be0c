#pragma once

#include <array>
#include <complex>

#include "kummer/rational_function.hpp"

namespace kummer {

class BranchPoint;

/// Indices of the four square-root generators.  A monomial of the extension
/// is a subset of {SqrtA, SqrtOneMinusA, SqrtB, SqrtOneMinusB} encoded as a
/// 4-bit mask, so the field F = Q(i)(a,b)[sqrt(a), sqrt(1-a), sqrt(b),
/// sqrt(1-b)] is a free module of rank 16 over Q(i)(a,b).
enum RootBit : int {
    kSqrtA = 1 << 0,
    kSqrtOneMinusA = 1 << 1,
    kSqrtB = 1 << 2,
    kSqrtOneMinusB = 1 << 3,
};

/// Element of F as a 16-coefficient vector indexed by root-monomial mask.
class FieldElement {
public:
    static constexpr int kSlots = 16;

    FieldElement() = default;
    FieldElement(long v) { coeff_[0] = Rat(v); }  // NOLINT: implicit by design
    explicit FieldElement(Rat r) { coeff_[0] = std::move(r); }
    explicit FieldElement(const GaussianRational& c) { coeff_[0] = Rat(c); }

    static FieldElement root(RootBit bit) {
        FieldElement e;
        e.coeff_[static_cast<int>(bit)] = Rat(1);
        return e;
    }
    static FieldElement var(Var v) { return FieldElement(Rat::variable(v)); }
    static FieldElement i() { return FieldElement(GaussianRational::i()); }
    static FieldElement root_of_unity(int k) {
        return FieldElement(GaussianRational::root_of_unity(k));
    }

    const Rat& coeff(int mask) const { return coeff_[mask]; }
    void set_coeff(int mask, Rat r) { coeff_[mask] = std::move(r); }

    bool is_zero() const;
    bool is_rational() const;  // only the mask-0 slot may be nonzero
    /// Constant in Q(i) (mask-0 slot, degree 0)?
    bool is_constant() const { return is_rational() && coeff_[0].is_constant(); }

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    friend FieldElement operator*(const FieldElement& x, const Rat& r);
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
        return x * y.inverse();
    }

    friend bool operator==(const FieldElement& x, const FieldElement& y);
    friend bool operator!=(const FieldElement& x, const FieldElement& y) { return !(x == y); }

    /// Multiplicative inverse through the norm over the rank-16 module: the
    /// product of all sixteen sign-flip conjugates lands in the rational slot.
    FieldElement inverse() const;

    FieldElement pow(int e) const;

    /// Formal partial derivative; the generators obey
    /// d sqrt(a)/da = sqrt(a)/(2a) and d sqrt(1-a)/da = -sqrt(1-a)/(2(1-a)).
    FieldElement derivative(Var v) const;

    /// Negate every slot whose monomial contains one of the given roots an
    /// odd number of times (i.e. mask overlap of odd parity).
    FieldElement flip_roots(int root_mask) const;

    std::complex<double> eval(const BranchPoint& p) const;

private:
    std::array<Rat, kSlots> coeff_{};
};

}  // namespace kummer
