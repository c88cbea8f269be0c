#include "kummer/field_element.hpp"

#include "kummer/branch_point.hpp"
#include "kummer/errors.hpp"

namespace kummer {

namespace {

// Radicand of each generator, used when a product collapses a repeated root.
Poly radicand(int bit_index) {
    switch (bit_index) {
        case 0: return Poly::variable(Var::A);
        case 1: return Poly(1) - Poly::variable(Var::A);
        case 2: return Poly::variable(Var::B);
        default: return Poly(1) - Poly::variable(Var::B);
    }
}

}  // namespace

bool FieldElement::is_zero() const {
    for (const auto& r : coeff_)
        if (!r.is_zero()) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (int m = 1; m < kSlots; ++m)
        if (!coeff_[m].is_zero()) return false;
    return true;
}

FieldElement FieldElement::operator-() const {
    FieldElement r;
    for (int m = 0; m < kSlots; ++m) r.coeff_[m] = -coeff_[m];
    return r;
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    FieldElement r;
    for (int m = 0; m < FieldElement::kSlots; ++m) r.coeff_[m] = x.coeff_[m] + y.coeff_[m];
    return r;
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    FieldElement r;
    for (int m = 0; m < FieldElement::kSlots; ++m) r.coeff_[m] = x.coeff_[m] - y.coeff_[m];
    return r;
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    FieldElement r;
    for (int mx = 0; mx < FieldElement::kSlots; ++mx) {
        if (x.coeff_[mx].is_zero()) continue;
        for (int my = 0; my < FieldElement::kSlots; ++my) {
            if (y.coeff_[my].is_zero()) continue;
            Rat c = x.coeff_[mx] * y.coeff_[my];
            int overlap = mx & my;
            if (overlap) {
                Poly f = 1;
                for (int k = 0; k < 4; ++k)
                    if (overlap & (1 << k)) f = f * radicand(k);
                c *= Rat(f);
            }
            int m = mx ^ my;
            r.coeff_[m] += c;
        }
    }
    return r;
}

FieldElement operator*(const FieldElement& x, const Rat& r) {
    FieldElement out;
    for (int m = 0; m < FieldElement::kSlots; ++m) out.coeff_[m] = x.coeff_[m] * r;
    return out;
}

bool operator==(const FieldElement& x, const FieldElement& y) {
    for (int m = 0; m < FieldElement::kSlots; ++m)
        if (x.coeff_[m] != y.coeff_[m]) return false;
    return true;
}

FieldElement FieldElement::flip_roots(int root_mask) const {
    FieldElement r = *this;
    for (int m = 0; m < kSlots; ++m) {
        if (r.coeff_[m].is_zero()) continue;
        if (__builtin_popcount(m & root_mask) & 1) r.coeff_[m] = -r.coeff_[m];
    }
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw ZeroInverse("FieldElement: inverse of zero");
    // Tower of conjugations: multiplying by the sign-flip conjugate in one
    // root removes that root from the support, and after all four steps the
    // result is the norm N in the rational slot.  The inverse is the product
    // of the conjugating factors over N.
    FieldElement cur = *this;
    FieldElement acc = 1;
    for (int k = 0; k < 4; ++k) {
        FieldElement conj = cur.flip_roots(1 << k);
        acc = acc * conj;
        cur = cur * conj;
    }
    if (!cur.is_rational())
        throw DegenerateNorm("FieldElement: norm did not collapse to the rational slot");
    const Rat& n = cur.coeff(0);
    if (n.is_zero())
        throw DegenerateNorm("FieldElement: zero norm for nonzero element");
    return acc * n.inverse();
}

FieldElement FieldElement::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement r = 1, base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

FieldElement FieldElement::derivative(Var v) const {
    // d/dv of c * mono: the quotient rule on c plus the forced rules on the
    // square-root monomial itself.
    const int lo_bit = v == Var::A ? kSqrtA : kSqrtB;
    const int hi_bit = v == Var::A ? kSqrtOneMinusA : kSqrtOneMinusB;
    const Poly x = Poly::variable(v);
    const Rat half_over_x(Poly(1), Poly(2) * x);                      // 1/(2v)
    const Rat minus_half_over_1mx(Poly(-1), Poly(2) * (Poly(1) - x)); // -1/(2(1-v))

    FieldElement r;
    for (int m = 0; m < kSlots; ++m) {
        if (coeff_[m].is_zero()) continue;
        Rat d = coeff_[m].derivative(v);
        if (m & lo_bit) d += coeff_[m] * half_over_x;
        if (m & hi_bit) d += coeff_[m] * minus_half_over_1mx;
        r.coeff_[m] = std::move(d);
    }
    return r;
}

std::complex<double> FieldElement::eval(const BranchPoint& p) const {
    std::complex<double> acc = 0.0;
    for (int m = 0; m < kSlots; ++m) {
        if (coeff_[m].is_zero()) continue;
        acc += coeff_[m].eval(p.a(), p.b()) * p.monomial_value(m);
    }
    return acc;
}

}  // namespace kummer
