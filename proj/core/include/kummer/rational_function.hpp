#pragma once

#include <complex>

#include "kummer/polynomial.hpp"

namespace kummer {

/// Element of Q(i)(a,b) held in canonical form: gcd(num, den) = 1 and the
/// lex-leading coefficient of the denominator is 1, so equality is plain
/// component comparison.
class Rat {
public:
    Rat() : num_(), den_(1) {}
    Rat(long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    explicit Rat(const GaussianRational& c) : num_(c), den_(1) {}
    explicit Rat(Poly num) : num_(std::move(num)), den_(1) {}
    Rat(Poly num, Poly den);

    static Rat variable(Var v) { return Rat(Poly::variable(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_ == Poly(1) && num_ == Poly(1); }
    bool is_constant() const { return num_.is_constant() && den_ == Poly(1); }
    GaussianRational constant_value() const { return num_.constant_value(); }

    Rat operator-() const;
    friend Rat operator+(const Rat& x, const Rat& y);
    friend Rat operator-(const Rat& x, const Rat& y);
    friend Rat operator*(const Rat& x, const Rat& y);
    friend Rat operator/(const Rat& x, const Rat& y);
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    Rat inverse() const;

    friend bool operator==(const Rat& x, const Rat& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }

    Rat derivative(Var v) const;

    /// Evaluate at a numeric point; throws PoleAtPoint when the denominator
    /// vanishes there.
    std::complex<double> eval(const std::complex<double>& a, const std::complex<double>& b) const;

    /// Substitute a -> na/da, b -> nb/db.
    Rat substitute(const Poly& na, const Poly& da, const Poly& nb, const Poly& db) const;

private:
    Poly num_, den_;
};

}  // namespace kummer
