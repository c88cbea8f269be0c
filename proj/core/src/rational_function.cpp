#include "kummer/rational_function.hpp"

#include <stdexcept>

#include "kummer/errors.hpp"

namespace kummer {

Rat::Rat(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::logic_error("Rat: zero denominator");
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!(g == Poly(1))) {
        num_ = Poly::exact_div(num_, g);
        den_ = Poly::exact_div(den_, g);
    }
    GaussianRational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        GaussianRational inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat operator+(const Rat& x, const Rat& y) {
    return Rat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Rat operator-(const Rat& x, const Rat& y) {
    return Rat(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

Rat operator*(const Rat& x, const Rat& y) { return Rat(x.num_ * y.num_, x.den_ * y.den_); }

Rat operator/(const Rat& x, const Rat& y) { return x * y.inverse(); }

Rat Rat::inverse() const {
    if (is_zero()) throw ZeroInverse("Rat: inverse of zero");
    return Rat(den_, num_);
}

Rat Rat::derivative(Var v) const {
    return Rat(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

std::complex<double> Rat::eval(const std::complex<double>& a, const std::complex<double>& b) const {
    std::complex<double> d = den_.eval(a, b);
    if (d == std::complex<double>(0.0, 0.0)) throw PoleAtPoint("Rat: denominator vanishes at point");
    return num_.eval(a, b) / d;
}

Rat Rat::substitute(const Poly& na, const Poly& da, const Poly& nb, const Poly& db) const {
    auto [n_num, n_den] = num_.substitute(na, da, nb, db);
    auto [d_num, d_den] = den_.substitute(na, da, nb, db);
    return Rat(n_num * d_den, d_num * n_den);
}

}  // namespace kummer
