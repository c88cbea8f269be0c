#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "kummer/gaussian_rational.hpp"

namespace kummer {

/// The two coordinates of the parameter space.
enum class Var : int { A = 0, B = 1 };

/// Exponent pair (deg in a, deg in b) with lexicographic order, a first.
struct Mono {
    int da = 0;
    int db = 0;
    friend bool operator<(const Mono& x, const Mono& y) {
        if (x.da != y.da) return x.da < y.da;
        return x.db < y.db;
    }
    friend bool operator==(const Mono& x, const Mono& y) { return x.da == y.da && x.db == y.db; }
};

/// Sparse bivariate polynomial in (a, b) over Q(i).
class Poly {
public:
    using TermMap = std::map<Mono, GaussianRational>;

    Poly() = default;
    Poly(long v) { set(Mono{0, 0}, GaussianRational(v)); }  // NOLINT: implicit by design
    explicit Poly(const GaussianRational& c) { set(Mono{0, 0}, c); }

    static Poly variable(Var v, int power = 1) {
        Poly p;
        Mono m;
        (v == Var::A ? m.da : m.db) = power;
        p.set(m, GaussianRational(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
    }
    GaussianRational constant_value() const {
        auto it = terms_.find(Mono{0, 0});
        return it == terms_.end() ? GaussianRational(0) : it->second;
    }

    int degree(Var v) const;
    int degree_a() const { return degree(Var::A); }
    int degree_b() const { return degree(Var::B); }

    const TermMap& terms() const { return terms_; }

    /// Lex-greatest monomial and its coefficient; polynomial must be nonzero.
    Mono leading_mono() const { return terms_.rbegin()->first; }
    const GaussianRational& leading_coeff() const { return terms_.rbegin()->second; }

    void set(const Mono& m, const GaussianRational& c) {
        if (c.is_zero())
            terms_.erase(m);
        else
            terms_[m] = c;
    }
    void add_term(const Mono& m, const GaussianRational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(const Poly& x, const Poly& y);
    friend Poly operator*(const Poly& x, const GaussianRational& c);

    friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

    Poly derivative(Var v) const;

    std::complex<double> eval(const std::complex<double>& a, const std::complex<double>& b) const;

    /// P with a -> na/da, b -> nb/db, returned as (numerator, cleared denominator).
    /// The cleared denominator is da^deg_a * db^deg_b.
    std::pair<Poly, Poly> substitute(const Poly& na, const Poly& da, const Poly& nb,
                                     const Poly& db) const;

    /// Exact quotient; throws std::logic_error if the division is not exact.
    static Poly exact_div(const Poly& num, const Poly& div);

    /// Gcd, normalized so the lex-leading coefficient is 1. gcd(0,0) = 0.
    static Poly gcd(const Poly& x, const Poly& y);

    static Poly pow(Poly base, int e);

private:
    TermMap terms_;
};

}  // namespace kummer
