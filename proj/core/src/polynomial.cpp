#include "kummer/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace kummer {

int Poly::degree(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, v == Var::A ? m.da : m.db);
    return d;
}

void Poly::add_term(const Mono& m, const GaussianRational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& x, const Poly& y) {
    Poly r;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_)
            r.add_term(Mono{mx.da + my.da, mx.db + my.db}, cx * cy);
    return r;
}

Poly operator*(const Poly& x, const GaussianRational& c) {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, cx] : x.terms_) r.terms_.emplace(m, cx * c);
    return r;
}

Poly Poly::derivative(Var v) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        int e = v == Var::A ? m.da : m.db;
        if (e == 0) continue;
        Mono n = m;
        (v == Var::A ? n.da : n.db) = e - 1;
        r.add_term(n, c * GaussianRational(e));
    }
    return r;
}

std::complex<double> Poly::eval(const std::complex<double>& a, const std::complex<double>& b) const {
    // Power caches keep this O(terms) after the warm-up.
    std::vector<std::complex<double>> pa{1.0}, pb{1.0};
    auto up_to = [](std::vector<std::complex<double>>& cache, const std::complex<double>& base,
                    int e) {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    std::complex<double> acc = 0.0;
    for (const auto& [m, c] : terms_) acc += c.to_complex() * up_to(pa, a, m.da) * up_to(pb, b, m.db);
    return acc;
}

Poly Poly::pow(Poly base, int e) {
    Poly r = 1;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> Poly::substitute(const Poly& na, const Poly& da, const Poly& nb,
                                       const Poly& db) const {
    int dega = degree_a(), degb = degree_b();
    if (is_zero()) return {Poly{}, Poly{1}};
    std::vector<Poly> pna{1}, pda{1}, pnb{1}, pdb{1};
    auto up_to = [](std::vector<Poly>& cache, const Poly& base, int e) {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[e];
    };
    Poly num;
    for (const auto& [m, c] : terms_) {
        Poly t = Poly(c) * up_to(pna, na, m.da) * up_to(pda, da, dega - m.da) *
                 up_to(pnb, nb, m.db) * up_to(pdb, db, degb - m.db);
        num += t;
    }
    return {num, up_to(pda, da, dega) * up_to(pdb, db, degb)};
}

namespace {

// ---------------------------------------------------------------------------
// Gcd machinery.  Inputs are cleared to Gaussian-integer coefficients and the
// primitive PRS runs over Z[i][a][b] (b the main variable), so coefficient
// growth stays polynomial.  Contents bottom out in a Euclidean gcd on Z[i].
// ---------------------------------------------------------------------------

struct Zi {
    mpz_class re, im;
    bool is_zero() const { return re == 0 && im == 0; }
};

Zi zi_mul(const Zi& x, const Zi& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

Zi zi_sub(const Zi& x, const Zi& y) { return {x.re - y.re, x.im - y.im}; }

// Nearest-integer quotient of x by y (norm of the remainder at most half the
// norm of y, which drives the Euclidean descent).
Zi zi_divide_round(const Zi& x, const Zi& y) {
    mpz_class n = y.re * y.re + y.im * y.im;
    mpz_class tre = x.re * y.re + x.im * y.im;
    mpz_class tim = x.im * y.re - x.re * y.im;
    auto round_div = [&n](const mpz_class& t) {
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        if (2 * r > n) ++q;
        return q;
    };
    return {round_div(tre), round_div(tim)};
}

// Canonical associate: rotate by a power of i into {re > 0, im >= 0}.
Zi zi_canonical(Zi x) {
    if (x.is_zero()) return x;
    for (int k = 0; k < 4; ++k) {
        if (x.re > 0 && x.im >= 0) return x;
        x = Zi{-x.im, x.re};
    }
    return x;  // unreachable
}

Zi zi_gcd(Zi x, Zi y) {
    while (!y.is_zero()) {
        Zi q = zi_divide_round(x, y);
        Zi r = zi_sub(x, zi_mul(q, y));
        x = y;
        y = r;
    }
    return zi_canonical(x);
}

Zi to_zi(const GaussianRational& c) {
    return {c.real().get_num(), c.imag().get_num()};
}

// Clear denominators: p times the lcm of all coefficient denominators.
Poly clear_denominators(const Poly& p) {
    mpz_class l(1);
    for (const auto& [m, c] : p.terms()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.real().get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.imag().get_den().get_mpz_t());
    }
    return l == 1 ? p : p * GaussianRational(mpq_class(l));
}

Zi content_zi(const Poly& p) {
    Zi g{0, 0};
    for (const auto& [m, c] : p.terms()) {
        g = zi_gcd(g, to_zi(c));
        if (g.re == 1 && g.im == 0) break;
    }
    return g;
}

Poly divide_by_zi(const Poly& p, const Zi& d) {
    GaussianRational inv = GaussianRational(mpq_class(d.re), mpq_class(d.im)).inverse();
    return p * inv;
}

Poly pp_zi(const Poly& p) {
    if (p.is_zero()) return p;
    Zi c = content_zi(p);
    if (c.re == 1 && c.im == 0) return p;
    return divide_by_zi(p, c);
}

int deg_b(const Poly& p) { return p.degree_b(); }

// Coefficient of (main var)^k as a polynomial in the other variable.
Poly coeff_of(const Poly& p, Var main, int k) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        int dm = main == Var::B ? m.db : m.da;
        if (dm == k) r.set(main == Var::B ? Mono{m.da, 0} : Mono{0, m.db}, c);
    }
    return r;
}

Poly mul_power(const Poly& p, Var main, int k) {
    Poly r;
    for (const auto& [m, c] : p.terms())
        r.set(main == Var::B ? Mono{m.da, m.db + k} : Mono{m.da + k, m.db}, c);
    return r;
}

// Pseudo-remainder with respect to the main variable.
Poly prem(Poly x, const Poly& y, Var main) {
    int dy = y.degree(main);
    Poly lcy = coeff_of(y, main, dy);
    while (!x.is_zero() && x.degree(main) >= dy) {
        int dx = x.degree(main);
        Poly lcx = coeff_of(x, main, dx);
        x = x * lcy - mul_power(lcx * y, main, dx - dy);
    }
    return x;
}

// Primitive PRS on integer-coefficient polynomials, univariate in `main`
// (contents are Gaussian integers).  Returns a primitive gcd.
Poly gcd_primitive_univariate(Poly u, Poly v, Var main) {
    u = pp_zi(u);
    v = pp_zi(v);
    if (u.degree(main) < v.degree(main)) std::swap(u, v);
    while (!v.is_zero()) {
        Poly r = prem(u, v, main);
        u = std::move(v);
        v = pp_zi(r);
    }
    return u;
}

// Gcd (over Z[i][a]) of the b-coefficients of an integer poly.
Poly content_wrt_b(const Poly& p) {
    Poly g;
    for (int k = 0; k <= deg_b(p); ++k) {
        Poly c = coeff_of(p, Var::B, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? pp_zi(c) * GaussianRational(mpq_class(content_zi(c).re),
                                                      mpq_class(content_zi(c).im))
                        : g;
        g = g.is_zero() ? c : gcd_primitive_univariate(g, c, Var::A);
        if (g.is_constant()) return Poly{1};
    }
    // Attach the Gaussian-integer content common to all coefficients.
    Zi zc = content_zi(p);
    return pp_zi(g) * GaussianRational(mpq_class(zc.re), mpq_class(zc.im));
}

Poly normalize_leading(const Poly& p) {
    if (p.is_zero()) return p;
    return p * p.leading_coeff().inverse();
}

// Extract the largest monomial dividing every term.
Mono monomial_content(const Poly& p) {
    Mono m{1 << 20, 1 << 20};
    for (const auto& [mo, c] : p.terms()) {
        m.da = std::min(m.da, mo.da);
        m.db = std::min(m.db, mo.db);
    }
    return m;
}

Poly shift_down(const Poly& p, const Mono& m) {
    Poly r;
    for (const auto& [mo, c] : p.terms()) r.set(Mono{mo.da - m.da, mo.db - m.db}, c);
    return r;
}

}  // namespace

Poly Poly::exact_div(const Poly& num, const Poly& div) {
    if (div.is_zero()) throw std::logic_error("Poly::exact_div by zero");
    Poly r = num, q;
    const Mono dm = div.leading_mono();
    const GaussianRational dc_inv = div.leading_coeff().inverse();
    while (!r.is_zero()) {
        Mono rm = r.leading_mono();
        if (rm.da < dm.da || rm.db < dm.db)
            throw std::logic_error("Poly::exact_div: division not exact");
        Mono qm{rm.da - dm.da, rm.db - dm.db};
        GaussianRational qc = r.leading_coeff() * dc_inv;
        q.add_term(qm, qc);
        Poly t;
        for (const auto& [m, c] : div.terms()) t.set(Mono{m.da + qm.da, m.db + qm.db}, c * qc);
        r -= t;
    }
    return q;
}

Poly Poly::gcd(const Poly& x, const Poly& y) {
    if (x.is_zero()) return normalize_leading(y);
    if (y.is_zero()) return normalize_leading(x);
    if (deg_b(x) == 0 && deg_b(y) == 0) return gcd_univariate_a(x, y);
    if (deg_b(x) == 0) return gcd_univariate_a(x, content_b(y));
    if (deg_b(y) == 0) return gcd_univariate_a(y, content_b(x));

    Poly cont = gcd_univariate_a(content_b(x), content_b(y));
    Poly u = primitive_part_b(x), v = primitive_part_b(y);
    if (deg_b(u) < deg_b(v)) std::swap(u, v);
    while (deg_b(v) > 0) {
        Poly r = prem_b(u, v);
        u = std::move(v);
        if (r.is_zero()) {
            return normalize_leading(cont * primitive_part_b(u));
        }
        v = primitive_part_b(r);
    }
    // Nonzero remainder of b-degree 0: the primitive parts are coprime in b.
    return normalize_leading(cont);
}

}  // namespace kummer
