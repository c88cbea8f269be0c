#include "kummer/periods.hpp"

#include <cmath>

#include "kummer/errors.hpp"

namespace kummer {

namespace {

bool on_forbidden_ray(const Complex& c) { return c.imag() == 0.0 && c.real() >= 0.0; }

Complex sqrt_principal(const Complex& z) { return std::sqrt(z); }

// Branch of sqrt((u-1)(u-c)) on u in (0,1), continuous from u = 1.  For real
// c the radicand is negative and the +i branch is fixed; off the real axis
// the radicand stays in one half-plane and the principal branch is already
// continuous.
Complex sqrt_tail_radicand(double u, const Complex& c) {
    if (c.imag() == 0.0) {
        double w = (1.0 - u) * (u - c.real());
        return Complex(0.0, std::sqrt(w));
    }
    return sqrt_principal(Complex(u - 1.0, 0.0) * (Complex(u, 0.0) - c));
}

void require_principal_real(const BranchPoint& p) {
    if (p.a().imag() != 0.0 || p.b().imag() != 0.0 || p.a().real() >= 0.0 || p.b().real() >= 0.0)
        throw DomainError("expected a principal-branch point with a, b real negative");
    if (p.sqrt_1ma().imag() != 0.0 || p.sqrt_1ma().real() <= 0.0 || p.sqrt_1mb().imag() != 0.0 ||
        p.sqrt_1mb().real() <= 0.0)
        throw DomainError("expected positive real sqrt(1-a), sqrt(1-b)");
}

}  // namespace

void FDScheme::validate() const {
    if (!(h > 1e-6 && h < 1e-2)) throw DomainError("FDScheme: step outside (1e-6, 1e-2)");
}

Complex period(int which, Complex c, const QuadratureSpec& spec) {
    if (which != 1 && which != 2) throw DomainError("period: which must be 1 or 2");
    if (on_forbidden_ray(c)) throw DomainError("period: c must avoid [0, oo)");
    if (which == 1) {
        return quad_ts(
            [&c](double x) {
                return 1.0 / (std::sqrt(x * (1.0 - x)) * sqrt_principal(1.0 - c * x));
            },
            spec);
    }
    return quad_ts(
        [&c](double u) { return 1.0 / (std::sqrt(u) * sqrt_tail_radicand(u, c)); }, spec);
}

Complex eval_L(const BranchPoint& p, const QuadratureSpec& spec) {
    require_principal_real(p);
    const double a = p.a().real(), b = p.b().real();
    // y = x*s maps the triangle to the unit square; the Jacobian x cancels
    // one power of x from the two radicals, leaving
    //   1 / ( sqrt((1-x)(1-ax)) * sqrt(s (1-xs)(1-bxs)) ).
    QuadratureSpec inner = spec;
    auto outer = [&](double x) {
        Complex inner_val = quad_ts(
            [&](double s) {
                return 1.0 / std::sqrt(s * (1.0 - x * s) * (1.0 - b * x * s));
            },
            inner);
        return inner_val / std::sqrt((1.0 - x) * (1.0 - a * x));
    };
    return 2.0 * quad_ts(outer, spec);
}

Complex eval_L_triangle(const BranchPoint& p, const QuadratureSpec& spec) {
    require_principal_real(p);
    const double a = p.a().real(), b = p.b().real();
    QuadratureSpec inner = spec;
    auto outer = [&](double x) {
        // Inner integral over (0, x): substitute y = x*t only to place the
        // integration on (0,1); no cancellation against the outer radical.
        Complex inner_val = quad_ts(
            [&](double t) {
                double y = x * t;
                return 1.0 / std::sqrt(y * (1.0 - y) * (1.0 - b * y));
            },
            inner);
        inner_val *= x;
        return inner_val / std::sqrt(x * (1.0 - x) * (1.0 - a * x));
    };
    return 2.0 * quad_ts(outer, spec);
}

std::pair<Complex, Complex> fd_apply_pf(const std::function<Complex(const BranchPoint&)>& f,
                                        const BranchPoint& p, const FDScheme& fd) {
    fd.validate();
    require_principal_real(p);
    const double a = p.a().real(), b = p.b().real();
    auto at = [&](double aa, double bb) { return f(BranchPoint::principal(aa, bb)); };
    const Complex f0 = at(a, b);

    auto richardson_pair = [&](auto sample, double x0) {
        // Returns (f', f'') at x0 with Richardson over (h, h/2).
        auto d = [&](double h) {
            Complex fp = sample(x0 + h), fm = sample(x0 - h);
            return std::pair<Complex, Complex>{(fp - fm) / (2.0 * h),
                                               (fp - 2.0 * f0 + fm) / (h * h)};
        };
        auto [d1h, d2h] = d(fd.h);
        auto [d1h2, d2h2] = d(fd.h / 2.0);
        return std::pair<Complex, Complex>{(4.0 * d1h2 - d1h) / 3.0, (4.0 * d2h2 - d2h) / 3.0};
    };

    auto [fa, faa] = richardson_pair([&](double aa) { return at(aa, b); }, a);
    auto [fb, fbb] = richardson_pair([&](double bb) { return at(a, bb); }, b);

    Complex d1 = a * (1.0 - a) * faa + (1.0 - 2.0 * a) * fa - 0.25 * f0;
    Complex d2 = b * (1.0 - b) * fbb + (1.0 - 2.0 * b) * fb - 0.25 * f0;
    return {d1, d2};
}

std::pair<FieldElement, FieldElement> inhomogeneous_rhs() {
    const Poly a = Poly::variable(Var::A), b = Poly::variable(Var::B);
    const Rat two_over_amb(Poly(2), a - b);
    // sqrt(1-b)/sqrt(1-a) = sqrt(1-a) sqrt(1-b) / (1-a), and mirrored.
    FieldElement ratio_ba, ratio_ab;
    ratio_ba.set_coeff(kSqrtOneMinusA | kSqrtOneMinusB, Rat(Poly(1), Poly(1) - a));
    ratio_ab.set_coeff(kSqrtOneMinusA | kSqrtOneMinusB, Rat(Poly(1), Poly(1) - b));
    FieldElement first = (ratio_ba - FieldElement(1)) * two_over_amb;
    FieldElement second = (FieldElement(1) - ratio_ab) * two_over_amb;
    return {first, second};
}

std::pair<double, double> check_inhomogeneous(const BranchPoint& p, const QuadratureSpec& spec,
                                              const FDScheme& fd) {
    auto [d1, d2] = fd_apply_pf([&spec](const BranchPoint& q) { return eval_L(q, spec); }, p, fd);
    auto [rhs1, rhs2] = inhomogeneous_rhs();
    Complex r1 = rhs1.eval(p), r2 = rhs2.eval(p);
    return {std::abs(d1 - r1) / std::abs(r1), std::abs(d2 - r2) / std::abs(r2)};
}

double check_inhomogeneous_1d(const BranchPoint& p, const QuadratureSpec& spec) {
    require_principal_real(p);
    const double a = p.a().real(), b = p.b().real();
    Complex integral = quad_ts(
        [&](double z) {
            return 1.0 / (std::sqrt(1.0 - b * z) * std::pow(std::sqrt(1.0 - a * z), 3));
        },
        spec);
    Complex rhs = inhomogeneous_rhs().first.eval(p);
    return std::abs(integral - rhs) / std::abs(rhs);
}

double check_H_identity(double a, double x, const FDScheme& fd) {
    fd.validate();
    if (!(x > 0.0 && x < 1.0)) throw DomainError("check_H_identity: x must lie in (0,1)");
    auto integrand = [&](double aa) { return 1.0 / std::sqrt(x * (1.0 - x) * (1.0 - aa * x)); };
    auto H = [&](double xx) {
        return -std::sqrt(xx * (1.0 - xx)) / (2.0 * std::pow(std::sqrt(1.0 - a * xx), 3));
    };
    auto richardson = [&](auto g, double x0) {
        auto d1 = [&](double h) { return (g(x0 + h) - g(x0 - h)) / (2.0 * h); };
        return (4.0 * d1(fd.h / 2.0) - d1(fd.h)) / 3.0;
    };
    auto d2 = [&](auto g, double x0) {
        auto dd = [&](double h) { return (g(x0 + h) - 2.0 * g(x0) + g(x0 - h)) / (h * h); };
        return (4.0 * dd(fd.h / 2.0) - dd(fd.h)) / 3.0;
    };
    double lhs = a * (1.0 - a) * d2(integrand, a) + (1.0 - 2.0 * a) * richardson(integrand, a) -
                 0.25 * integrand(a);
    double rhs = richardson(H, x);
    return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-12);
}

double pf_ode_residual(const std::function<Complex(double)>& f, double c, const FDScheme& fd) {
    fd.validate();
    const Complex f0 = f(c);
    auto d = [&](double h) {
        Complex fp = f(c + h), fm = f(c - h);
        return std::pair<Complex, Complex>{(fp - fm) / (2.0 * h), (fp - 2.0 * f0 + fm) / (h * h)};
    };
    auto [d1h, d2h] = d(fd.h);
    auto [d1h2, d2h2] = d(fd.h / 2.0);
    Complex fp = (4.0 * d1h2 - d1h) / 3.0;
    Complex fpp = (4.0 * d2h2 - d2h) / 3.0;
    Complex residual = c * (1.0 - c) * fpp + (1.0 - 2.0 * c) * fp - 0.25 * f0;
    return std::abs(residual) / std::abs(f0);
}

}  // namespace kummer
