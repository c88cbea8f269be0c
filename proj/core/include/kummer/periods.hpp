#pragma once

#include <functional>
#include <utility>

#include "kummer/branch_point.hpp"
#include "kummer/field_element.hpp"
#include "kummer/quadrature.hpp"

namespace kummer {

using Complex = std::complex<double>;

/// Periods of the Legendre curve: which = 1 integrates dx/sqrt(x(1-x)(1-cx))
/// over (0,1), which = 2 over (1,oo) through the substitution x = 1/u with
/// the square-root branch tracked continuously from x = 1 (the +i choice on
/// the negative real radicand).  Requires c off [0, oo).
Complex period(int which, Complex c, const QuadratureSpec& spec = {});

/// The regulator integral 2 * int over {0 < y < x < 1} of
/// dx dy / (sqrt(x(1-x)(1-ax)) sqrt(y(1-y)(1-by))) for the base-region
/// branch: a, b real negative, principal roots.  Uses the y = x*s
/// parametrization of the triangle; both inner and outer integrals are
/// tanh-sinh.
Complex eval_L(const BranchPoint& p, const QuadratureSpec& spec = {});

/// Independent route for cross-checks: iterated integral over the triangle
/// with the inner integral taken over (0, x) directly.
Complex eval_L_triangle(const BranchPoint& p, const QuadratureSpec& spec = {});

/// Central finite differences on raw samples, one Richardson level (h, h/2).
struct FDScheme {
    double h = 1e-3;
    FDScheme() = default;
    explicit FDScheme(double step) : h(step) { validate(); }
    void validate() const;
};

/// Numeric (D_1 f, D_2 f) at p for a sampler defined near p; p must be a
/// principal-branch point with real negative a, b so the perturbed branch
/// points follow by continuity.
std::pair<Complex, Complex> fd_apply_pf(const std::function<Complex(const BranchPoint&)>& f,
                                        const BranchPoint& p, const FDScheme& fd = {});

/// Exact right-hand side of the inhomogeneous system as field elements:
/// (2/(a-b)) * (sqrt(1-b)/sqrt(1-a) - 1)  and  (2/(a-b)) * (1 - sqrt(1-a)/sqrt(1-b)).
std::pair<FieldElement, FieldElement> inhomogeneous_rhs();

/// Componentwise relative residuals |D_k(L) - rhs_k| / |rhs_k| at p, with L
/// by quadrature and D_k by finite differences.
std::pair<double, double> check_inhomogeneous(const BranchPoint& p, const QuadratureSpec& spec = {},
                                              const FDScheme& fd = {});

/// First-component check without finite differences: the one-dimensional
/// reduction int_0^1 dz / ((1-bz)^{1/2} (1-az)^{3/2}) against the closed
/// form; returns the relative deviation.
double check_inhomogeneous_1d(const BranchPoint& p, const QuadratureSpec& spec = {});

/// |D_1 applied to the period integrand - dH/dx| / scale at (a, x), both
/// sides by finite differences, where H = -sqrt(x(1-x)) / (2 sqrt(1-ax)^3).
double check_H_identity(double a, double x, const FDScheme& fd = {});

/// Residual of the hypergeometric ODE c(1-c)P'' + (1-2c)P' - P/4 at real
/// c < 0, relative to |P(c)|, with derivatives by finite differences.
double pf_ode_residual(const std::function<Complex(double)>& f, double c, const FDScheme& fd = {});

}  // namespace kummer
