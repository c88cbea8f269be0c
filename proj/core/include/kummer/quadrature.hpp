#pragma once

#include <complex>
#include <functional>

namespace kummer {

/// Tanh-sinh (double-exponential) quadrature on (0,1).  Levels halve the step
/// until two consecutive levels agree to target_tol relative; node weights
/// below the cutoff are dropped.  Handles inverse-square-root endpoint
/// singularities without any substitution.
struct QuadratureSpec {
    int max_level = 12;
    double target_tol = 1e-12;
    double weight_cutoff = 1e-26;

    QuadratureSpec() = default;
    QuadratureSpec(int levels, double tol) : max_level(levels), target_tol(tol) { validate(); }
    void validate() const;
};

std::complex<double> quad_ts(const std::function<std::complex<double>(double)>& f,
                             const QuadratureSpec& spec = {});

}  // namespace kummer
