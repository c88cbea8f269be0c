#include "kummer/branch_point.hpp"

#include <cmath>
#include <sstream>

#include "kummer/errors.hpp"

namespace kummer {

namespace {

using C = std::complex<double>;

void require_root(const C& root, const C& value, const char* name) {
    double scale = std::max(std::abs(value), 1.0);
    if (std::abs(root * root - value) > 1e-14 * scale) {
        std::ostringstream os;
        os << "BranchPoint: " << name << "^2 does not match its radicand";
        throw DomainError(os.str());
    }
}

bool close(const C& x, const C& y) {
    return std::abs(x - y) <= 1e-12 * std::max({std::abs(x), std::abs(y), 1.0});
}

}  // namespace

BranchPoint::BranchPoint(C a, C b, C sqrt_a, C sqrt_1ma, C sqrt_b, C sqrt_1mb)
    : a_(a), b_(b), roots_{sqrt_a, sqrt_1ma, sqrt_b, sqrt_1mb} {
    require_root(sqrt_a, a, "sqrt_a");
    require_root(sqrt_1ma, 1.0 - a, "sqrt_1ma");
    require_root(sqrt_b, b, "sqrt_b");
    require_root(sqrt_1mb, 1.0 - b, "sqrt_1mb");

    const C zero(0.0), one(1.0);
    if (close(a, zero) || close(a, one) || close(b, zero) || close(b, one))
        throw DomainError("BranchPoint: a, b must avoid {0, 1}");
    if (close(a, b)) throw DomainError("BranchPoint: a == b excluded");
    // The excluded loci of the base: a != 1-b, 1/b, 1/(1-b), (b-1)/b, b/(b-1).
    if (close(a, one - b) || close(a, one / b) || close(a, one / (one - b)) ||
        close(a, (b - one) / b) || close(a, b / (b - one)))
        throw DomainError("BranchPoint: (a, b) lies on an excluded locus");
}

BranchPoint BranchPoint::principal(double a, double b) {
    if (!(a < 0.0) || !(b < 0.0))
        throw DomainError("BranchPoint::principal requires a, b < 0");
    return BranchPoint(C(a), C(b), C(0.0, std::sqrt(-a)), C(std::sqrt(1.0 - a)),
                       C(0.0, std::sqrt(-b)), C(std::sqrt(1.0 - b)));
}

BranchPoint BranchPoint::with_flipped_roots(int root_mask) const {
    BranchPoint p = *this;
    for (int k = 0; k < 4; ++k)
        if (root_mask & (1 << k)) p.roots_[k] = -p.roots_[k];
    return p;
}

C BranchPoint::monomial_value(int mask) const {
    C v = 1.0;
    for (int k = 0; k < 4; ++k)
        if (mask & (1 << k)) v *= roots_[k];
    return v;
}

}  // namespace kummer
