#pragma once

#include <complex>

namespace kummer {

/// A numeric point of the parameter space together with chosen values of the
/// four square roots.  Construction validates the root consistency relations
/// to relative 1e-14 and rejects the excluded loci of the base region:
/// a, b not in {0, 1}, a != b, and a not in
/// {1-b, 1/b, 1/(1-b), (b-1)/b, b/(b-1)}.
class BranchPoint {
public:
    using C = std::complex<double>;

    BranchPoint(C a, C b, C sqrt_a, C sqrt_1ma, C sqrt_b, C sqrt_1mb);

    /// The base region branch for real a, b < 0: sqrt(1-a), sqrt(1-b) real
    /// positive and sqrt(a), sqrt(b) on the positive imaginary axis.
    static BranchPoint principal(double a, double b);

    /// Same point with the selected roots negated (root_mask uses RootBit).
    BranchPoint with_flipped_roots(int root_mask) const;

    C a() const { return a_; }
    C b() const { return b_; }
    C root(int bit_index) const { return roots_[bit_index]; }
    C sqrt_a() const { return roots_[0]; }
    C sqrt_1ma() const { return roots_[1]; }
    C sqrt_b() const { return roots_[2]; }
    C sqrt_1mb() const { return roots_[3]; }

    /// Product of root values over the set bits of a monomial mask.
    C monomial_value(int mask) const;

private:
    C a_, b_;
    C roots_[4];
};

}  // namespace kummer
