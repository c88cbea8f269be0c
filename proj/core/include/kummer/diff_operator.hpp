#pragma once

#include <map>
#include <utility>

#include "kummer/cocycles.hpp"

namespace kummer {

/// Linear differential operator sum c_{ij}(a,b) * d_a^i d_b^j in left-normal
/// form (coefficients to the left of pure derivative monomials).  The
/// derivative order is capped at 4 in each slot; all operators of the theory
/// have order <= 2 and their compositions here stay <= 4.
class DifferentialOperator {
public:
    using Key = std::pair<int, int>;
    static constexpr int kMaxOrder = 4;

    DifferentialOperator() = default;

    static DifferentialOperator identity() { return multiplication(FieldElement(1)); }
    static DifferentialOperator multiplication(const FieldElement& f);
    static DifferentialOperator partial(Var v, int order = 1);

    void add_term(int da, int db, const FieldElement& coeff);
    const std::map<Key, FieldElement>& terms() const { return terms_; }
    FieldElement coeff(int da, int db) const;

    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const DifferentialOperator& x, const DifferentialOperator& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const DifferentialOperator& x, const DifferentialOperator& y) {
        return !(x == y);
    }

    DifferentialOperator operator-() const;
    friend DifferentialOperator operator+(const DifferentialOperator& x,
                                          const DifferentialOperator& y);
    friend DifferentialOperator operator-(const DifferentialOperator& x,
                                          const DifferentialOperator& y);
    /// Composition x then-applied-after y, expanded by the Leibniz rule.
    friend DifferentialOperator operator*(const DifferentialOperator& x,
                                          const DifferentialOperator& y);

    FieldElement apply(const FieldElement& f) const;

private:
    std::map<Key, FieldElement> terms_;
};

struct OperatorPair {
    DifferentialOperator first, second;
};

/// The hypergeometric pair: D_1 = a(1-a) d_a^2 + (1-2a) d_a - 1/4 and the
/// b-analogue D_2.
OperatorPair picard_fuchs_pair();

/// Substitute a' = tau#(a), b' = tau#(b) and expand d/da' through the inverse
/// Moebius map.  Requires both pullbacks to be Moebius in their own variable
/// (throws NonMobiusPullback otherwise).
DifferentialOperator pullback_operator(const DifferentialOperator& op, const GTFactorElement& tau1,
                                       const GTFactorElement& tau2);

/// The three order-2 operators phi^3 D phi^{-1} collapses to, keyed by the
/// class of the base permutation: 0 for {id, (0 1)}, 1 for {(1 oo), (0 1 oo)},
/// 2 for {(0 oo), (0 oo 1)}; written in variable v.
int base_class(const Perm3& base);
DifferentialOperator transformed_pf_operator(int cls, Var v);

/// phi_i(tau)^3 * D_i * phi_i(tau)^{-1} == pullback of D_i along tau, i = 1, 2.
bool verify_transformation(const GTFactorElement& tau1, const GTFactorElement& tau2);

/// Theta_rho on pairs: component-wise chi^{-1} phi_i^{-2} tau#(.).
std::pair<FieldElement, FieldElement> theta_action(const GXElement& g,
                                                   const std::pair<FieldElement, FieldElement>& v);

/// Psi_rho: f -> chi(rho)^{-1} tau#(f).
FieldElement psi_action(const GXElement& g, const FieldElement& f);

}  // namespace kummer
