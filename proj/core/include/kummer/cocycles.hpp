#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kummer/group.hpp"

namespace kummer {

/// eta_i value attached to an element of S({0,1,oo}), written in variable v:
/// id -> 1, (0 1) -> -1, (1 oo) -> 1-x, (0 1 oo) -> x-1, (0 oo) -> x,
/// (0 oo 1) -> -x.
FieldElement eta_factor(const Perm3& rho_bar, Var v);

/// eta(rho) = eta_1(rho1bar in a) * eta_2(rho2bar in b).
FieldElement eta_cocycle(const GXElement& g);

/// The coboundary cocycles on G_T built from u_a = sqrt(a)sqrt(1-a)/(a^2-a+1)
/// and its b-analogue: phi_i(tau) = tau#(u) * u^{-1}.  phi_1 depends only on
/// the first factor and phi_2 only on the second.
const FieldElement& phi1_cocycle(const GTFactorElement& tau1);
const FieldElement& phi2_cocycle(const GTFactorElement& tau2);
FieldElement phi_cocycle(const GTFactorElement& tau1, const GTFactorElement& tau2, int which);

/// chi(rho) = zeta * phi_1(tau) * phi_2(tau).
FieldElement chi_cocycle(const GXElement& g);

struct CocycleReport {
    std::string name;
    long pairs_checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

enum class CocycleKind { Eta, Chi, Phi1, Phi2 };

/// Checks the 1-cocycle identity  c(g*h) == h#(c(g)) * c(h)  exactly.
/// samples < 0 requests exhaustive mode; for Phi1/Phi2 that is all 576^2
/// pairs of G_T, for Eta/Chi exhaustive mode is refused (out of budget) and
/// sampled pairs plus all pairs from a fixed generating set are used instead.
CocycleReport verify_cocycle(CocycleKind kind, long samples, uint64_t seed);

/// chi^2 == eta over the whole group (18432 elements).
CocycleReport verify_chi_squared_is_eta();

/// eta_i(rho_i_bar) == sgn(rho_i_bar) * phi_i(tau)^2 over all of G_T.
CocycleReport verify_eta_phi_square();

/// Fixed generating set used for deterministic pair coverage.
const std::vector<GXElement>& gx_generating_set();

}  // namespace kummer
