#pragma once

#include <array>
#include <utility>
#include <vector>

#include "kummer/permutation.hpp"
#include "kummer/rational_function.hpp"

namespace kummer {

/// One record of the S(Sigma)-action on P^1 x S_0.  The single base variable
/// c is represented by Var::A.  z_image is the Moebius transform
/// (z[0]*t + z[1]) / (z[2]*t + z[3]) in the fiber coordinate t, with
/// coefficients polynomial in c.
struct SigmaAction {
    Perm4 perm;
    Rat c_image;
    std::array<Poly, 4> z_image;
};

/// The 24 records, fixed enumeration order (identity first).
const std::vector<SigmaAction>& sigma_table_all();

/// Lookup by permutation; total for valid table data.
const SigmaAction& sigma_table(const Perm4& perm);

/// The permutation of {0, 1, oo} induced by a Moebius map: v -> m(v).
/// Throws NoMatch when the map does not permute the three points.
Perm3 mobius_point_action(const Rat& m);

/// Image of rho in S({0,1,oo}), read off from its stored c_image.
Perm3 underline(const Perm4& rho);
Perm3 underline(const SigmaAction& rec);

/// Pullback of the coordinate under the base automorphism given by a point
/// permutation of {0, 1, oo}; inverse of mobius_point_action on its image.
Rat mobius_of_perm3(const Perm3& p);

/// Composition-closure scan of a (possibly corrupted) table copy: for every
/// pair (g, h), composing the c- and z-data of g after h must reproduce the
/// record stored for perm_g * perm_h.  Returns the offending pairs.
std::vector<std::pair<Perm4, Perm4>> sigma_closure_failures(const std::vector<SigmaAction>& table);

}  // namespace kummer
