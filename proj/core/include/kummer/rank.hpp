#pragma once

#include <array>
#include <vector>

#include "kummer/branch_point.hpp"
#include "kummer/diff_operator.hpp"

namespace kummer {

/// A cycle family named by the group element acting on one of the three
/// seed families; bullet indexes {0, 1, oo} as 0, 1, 2.
struct CycleLabel {
    GXElement rho;
    int bullet = 0;
};

/// Image of the normal function of a labeled family under the operator pair.
struct NormalFunctionImage {
    CycleLabel label;
    std::pair<FieldElement, FieldElement> d_image;
};

/// The seed: the operator pair applied to the initial family difference,
/// i.e. the right-hand side of the inhomogeneous system.
std::pair<FieldElement, FieldElement> seed_image();

/// Images of the three seed families: (2/(a-b)) times (1,-1),
/// (sqrt(1-b)/sqrt(1-a), -sqrt(1-a)/sqrt(1-b)), (sqrt(b)/sqrt(a),
/// -sqrt(a)/sqrt(b)).  Stored exactly and re-derived internally from the
/// seed through the two distinguished group elements; DerivationMismatch if
/// the two routes disagree.
std::array<NormalFunctionImage, 3> canonical_images();

/// Deterministic lift of a pair of permutations of Sigma lying in
/// S({0,1,oo}): tau components take the first matching branch choice in
/// GTFactorElement::all() order, zeta = 1 when sgn*sgn = 1 and +i otherwise.
GXElement lift_rho(const Perm4& target1, const Perm4& target2);

/// One stored row of the 18-entry table, keyed by the lift target.
struct Table2Entry {
    Perm4 target1, target2;
    int bullet;
    std::pair<FieldElement, FieldElement> stored;
};
const std::vector<Table2Entry>& table2_reference();

struct Table2Row {
    NormalFunctionImage image;
    int zeta_class;  // power k with computed == i^k * stored
    int f1_index, f2_index;
};

/// Theta applied to the canonical images over the six distinguished lifts;
/// every computed entry must match the stored table up to a mu_4 factor
/// (Table2Mismatch otherwise).
std::vector<Table2Row> table2();

/// Catalog of first-component factors: six simple fractions and nine root
/// ratios; every orbit image factors as mu_4 * 2 * F1 * F2.
const std::vector<Rat>& f1_catalog();
const std::vector<FieldElement>& f2_catalog();

struct FirstFactorization {
    int zeta_pow;  // 0..3
    int f1_index;  // into f1_catalog
    int f2_index;  // into f2_catalog
};

/// Factor a first component against the catalog (FactorizationFailure when
/// no candidate divides to a fourth root of unity).
FirstFactorization factor_first_component(const FieldElement& f);

/// Number of distinct (F1, F2) pairs among the rows' first components.
int structural_rank(const std::vector<NormalFunctionImage>& rows);

/// Singular-value rank of the evaluation matrix of first components at the
/// given points, threshold 1e-8 on sigma_k / sigma_1.
int numeric_rank(const std::vector<NormalFunctionImage>& rows,
                 const std::vector<BranchPoint>& points);

/// Exact Q-rank of the span of Theta_rho(canonical) over a set of group
/// elements, computed by structural classification plus exact within-class
/// proportionality.  orbit_rank_full sweeps all of G_X (55,296 images).
int orbit_rank(const std::vector<GXElement>& elements);
int orbit_rank_full();
int orbit_rank_subgroup_h();
int orbit_rank_subgroup_i();

}  // namespace kummer
