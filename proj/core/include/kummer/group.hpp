#pragma once

#include <string>
#include <vector>

#include "kummer/gt_factor.hpp"
#include "kummer/sigma_action.hpp"

namespace kummer {

/// Element of G_X = (S(Sigma)^2 x_{S3^2} G_T) x_{mu2} mu4, stored as the
/// 4-tuple (rho1, rho2, (tau1, tau2), zeta) with zeta = i^zeta_pow.
/// Invariants (checked on construction):
///   underline(rho_k) == tau_k.base      (fiber condition over G_{T_0})
///   zeta^2 == sgn(underline(rho1)) * sgn(underline(rho2))
class GXElement {
public:
    GXElement() : zeta_pow_(0) {}
    GXElement(Perm4 rho1, Perm4 rho2, GTFactorElement tau1, GTFactorElement tau2, int zeta_pow);

    static GXElement identity() { return GXElement(); }

    const Perm4& rho1() const { return rho1_; }
    const Perm4& rho2() const { return rho2_; }
    const GTFactorElement& tau1() const { return tau1_; }
    const GTFactorElement& tau2() const { return tau2_; }
    int zeta_pow() const { return zeta_pow_; }
    GaussianRational zeta() const { return GaussianRational::root_of_unity(zeta_pow_); }

    bool is_identity() const;

    /// Pullback homomorphism of the tau-component on B (both variables).
    FieldHom tau_hom() const;

    friend GXElement operator*(const GXElement& g, const GXElement& h);
    GXElement inverse() const;

    friend bool operator==(const GXElement& x, const GXElement& y);
    friend bool operator!=(const GXElement& x, const GXElement& y) { return !(x == y); }

    std::string str() const;

private:
    Perm4 rho1_, rho2_;
    GTFactorElement tau1_, tau2_;
    int zeta_pow_;
};

/// Full enumeration of G_X; 18432 elements in a fixed deterministic order.
const std::vector<GXElement>& gx_all();

/// Subgroup orders entering the index computation |G_X / HI|:
/// H = Ker(G_X -> G_T), I = {(rho, rho, tau, 1) : rho in S({0,1,oo})}.
struct SubgroupAnalysis {
    long order_gx = 0;
    long order_gy = 0;        // forgetting zeta
    long order_gt_image = 0;  // image of the projection to G_T
    long order_h = 0;
    long order_i = 0;
    long order_intersection = 0;
    long index_hi = 0;  // |G_X| * |H cap I| / (|H| * |I|)
};
SubgroupAnalysis subgroup_analysis();

bool in_subgroup_h(const GXElement& g);
bool in_subgroup_i(const GXElement& g);

}  // namespace kummer
