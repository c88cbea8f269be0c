#include "kummer/group.hpp"

#include <set>
#include <stdexcept>

namespace kummer {

GXElement::GXElement(Perm4 rho1, Perm4 rho2, GTFactorElement tau1, GTFactorElement tau2,
                     int zeta_pow)
    : rho1_(rho1), rho2_(rho2), tau1_(tau1), tau2_(tau2), zeta_pow_(((zeta_pow % 4) + 4) % 4) {
    if (!(underline(rho1_) == tau1_.base()) || !(underline(rho2_) == tau2_.base()))
        throw std::invalid_argument("GXElement: fiber condition over G_T0 violated");
    int sgn = tau1_.base().sign() * tau2_.base().sign();
    // zeta^2 = (-1)^zeta_pow must equal sgn(rho1bar)*sgn(rho2bar).
    if ((zeta_pow_ % 2 == 0 ? 1 : -1) != sgn)
        throw std::invalid_argument("GXElement: zeta^2 != sgn * sgn");
}

bool GXElement::is_identity() const {
    return rho1_.is_identity() && rho2_.is_identity() && tau1_.is_identity() &&
           tau2_.is_identity() && zeta_pow_ == 0;
}

FieldHom GXElement::tau_hom() const {
    return FieldHom(tau1_.base_mobius(Var::A), tau2_.base_mobius(Var::B),
                    tau1_.sqrt_c_image(Var::A), tau1_.sqrt_1mc_image(Var::A),
                    tau2_.sqrt_c_image(Var::B), tau2_.sqrt_1mc_image(Var::B));
}

GXElement operator*(const GXElement& g, const GXElement& h) {
    return GXElement(g.rho1_ * h.rho1_, g.rho2_ * h.rho2_, g.tau1_ * h.tau1_, g.tau2_ * h.tau2_,
                     g.zeta_pow_ + h.zeta_pow_);
}

GXElement GXElement::inverse() const {
    return GXElement(rho1_.inverse(), rho2_.inverse(), tau1_.inverse(), tau2_.inverse(),
                     -zeta_pow_);
}

bool operator==(const GXElement& x, const GXElement& y) {
    return x.rho1_ == y.rho1_ && x.rho2_ == y.rho2_ && x.tau1_ == y.tau1_ && x.tau2_ == y.tau2_ &&
           x.zeta_pow_ == y.zeta_pow_;
}

std::string GXElement::str() const {
    std::string s = "(";
    s += perm4_str(rho1_);
    s += ", ";
    s += perm4_str(rho2_);
    s += ", ";
    s += tau1_.str();
    s += "x";
    s += tau2_.str();
    s += ", i^";
    s += std::to_string(zeta_pow_);
    s += ")";
    return s;
}

const std::vector<GXElement>& gx_all() {
    static const std::vector<GXElement> elems = [] {
        std::vector<GXElement> out;
        out.reserve(18432);
        const auto& perms = Perm4::all();
        const auto& taus = GTFactorElement::all();
        for (const Perm4& r1 : perms) {
            Perm3 u1 = underline(r1);
            for (const Perm4& r2 : perms) {
                Perm3 u2 = underline(r2);
                int sgn = u1.sign() * u2.sign();
                for (const auto& t1 : taus) {
                    if (!(t1.base() == u1)) continue;
                    for (const auto& t2 : taus) {
                        if (!(t2.base() == u2)) continue;
                        // Two zeta choices solve zeta^2 = sgn.
                        int base_pow = sgn > 0 ? 0 : 1;
                        out.emplace_back(r1, r2, t1, t2, base_pow);
                        out.emplace_back(r1, r2, t1, t2, base_pow + 2);
                    }
                }
            }
        }
        return out;
    }();
    return elems;
}

bool in_subgroup_h(const GXElement& g) {
    return g.tau1().is_identity() && g.tau2().is_identity();
}

bool in_subgroup_i(const GXElement& g) {
    if (g.zeta_pow() != 0) return false;
    if (!(g.rho1() == g.rho2())) return false;
    return g.rho1()(2) == 2;  // fixes the section 1/c, i.e. lies in S({0,1,oo})
}

SubgroupAnalysis subgroup_analysis() {
    SubgroupAnalysis r;
    const auto& all = gx_all();
    r.order_gx = static_cast<long>(all.size());
    std::set<std::string> gy, gt;
    for (const auto& g : all) {
        if (g.zeta_pow() < 2) {
            // Forgetting zeta identifies the two lifts; count each G_Y element once.
            std::string key = perm4_str(g.rho1()) + "|" + perm4_str(g.rho2()) + "|" +
                              g.tau1().str() + "|" + g.tau2().str();
            gy.insert(key);
        }
        gt.insert(g.tau1().str() + "|" + g.tau2().str());
        if (in_subgroup_h(g)) ++r.order_h;
        if (in_subgroup_i(g)) ++r.order_i;
        if (in_subgroup_h(g) && in_subgroup_i(g)) ++r.order_intersection;
    }
    r.order_gy = static_cast<long>(gy.size());
    r.order_gt_image = static_cast<long>(gt.size());
    long order_product_set = r.order_h * r.order_i / r.order_intersection;
    r.index_hi = r.order_gx / order_product_set;
    return r;
}

}  // namespace kummer
