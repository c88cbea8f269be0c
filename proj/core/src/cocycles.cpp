#include "kummer/cocycles.hpp"

#include <random>
#include <stdexcept>

namespace kummer {

namespace {

// u = sqrt(x)sqrt(1-x)/(x^2-x+1) in the chosen variable.
FieldElement coboundary_base(Var v) {
    const Poly x = Poly::variable(v);
    Poly den = x * x - x + Poly(1);
    const int mask = v == Var::A ? (kSqrtA | kSqrtOneMinusA) : (kSqrtB | kSqrtOneMinusB);
    FieldElement e;
    e.set_coeff(mask, Rat(Poly(1), den));
    return e;
}

FieldElement compute_phi(const GTFactorElement& t, Var v) {
    FieldElement u = coboundary_base(v);
    return t.hom(v).apply(u) * u.inverse();
}

}  // namespace

FieldElement eta_factor(const Perm3& rho_bar, Var v) {
    const Rat x = Rat::variable(v);
    const std::array<uint8_t, 3> key = {rho_bar(0), rho_bar(1), rho_bar(2)};
    Rat val;
    if (key == std::array<uint8_t, 3>{0, 1, 2})
        val = Rat(1);
    else if (key == std::array<uint8_t, 3>{1, 0, 2})  // (0 1)
        val = Rat(-1);
    else if (key == std::array<uint8_t, 3>{0, 2, 1})  // (1 oo)
        val = Rat(1) - x;
    else if (key == std::array<uint8_t, 3>{1, 2, 0})  // (0 1 oo)
        val = x - Rat(1);
    else if (key == std::array<uint8_t, 3>{2, 1, 0})  // (0 oo)
        val = x;
    else  // (0 oo 1)
        val = -x;
    return FieldElement(val);
}

FieldElement eta_cocycle(const GXElement& g) {
    return eta_factor(g.tau1().base(), Var::A) * eta_factor(g.tau2().base(), Var::B);
}

const FieldElement& phi1_cocycle(const GTFactorElement& tau1) {
    static const std::vector<FieldElement> cache = [] {
        std::vector<FieldElement> v;
        for (const auto& t : GTFactorElement::all()) v.push_back(compute_phi(t, Var::A));
        return v;
    }();
    return cache[gt_factor_index(tau1)];
}

const FieldElement& phi2_cocycle(const GTFactorElement& tau2) {
    static const std::vector<FieldElement> cache = [] {
        std::vector<FieldElement> v;
        for (const auto& t : GTFactorElement::all()) v.push_back(compute_phi(t, Var::B));
        return v;
    }();
    return cache[gt_factor_index(tau2)];
}

FieldElement phi_cocycle(const GTFactorElement& tau1, const GTFactorElement& tau2, int which) {
    if (which == 1) return phi1_cocycle(tau1);
    if (which == 2) return phi2_cocycle(tau2);
    throw std::invalid_argument("phi_cocycle: which must be 1 or 2");
}

FieldElement chi_cocycle(const GXElement& g) {
    return FieldElement(g.zeta()) * phi1_cocycle(g.tau1()) * phi2_cocycle(g.tau2());
}

const std::vector<GXElement>& gx_generating_set() {
    static const std::vector<GXElement> gens = [] {
        std::vector<GXElement> out;
        out.push_back(GXElement::identity());
        // tau sign flips (kernel of G_T -> G_T0), one per generator branch.
        const Perm3 id3;
        for (int which : {0, 1, 2, 3}) {
            GTFactorElement t(id3, which == 0 ? -1 : 1, which == 1 ? -1 : 1);
            GTFactorElement s(id3, which == 2 ? -1 : 1, which == 3 ? -1 : 1);
            out.push_back(GXElement(Perm4(), Perm4(), t, s, 0));
        }
        // zeta = -1.
        out.push_back(GXElement(Perm4(), Perm4(), GTFactorElement::identity(),
                                GTFactorElement::identity(), 2));
        // Canonical lifts of S(Sigma) generators on each side: a transposition
        // and a 4-cycle generate S(Sigma).
        auto canonical_lift = [](const Perm4& r1, const Perm4& r2) {
            Perm3 u1 = underline(r1), u2 = underline(r2);
            GTFactorElement t1(u1, 1, 1), t2(u2, 1, 1);
            int zeta_pow = (u1.sign() * u2.sign() > 0) ? 0 : 1;
            return GXElement(r1, r2, t1, t2, zeta_pow);
        };
        const Perm4 swap01({1, 0, 2, 3});
        const Perm4 cycle4({1, 2, 3, 0});  // (0 1 1/c oo)
        out.push_back(canonical_lift(swap01, Perm4()));
        out.push_back(canonical_lift(cycle4, Perm4()));
        out.push_back(canonical_lift(Perm4(), swap01));
        out.push_back(canonical_lift(Perm4(), cycle4));
        return out;
    }();
    return gens;
}

namespace {

bool chi_pair_ok(const GXElement& g, const GXElement& h) {
    FieldElement lhs = chi_cocycle(g * h);
    FieldElement rhs = h.tau_hom().apply(chi_cocycle(g)) * chi_cocycle(h);
    return lhs == rhs;
}

bool eta_pair_ok(const GXElement& g, const GXElement& h) {
    FieldElement lhs = eta_cocycle(g * h);
    FieldElement rhs = h.tau_hom().apply(eta_cocycle(g)) * eta_cocycle(h);
    return lhs == rhs;
}

CocycleReport verify_sampled(CocycleKind kind, const char* name, long samples, uint64_t seed) {
    CocycleReport rep;
    rep.name = name;
    const auto& all = gx_all();
    auto check = kind == CocycleKind::Chi ? chi_pair_ok : eta_pair_ok;
    const auto& gens = gx_generating_set();
    for (const auto& g : gens) {
        for (const auto& h : gens) {
            ++rep.pairs_checked;
            if (!check(g, h)) rep.failures.push_back("(" + g.str() + ", " + h.str() + ")");
        }
    }
    std::mt19937_64 rng(seed);
    for (long k = 0; k < samples; ++k) {
        const GXElement& g = all[rng() % all.size()];
        const GXElement& h = all[rng() % all.size()];
        ++rep.pairs_checked;
        if (!check(g, h)) rep.failures.push_back("(" + g.str() + ", " + h.str() + ")");
    }
    return rep;
}

CocycleReport verify_phi_exhaustive(int which, const char* name) {
    CocycleReport rep;
    rep.name = name;
    const auto& taus = GTFactorElement::all();
    // The identity for phi_i involves only the i-th factors, so the 24x24
    // factor pairs decide all 576^2 pairs of G_T.
    bool ok[24][24];
    const Var v = which == 1 ? Var::A : Var::B;
    auto phi = [which](const GTFactorElement& t) -> const FieldElement& {
        return which == 1 ? phi1_cocycle(t) : phi2_cocycle(t);
    };
    for (int i = 0; i < 24; ++i) {
        for (int j = 0; j < 24; ++j) {
            const GTFactorElement &t = taus[i], &u = taus[j];
            FieldElement lhs = phi(t * u);
            FieldElement rhs = u.hom(v).apply(phi(t)) * phi(u);
            ok[i][j] = lhs == rhs;
        }
    }
    for (int i1 = 0; i1 < 24; ++i1)
        for (int i2 = 0; i2 < 24; ++i2)
            for (int j1 = 0; j1 < 24; ++j1)
                for (int j2 = 0; j2 < 24; ++j2) {
                    ++rep.pairs_checked;
                    bool pair_ok = which == 1 ? ok[i1][j1] : ok[i2][j2];
                    if (!pair_ok)
                        rep.failures.push_back("(" + taus[i1].str() + "x" + taus[i2].str() + ", " +
                                               taus[j1].str() + "x" + taus[j2].str() + ")");
                }
    return rep;
}

}  // namespace

CocycleReport verify_cocycle(CocycleKind kind, long samples, uint64_t seed) {
    switch (kind) {
        case CocycleKind::Chi:
            return verify_sampled(CocycleKind::Chi, "chi-cocycle", samples < 0 ? 10000 : samples,
                                  seed);
        case CocycleKind::Eta:
            return verify_sampled(CocycleKind::Eta, "eta-cocycle", samples < 0 ? 10000 : samples,
                                  seed);
        case CocycleKind::Phi1:
            return verify_phi_exhaustive(1, "phi1-cocycle");
        default:
            return verify_phi_exhaustive(2, "phi2-cocycle");
    }
}

CocycleReport verify_chi_squared_is_eta() {
    CocycleReport rep;
    rep.name = "chi^2 == eta";
    // chi and eta are determined by (tau, zeta); cache per class and sweep
    // the whole group.
    const auto& taus = GTFactorElement::all();
    bool class_ok[24][24][2];
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) {
            int sgn = taus[i].base().sign() * taus[j].base().sign();
            int base_pow = sgn > 0 ? 0 : 1;
            for (int z = 0; z < 2; ++z) {
                FieldElement chi = FieldElement::root_of_unity(base_pow + 2 * z) *
                                   phi1_cocycle(taus[i]) * phi2_cocycle(taus[j]);
                FieldElement eta = eta_factor(taus[i].base(), Var::A) *
                                   eta_factor(taus[j].base(), Var::B);
                class_ok[i][j][z] = chi * chi == eta;
            }
        }
    for (const auto& g : gx_all()) {
        ++rep.pairs_checked;
        int i = gt_factor_index(g.tau1()), j = gt_factor_index(g.tau2());
        int z = g.zeta_pow() >= 2 ? 1 : 0;
        if (!class_ok[i][j][z]) rep.failures.push_back(g.str());
    }
    return rep;
}

CocycleReport verify_eta_phi_square() {
    CocycleReport rep;
    rep.name = "eta_i == sgn * phi_i^2";
    const auto& taus = GTFactorElement::all();
    for (const auto& t1 : taus) {
        for (const auto& t2 : taus) {
            ++rep.pairs_checked;
            FieldElement p1 = phi1_cocycle(t1), p2 = phi2_cocycle(t2);
            bool ok1 = eta_factor(t1.base(), Var::A) ==
                       FieldElement(t1.base().sign()) * p1 * p1;
            bool ok2 = eta_factor(t2.base(), Var::B) ==
                       FieldElement(t2.base().sign()) * p2 * p2;
            if (!ok1 || !ok2) rep.failures.push_back(t1.str() + "x" + t2.str());
        }
    }
    return rep;
}

}  // namespace kummer
