#include "kummer/diff_operator.hpp"

#include <stdexcept>

#include "kummer/errors.hpp"

namespace kummer {

namespace {

long binom(int n, int k) {
    long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

}  // namespace

DifferentialOperator DifferentialOperator::multiplication(const FieldElement& f) {
    DifferentialOperator d;
    d.add_term(0, 0, f);
    return d;
}

DifferentialOperator DifferentialOperator::partial(Var v, int order) {
    DifferentialOperator d;
    d.add_term(v == Var::A ? order : 0, v == Var::A ? 0 : order, FieldElement(1));
    return d;
}

void DifferentialOperator::add_term(int da, int db, const FieldElement& coeff) {
    if (da < 0 || db < 0 || da > kMaxOrder || db > kMaxOrder)
        throw std::logic_error("DifferentialOperator: derivative order out of range");
    if (coeff.is_zero()) return;
    auto it = terms_.find({da, db});
    if (it == terms_.end()) {
        terms_.emplace(Key{da, db}, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

FieldElement DifferentialOperator::coeff(int da, int db) const {
    auto it = terms_.find({da, db});
    return it == terms_.end() ? FieldElement() : it->second;
}

DifferentialOperator DifferentialOperator::operator-() const {
    DifferentialOperator r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

DifferentialOperator operator+(const DifferentialOperator& x, const DifferentialOperator& y) {
    DifferentialOperator r = x;
    for (const auto& [k, c] : y.terms_) r.add_term(k.first, k.second, c);
    return r;
}

DifferentialOperator operator-(const DifferentialOperator& x, const DifferentialOperator& y) {
    DifferentialOperator r = x;
    for (const auto& [k, c] : y.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

DifferentialOperator operator*(const DifferentialOperator& x, const DifferentialOperator& y) {
    // d_a^i d_b^j (g . ) = sum binom(i,p) binom(j,q) (d^(i-p,j-q) g) d_a^p d_b^q.
    DifferentialOperator r;
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            const int i = kx.first, j = kx.second;
            for (int p = 0; p <= i; ++p) {
                for (int q = 0; q <= j; ++q) {
                    FieldElement g = cy;
                    for (int t = 0; t < i - p; ++t) g = g.derivative(Var::A);
                    for (int t = 0; t < j - q; ++t) g = g.derivative(Var::B);
                    if (g.is_zero()) continue;
                    FieldElement c =
                        cx * g * FieldElement(GaussianRational(binom(i, p) * binom(j, q)));
                    r.add_term(p + ky.first, q + ky.second, c);
                }
            }
        }
    }
    return r;
}

FieldElement DifferentialOperator::apply(const FieldElement& f) const {
    FieldElement acc;
    for (const auto& [k, c] : terms_) {
        FieldElement g = f;
        for (int t = 0; t < k.first; ++t) g = g.derivative(Var::A);
        for (int t = 0; t < k.second; ++t) g = g.derivative(Var::B);
        acc += c * g;
    }
    return acc;
}

OperatorPair picard_fuchs_pair() {
    const GaussianRational quarter(mpq_class(-1, 4), mpq_class(0));
    OperatorPair p;
    for (Var v : {Var::A, Var::B}) {
        const Poly x = Poly::variable(v);
        DifferentialOperator d;
        int ia = v == Var::A ? 1 : 0;
        d.add_term(2 * ia, 2 * (1 - ia), FieldElement(Rat(x * (Poly(1) - x))));
        d.add_term(ia, 1 - ia, FieldElement(Rat(Poly(1) - Poly(2) * x)));
        d.add_term(0, 0, FieldElement(quarter));
        (v == Var::A ? p.first : p.second) = d;
    }
    return p;
}

namespace {

// 1/m'(x) for a Moebius m = (alpha x + beta)/(gamma x + delta): the
// polynomial (gamma x + delta)^2 / (alpha delta - beta gamma).
Rat inverse_derivative(const Rat& m, Var v) {
    const Poly &num = m.num(), &den = m.den();
    const Var other = v == Var::A ? Var::B : Var::A;
    if (num.degree(v) > 1 || den.degree(v) > 1 || num.degree(other) > 0 || den.degree(other) > 0)
        throw NonMobiusPullback("pullback_operator: image is not a Moebius map of one variable");
    auto coeff_of = [&](const Poly& p, int deg) {
        Mono m0{0, 0};
        (v == Var::A ? m0.da : m0.db) = deg;
        auto it = p.terms().find(m0);
        return it == p.terms().end() ? GaussianRational(0) : it->second;
    };
    GaussianRational alpha = coeff_of(num, 1), beta = coeff_of(num, 0);
    GaussianRational gamma = coeff_of(den, 1), delta = coeff_of(den, 0);
    GaussianRational det = alpha * delta - beta * gamma;
    if (det.is_zero()) throw NonMobiusPullback("pullback_operator: degenerate Moebius map");
    return Rat(den * den, Poly(det));
}

}  // namespace

DifferentialOperator pullback_operator(const DifferentialOperator& op, const GTFactorElement& tau1,
                                       const GTFactorElement& tau2) {
    const Rat ma = tau1.base_mobius(Var::A);
    const Rat mb = tau2.base_mobius(Var::B);
    // d/da' = (1/m_a'(a)) d/da and the b-analogue.
    DifferentialOperator da_prime =
        DifferentialOperator::multiplication(FieldElement(inverse_derivative(ma, Var::A))) *
        DifferentialOperator::partial(Var::A);
    DifferentialOperator db_prime =
        DifferentialOperator::multiplication(FieldElement(inverse_derivative(mb, Var::B))) *
        DifferentialOperator::partial(Var::B);

    // Coefficients pull back through the tau homomorphism on both variables.
    FieldHom hom = FieldHom::compose(tau1.hom(Var::A), tau2.hom(Var::B));

    DifferentialOperator out;
    for (const auto& [k, c] : op.terms()) {
        DifferentialOperator term = DifferentialOperator::multiplication(hom.apply(c));
        for (int t = 0; t < k.first; ++t) term = term * da_prime;
        for (int t = 0; t < k.second; ++t) term = term * db_prime;
        out = out + term;
    }
    return out;
}

int base_class(const Perm3& base) {
    const std::array<uint8_t, 3> key = {base(0), base(1), base(2)};
    if (key == std::array<uint8_t, 3>{0, 1, 2} || key == std::array<uint8_t, 3>{1, 0, 2}) return 0;
    if (key == std::array<uint8_t, 3>{0, 2, 1} || key == std::array<uint8_t, 3>{1, 2, 0}) return 1;
    return 2;
}

DifferentialOperator transformed_pf_operator(int cls, Var v) {
    const Poly x = Poly::variable(v);
    const Poly one_minus_x = Poly(1) - x;
    const GaussianRational quarter(mpq_class(-1, 4), mpq_class(0));
    const int ia = v == Var::A ? 1 : 0;
    DifferentialOperator d;
    switch (cls) {
        case 0:  // a(1-a) d^2 + (1-2a) d - 1/4
            d.add_term(2 * ia, 2 * (1 - ia), FieldElement(Rat(x * one_minus_x)));
            d.add_term(ia, 1 - ia, FieldElement(Rat(Poly(1) - Poly(2) * x)));
            break;
        case 1:  // -a(1-a)^2 d^2 - (1-a)^2 d - 1/4
            d.add_term(2 * ia, 2 * (1 - ia), FieldElement(Rat(-(x * one_minus_x * one_minus_x))));
            d.add_term(ia, 1 - ia, FieldElement(Rat(-(one_minus_x * one_minus_x))));
            break;
        default:  // -a^2(1-a) d^2 + a^2 d - 1/4
            d.add_term(2 * ia, 2 * (1 - ia), FieldElement(Rat(-(x * x * one_minus_x))));
            d.add_term(ia, 1 - ia, FieldElement(Rat(x * x)));
            break;
    }
    d.add_term(0, 0, FieldElement(quarter));
    return d;
}

bool verify_transformation(const GTFactorElement& tau1, const GTFactorElement& tau2) {
    const OperatorPair pf = picard_fuchs_pair();
    for (int which = 1; which <= 2; ++which) {
        const FieldElement& phi = which == 1 ? phi1_cocycle(tau1) : phi2_cocycle(tau2);
        const DifferentialOperator& d = which == 1 ? pf.first : pf.second;
        DifferentialOperator lhs = DifferentialOperator::multiplication(phi.pow(3)) * d *
                                   DifferentialOperator::multiplication(phi.inverse());
        DifferentialOperator rhs = pullback_operator(d, tau1, tau2);
        if (lhs != rhs) return false;
    }
    return true;
}

std::pair<FieldElement, FieldElement> theta_action(
    const GXElement& g, const std::pair<FieldElement, FieldElement>& v) {
    const FieldHom hom = g.tau_hom();
    const FieldElement chi_inv = chi_cocycle(g).inverse();
    const FieldElement f1 = phi1_cocycle(g.tau1()), f2 = phi2_cocycle(g.tau2());
    return {chi_inv * (f1 * f1).inverse() * hom.apply(v.first),
            chi_inv * (f2 * f2).inverse() * hom.apply(v.second)};
}

FieldElement psi_action(const GXElement& g, const FieldElement& f) {
    return chi_cocycle(g).inverse() * g.tau_hom().apply(f);
}

}  // namespace kummer
