#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "kummer/errors.hpp"
#include "kummer/field_hom.hpp"
#include "kummer/serialize.hpp"
#include "test_support.hpp"

using namespace kummer;
using kummer::testing::TestRng;

namespace {

const Poly kA = Poly::variable(Var::A);
const Poly kB = Poly::variable(Var::B);

FieldElement sqrt_a() { return FieldElement::root(kSqrtA); }
FieldElement sqrt_1ma() { return FieldElement::root(kSqrtOneMinusA); }
FieldElement sqrt_b() { return FieldElement::root(kSqrtB); }
FieldElement sqrt_1mb() { return FieldElement::root(kSqrtOneMinusB); }

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK((GaussianRational(1) + i) * (GaussianRational(1) - i) == GaussianRational(2));
    CHECK(i.inverse() == -i);
    CHECK_THROWS_AS(GaussianRational(0).inverse(), ZeroInverse);
}

TEST_CASE("polynomial gcd and exact division") {
    Poly amb = kA - kB;
    Poly f = amb * (kA + kB - Poly(1)) * (kA + kB - Poly(1));
    Poly g = amb * (Poly(1) - kA);
    Poly d = Poly::gcd(f, g);
    CHECK(d == amb);  // a - b is already monic under lex order
    CHECK(Poly::exact_div(f, d) * d == f);

    TestRng rng(7001);
    for (int k = 0; k < 50; ++k) {
        Poly p = rng.nonzero_poly(), q = rng.nonzero_poly(), m = rng.nonzero_poly();
        Poly gg = Poly::gcd(p * m, q * m);
        // gcd(pm, qm) must be divisible by m.
        CHECK(Poly::exact_div(gg, Poly::gcd(gg, m)) * Poly::gcd(gg, m) == gg);
        CHECK(Poly::gcd(gg, m) == Poly::gcd(m, gg));
        Poly r1 = Poly::exact_div(p * m, gg);
        CHECK(r1 * gg == p * m);
    }
}

TEST_CASE("rational function canonical form") {
    // (a/(a-b)) + (b/(b-a)) collapses to the constant 1.
    Rat x(kA, kA - kB);
    Rat y(kB, kB - kA);
    CHECK(x + y == Rat(1));
    CHECK((x + y).is_one());

    // Canonical equality is representation-independent.
    Rat p(kA * kB - kA, kA * (kA - kB));
    Rat q((kB - Poly(1)) * kA, (kA - kB) * kA);
    CHECK(p == q);
}

TEST_CASE("fe_add examples") {
    CHECK(sqrt_a() + sqrt_a() == sqrt_a() * Rat(2));
    TestRng rng(7002);
    FieldElement x = rng.field_element();
    CHECK(x + FieldElement() == x);
    FieldElement sum = FieldElement(Rat(kA, kA - kB)) + FieldElement(Rat(kB, kB - kA));
    CHECK(sum == FieldElement(1));
}

TEST_CASE("fe_mul examples") {
    CHECK(sqrt_a() * sqrt_a() == FieldElement::var(Var::A));
    FieldElement triple = sqrt_a() * sqrt_1ma() * sqrt_b();
    FieldElement expect;
    expect.set_coeff(kSqrtA | kSqrtOneMinusA | kSqrtB, Rat(1));
    CHECK(triple == expect);

    // (sqrt(1-b)/sqrt(1-a)) * (sqrt(1-a)/sqrt(1-b)) = 1
    FieldElement r1, r2;
    r1.set_coeff(kSqrtOneMinusA | kSqrtOneMinusB, Rat(Poly(1), Poly(1) - kA));
    r2.set_coeff(kSqrtOneMinusA | kSqrtOneMinusB, Rat(Poly(1), Poly(1) - kB));
    CHECK(r1 * r2 == FieldElement(1));
}

TEST_CASE("fe_inverse closed forms") {
    FieldElement inv = sqrt_1ma().inverse();
    FieldElement expect;
    expect.set_coeff(kSqrtOneMinusA, Rat(Poly(1), Poly(1) - kA));
    CHECK(inv == expect);

    // (1 + sqrt(a))^{-1} = (1 - sqrt(a))/(1 - a)
    FieldElement e = (FieldElement(1) + sqrt_a()).inverse();
    FieldElement expect2 = (FieldElement(1) - sqrt_a()) * Rat(Poly(1), Poly(1) - kA);
    CHECK(e == expect2);

    CHECK_THROWS_AS(FieldElement().inverse(), ZeroInverse);
}

TEST_CASE("field axioms on random triples") {
    TestRng rng(7003);
    for (int k = 0; k < 1000; ++k) {
        FieldElement x = rng.field_element(2), y = rng.field_element(2), z = rng.field_element(2);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("inverse round-trip on random nonzero elements") {
    TestRng rng(7004);
    for (int k = 0; k < 500; ++k) {
        FieldElement x = rng.nonzero_field_element(2);
        CHECK(x * x.inverse() == FieldElement(1));
    }
}

TEST_CASE("fe_derive closed forms and Leibniz rule") {
    FieldElement d = sqrt_a().derivative(Var::A);
    FieldElement expect;
    expect.set_coeff(kSqrtA, Rat(Poly(1), Poly(2) * kA));
    CHECK(d == expect);
    CHECK(sqrt_b().derivative(Var::A).is_zero());

    TestRng rng(7005);
    for (int k = 0; k < 500; ++k) {
        FieldElement x = rng.field_element(2), y = rng.field_element(2);
        for (Var v : {Var::A, Var::B}) {
            FieldElement lhs = (x * y).derivative(v);
            FieldElement rhs = x.derivative(v) * y + x * y.derivative(v);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("fe_derive against finite differences") {
    // d/da of sqrt(1-a)/sqrt(1-b), checked numerically at 5 base points.
    FieldElement f;
    f.set_coeff(kSqrtOneMinusA | kSqrtOneMinusB, Rat(Poly(1), Poly(1) - kB));
    FieldElement df = f.derivative(Var::A);
    FieldElement expect;
    expect.set_coeff(kSqrtOneMinusA | kSqrtOneMinusB,
                     Rat(Poly(-1), (Poly(2) * (Poly(1) - kA)) * (Poly(1) - kB)));
    CHECK(df == expect);

    TestRng rng(7006);
    for (int k = 0; k < 5; ++k) {
        BranchPoint p = rng.branch_point(false);
        double a = p.a().real(), b = p.b().real();
        const double h = 1e-5;
        auto at = [&](double aa) { return f.eval(BranchPoint::principal(aa, b)); };
        std::complex<double> d1h = (at(a + h) - at(a - h)) / (2.0 * h);
        std::complex<double> d1h2 = (at(a + h / 2) - at(a - h / 2)) / h;
        std::complex<double> fd = (4.0 * d1h2 - d1h) / 3.0;
        std::complex<double> sym = df.eval(p);
        CHECK(std::abs(fd - sym) <= 1e-8 * std::abs(sym));
    }
}

TEST_CASE("hom_apply basics") {
    // Flip only sqrt(1-a).
    FieldHom flip(Rat::variable(Var::A), Rat::variable(Var::B), sqrt_a(), -sqrt_1ma(), sqrt_b(),
                  sqrt_1mb());
    CHECK(flip.apply(sqrt_1ma()) == -sqrt_1ma());
    CHECK(flip.apply(sqrt_a()) == sqrt_a());

    FieldHom id;
    TestRng rng(7007);
    FieldElement x = rng.field_element();
    CHECK(id.apply(x) == x);

    // Swap a <-> 1-a and b <-> 1-b.
    FieldHom swap(Rat(Poly(1) - kA), Rat(Poly(1) - kB), sqrt_1ma(), sqrt_a(), sqrt_1mb(), sqrt_b());
    CHECK(swap.apply(FieldElement::var(Var::A)) == FieldElement(Rat(Poly(1) - kA)));

    // Invalid root image rejected.
    CHECK_THROWS_AS(FieldHom(Rat::variable(Var::A), Rat::variable(Var::B), sqrt_1ma(), sqrt_1ma(),
                             sqrt_b(), sqrt_1mb()),
                    std::invalid_argument);
}

TEST_CASE("hom_apply is a ring homomorphism") {
    TestRng rng(7008);
    for (int k = 0; k < 500; ++k) {
        FieldHom h = rng.gx().tau_hom();
        FieldElement x = rng.field_element(2), y = rng.field_element(2);
        CHECK(h.apply(x * y) == h.apply(x) * h.apply(y));
        CHECK(h.apply(x + y) == h.apply(x) + h.apply(y));
    }
}

TEST_CASE("fe_eval examples and compatibility") {
    FieldElement f(Rat(Poly(1), kA - kB));
    BranchPoint p0 = BranchPoint::principal(-1.0, -2.0);
    CHECK(f.eval(p0) == std::complex<double>(1.0, 0.0));

    // sqrt(a) sqrt(b) at a=-1, b=-4 with roots i and 2i.
    FieldElement g = sqrt_a() * sqrt_b();
    BranchPoint p1(std::complex<double>(-1.0), std::complex<double>(-4.0),
                   std::complex<double>(0.0, 1.0), std::complex<double>(std::sqrt(2.0)),
                   std::complex<double>(0.0, 2.0), std::complex<double>(std::sqrt(5.0)));
    CHECK(std::abs(g.eval(p1) - std::complex<double>(-2.0, 0.0)) < 1e-14);

    TestRng rng(7009);
    for (int k = 0; k < 50; ++k) {
        BranchPoint p = rng.branch_point();
        FieldElement x = rng.field_element(2), y = rng.field_element(2);
        std::complex<double> ex = x.eval(p), ey = y.eval(p);
        double scale = std::max({std::abs(ex), std::abs(ey), 1.0});
        CHECK(std::abs((x + y).eval(p) - (ex + ey)) <= 1e-12 * scale);
        CHECK(std::abs((x * y).eval(p) - ex * ey) <= 1e-12 * scale * scale);
    }
}

TEST_CASE("pole detection at evaluation") {
    FieldElement f(Rat(Poly(1), Poly(2) * kA + Poly(1)));
    BranchPoint p = BranchPoint::principal(-0.5, -1.5);
    CHECK_THROWS_AS(f.eval(p), PoleAtPoint);
}

TEST_CASE("branch point validation") {
    using C = std::complex<double>;
    CHECK_THROWS_AS(BranchPoint(C(-1), C(-2), C(1), C(std::sqrt(2.0)), C(0, std::sqrt(2.0)),
                                C(std::sqrt(3.0))),
                    DomainError);                                          // bad sqrt_a
    CHECK_THROWS_AS(BranchPoint::principal(-1.0, -1.0), DomainError);     // a == b
    CHECK_THROWS_AS(BranchPoint::principal(-1.0, 2.0), DomainError);      // b not negative
    // a = 1 - b locus: a=-1, b=2 is rejected above for sign; use full ctor.
    CHECK_THROWS_AS(BranchPoint(C(-1), C(2), C(0, 1), C(std::sqrt(2.0)), C(std::sqrt(2.0)),
                                C(0, 1)),
                    DomainError);
}

TEST_CASE("the 16 monomials are numerically independent") {
    // Evaluate all 16 monomials at the 16 sign-flip variants of one base
    // point; the matrix must be comfortably invertible.
    BranchPoint base = BranchPoint::principal(-0.7, -1.3);
    Eigen::MatrixXcd m(16, 16);
    for (int flip = 0; flip < 16; ++flip) {
        BranchPoint p = base.with_flipped_roots(flip);
        for (int mask = 0; mask < 16; ++mask) m(flip, mask) = p.monomial_value(mask);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    double cond = svd.singularValues()(0) / svd.singularValues()(15);
    CHECK(cond < 1e6);
}

TEST_CASE("canonical serialization is stable") {
    FieldElement f;
    f.set_coeff(kSqrtA, Rat(kA - kB, kA * kB));
    f.set_coeff(0, Rat(GaussianRational(mpq_class(1, 2), mpq_class(-3, 4))));
    CHECK(to_string(f) ==
          "(fe (1 (/ (p (m 0 0 (i 1/2 -3/4))) (p (m 0 0 1)))) "
          "(sa (/ (p (m 1 0 1) (m 0 1 -1)) (p (m 1 1 1)))))");
}
