#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace pk;
using namespace pktest;

TEST_CASE("wedge: alternation, shuffle values, graded commutativity") {
    RingPtr r = make_ring({"x1", "x2", "x3"});
    auto g = rng(66);

    for (int t = 0; t < 20; ++t) {
        KForm theta = random_one_form(g, r, 2);
        CHECK(wedge(theta, theta).is_zero());
    }

    // basis duals: eps1 ^ eps2 on (dx1, dx2) is 1
    KForm e1 = KForm::zero(r, 1), e2 = KForm::zero(r, 1), e3 = KForm::zero(r, 1);
    Polynomial one = Polynomial::constant(r, Scalar(1));
    e1.add({0}, one);
    e2.add({1}, one);
    e3.add({2}, one);
    CHECK(wedge(e1, e2).coeff({0, 1}) == one);
    CHECK(wedge(e2, e1).coeff({0, 1}) == -one);

    // (x1 e1) ^ (x2 e2) ^ e3 on (dx1,dx2,dx3) is x1 x2
    KForm a = e1.scaled(parse_poly("x1", r));
    KForm b = e2.scaled(parse_poly("x2", r));
    CHECK(wedge(wedge(a, b), e3).coeff({0, 1, 2}) == parse_poly("x1*x2", r));

    for (int t = 0; t < 30; ++t) {
        std::uniform_int_distribution<int> deg(0, 2);
        int p = deg(g), q = deg(g), s = deg(g);
        KForm w = random_kform(g, r, p, 2);
        KForm e = random_kform(g, r, q, 2);
        KForm f = random_kform(g, r, s, 2);
        KForm lhs = wedge(w, e);
        KForm rhs = wedge(e, w);
        if ((p * q) % 2 == 1) rhs = -rhs;
        CHECK(lhs == rhs);
        CHECK(wedge(wedge(w, e), f) == wedge(w, wedge(e, f)));
        Polynomial c = random_polynomial(g, r, 2);
        CHECK(wedge(w.scaled(c), e) == wedge(w, e.scaled(c)));
    }
}

TEST_CASE("sharp maps basis differentials to Hamiltonian derivations") {
    for (const auto& [name, P] : example_structures()) {
        CAPTURE(name);
        RingPtr r = P.ring();
        for (int i = 0; i < r->size(); ++i) {
            KForm ei = KForm::zero(r, 1);
            ei.add({i}, Polynomial::constant(r, Scalar(1)));
            CHECK(sharp(P, ei) == P.hamiltonian(Polynomial::variable(r, i)));
        }
    }
    PoissonStructure Z = zero_structure(3);
    auto g = rng(77);
    CHECK(sharp(Z, random_one_form(g, Z.ring(), 2)).is_zero());

    MasslessSystem sys;
    KForm dJ = kahler_differential(sys.J());
    Derivation s = sharp(sys.structure(), dJ);
    CHECK(s.component(0) == parse_poly("-2*p0", sys.ring()));
    CHECK(s.component(1) == parse_poly("2*p1", sys.ring()));
    CHECK(s.component(2) == parse_poly("2*p2", sys.ring()));
    CHECK(s.component(3) == parse_poly("2*p3", sys.ring()));
    for (int m = 4; m < 8; ++m) CHECK(s.component(m).is_zero());
}

TEST_CASE("bracket of one-forms: worked values") {
    PoissonStructure S = sl2();
    RingPtr r = S.ring();
    KForm de = kahler_differential(parse_poly("e", r));
    KForm df = kahler_differential(parse_poly("f", r));
    KForm dh = kahler_differential(parse_poly("h", r));
    CHECK(bracket_one_forms(S, de, df) == dh);

    auto g = rng(88);
    KForm any = random_one_form(g, r, 2);
    CHECK(bracket_one_forms(S, any, any).is_zero());

    PoissonStructure P = plane("u1^2");
    KForm du1 = kahler_differential(parse_poly("u1", P.ring()));
    KForm du2 = kahler_differential(parse_poly("u2", P.ring()));
    CHECK(bracket_one_forms(P, du1, du2) ==
          KForm::one_form(P.ring(), {parse_poly("2*u1", P.ring()), Polynomial::zero(P.ring())}));
}

TEST_CASE("bracket of one-forms equals the Lie-derivative form (3.8.1')") {
    auto g = rng(99);
    for (const auto& [name, P] : example_structures()) {
        CAPTURE(name);
        for (int t = 0; t < 7; ++t) {
            KForm a = random_one_form(g, P.ring(), 2);
            KForm b = random_one_form(g, P.ring(), 2);
            KForm lhs = bracket_one_forms(P, a, b);
            KForm pi_ab = kahler_differential(evaluate(poisson_two_form(P), {a, b}));
            KForm rhs = lie_derivative_differential(sharp(P, a), b) -
                        lie_derivative_differential(sharp(P, b), a) - pi_ab;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("anchor is a homomorphism of brackets") {
    auto g = rng(111);
    for (const auto& [name, P] : example_structures()) {
        CAPTURE(name);
        for (int t = 0; t < 7; ++t) {
            KForm a = random_one_form(g, P.ring(), 2);
            KForm b = random_one_form(g, P.ring(), 2);
            CHECK(sharp(P, bracket_one_forms(P, a, b)) ==
                  sharp(P, a).commutator(sharp(P, b)));
        }
    }
}

TEST_CASE("Jacobi for the one-form bracket fails exactly off the Poisson locus") {
    PoissonStructure P = jacobi_failing_structure();
    RingPtr r = P.ring();
    CHECK_THROWS_AS(bracket_one_forms(P, KForm::zero(r, 1), KForm::zero(r, 1)),
                    precondition_error);
    KForm d1 = kahler_differential(parse_poly("x1", r));
    KForm d2 = kahler_differential(parse_poly("x2", r));
    KForm d3 = kahler_differential(parse_poly("x3", r));
    auto br = [&](const KForm& u, const KForm& v) { return bracket_one_forms_raw(P, u, v); };
    KForm jac = br(br(d1, d2), d3) + br(br(d2, d3), d1) + br(br(d3, d1), d2);
    CHECK_FALSE(jac.is_zero());
}

TEST_CASE("CE differential: worked values and d^2 = 0") {
    auto g = rng(222);
    for (const auto& [name, P] : example_structures()) {
        CAPTURE(name);
        RingPtr r = P.ring();
        // Lemma 3.9
        CHECK(ce_differential(P, poisson_two_form(P)).is_zero());
        // constants are closed
        CHECK(ce_differential(P, KForm::from_polynomial(Polynomial::constant(r, Scalar(3)))).is_zero());
        int cases = (r->size() <= 4) ? 25 : 10;
        for (int t = 0; t < cases; ++t) {
            std::uniform_int_distribution<int> deg(0, 3);
            KForm w = random_kform(g, r, deg(g), 3);
            CHECK(ce_differential(P, ce_differential(P, w)).is_zero());
        }
    }
    // Lie-Poisson potential: d theta = pi
    for (auto P : {sl2(), so3(), aff1()}) {
        CHECK(ce_differential(P, euler_potential(P)) == poisson_two_form(P));
    }
}

TEST_CASE("CE differential is a (right-signed) derivation of the wedge") {
    // Under the printed (-1)^n convention the derivation property reads
    // d(w ^ e) = (-1)^{|e|} dw ^ e + w ^ de.
    auto g = rng(333);
    PoissonStructure P = sl2();
    for (int t = 0; t < 40; ++t) {
        std::uniform_int_distribution<int> deg(0, 2);
        int p = deg(g), q = deg(g);
        KForm w = random_kform(g, P.ring(), p, 2);
        KForm e = random_kform(g, P.ring(), q, 2);
        KForm lhs = ce_differential(P, wedge(w, e));
        KForm first = wedge(ce_differential(P, w), e);
        if (q % 2 == 1) first = -first;
        CHECK(lhs == first + wedge(w, ce_differential(P, e)));
    }
}

TEST_CASE("poisson_two_form stores the bivector") {
    CHECK(poisson_two_form(plane("1")).coeff({0, 1}) ==
          Polynomial::constant(plane_ring(), Scalar(1)));
    CHECK(poisson_two_form(plane("u1^2 + u2^2")).coeff({0, 1}) ==
          parse_poly("u1^2 + u2^2", plane_ring()));
    CHECK(poisson_two_form(zero_structure(3)).is_zero());
}

TEST_CASE("Lie derivative of forms") {
    PoissonStructure P = sl2();
    RingPtr r = P.ring();
    auto g = rng(444);

    // kills constant 0-forms
    Derivation X = P.hamiltonian(random_polynomial(g, r, 2));
    CHECK(lie_derivative_form(P, X, KForm::from_polynomial(Polynomial::constant(r, Scalar(9))))
              .is_zero());
    // reduces to X on 0-forms
    Polynomial f = random_polynomial(g, r, 3);
    CHECK(lie_derivative_form(P, X, KForm::from_polynomial(f)).coeff({}) == X(f));

    // conformal identity: lambda_{X_theta}(pi) = -d theta, arbitrary theta
    for (const auto& [name, Q] : example_structures()) {
        CAPTURE(name);
        for (int t = 0; t < 10; ++t) {
            KForm theta = random_one_form(g, Q.ring(), 2);
            Derivation Xt = as_derivation(theta);
            CHECK(lie_derivative_form(Q, Xt, poisson_two_form(Q)) ==
                  -ce_differential(Q, theta));
        }
    }

    // potential case: lambda_{-X_theta}(pi) = pi
    for (auto Q : {sl2(), so3(), aff1()}) {
        KForm theta = euler_potential(Q);
        Derivation Xt = as_derivation(theta);
        CHECK(lie_derivative_form(Q, -Xt, poisson_two_form(Q)) == poisson_two_form(Q));
    }
}

TEST_CASE("Koszul boundary: worked values and boundary^2 = 0") {
    auto g = rng(555);
    PoissonStructure S = sl2();
    RingPtr r = S.ring();

    // single-term instance: d(a<dx_i>) = {a, x_i}
    for (int t = 0; t < 10; ++t) {
        Polynomial a = random_polynomial(g, r, 3);
        for (int i = 0; i < 3; ++i) {
            KChain c(r, 1);
            c.add({i}, a);
            KChain b = koszul_boundary(S, c);
            CHECK(b.coeff({}) == S.bracket(a, Polynomial::variable(r, i)));
        }
    }

    // sl2: boundary of e<df> is {e, f} = h
    KChain c(r, 1);
    c.add({2}, parse_poly("e", r));
    CHECK(koszul_boundary(S, c).coeff({}) == parse_poly("h", r));

    // zero bivector kills everything
    PoissonStructure Z = zero_structure(3);
    for (int t = 0; t < 5; ++t) {
        std::uniform_int_distribution<int> deg(1, 3);
        CHECK(koszul_boundary(Z, random_kchain(g, Z.ring(), deg(g), 3)).is_zero());
    }

    // boundary of a 0-chain is undefined
    CHECK_THROWS_AS(koszul_boundary(S, KChain::zero(r, 0)), error);

    for (const auto& [name, P] : example_structures()) {
        CAPTURE(name);
        int cases = (P.ring()->size() <= 4) ? 25 : 10;
        for (int t = 0; t < cases; ++t) {
            std::uniform_int_distribution<int> deg(2, 3);
            KChain ch = random_kchain(g, P.ring(), deg(g), 3);
            CHECK(koszul_boundary(P, koszul_boundary(P, ch)).is_zero());
        }
    }
}

TEST_CASE("de Rham differential squares to zero") {
    RingPtr r = make_ring({"x1", "x2", "x3", "x4"});
    auto g = rng(666);
    for (int t = 0; t < 30; ++t) {
        std::uniform_int_distribution<int> deg(0, 2);
        KForm w = random_kform(g, r, deg(g), 3);
        CHECK(de_rham(de_rham(w)).is_zero());
    }
    // d of a 0-form is the Kahler differential
    Polynomial f = random_polynomial(g, r, 3);
    CHECK(de_rham(KForm::from_polynomial(f)) == kahler_differential(f));
}
