#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace pk;
using namespace pktest;

TEST_CASE("sl2 bracket relations") {
    PoissonStructure P = sl2();
    RingPtr r = P.ring();
    Polynomial e = parse_poly("e", r), h = parse_poly("h", r), f = parse_poly("f", r);
    CHECK(P.bracket(h, e) == parse_poly("2*e", r));
    CHECK(P.bracket(h, f) == parse_poly("-2*f", r));
    CHECK(P.bracket(e, f) == h);
    CHECK(P.jacobiator(e, h, f).is_zero());
    CHECK(P.is_poisson());
}

TEST_CASE("bracket is an antisymmetric biderivation killing constants") {
    PoissonStructure P = sl2();
    auto g = rng(11);
    for (int t = 0; t < 200; ++t) {
        Polynomial a = random_polynomial(g, P.ring(), 3);
        Polynomial b = random_polynomial(g, P.ring(), 3);
        Polynomial c = random_polynomial(g, P.ring(), 3);
        CHECK(P.bracket(a, b) == -P.bracket(b, a));
        CHECK(P.bracket(a, a).is_zero());
        CHECK(P.bracket(a + b, c) == P.bracket(a, c) + P.bracket(b, c));
        CHECK(P.bracket(a * b, c) == a * P.bracket(b, c) + P.bracket(a, c) * b);
    }
    CHECK(P.bracket(random_polynomial(g, P.ring(), 3),
                    Polynomial::constant(P.ring(), Scalar(Rational(7)))).is_zero());
}

TEST_CASE("plane structure Leibniz expansion") {
    PoissonStructure P = plane("u1^2 + u2");
    RingPtr r = P.ring();
    // {u1^2, u2} = 2 u1 {u1, u2}
    CHECK(P.bracket(parse_poly("u1^2", r), parse_poly("u2", r)) ==
          parse_poly("2*u1*(u1^2 + u2)", r));
    for (const char* p : {"1", "u1^2 + u2^2", "u1*u2"}) CHECK(plane(p).is_poisson());
}

TEST_CASE("jacobiator witness for the failing structure") {
    PoissonStructure P = jacobi_failing_structure();
    RingPtr r = P.ring();
    Polynomial x1 = parse_poly("x1", r), x2 = parse_poly("x2", r), x3 = parse_poly("x3", r);
    CHECK(P.jacobiator(x1, x2, x3) == x1);
    CHECK(P.jacobiator(x1, x1, x2).is_zero());
    CHECK_FALSE(P.is_poisson());
    REQUIRE(P.witness().has_value());
    CHECK(P.witness()->i == 0);
    CHECK(P.witness()->j == 1);
    CHECK(P.witness()->k == 2);
    CHECK(P.witness()->value == x1);
}

TEST_CASE("so3 and the zero bivector satisfy Jacobi") {
    CHECK(so3().is_poisson());
    CHECK(zero_structure(4).is_poisson());
}

TEST_CASE("jacobiator vanishes on random triples for Poisson structures") {
    auto g = rng(22);
    for (const auto& [name, P] : example_structures()) {
        CAPTURE(name);
        REQUIRE(P.is_poisson());
        for (int t = 0; t < 100; ++t) {
            Polynomial a = random_polynomial(g, P.ring(), 3, 3);
            Polynomial b = random_polynomial(g, P.ring(), 3, 3);
            Polynomial c = random_polynomial(g, P.ring(), 3, 3);
            CHECK(P.jacobiator(a, b, c).is_zero());
        }
    }
}

TEST_CASE("hamiltonian derivations") {
    PoissonStructure P = so3();
    RingPtr r = P.ring();
    for (int i = 0; i < 3; ++i) {
        Derivation X = P.hamiltonian(Polynomial::variable(r, i));
        for (int m = 0; m < 3; ++m)
            CHECK(X.component(m) == P.bracket(Polynomial::variable(r, i), Polynomial::variable(r, m)));
    }
    CHECK(P.hamiltonian(Polynomial::constant(r, Scalar(5))).is_zero());

    MasslessSystem sys;
    Derivation XJ = sys.structure().hamiltonian(sys.J());
    CHECK(XJ.component(0) == parse_poly("-2*p0", sys.ring()));
    CHECK(XJ.component(1) == parse_poly("2*p1", sys.ring()));
    CHECK(XJ.component(2) == parse_poly("2*p2", sys.ring()));
    CHECK(XJ.component(3) == parse_poly("2*p3", sys.ring()));
    for (int m = 4; m < 8; ++m) CHECK(XJ.component(m).is_zero());
}

TEST_CASE("lie_poisson constructors") {
    PoissonStructure A = lie_poisson({"x1", "x2"}, aff1_constants());
    CHECK(A.entry(0, 1) == parse_poly("x1", A.ring()));
    CHECK(A.is_poisson());

    PoissonStructure Z = lie_poisson({"x1", "x2", "x3"}, abelian_constants(3));
    CHECK(Z.upper_entries().empty());
    CHECK(Z.is_poisson());

    PoissonStructure S = sl2();
    CHECK(S.entry(0, 1) == parse_poly("-2*e", S.ring()));
    CHECK(S.entry(0, 2) == parse_poly("h", S.ring()));
    CHECK(S.entry(1, 2) == parse_poly("-2*f", S.ring()));
    CHECK(S.entry(2, 1) == parse_poly("2*f", S.ring()));
    CHECK(S.entry(1, 1).is_zero());
}

TEST_CASE("lie_poisson Jacobi agrees with the structure-constant Jacobi sum") {
    auto g = rng(33);
    std::uniform_int_distribution<int> dim(3, 4), num(-2, 2);
    int seen_poisson = 0, seen_failing = 0;
    for (int t = 0; t < 50; ++t) {
        int n = dim(g);
        std::map<std::pair<int, int>, std::vector<Rational>> c;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<Rational> row;
                for (int k = 0; k < n; ++k) row.push_back(Rational(num(g)));
                c[{i, j}] = row;
            }
        StructureConstants sc(n, c);
        std::vector<std::string> names;
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        PoissonStructure P = lie_poisson(names, sc);
        CHECK(P.is_poisson() == sc.satisfies_jacobi());
        (P.is_poisson() ? seen_poisson : seen_failing)++;
    }
    CHECK(seen_failing > 0);  // the sweep must exercise both branches
}

TEST_CASE("magnetic cotangent structures") {
    // chi = 0: canonical structure
    PoissonStructure C = magnetic_cotangent(2, {});
    RingPtr r = C.ring();
    CHECK(C.is_poisson());
    CHECK(C.bracket(parse_poly("q1", r), parse_poly("p1", r)) == parse_poly("1", r));
    CHECK(C.bracket(parse_poly("q1", r), parse_poly("p2", r)).is_zero());
    CHECK(C.bracket(parse_poly("q1", r), parse_poly("q2", r)).is_zero());

    // constant chi stays Poisson
    std::map<std::pair<int, int>, Polynomial> chi;
    chi[{0, 1}] = parse_poly("3", r);
    CHECK(magnetic_cotangent(2, chi).is_poisson());

    // non-closed chi in three variables fails with witness (p1, p2, p3)
    RingPtr r3 = cotangent_ring(3);
    std::map<std::pair<int, int>, Polynomial> bad;
    bad[{0, 1}] = parse_poly("q3^2", r3);
    PoissonStructure B = magnetic_cotangent(3, bad);
    CHECK_FALSE(B.is_poisson());
    REQUIRE(B.witness().has_value());
    CHECK(B.witness()->i == 3);
    CHECK(B.witness()->j == 4);
    CHECK(B.witness()->k == 5);
    Polynomial jac = B.jacobiator(parse_poly("p1", r3), parse_poly("p2", r3), parse_poly("p3", r3));
    CHECK(jac == parse_poly("2*q3", r3));

    // p-dependent chi is rejected
    std::map<std::pair<int, int>, Polynomial> wrong;
    wrong[{0, 1}] = parse_poly("p1", r3);
    CHECK_THROWS_AS(magnetic_cotangent(3, wrong), error);
}

TEST_CASE("magnetic Jacobi verdict matches closedness of chi") {
    auto g = rng(44);
    RingPtr r3 = cotangent_ring(3);
    int closed_seen = 0, nonclosed_seen = 0;
    for (int t = 0; t < 30; ++t) {
        std::map<std::pair<int, int>, Polynomial> chi;
        KForm chi_form(r3, 2);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                Polynomial entry = Polynomial::zero(r3);
                std::uniform_int_distribution<int> num(-2, 2), ev(0, 2);
                for (int u = 0; u < 2; ++u) {
                    Monomial m(r3->size());
                    m.e[ev(g)] += 1;
                    m.e[ev(g)] += 1;
                    entry += Polynomial::monomial(r3, m, Scalar(Rational(num(g))));
                }
                if (!entry.is_zero()) {
                    chi[{i, j}] = entry;
                    chi_form.add({i, j}, entry);
                }
            }
        bool closed = de_rham(chi_form).is_zero();
        (closed ? closed_seen : nonclosed_seen)++;
        CHECK(magnetic_cotangent(3, chi).is_poisson() == closed);
    }
    CHECK(closed_seen > 0);
    CHECK(nonclosed_seen > 0);
}

TEST_CASE("derivation commutator") {
    PoissonStructure P = sl2();
    auto g = rng(55);
    for (int t = 0; t < 20; ++t) {
        Polynomial a = random_polynomial(g, P.ring(), 2);
        Polynomial b = random_polynomial(g, P.ring(), 2);
        Polynomial c = random_polynomial(g, P.ring(), 2);
        Derivation X = P.hamiltonian(a), Y = P.hamiltonian(b);
        CHECK(X.commutator(Y)(c) == X(Y(c)) - Y(X(c)));
        // {a,-} is a Lie-algebra morphism into derivations
        CHECK(P.hamiltonian(P.bracket(a, b))(c) == X.commutator(Y)(c));
    }
}
