#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace pk;
using namespace pktest;

TEST_CASE("parse basics") {
    RingPtr r = make_ring({"u1", "u2"});
    CHECK(parse_poly("0", r).is_zero());
    Polynomial p = parse_poly("u1^2 + 3*u1*u2", r);
    CHECK(p.terms().size() == 2);
    Monomial sq(2), mix(2);
    sq.e = {2, 0};
    mix.e = {1, 1};
    CHECK(p.coeff(sq) == Scalar(1));
    CHECK(p.coeff(mix) == Scalar(3));

    RingPtr r2 = make_ring({"x1", "x2"});
    CHECK(parse_poly("(x1+x2)^2 - x1^2 - x2^2 - 2*x1*x2", r2).is_zero());
}

TEST_CASE("parse rationals, unary minus, powers") {
    RingPtr r = make_ring({"x"});
    CHECK(parse_poly("2/4*x", r) == parse_poly("1/2*x", r));
    CHECK(parse_poly("-x + x", r).is_zero());
    CHECK(parse_poly("x^0", r) == parse_poly("1", r));
    CHECK(parse_poly("(x+1)^3", r) == parse_poly("x^3 + 3*x^2 + 3*x + 1", r));
}

TEST_CASE("parse errors carry token and position") {
    RingPtr r = make_ring({"x"});
    CHECK_THROWS_AS(parse_poly("x + y", r), parse_error);
    try {
        parse_poly("x + y", r);
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
        CHECK(e.token == "y");
        CHECK(e.position == 5);
    }
    CHECK_THROWS_AS(parse_poly("x^y", r), parse_error);
    CHECK_THROWS_AS(parse_poly("x^(2)", r), parse_error);
    CHECK_THROWS_AS(parse_poly("2 x", r), parse_error);   // implicit multiplication
    CHECK_THROWS_AS(parse_poly("x + ", r), parse_error);
    CHECK_THROWS_AS(parse_poly("(x", r), parse_error);
    CHECK_THROWS_AS(parse_poly("1/0", r), parse_error);
}

TEST_CASE("imaginary unit is reserved exactly in gaussian mode") {
    RingPtr gauss = make_ring({"x"}, true);
    Polynomial p = parse_poly("i*x + 2", gauss);
    Monomial x(1);
    x.e = {1};
    CHECK(p.coeff(x) == Scalar::i());
    CHECK(parse_poly("i^2", gauss) == parse_poly("-1", gauss));
    RingPtr plain = make_ring({"x"});
    CHECK_THROWS_AS(parse_poly("i*x", plain), parse_error);
}

TEST_CASE("partial derivative") {
    RingPtr r = make_ring({"u1", "u2"});
    CHECK(parse_poly("u1^2", r).derivative(0) == parse_poly("2*u1", r));
    CHECK(parse_poly("7", r).derivative(1).is_zero());

    MasslessSystem sys;
    CHECK(sys.J().derivative(4) == parse_poly("2*p0", sys.ring()));

    auto g = rng(101);
    for (int t = 0; t < 50; ++t) {
        Polynomial f = random_polynomial(g, r, 4), h = random_polynomial(g, r, 4);
        for (int v = 0; v < 2; ++v)
            CHECK((f * h).derivative(v) == f.derivative(v) * h + f * h.derivative(v));
    }
}

TEST_CASE("ring axioms on random triples") {
    RingPtr r = make_ring({"a", "b", "c", "d"});
    auto g = rng(202);
    for (int t = 0; t < 200; ++t) {
        Polynomial x = random_polynomial(g, r, 4, 3);
        Polynomial y = random_polynomial(g, r, 4, 3);
        Polynomial z = random_polynomial(g, r, 4, 3);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("exact division") {
    MasslessSystem sys;
    const Polynomial& J = sys.J();
    CHECK(*(J * J * Scalar(3)).divide_exact(J) == J * Scalar(3));
    CHECK(!sys.x(0).divide_exact(J).has_value());
    RingPtr r = sys.ring();
    Polynomial f = (J * parse_poly("x1 + p2", r));
    CHECK(*f.divide_exact(J) == parse_poly("x1 + p2", r));

    auto g = rng(303);
    RingPtr r2 = make_ring({"a", "b", "c"});
    for (int t = 0; t < 50; ++t) {
        Polynomial u = random_polynomial(g, r2, 3);
        Polynomial v = random_polynomial(g, r2, 3);
        if (v.is_zero()) continue;
        CHECK(*(u * v).divide_exact(v) == u);
        auto [q, rem] = u.divmod(v);
        CHECK(q * v + rem == u);
    }
    CHECK_THROWS_AS(Polynomial::zero(r2).divmod(Polynomial::zero(r2)), error);
}

TEST_CASE("homogeneous components") {
    RingPtr r = make_ring({"u1", "u2"});
    auto comps = parse_poly("u1^2 + u1", r).homogeneous_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].first == 1);
    CHECK(comps[0].second == parse_poly("u1", r));
    CHECK(comps[1].first == 2);
    CHECK(comps[1].second == parse_poly("u1^2", r));

    CHECK(Polynomial::zero(r).homogeneous_components().empty());

    auto sq = parse_poly("(x1+1)^2", make_ring({"x1"})).homogeneous_components();
    REQUIRE(sq.size() == 3);
    CHECK(sq[0].second == parse_poly("1", sq[0].second.ring()));
    CHECK(sq[1].second == parse_poly("2*x1", sq[1].second.ring()));
    CHECK(sq[2].second == parse_poly("x1^2", sq[2].second.ring()));

    auto g = rng(404);
    for (int t = 0; t < 30; ++t) {
        Polynomial f = random_polynomial(g, r, 5, 6);
        Polynomial sum = Polynomial::zero(r);
        for (const auto& [d, c] : f.homogeneous_components()) {
            CHECK(c.is_homogeneous());
            CHECK(c.total_degree() == d);
            sum += c;
        }
        CHECK(sum == f);
    }
}

TEST_CASE("canonical printing") {
    RingPtr r = make_ring({"u1", "u2"});
    CHECK(Polynomial::zero(r).str() == "0");
    CHECK(parse_poly("u2+u1", r).str() == "u1 + u2");
    CHECK(parse_poly("2/4*u1", r).str() == "1/2*u1");
    CHECK(parse_poly("u1 - u2", r).str() == "u1 - u2");
    CHECK(parse_poly("-u1^2 + u2 - 3", r).str() == "-u1^2 + u2 - 3");

    auto g = rng(505);
    for (int t = 0; t < 200; ++t) {
        Polynomial f = random_polynomial(g, r, 4, 5);
        CHECK(parse_poly(f.str(), r) == f);
    }
    RingPtr gr = make_ring({"z1", "z2"}, true);
    for (int t = 0; t < 200; ++t) {
        Polynomial f = random_polynomial(g, gr, 3, 4, true);
        CHECK(parse_poly(f.str(), gr) == f);
    }
}
