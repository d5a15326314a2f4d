#pragma once

#include <random>
#include <vector>

#include "pk/forms.hpp"
#include "pk/homalg.hpp"
#include "pk/parser.hpp"
#include "pk/reduce.hpp"

namespace pktest {

using namespace pk;

inline std::mt19937_64 rng(unsigned seed) { return std::mt19937_64(seed); }

inline Rational random_rational(std::mt19937_64& g, int num_range = 5) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, 4);
    Rational q(num(g));
    q /= den(g);
    return q;
}

inline Polynomial random_polynomial(std::mt19937_64& g, const RingPtr& ring, int maxdeg,
                                    int nterms = 4, bool gaussian = false) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    Polynomial p = Polynomial::zero(ring);
    for (int t = 0; t < nterms; ++t) {
        Monomial m(ring->size());
        int budget = deg(g);
        std::uniform_int_distribution<int> pick(0, ring->size() - 1);
        for (int u = 0; u < budget; ++u) m.e[pick(g)] += 1;
        Scalar c = gaussian ? Scalar(random_rational(g), random_rational(g))
                            : Scalar(random_rational(g));
        p += Polynomial::monomial(ring, m, c);
    }
    return p;
}

inline KForm random_kform(std::mt19937_64& g, const RingPtr& ring, int k, int maxdeg,
                          int nterms = 3) {
    KForm w(ring, k);
    for (const auto& t : increasing_tuples(ring->size(), k))
        w.add(t, random_polynomial(g, ring, maxdeg, nterms));
    return w;
}

inline KChain random_kchain(std::mt19937_64& g, const RingPtr& ring, int k, int maxdeg,
                            int nterms = 3) {
    KChain c(ring, k);
    for (const auto& t : increasing_tuples(ring->size(), k))
        c.add(t, random_polynomial(g, ring, maxdeg, nterms));
    return c;
}

inline KForm random_one_form(std::mt19937_64& g, const RingPtr& ring, int maxdeg) {
    return random_kform(g, ring, 1, maxdeg);
}

// --- named structures used across the tests and the acceptance suite ---

inline StructureConstants sl2_constants() {
    // basis (e, h, f): [e,h] = -2e, [e,f] = h, [h,f] = -2f
    std::map<std::pair<int, int>, std::vector<Rational>> c;
    c[{0, 1}] = {Rational(-2), Rational(0), Rational(0)};
    c[{0, 2}] = {Rational(0), Rational(1), Rational(0)};
    c[{1, 2}] = {Rational(0), Rational(0), Rational(-2)};
    return StructureConstants(3, c);
}

inline PoissonStructure sl2() { return lie_poisson({"e", "h", "f"}, sl2_constants()); }

inline StructureConstants so3_constants() {
    // [x1,x2] = x3, [x2,x3] = x1, [x3,x1] = x2
    std::map<std::pair<int, int>, std::vector<Rational>> c;
    c[{0, 1}] = {Rational(0), Rational(0), Rational(1)};
    c[{1, 2}] = {Rational(1), Rational(0), Rational(0)};
    c[{0, 2}] = {Rational(0), Rational(-1), Rational(0)};
    return StructureConstants(3, c);
}

inline PoissonStructure so3() { return lie_poisson({"x1", "x2", "x3"}, so3_constants()); }

inline StructureConstants aff1_constants() {
    // [e1,e2] = e1
    std::map<std::pair<int, int>, std::vector<Rational>> c;
    c[{0, 1}] = {Rational(1), Rational(0)};
    return StructureConstants(2, c);
}

inline PoissonStructure aff1() { return lie_poisson({"x1", "x2"}, aff1_constants()); }

inline StructureConstants abelian_constants(int n) {
    return StructureConstants(n, {});
}

inline RingPtr plane_ring() { return make_ring({"u1", "u2"}); }

inline PoissonStructure plane(const std::string& p) {
    return plane_structure(parse_poly(p, plane_ring()));
}

inline PoissonStructure zero_structure(int n) {
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    return PoissonStructure(make_ring(vars), {});
}

// P12 = x2, P23 = x1, P13 = 0: fails Jacobi with jacobiator(x1,x2,x3) = x1.
inline PoissonStructure jacobi_failing_structure() {
    RingPtr ring = make_ring({"x1", "x2", "x3"});
    std::map<std::pair<int, int>, Polynomial> entries;
    entries[{0, 1}] = Polynomial::variable(ring, 1);
    entries[{1, 2}] = Polynomial::variable(ring, 0);
    return PoissonStructure(ring, entries);
}

// Potential with theta(dx_i) = x_i for a linear bivector.
inline KForm euler_potential(const PoissonStructure& P) {
    std::vector<Polynomial> comps;
    for (int i = 0; i < P.ring()->size(); ++i) comps.push_back(Polynomial::variable(P.ring(), i));
    return KForm::one_form(P.ring(), comps);
}

// Poisson members of the worked example corpus.
inline std::vector<std::pair<std::string, PoissonStructure>> example_structures() {
    std::vector<std::pair<std::string, PoissonStructure>> out;
    out.emplace_back("sl2", sl2());
    out.emplace_back("so3", so3());
    out.emplace_back("aff1", aff1());
    out.emplace_back("plane(1)", plane("1"));
    out.emplace_back("plane(u1^2)", plane("u1^2"));
    out.emplace_back("plane(u1*u2)", plane("u1*u2"));
    out.emplace_back("zero(3)", zero_structure(3));
    std::map<std::pair<int, int>, Polynomial> chi;
    RingPtr mring = cotangent_ring(2);
    chi[{0, 1}] = parse_poly("q1 + 3*q2", mring);
    out.emplace_back("magnetic(2)", magnetic_cotangent(2, chi));
    return out;
}

}  // namespace pktest
