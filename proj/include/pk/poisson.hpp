#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pk/polynomial.hpp"

namespace pk {

// Derivation of the polynomial ring, given by its values on the generators.
class Derivation {
  public:
    Derivation(RingPtr ring, std::vector<Polynomial> components);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& components() const { return comps_; }
    const Polynomial& component(int i) const { return comps_.at(i); }

    static Derivation zero(const RingPtr& ring);
    bool is_zero() const;

    Polynomial operator()(const Polynomial& f) const;
    Derivation commutator(const Derivation& o) const;

    Derivation operator+(const Derivation& o) const;
    Derivation operator-(const Derivation& o) const;
    Derivation operator-() const;
    Derivation scaled(const Polynomial& a) const;

    bool operator==(const Derivation& o) const { return comps_ == o.comps_; }

  private:
    RingPtr ring_;
    std::vector<Polynomial> comps_;
};

struct JacobiWitness {
    int i, j, k;
    Polynomial value;
};

// Candidate Poisson structure: antisymmetric bivector entries P_ij over the
// ambient ring. The Jacobi verdict is computed once on the generator triples
// at construction; non-Jacobi candidates are representable on purpose.
class PoissonStructure {
  public:
    PoissonStructure(RingPtr ring, std::map<std::pair<int, int>, Polynomial> upper_entries);

    const RingPtr& ring() const { return ring_; }
    // Signed entry {x_i, x_j}; antisymmetry is structural.
    Polynomial entry(int i, int j) const;

    Polynomial bracket(const Polynomial& f, const Polynomial& g) const;
    Polynomial jacobiator(const Polynomial& f, const Polynomial& g, const Polynomial& h) const;

    bool is_poisson() const { return jacobi_ok_; }
    const std::optional<JacobiWitness>& witness() const { return witness_; }
    void require_poisson(const char* where) const;

    Derivation hamiltonian(const Polynomial& a) const;

    // Same entries over a ring with an identical variable list.
    PoissonStructure with_ring(RingPtr ring) const;

    const std::map<std::pair<int, int>, Polynomial>& upper_entries() const { return biv_; }

  private:
    RingPtr ring_;
    std::map<std::pair<int, int>, Polynomial> biv_;  // keys i < j, values nonzero
    bool jacobi_ok_ = true;
    std::optional<JacobiWitness> witness_;
};

// Structure constants c_{ij}^k of a candidate Lie algebra, antisymmetric in (i, j).
class StructureConstants {
  public:
    StructureConstants(int dim, std::map<std::pair<int, int>, std::vector<Rational>> upper);

    int dim() const { return n_; }
    Rational c(int i, int j, int k) const;  // signed
    // Sum over m of c_{ij}^m c_{mk}^l + cyclic in (i,j,k); zero for all
    // (i,j,k,l) exactly when the constants satisfy the Jacobi identity.
    bool satisfies_jacobi() const;

  private:
    int n_;
    std::map<std::pair<int, int>, std::vector<Rational>> c_;  // keys i < j
};

PoissonStructure lie_poisson(const std::vector<std::string>& names, const StructureConstants& c);

inline RingPtr cotangent_ring(int n) {
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("q" + std::to_string(i));
    for (int i = 1; i <= n; ++i) vars.push_back("p" + std::to_string(i));
    return make_ring(std::move(vars));
}

// {q_i,q_j} = 0, {q_i,p_j} = delta_ij, {p_i,p_j} = chi_ij(q) over cotangent_ring(n).
PoissonStructure magnetic_cotangent(int n, const std::map<std::pair<int, int>, Polynomial>& chi);

// {u1,u2} = p over p's two-variable ring; Poisson for every p.
PoissonStructure plane_structure(const Polynomial& p);

}  // namespace pk
