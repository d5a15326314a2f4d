#pragma once

#include <map>
#include <vector>

#include "pk/poisson.hpp"

namespace pk {

using IndexTuple = std::vector<int>;

namespace detail {

// Shared coefficient table on strictly increasing index tuples. KForm and
// KChain get distinct types from it so the cochain differential cannot be
// applied where the boundary is meant.
template <typename Derived>
class AltTable {
  public:
    AltTable(RingPtr ring, int k) : ring_(std::move(ring)), k_(k) {
        if (k_ < 0) throw error("arity must be nonnegative");
    }

    const RingPtr& ring() const { return ring_; }
    int arity() const { return k_; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::map<IndexTuple, Polynomial>& coeffs() const { return coeffs_; }

    Polynomial coeff(const IndexTuple& increasing) const {
        auto it = coeffs_.find(increasing);
        return it == coeffs_.end() ? Polynomial::zero(ring_) : it->second;
    }

    // Value on an arbitrary tuple: zero on repeats, signed sort otherwise.
    Polynomial coeff_signed(IndexTuple tuple) const;

    void add(const IndexTuple& increasing, const Polynomial& p) {
        check_tuple(increasing);
        if (p.is_zero()) return;
        auto [it, inserted] = coeffs_.emplace(increasing, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    // Signed insertion through an arbitrary tuple; repeats contribute nothing.
    void add_signed(IndexTuple tuple, Polynomial p);

    Derived operator+(const Derived& o) const;
    Derived operator-(const Derived& o) const;
    Derived operator-() const;
    Derived scaled(const Polynomial& a) const;
    Derived scaled(const Scalar& c) const;

    bool operator==(const Derived& o) const { return k_ == o.arity() && coeffs_ == o.coeffs(); }
    bool operator!=(const Derived& o) const { return !(*this == o); }

  protected:
    void check_tuple(const IndexTuple& t) const;

    RingPtr ring_;
    int k_;
    std::map<IndexTuple, Polynomial> coeffs_;
};

}  // namespace detail

// Alternating A-multilinear k-form on the free module with basis dx_1..dx_n;
// a 1-form doubles as the element of that module with the same coefficients.
class KForm : public detail::AltTable<KForm> {
  public:
    using AltTable::AltTable;
    static KForm zero(RingPtr ring, int k) { return KForm(std::move(ring), k); }
    static KForm from_polynomial(const Polynomial& f);  // 0-form
    static KForm one_form(RingPtr ring, std::vector<Polynomial> components);
    // For arity 1: the coefficient vector.
    std::vector<Polynomial> components() const;
    KForm with_ring(RingPtr ring) const;
};

// Degree-k element of the exterior algebra on the suspended differentials.
class KChain : public detail::AltTable<KChain> {
  public:
    using AltTable::AltTable;
    static KChain zero(RingPtr ring, int k) { return KChain(std::move(ring), k); }
};

// 1-form viewed as the derivation a -> theta(da).
Derivation as_derivation(const KForm& theta);

// theta(alpha) for 1-forms: sum of theta_i alpha_i.
Polynomial pair_one_forms(const KForm& theta, const KForm& alpha);

// Value of a k-form on k one-forms by A-multilinear expansion.
Polynomial evaluate(const KForm& w, const std::vector<KForm>& args);

// Shuffle product.
KForm wedge(const KForm& a, const KForm& b);

// Anchor: one-form to derivation, da -> {a,-} on basis elements.
Derivation sharp(const PoissonStructure& P, const KForm& alpha);

// [a du, b dv] = a{u,b}dv + b{a,v}du + ab d{u,v}. The raw variant skips the
// Jacobi gate and exists so the failure of Jacobi for non-Poisson input is
// itself computable.
KForm bracket_one_forms(const PoissonStructure& P, const KForm& a, const KForm& b);
KForm bracket_one_forms_raw(const PoissonStructure& P, const KForm& a, const KForm& b);

// Cartan-Chevalley-Eilenberg differential with the Eilenberg-Koszul sign
// (-1)^n, anchor and one-form bracket taken from P.
KForm ce_differential(const PoissonStructure& P, const KForm& w);
KForm ce_differential_raw(const PoissonStructure& P, const KForm& w);

// pi(dx_i, dx_j) = P_ij.
KForm poisson_two_form(const PoissonStructure& P);

// Lie derivative of a form, with lambda_X(b da) = X(b) da + b d(X(a)) inside.
KForm lie_derivative_form(const PoissonStructure& P, const Derivation& X, const KForm& w);

// Lie derivative of a 1-form read as an element of the module of differentials.
KForm lie_derivative_differential(const Derivation& X, const KForm& alpha);

// Formal differential of f as a 1-form: sum of df/dx_i dx_i.
KForm kahler_differential(const Polynomial& f);

// Exterior derivative of the Kahler-forms complex (coefficientwise partials);
// independent of any Poisson structure.
KForm de_rham(const KForm& w);

// Koszul boundary with the right action a * (b du) = {ab, u}.
KChain koszul_boundary(const PoissonStructure& P, const KChain& c);

}  // namespace pk
