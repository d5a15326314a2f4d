#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pk/ring.hpp"
#include "pk/scalar.hpp"

namespace pk {

// Sparse multivariate polynomial over the (Gaussian) rationals. Zero
// coefficients are never stored; equality is term-map equality.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Scalar, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, Scalar c);
    static Polynomial variable(RingPtr ring, int i);
    static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_real() const;
    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    Scalar coeff(const Monomial& m) const;
    Scalar constant_term() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Scalar& c) const;
    Polynomial pow(int n) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative(int var) const;

    // Ascending degree; empty for zero.
    std::vector<std::pair<int, Polynomial>> homogeneous_components() const;

    // Division by the singleton set {g} under graded-lex order. Exact
    // quotient when the remainder vanishes, otherwise nothing.
    std::optional<Polynomial> divide_exact(const Polynomial& g) const;
    // Quotient and remainder of the same division.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& g) const;

    // Same terms over another ring with an identical variable list
    // (used to move values between the rational and Gaussian carriers).
    Polynomial with_ring(RingPtr ring) const;

    // Canonical text: graded-lex leading term first, reduced coefficients.
    std::string str() const;

    void add_term(const Monomial& m, const Scalar& c);

  private:
    RingPtr ring_;
    TermMap terms_;
};

}  // namespace pk
