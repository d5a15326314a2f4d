#pragma once

#include "pk/forms.hpp"

namespace pk {

// Class of an observable modulo the constraint ideal (J); the representative
// is the division remainder, which is canonical under graded-lex order.
struct ObservableClass {
    Polynomial representative;
    bool normalized;
    bool operator==(const ObservableClass& o) const { return representative == o.representative; }
    bool is_zero() const { return representative.is_zero(); }
};

struct AdmissibilityPair {
    int j, k;
    bool in_J;
    bool in_J2;
};

struct AdmissibilityReport {
    bool in_normalizer;
    bool admissible;      // every second x-partial lies in (J)
    bool divergence_ok;   // every second x-partial lies in (J^2)
    std::vector<AdmissibilityPair> pairs;
};

// Phase space of the massless particle: Q[x0..x3, p0..p3] with the canonical
// bracket {x_j, p_j} = 1, constraint J = p0^2 - p1^2 - p2^2 - p3^2, and the
// potential theta(dp_j) = p_j, theta(dx_j) = 0.
class MasslessSystem {
  public:
    MasslessSystem();

    const RingPtr& ring() const { return ring_; }
    const RingPtr& complex_ring() const { return ring_c_; }
    const PoissonStructure& structure() const { return P_; }
    const Polynomial& J() const { return J_; }
    const KForm& theta() const { return theta_; }

    Polynomial x(int j) const { return Polynomial::variable(ring_, j); }
    Polynomial p(int j) const { return Polynomial::variable(ring_, 4 + j); }
    Polynomial boost(int j) const;         // x0 p_j + x_j p0, 1 <= j <= 3
    Polynomial angular(int k, int j) const;  // x_k p_j - x_j p_k, 1 <= k < j <= 3

    bool in_ideal(const Polynomial& f) const;
    bool in_normalizer(const Polynomial& f) const;
    ObservableClass reduce(const Polynomial& f) const;
    ObservableClass reduced_bracket(const Polynomial& f, const Polynomial& g) const;

    // theta(df) = sum of p_j df/dp_j.
    Polynomial induced_potential_value(const Polynomial& f) const;
    // {J, theta(df)} - theta(d{J,f}) + {J,f}; vanishes identically.
    Polynomial descent_defect(const Polynomial& f) const;

    AdmissibilityReport admissibility(const Polynomial& f) const;
    bool is_admissible(const Polynomial& f) const { return admissibility(f).admissible; }

    // div_eps(f) = sum over j=1..3 of d^2 f / dx_j dp_j.
    Polynomial divergence(const Polynomial& f) const;

  private:
    RingPtr ring_, ring_c_;
    PoissonStructure P_;
    Polynomial J_;
    KForm theta_;
};

}  // namespace pk
