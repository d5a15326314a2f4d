#pragma once

#include "pk/connect.hpp"
#include "pk/reduce.hpp"

namespace pk {

// Prequantization data for a quantizable structure: a Poisson potential
// theta with d theta = pi, verified once at construction, and the operators
// of the real and imaginary-mode representations.
class Prequantization {
  public:
    Prequantization(const PoissonStructure& P, const KForm& theta);

    const PoissonStructure& structure() const { return P_; }
    const KForm& theta() const { return theta_; }

    // hat(a) s = -i {a, s} - theta(da) s + a s.
    Polynomial apply(const Polynomial& a, const Polynomial& s) const;
    // i [hat(a), hat(b)] s - hat({a,b}) s; identically zero.
    Polynomial dirac_defect(const Polynomial& a, const Polynomial& b, const Polynomial& s) const;
    // Real representation hat(a) s = {a, s} - theta(da) s + a s.
    Polynomial real_rep_apply(const Polynomial& a, const Polynomial& s) const;

  private:
    Polynomial theta_of_differential(const Polynomial& a, const RingPtr& out) const;

    PoissonStructure P_;
    KForm theta_;
};

// Polarized wave function alpha(x,p) e^{-i<x,p>} over the massless phase
// space, represented by its amplitude. Differentiation follows the product
// rule against the fixed exponential factor.
class ExpWave {
  public:
    ExpWave(const MasslessSystem& sys, Polynomial amplitude);

    const Polynomial& amplitude() const { return amp_; }
    bool amplitude_depends_only_on_p() const;

    ExpWave dx(const MasslessSystem& sys, int j) const;  // d/dx_j
    ExpWave dp(const MasslessSystem& sys, int j) const;  // d/dp_j

    ExpWave operator+(const ExpWave& o) const;
    ExpWave operator-(const ExpWave& o) const;
    ExpWave scaled(const Polynomial& f) const;
    ExpWave scaled(const Scalar& c) const;
    bool operator==(const ExpWave& o) const { return amp_ == o.amp_; }

  private:
    Polynomial amp_;
};

// {f, phi} with the exponential calculus, f a plain observable.
ExpWave exp_bracket(const MasslessSystem& sys, const Polynomial& f, const ExpWave& phi);

// Operator of (5.14) for observables affine in the position variables:
// u alpha - i sum v_j dalpha/dp_j - (i/2) alpha sum_{j>=1} dv_j/dp_j.
ExpWave wave_apply(const MasslessSystem& sys, const Polynomial& f, const ExpWave& phi);

// Divergence-corrected operator: -i nabla_{df} phi + f phi - (i/2) div(f) phi,
// with the full exponential calculus behind the covariant derivative.
ExpWave half_form_apply(const MasslessSystem& sys, const Polynomial& f, const ExpWave& phi);

}  // namespace pk
