#include "pk/reduce.hpp"

namespace pk {

namespace {

RingPtr massless_ring(bool gaussian) {
    std::vector<std::string> vars;
    for (int j = 0; j <= 3; ++j) vars.push_back("x" + std::to_string(j));
    for (int j = 0; j <= 3; ++j) vars.push_back("p" + std::to_string(j));
    return make_ring(std::move(vars), gaussian);
}

PoissonStructure canonical_structure(const RingPtr& ring) {
    std::map<std::pair<int, int>, Polynomial> entries;
    for (int j = 0; j <= 3; ++j)
        entries.emplace(std::make_pair(j, 4 + j), Polynomial::constant(ring, Scalar(1)));
    return PoissonStructure(ring, std::move(entries));
}

}  // namespace

MasslessSystem::MasslessSystem()
    : ring_(massless_ring(false)),
      ring_c_(massless_ring(true)),
      P_(canonical_structure(ring_)),
      J_(Polynomial::zero(ring_)),
      theta_(KForm::zero(ring_, 1)) {
    J_ = p(0) * p(0) - p(1) * p(1) - p(2) * p(2) - p(3) * p(3);
    std::vector<Polynomial> comps(8, Polynomial::zero(ring_));
    for (int j = 0; j <= 3; ++j) comps[4 + j] = p(j);
    theta_ = KForm::one_form(ring_, std::move(comps));

    // Construction-time calibration of the sign convention.
    Derivation hamJ = P_.hamiltonian(J_);
    std::vector<Polynomial> expected(8, Polynomial::zero(ring_));
    expected[0] = -(p(0) * Scalar(2));
    for (int j = 1; j <= 3; ++j) expected[j] = p(j) * Scalar(2);
    if (hamJ.components() != expected)
        throw std::logic_error("massless system: {J, -} disagrees with the calibrated convention");
    if (ce_differential_raw(P_, theta_) != poisson_two_form(P_))
        throw std::logic_error("massless system: theta is not a Poisson potential");
    if (induced_potential_value(J_) != J_ * Scalar(2))
        throw std::logic_error("massless system: theta(dJ) != 2J");
}

Polynomial MasslessSystem::boost(int j) const {
    if (j < 1 || j > 3) throw error("boost index must lie in 1..3");
    return x(0) * p(j) + x(j) * p(0);
}

Polynomial MasslessSystem::angular(int k, int j) const {
    if (!(1 <= k && k < j && j <= 3)) throw error("angular momentum indices must satisfy 1 <= k < j <= 3");
    return x(k) * p(j) - x(j) * p(k);
}

bool MasslessSystem::in_ideal(const Polynomial& f) const {
    return f.divide_exact(J_.with_ring(f.ring())).has_value();
}

bool MasslessSystem::in_normalizer(const Polynomial& f) const {
    return in_ideal(P_.bracket(J_, f));
}

ObservableClass MasslessSystem::reduce(const Polynomial& f) const {
    auto [q, r] = f.divmod(J_.with_ring(f.ring()));
    return {r, true};
}

ObservableClass MasslessSystem::reduced_bracket(const Polynomial& f, const Polynomial& g) const {
    if (!in_normalizer(f))
        throw precondition_error("reduced_bracket: first argument is not in the normalizer of (J)");
    if (!in_normalizer(g))
        throw precondition_error("reduced_bracket: second argument is not in the normalizer of (J)");
    return reduce(P_.bracket(f, g));
}

Polynomial MasslessSystem::induced_potential_value(const Polynomial& f) const {
    Polynomial out = Polynomial::zero(f.ring());
    for (int j = 0; j <= 3; ++j) out += p(j).with_ring(f.ring()) * f.derivative(4 + j);
    return out;
}

Polynomial MasslessSystem::descent_defect(const Polynomial& f) const {
    return P_.bracket(J_, induced_potential_value(f)) -
           induced_potential_value(P_.bracket(J_, f)) + P_.bracket(J_, f);
}

AdmissibilityReport MasslessSystem::admissibility(const Polynomial& f) const {
    if (!in_normalizer(f))
        throw precondition_error("admissibility: observable is not in the normalizer of (J)");
    AdmissibilityReport rep{true, true, true, {}};
    Polynomial J2 = J_ * J_;
    for (int j = 0; j <= 3; ++j)
        for (int k = j; k <= 3; ++k) {
            Polynomial second = f.derivative(j).derivative(k);
            bool inJ = second.divide_exact(J_).has_value();
            bool inJ2 = second.divide_exact(J2).has_value();
            rep.pairs.push_back({j, k, inJ, inJ2});
            rep.admissible = rep.admissible && inJ;
            rep.divergence_ok = rep.divergence_ok && inJ2;
        }
    return rep;
}

Polynomial MasslessSystem::divergence(const Polynomial& f) const {
    Polynomial out = Polynomial::zero(f.ring());
    for (int j = 1; j <= 3; ++j) out += f.derivative(j).derivative(4 + j);
    return out;
}

}  // namespace pk
