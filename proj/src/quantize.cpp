#include "pk/quantize.hpp"

namespace pk {

Prequantization::Prequantization(const PoissonStructure& P, const KForm& theta)
    : P_(P), theta_(theta) {
    P_.require_poisson("prequantization");
    if (theta_.arity() != 1) throw error("prequantization: theta must be a 1-form");
    require_same_ring(P_.ring(), theta_.ring(), "prequantization");
    if (ce_differential_raw(P_, theta_) != poisson_two_form(P_))
        throw precondition_error("prequantization: theta is not a Poisson potential (d theta != pi)");
}

Polynomial Prequantization::theta_of_differential(const Polynomial& a, const RingPtr& out) const {
    Polynomial v = Polynomial::zero(out);
    auto comps = theta_.components();
    for (int i = 0; i < P_.ring()->size(); ++i)
        if (!comps[i].is_zero()) v += comps[i].with_ring(out) * a.derivative(i);
    return v;
}

Polynomial Prequantization::apply(const Polynomial& a, const Polynomial& s) const {
    require_same_ring(P_.ring(), a.ring(), "prequantization apply");
    require_same_ring(P_.ring(), s.ring(), "prequantization apply");
    const RingPtr& out = s.ring();
    return P_.bracket(a.with_ring(out), s) * (-Scalar::i()) -
           s * theta_of_differential(a, out) + a.with_ring(out) * s;
}

Polynomial Prequantization::dirac_defect(const Polynomial& a, const Polynomial& b,
                                         const Polynomial& s) const {
    Polynomial comm = apply(a, apply(b, s)) - apply(b, apply(a, s));
    return comm * Scalar::i() - apply(P_.bracket(a, b), s);
}

Polynomial Prequantization::real_rep_apply(const Polynomial& a, const Polynomial& s) const {
    require_same_ring(P_.ring(), a.ring(), "real representation");
    const RingPtr& out = s.ring();
    return P_.bracket(a.with_ring(out), s) - s * theta_of_differential(a, out) +
           a.with_ring(out) * s;
}

ExpWave::ExpWave(const MasslessSystem& sys, Polynomial amplitude) : amp_(std::move(amplitude)) {
    require_same_ring(sys.ring(), amp_.ring(), "exp wave amplitude");
}

bool ExpWave::amplitude_depends_only_on_p() const {
    for (const auto& [m, c] : amp_.terms())
        for (int j = 0; j <= 3; ++j)
            if (m.e[j] != 0) return false;
    return true;
}

ExpWave ExpWave::dx(const MasslessSystem& sys, int j) const {
    // d/dx_j (g e^{-i<x,p>}) = (dg/dx_j - i p_j g) e^{-i<x,p>}
    Polynomial pj = sys.p(j).with_ring(amp_.ring());
    return ExpWave(sys, amp_.derivative(j) - pj * amp_ * Scalar::i());
}

ExpWave ExpWave::dp(const MasslessSystem& sys, int j) const {
    Polynomial xj = sys.x(j).with_ring(amp_.ring());
    return ExpWave(sys, amp_.derivative(4 + j) - xj * amp_ * Scalar::i());
}

ExpWave ExpWave::operator+(const ExpWave& o) const {
    ExpWave r = *this;
    r.amp_ += o.amp_;
    return r;
}

ExpWave ExpWave::operator-(const ExpWave& o) const {
    ExpWave r = *this;
    r.amp_ -= o.amp_;
    return r;
}

ExpWave ExpWave::scaled(const Polynomial& f) const {
    ExpWave r = *this;
    r.amp_ = r.amp_ * f.with_ring(r.amp_.ring());
    return r;
}

ExpWave ExpWave::scaled(const Scalar& c) const {
    ExpWave r = *this;
    r.amp_ = r.amp_ * c;
    return r;
}

ExpWave exp_bracket(const MasslessSystem& sys, const Polynomial& f, const ExpWave& phi) {
    // {f, phi} = sum_j (df/dx_j dphi/dp_j - df/dp_j dphi/dx_j)
    ExpWave out(sys, Polynomial::zero(phi.amplitude().ring()));
    for (int j = 0; j <= 3; ++j) {
        Polynomial fx = f.derivative(j), fp = f.derivative(4 + j);
        if (!fx.is_zero()) out = out + phi.dp(sys, j).scaled(fx);
        if (!fp.is_zero()) out = out - phi.dx(sys, j).scaled(fp);
    }
    return out;
}

ExpWave wave_apply(const MasslessSystem& sys, const Polynomial& f, const ExpWave& phi) {
    require_same_ring(sys.ring(), f.ring(), "wave_apply");
    if (!phi.amplitude_depends_only_on_p())
        throw precondition_error("wave_apply: amplitude mentions a position variable");
    for (const auto& [m, c] : f.terms()) {
        int xdeg = m.e[0] + m.e[1] + m.e[2] + m.e[3];
        if (xdeg > 1)
            throw precondition_error("wave_apply: observable is not affine in the position variables");
    }
    const RingPtr& out = phi.amplitude().ring();
    // f = u(p) + sum x_j v_j(p)
    std::vector<Polynomial> v;
    for (int j = 0; j <= 3; ++j) v.push_back(f.derivative(j).with_ring(out));
    Polynomial u = f.with_ring(out);
    for (int j = 0; j <= 3; ++j) u -= sys.x(j).with_ring(out) * v[j];

    Polynomial alpha = phi.amplitude();
    Polynomial result = u * alpha;
    for (int j = 0; j <= 3; ++j) result -= v[j] * alpha.derivative(4 + j) * Scalar::i();
    Polynomial div = Polynomial::zero(out);
    for (int j = 1; j <= 3; ++j) div += v[j].derivative(4 + j);
    result -= alpha * div * (Scalar::i() / Scalar(2));
    return ExpWave(sys, result);
}

ExpWave half_form_apply(const MasslessSystem& sys, const Polynomial& f, const ExpWave& phi) {
    require_same_ring(sys.ring(), f.ring(), "half_form_apply");
    if (!sys.is_admissible(f))
        throw precondition_error("half_form_apply: observable is not admissible");
    // nabla_{df} phi = {f, phi} - i theta(df) phi
    ExpWave nabla = exp_bracket(sys, f, phi) - phi.scaled(sys.induced_potential_value(f)).scaled(Scalar::i());
    ExpWave result = nabla.scaled(-Scalar::i()) + phi.scaled(f);
    result = result - phi.scaled(sys.divergence(f)).scaled(Scalar::i() / Scalar(2));
    return result;
}

}  // namespace pk
