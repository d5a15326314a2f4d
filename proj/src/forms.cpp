#include "pk/forms.hpp"

#include <algorithm>

namespace pk {

namespace detail {

namespace {

// Sorts the tuple in place; returns 0 for a repeated index, else the sign
// of the sorting permutation.
int sort_sign(IndexTuple& t) {
    int sign = 1;
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t j = i; j > 0 && t[j] < t[j - 1]; --j) {
            std::swap(t[j], t[j - 1]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] == t[i - 1]) return 0;
    return sign;
}

}  // namespace

template <typename Derived>
void AltTable<Derived>::check_tuple(const IndexTuple& t) const {
    if (static_cast<int>(t.size()) != k_) throw error("index tuple length does not match arity");
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] < 0 || t[i] >= ring_->size()) throw error("index tuple entry out of range");
        if (i > 0 && t[i] <= t[i - 1]) throw error("index tuple must be strictly increasing");
    }
}

template <typename Derived>
Polynomial AltTable<Derived>::coeff_signed(IndexTuple tuple) const {
    int sign = sort_sign(tuple);
    if (sign == 0) return Polynomial::zero(ring_);
    Polynomial p = coeff(tuple);
    return sign == 1 ? p : -p;
}

template <typename Derived>
void AltTable<Derived>::add_signed(IndexTuple tuple, Polynomial p) {
    int sign = sort_sign(tuple);
    if (sign == 0 || p.is_zero()) return;
    add(tuple, sign == 1 ? p : -p);
}

template <typename Derived>
Derived AltTable<Derived>::operator+(const Derived& o) const {
    if (k_ != o.arity()) throw error("arity mismatch");
    require_same_ring(ring_, o.ring(), "form addition");
    Derived r(ring_, k_);
    r.coeffs_ = coeffs_;
    for (const auto& [t, p] : o.coeffs()) r.add(t, p);
    return r;
}

template <typename Derived>
Derived AltTable<Derived>::operator-(const Derived& o) const {
    if (k_ != o.arity()) throw error("arity mismatch");
    require_same_ring(ring_, o.ring(), "form subtraction");
    Derived r(ring_, k_);
    r.coeffs_ = coeffs_;
    for (const auto& [t, p] : o.coeffs()) r.add(t, -p);
    return r;
}

template <typename Derived>
Derived AltTable<Derived>::operator-() const {
    Derived r(ring_, k_);
    for (const auto& [t, p] : coeffs_) r.add(t, -p);
    return r;
}

template <typename Derived>
Derived AltTable<Derived>::scaled(const Polynomial& a) const {
    Derived r(ring_, k_);
    for (const auto& [t, p] : coeffs_) r.add(t, a * p);
    return r;
}

template <typename Derived>
Derived AltTable<Derived>::scaled(const Scalar& c) const {
    Derived r(ring_, k_);
    for (const auto& [t, p] : coeffs_) r.add(t, p * c);
    return r;
}

template class AltTable<KForm>;
template class AltTable<KChain>;

}  // namespace detail

KForm KForm::from_polynomial(const Polynomial& f) {
    KForm w(f.ring(), 0);
    w.add({}, f);
    return w;
}

KForm KForm::one_form(RingPtr ring, std::vector<Polynomial> components) {
    if (static_cast<int>(components.size()) != ring->size())
        throw error("one_form needs one component per generator");
    KForm w(ring, 1);
    for (int i = 0; i < ring->size(); ++i) w.add({i}, components[i]);
    return w;
}

std::vector<Polynomial> KForm::components() const {
    if (k_ != 1) throw error("components: arity must be 1");
    std::vector<Polynomial> c(ring_->size(), Polynomial::zero(ring_));
    for (const auto& [t, p] : coeffs_) c[t[0]] = p;
    return c;
}

KForm KForm::with_ring(RingPtr ring) const {
    KForm w(ring, k_);
    for (const auto& [t, p] : coeffs_) w.add(t, p.with_ring(ring));
    return w;
}

Derivation as_derivation(const KForm& theta) {
    if (theta.arity() != 1) throw error("as_derivation: arity must be 1");
    return Derivation(theta.ring(), theta.components());
}

Polynomial pair_one_forms(const KForm& theta, const KForm& alpha) {
    if (theta.arity() != 1 || alpha.arity() != 1) throw error("pair_one_forms: arity must be 1");
    require_same_ring(theta.ring(), alpha.ring(), "pair_one_forms");
    Polynomial r = Polynomial::zero(theta.ring());
    for (const auto& [t, p] : alpha.coeffs()) r += theta.coeff(t) * p;
    return r;
}

Polynomial evaluate(const KForm& w, const std::vector<KForm>& args) {
    if (static_cast<int>(args.size()) != w.arity()) throw error("evaluate: argument count != arity");
    const RingPtr& ring = w.ring();
    std::vector<std::vector<std::pair<int, Polynomial>>> comp;
    for (const auto& a : args) {
        if (a.arity() != 1) throw error("evaluate: arguments must be 1-forms");
        require_same_ring(ring, a.ring(), "evaluate");
        std::vector<std::pair<int, Polynomial>> c;
        for (const auto& [t, p] : a.coeffs()) c.emplace_back(t[0], p);
        comp.push_back(std::move(c));
    }
    Polynomial out = Polynomial::zero(ring);
    IndexTuple tuple(w.arity());
    auto rec = [&](auto&& self, std::size_t pos, const Polynomial& factor) -> void {
        if (pos == comp.size()) {
            Polynomial c = w.coeff_signed(tuple);
            if (!c.is_zero()) out += factor * c;
            return;
        }
        for (const auto& [idx, p] : comp[pos]) {
            tuple[pos] = idx;
            self(self, pos + 1, factor * p);
        }
    };
    rec(rec, 0, Polynomial::constant(ring, Scalar(1)));
    return out;
}

KForm wedge(const KForm& a, const KForm& b) {
    require_same_ring(a.ring(), b.ring(), "wedge");
    const int p = a.arity(), q = b.arity();
    KForm r(a.ring(), p + q);
    for (const auto& [s, cs] : a.coeffs())
        for (const auto& [t, ct] : b.coeffs()) {
            IndexTuple u = s;
            u.insert(u.end(), t.begin(), t.end());
            r.add_signed(std::move(u), cs * ct);
        }
    return r;
}

Derivation sharp(const PoissonStructure& P, const KForm& alpha) {
    if (alpha.arity() != 1) throw error("sharp: arity must be 1");
    require_same_ring(P.ring(), alpha.ring(), "sharp");
    const int n = P.ring()->size();
    std::vector<Polynomial> comps(n, Polynomial::zero(P.ring()));
    for (const auto& [t, a] : alpha.coeffs())
        for (int m = 0; m < n; ++m) comps[m] += a * P.entry(t[0], m);
    return Derivation(P.ring(), std::move(comps));
}

KForm bracket_one_forms_raw(const PoissonStructure& P, const KForm& a, const KForm& b) {
    if (a.arity() != 1 || b.arity() != 1) throw error("bracket_one_forms: arity must be 1");
    require_same_ring(P.ring(), a.ring(), "bracket_one_forms");
    require_same_ring(P.ring(), b.ring(), "bracket_one_forms");
    const RingPtr& ring = P.ring();
    const int n = ring->size();
    auto ac = a.components(), bc = b.components();
    std::vector<Polynomial> out(n, Polynomial::zero(ring));
    for (int i = 0; i < n; ++i) {
        if (ac[i].is_zero()) continue;
        Polynomial xi = Polynomial::variable(ring, i);
        for (int j = 0; j < n; ++j) {
            if (bc[j].is_zero()) continue;
            Polynomial xj = Polynomial::variable(ring, j);
            // a_i {x_i, b_j} dx_j + b_j {a_i, x_j} dx_i + a_i b_j d{x_i, x_j}
            out[j] += ac[i] * P.bracket(xi, bc[j]);
            out[i] += bc[j] * P.bracket(ac[i], xj);
            Polynomial ab = ac[i] * bc[j];
            Polynomial pij = P.entry(i, j);
            for (int m = 0; m < n; ++m) out[m] += ab * pij.derivative(m);
        }
    }
    return KForm::one_form(ring, std::move(out));
}

KForm bracket_one_forms(const PoissonStructure& P, const KForm& a, const KForm& b) {
    P.require_poisson("bracket_one_forms");
    return bracket_one_forms_raw(P, a, b);
}

KForm ce_differential_raw(const PoissonStructure& P, const KForm& w) {
    require_same_ring(P.ring(), w.ring(), "ce_differential");
    const RingPtr& ring = w.ring();
    const int n = ring->size();
    const int k = w.arity();
    std::vector<Derivation> ham;
    ham.reserve(n);
    for (int i = 0; i < n; ++i) ham.push_back(P.hamiltonian(Polynomial::variable(P.ring(), i)));

    KForm out(ring, k + 1);
    // Evaluate on every increasing (k+1)-tuple of basis differentials.
    IndexTuple s(k + 1);
    for (int i = 0; i <= k; ++i) s[i] = i;
    const bool overflow = k + 1 > n;
    while (!overflow) {
        Polynomial val = Polynomial::zero(ring);
        for (int r = 0; r <= k; ++r) {
            IndexTuple rest;
            rest.reserve(k);
            for (int t = 0; t <= k; ++t)
                if (t != r) rest.push_back(s[t]);
            Polynomial inner = ham[s[r]](w.coeff(rest));
            val += (r % 2 == 0) ? inner : -inner;
        }
        for (int r = 0; r <= k; ++r)
            for (int t = r + 1; t <= k; ++t) {
                Polynomial pij = P.entry(s[r], s[t]).with_ring(ring);
                if (pij.is_zero()) continue;
                IndexTuple rest;
                rest.reserve(k);
                for (int u = 0; u <= k; ++u)
                    if (u != r && u != t) rest.push_back(s[u]);
                // w([dx_{s_r}, dx_{s_t}], rest) with [dx_i,dx_j] = sum dP_ij/dx_m dx_m
                Polynomial term = Polynomial::zero(ring);
                for (int m = 0; m < n; ++m) {
                    Polynomial dm = pij.derivative(m);
                    if (dm.is_zero()) continue;
                    IndexTuple arg;
                    arg.reserve(k);
                    arg.push_back(m);
                    arg.insert(arg.end(), rest.begin(), rest.end());
                    Polynomial c = w.coeff_signed(std::move(arg));
                    if (!c.is_zero()) term += dm * c;
                }
                val += ((r + t) % 2 == 0) ? term : -term;  // (-1)^{(r+1)+(t+1)}
            }
        if ((k + 1) % 2 == 1) val = -val;  // Eilenberg-Koszul (-1)^n
        out.add(s, val);

        // next increasing tuple
        int pos = k;
        while (pos >= 0 && s[pos] == n - (k + 1 - pos)) --pos;
        if (pos < 0) break;
        ++s[pos];
        for (int t = pos + 1; t <= k; ++t) s[t] = s[t - 1] + 1;
    }
    return out;
}

KForm ce_differential(const PoissonStructure& P, const KForm& w) {
    P.require_poisson("ce_differential");
    return ce_differential_raw(P, w);
}

KForm poisson_two_form(const PoissonStructure& P) {
    KForm pi(P.ring(), 2);
    for (const auto& [ij, p] : P.upper_entries()) pi.add({ij.first, ij.second}, p);
    return pi;
}

KForm lie_derivative_form(const PoissonStructure& P, const Derivation& X, const KForm& w) {
    require_same_ring(P.ring(), w.ring(), "lie_derivative_form");
    require_same_ring(P.ring(), X.ring(), "lie_derivative_form");
    const RingPtr& ring = w.ring();
    const int n = ring->size();
    KForm out(ring, w.arity());
    for (const auto& [t, c] : w.coeffs()) out.add(t, X(c));
    // subtract w(..., lambda_X dx_i, ...) with lambda_X(dx_i) = d(X(x_i))
    std::vector<KForm> dX;
    dX.reserve(n);
    for (int i = 0; i < n; ++i) dX.push_back(kahler_differential(X.component(i)));
    IndexTuple s(w.arity());
    if (w.arity() == 0) return out;
    for (int i = 0; i < w.arity(); ++i) s[i] = i;
    if (w.arity() > n) return out;
    for (;;) {
        Polynomial val = Polynomial::zero(ring);
        for (int r = 0; r < w.arity(); ++r) {
            const KForm& rep = dX[s[r]];
            for (const auto& [mt, dm] : rep.coeffs()) {
                IndexTuple arg = s;
                arg[r] = mt[0];
                Polynomial c = w.coeff_signed(std::move(arg));
                if (!c.is_zero()) val += dm * c;
            }
        }
        out.add(s, -val);
        int pos = w.arity() - 1;
        while (pos >= 0 && s[pos] == n - (w.arity() - pos)) --pos;
        if (pos < 0) break;
        ++s[pos];
        for (int t = pos + 1; t < w.arity(); ++t) s[t] = s[t - 1] + 1;
    }
    return out;
}

KForm lie_derivative_differential(const Derivation& X, const KForm& alpha) {
    if (alpha.arity() != 1) throw error("lie_derivative_differential: arity must be 1");
    require_same_ring(X.ring(), alpha.ring(), "lie_derivative_differential");
    const RingPtr& ring = alpha.ring();
    const int n = ring->size();
    auto a = alpha.components();
    // lambda_X(sum a_i dx_i) = sum X(a_i) dx_i + sum a_i d(X(x_i))
    std::vector<Polynomial> out;
    out.reserve(n);
    for (int m = 0; m < n; ++m) {
        Polynomial v = X(a[m]);
        for (int i = 0; i < n; ++i) v += a[i] * X.component(i).derivative(m);
        out.push_back(std::move(v));
    }
    return KForm::one_form(ring, std::move(out));
}

KForm kahler_differential(const Polynomial& f) {
    const RingPtr& ring = f.ring();
    std::vector<Polynomial> comps;
    comps.reserve(ring->size());
    for (int i = 0; i < ring->size(); ++i) comps.push_back(f.derivative(i));
    return KForm::one_form(ring, std::move(comps));
}

KForm de_rham(const KForm& w) {
    const RingPtr& ring = w.ring();
    KForm out(ring, w.arity() + 1);
    for (const auto& [t, c] : w.coeffs())
        for (int m = 0; m < ring->size(); ++m) {
            Polynomial d = c.derivative(m);
            if (d.is_zero()) continue;
            IndexTuple arg;
            arg.reserve(t.size() + 1);
            arg.push_back(m);
            arg.insert(arg.end(), t.begin(), t.end());
            out.add_signed(std::move(arg), std::move(d));
        }
    return out;
}

KChain koszul_boundary(const PoissonStructure& P, const KChain& c) {
    P.require_poisson("koszul_boundary");
    require_same_ring(P.ring(), c.ring(), "koszul_boundary");
    if (c.arity() == 0) throw error("koszul_boundary: boundary of a 0-chain is undefined");
    const RingPtr& ring = c.ring();
    const int n = ring->size();
    const int k = c.arity();
    KChain out(ring, k - 1);
    for (const auto& [t, a] : c.coeffs()) {
        for (int r = 0; r < k; ++r) {
            // right action a * dx_i = {a, x_i}
            Polynomial v = P.bracket(a, Polynomial::variable(ring, t[r]));
            if (r % 2 == 1) v = -v;
            IndexTuple rest;
            rest.reserve(k - 1);
            for (int u = 0; u < k; ++u)
                if (u != r) rest.push_back(t[u]);
            out.add(rest, v);
        }
        for (int r = 0; r < k; ++r)
            for (int s = r + 1; s < k; ++s) {
                Polynomial pij = P.entry(t[r], t[s]).with_ring(ring);
                if (pij.is_zero()) continue;
                IndexTuple rest;
                rest.reserve(k - 2);
                for (int u = 0; u < k; ++u)
                    if (u != r && u != s) rest.push_back(t[u]);
                int sign = ((r + s) % 2 == 0) ? 1 : -1;  // (-1)^{(r+1)+(s+1)}
                for (int m = 0; m < n; ++m) {
                    Polynomial dm = pij.derivative(m);
                    if (dm.is_zero()) continue;
                    IndexTuple arg;
                    arg.reserve(k - 1);
                    arg.push_back(m);
                    arg.insert(arg.end(), rest.begin(), rest.end());
                    Polynomial coef = a * dm;
                    out.add_signed(std::move(arg), sign == 1 ? coef : -coef);
                }
            }
    }
    return out;
}

}  // namespace pk
