#include "pk/poisson.hpp"

namespace pk {

Derivation::Derivation(RingPtr ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), comps_(std::move(components)) {
    if (static_cast<int>(comps_.size()) != ring_->size())
        throw error("derivation needs one component per generator");
    for (const auto& c : comps_) require_same_ring(ring_, c.ring(), "derivation component");
}

Derivation Derivation::zero(const RingPtr& ring) {
    return Derivation(ring, std::vector<Polynomial>(ring->size(), Polynomial::zero(ring)));
}

bool Derivation::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

Polynomial Derivation::operator()(const Polynomial& f) const {
    require_same_ring(ring_, f.ring(), "derivation application");
    Polynomial r = Polynomial::zero(f.ring());
    for (int i = 0; i < ring_->size(); ++i) {
        if (comps_[i].is_zero()) continue;
        r += comps_[i].with_ring(f.ring()) * f.derivative(i);
    }
    return r;
}

Derivation Derivation::commutator(const Derivation& o) const {
    require_same_ring(ring_, o.ring_, "derivation commutator");
    std::vector<Polynomial> comps;
    comps.reserve(comps_.size());
    for (int i = 0; i < ring_->size(); ++i) comps.push_back((*this)(o.comps_[i]) - o(comps_[i]));
    return Derivation(ring_, std::move(comps));
}

Derivation Derivation::operator+(const Derivation& o) const {
    std::vector<Polynomial> comps;
    for (int i = 0; i < ring_->size(); ++i) comps.push_back(comps_[i] + o.comps_[i]);
    return Derivation(ring_, std::move(comps));
}

Derivation Derivation::operator-(const Derivation& o) const {
    std::vector<Polynomial> comps;
    for (int i = 0; i < ring_->size(); ++i) comps.push_back(comps_[i] - o.comps_[i]);
    return Derivation(ring_, std::move(comps));
}

Derivation Derivation::operator-() const {
    std::vector<Polynomial> comps;
    for (const auto& c : comps_) comps.push_back(-c);
    return Derivation(ring_, std::move(comps));
}

Derivation Derivation::scaled(const Polynomial& a) const {
    std::vector<Polynomial> comps;
    for (const auto& c : comps_) comps.push_back(a * c);
    return Derivation(ring_, std::move(comps));
}

PoissonStructure::PoissonStructure(RingPtr ring, std::map<std::pair<int, int>, Polynomial> upper_entries)
    : ring_(std::move(ring)) {
    const int n = ring_->size();
    for (auto& [ij, p] : upper_entries) {
        auto [i, j] = ij;
        if (i < 0 || j < 0 || i >= n || j >= n) throw error("bivector index out of range");
        if (i >= j) throw error("bivector entries must be given for index pairs i < j");
        require_same_ring(ring_, p.ring(), "bivector entry");
        if (!p.is_zero()) biv_.emplace(ij, p.with_ring(ring_));
    }
    // Generator-triple Jacobi check; sufficient because the jacobiator of a
    // biderivation-extended bracket is a derivation in each argument.
    for (int i = 0; i < n && jacobi_ok_; ++i)
        for (int j = i + 1; j < n && jacobi_ok_; ++j)
            for (int k = j + 1; k < n && jacobi_ok_; ++k) {
                Polynomial v = jacobiator(Polynomial::variable(ring_, i),
                                          Polynomial::variable(ring_, j),
                                          Polynomial::variable(ring_, k));
                if (!v.is_zero()) {
                    jacobi_ok_ = false;
                    witness_ = JacobiWitness{i, j, k, v};
                }
            }
}

Polynomial PoissonStructure::entry(int i, int j) const {
    if (i == j) return Polynomial::zero(ring_);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = biv_.find({i, j});
    if (it == biv_.end()) return Polynomial::zero(ring_);
    return flip ? -it->second : it->second;
}

Polynomial PoissonStructure::bracket(const Polynomial& f, const Polynomial& g) const {
    if (ring_->vars() != f.ring()->vars() || ring_->vars() != g.ring()->vars())
        throw ring_mismatch("bracket: arguments live over a different variable list");
    const RingPtr& out = f.ring();
    Polynomial r = Polynomial::zero(out);
    for (const auto& [ij, p] : biv_) {
        auto [i, j] = ij;
        Polynomial mixed = f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i);
        if (!mixed.is_zero()) r += p.with_ring(out) * mixed;
    }
    return r;
}

Polynomial PoissonStructure::jacobiator(const Polynomial& f, const Polynomial& g,
                                        const Polynomial& h) const {
    return bracket(bracket(f, g), h) + bracket(bracket(g, h), f) + bracket(bracket(h, f), g);
}

void PoissonStructure::require_poisson(const char* where) const {
    if (!jacobi_ok_)
        throw precondition_error(std::string(where) + ": structure does not satisfy the Jacobi identity");
}

Derivation PoissonStructure::hamiltonian(const Polynomial& a) const {
    require_same_ring(ring_, a.ring(), "hamiltonian");
    std::vector<Polynomial> comps;
    comps.reserve(ring_->size());
    for (int i = 0; i < ring_->size(); ++i)
        comps.push_back(bracket(a, Polynomial::variable(ring_, i)));
    return Derivation(ring_, std::move(comps));
}

PoissonStructure PoissonStructure::with_ring(RingPtr ring) const {
    std::map<std::pair<int, int>, Polynomial> entries;
    for (const auto& [ij, p] : biv_) entries.emplace(ij, p.with_ring(ring));
    return PoissonStructure(std::move(ring), std::move(entries));
}

StructureConstants::StructureConstants(int dim,
                                       std::map<std::pair<int, int>, std::vector<Rational>> upper)
    : n_(dim), c_(std::move(upper)) {
    for (const auto& [ij, v] : c_) {
        auto [i, j] = ij;
        if (i < 0 || j <= i || j >= n_) throw error("structure constants: index pairs must satisfy i < j");
        if (static_cast<int>(v.size()) != n_)
            throw error("structure constants: each bracket needs one coefficient per basis element");
    }
}

Rational StructureConstants::c(int i, int j, int k) const {
    if (i == j) return 0;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = c_.find({i, j});
    if (it == c_.end()) return 0;
    return flip ? Rational(-it->second[k]) : it->second[k];
}

bool StructureConstants::satisfies_jacobi() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            for (int k = j + 1; k < n_; ++k)
                for (int l = 0; l < n_; ++l) {
                    Rational s = 0;
                    for (int m = 0; m < n_; ++m)
                        s += c(i, j, m) * c(m, k, l) + c(j, k, m) * c(m, i, l) +
                             c(k, i, m) * c(m, j, l);
                    if (s != 0) return false;
                }
    return true;
}

PoissonStructure lie_poisson(const std::vector<std::string>& names, const StructureConstants& c) {
    if (static_cast<int>(names.size()) != c.dim())
        throw error("lie_poisson: name count does not match the structure constants");
    RingPtr ring = make_ring(names);
    std::map<std::pair<int, int>, Polynomial> entries;
    for (int i = 0; i < c.dim(); ++i)
        for (int j = i + 1; j < c.dim(); ++j) {
            Polynomial p = Polynomial::zero(ring);
            for (int k = 0; k < c.dim(); ++k)
                p += Polynomial::variable(ring, k) * Scalar(c.c(i, j, k));
            if (!p.is_zero()) entries.emplace(std::make_pair(i, j), std::move(p));
        }
    return PoissonStructure(ring, std::move(entries));
}

PoissonStructure magnetic_cotangent(int n, const std::map<std::pair<int, int>, Polynomial>& chi) {
    RingPtr ring = cotangent_ring(n);
    std::map<std::pair<int, int>, Polynomial> entries;
    for (int i = 0; i < n; ++i) entries.emplace(std::make_pair(i, n + i), Polynomial::constant(ring, Scalar(1)));
    for (const auto& [ij, p] : chi) {
        auto [i, j] = ij;
        if (i < 0 || j <= i || j >= n) throw error("magnetic_cotangent: chi indices must satisfy i < j < n");
        require_same_ring(ring, p.ring(), "magnetic_cotangent chi entry");
        for (const auto& [m, coef] : p.terms())
            for (int v = n; v < 2 * n; ++v)
                if (m.e[v] != 0)
                    throw error("magnetic_cotangent: chi entry for (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ") mentions the momentum variable " +
                                ring->var(v));
        if (!p.is_zero()) entries.emplace(std::make_pair(n + i, n + j), p);
    }
    return PoissonStructure(ring, std::move(entries));
}

PoissonStructure plane_structure(const Polynomial& p) {
    const RingPtr& ring = p.ring();
    if (ring->size() != 2) throw error("plane_structure: the ring must have exactly two variables");
    std::map<std::pair<int, int>, Polynomial> entries;
    if (!p.is_zero()) entries.emplace(std::make_pair(0, 1), p);
    return PoissonStructure(ring, std::move(entries));
}

}  // namespace pk
