#include "pk/polynomial.hpp"

#include <algorithm>

namespace pk {

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.ring_->size()), std::move(c));
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
    if (i < 0 || i >= ring->size()) throw error("variable index out of range");
    Polynomial p(std::move(ring));
    Monomial m(p.ring_->size());
    m.e[i] = 1;
    p.terms_.emplace(std::move(m), Scalar(1));
    return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

bool Polynomial::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

Scalar Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar Polynomial::constant_term() const {
    return coeff(Monomial(ring_->size()));
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_, "polynomial addition");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_, "polynomial subtraction");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_, "polynomial multiplication");
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
}

Polynomial Polynomial::pow(int n) const {
    if (n < 0) throw error("negative exponent");
    Polynomial r = Polynomial::constant(ring_, Scalar(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    if (var < 0 || var >= ring_->size()) throw error("derivative: index out of range");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial q = m;
        q.e[var] -= 1;
        r.add_term(q, c * Scalar(m.e[var]));
    }
    return r;
}

std::vector<std::pair<int, Polynomial>> Polynomial::homogeneous_components() const {
    std::map<int, Polynomial> comps;
    for (const auto& [m, c] : terms_) {
        auto [it, inserted] = comps.emplace(m.degree(), Polynomial(ring_));
        it->second.add_term(m, c);
    }
    return {comps.begin(), comps.end()};
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& g) const {
    require_same_ring(ring_, g.ring_, "division");
    if (g.is_zero()) throw error("division by the zero polynomial");
    const auto& [gm, gc] = *g.terms_.rbegin();
    Polynomial q(ring_), r(ring_), f = *this;
    while (!f.is_zero()) {
        const auto& [fm, fc] = *f.terms_.rbegin();
        if (gm.divides(fm)) {
            Polynomial t = Polynomial::monomial(ring_, gm.quotient_into(fm), fc / gc);
            q += t;
            f -= t * g;
        } else {
            r.add_term(fm, fc);
            f.terms_.erase(std::prev(f.terms_.end()));
        }
    }
    return {q, r};
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& g) const {
    auto [q, r] = divmod(g);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

Polynomial Polynomial::with_ring(RingPtr ring) const {
    if (ring->vars() != ring_->vars()) throw ring_mismatch("with_ring: variable lists differ");
    Polynomial r(std::move(ring));
    r.terms_ = terms_;
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mon;
        for (int i = 0; i < ring_->size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += ring_->var(i);
            if (m.e[i] > 1) mon += "^" + std::to_string(m.e[i]);
        }
        bool negative = false;
        std::string body;
        if (c.is_real()) {
            Rational a = c.re();
            negative = a < 0;
            if (negative) a = -a;
            std::string cs = rational_str(a);
            if (mon.empty())
                body = cs;
            else if (a == 1)
                body = mon;
            else
                body = cs + "*" + mon;
        } else if (c.re() == 0) {
            Rational b = c.im();
            negative = b < 0;
            if (negative) b = -b;
            std::string cs = (b == 1) ? "i" : rational_str(b) + "*i";
            body = mon.empty() ? cs : cs + "*" + mon;
        } else {
            body = c.str();
            if (!mon.empty()) body += "*" + mon;
        }
        if (out.empty())
            out = (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out;
}

}  // namespace pk
