#pragma once

#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pk/error.hpp"

namespace pk {

// Ambient variable list shared by every value in a computation. The gaussian
// flag reserves the name `i` for the imaginary unit when parsing and printing.
class Ring {
  public:
    Ring(std::vector<std::string> vars, bool gaussian) : vars_(std::move(vars)), gaussian_(gaussian) {}

    int size() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(int i) const { return vars_.at(i); }
    bool gaussian() const { return gaussian_; }

    std::optional<int> index_of(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (vars_[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const Ring& o) const { return vars_ == o.vars_ && gaussian_ == o.gaussian_; }

  private:
    std::vector<std::string> vars_;
    bool gaussian_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, bool gaussian = false) {
    return std::make_shared<const Ring>(std::move(vars), gaussian);
}

// Variable lists must agree; the gaussian flag is parse/print metadata and
// does not fragment the ring for arithmetic.
inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (a == b) return;
    if (a && b && a->vars() == b->vars()) return;
    throw ring_mismatch(std::string(where) + ": values live over different variable lists");
}

// Exponent tuple, one entry per ring generator.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_constant() const { return degree() == 0; }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }
    // Requires divides(m) on the caller's side.
    Monomial quotient_into(const Monomial& m) const {
        Monomial r = m;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= e[i];
        return r;
    }

    bool operator==(const Monomial& m) const { return e == m.e; }
};

// Graded lexicographic: degree first, then leftmost difference decides.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return false;
    }
};

}  // namespace pk
