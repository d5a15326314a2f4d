#include "pk/homalg.hpp"

#include <algorithm>

namespace pk {

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial m(nvars);
    // descending lex within fixed total degree
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            m.e[var] = remaining;
            out.push_back(m);
            m.e[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            m.e[var] = e;
            self(self, var + 1, remaining - e);
        }
        m.e[var] = 0;
    };
    if (nvars == 0) {
        if (d == 0) out.push_back(m);
        return out;
    }
    rec(rec, 0, d);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(int nvars, int d) {
    std::vector<Monomial> out;
    for (int deg = d; deg >= 0; --deg) {
        auto part = monomials_of_degree(nvars, deg);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<IndexTuple> increasing_tuples(int n, int k) {
    std::vector<IndexTuple> out;
    if (k < 0 || k > n) return out;
    IndexTuple t(k);
    for (int i = 0; i < k; ++i) t[i] = i;
    if (k == 0) {
        out.push_back(t);
        return out;
    }
    for (;;) {
        out.push_back(t);
        int pos = k - 1;
        while (pos >= 0 && t[pos] == n - (k - pos)) --pos;
        if (pos < 0) break;
        ++t[pos];
        for (int u = pos + 1; u < k; ++u) t[u] = t[u - 1] + 1;
    }
    return out;
}

GradedBasis::GradedBasis(RingPtr ring, int k, int d) : ring_(std::move(ring)), k_(k), d_(d) {
    if (d < 0) return;
    auto tuples = increasing_tuples(ring_->size(), k);
    auto mons = monomials_of_degree(ring_->size(), d);
    for (const auto& t : tuples)
        for (const auto& m : mons) {
            index_.emplace(std::make_pair(t, m.e), static_cast<int>(elems_.size()));
            elems_.emplace_back(t, m);
        }
}

int GradedBasis::index_of(const IndexTuple& t, const Monomial& m) const {
    auto it = index_.find({t, m.e});
    if (it == index_.end()) throw std::logic_error("graded basis: element outside the slice");
    return it->second;
}

const DimRow* DimTable::row(int k, int d) const {
    for (const auto& r : rows)
        if (r.k == k && r.d == d) return &r;
    return nullptr;
}

std::optional<int> bivector_degree(const PoissonStructure& P) {
    std::optional<int> r;
    for (const auto& [ij, p] : P.upper_entries()) {
        if (!p.is_homogeneous()) return std::nullopt;
        if (r && *r != p.total_degree()) return std::nullopt;
        r = p.total_degree();
    }
    if (!r) return 1;  // zero bivector: all maps vanish, use shift 0
    return r;
}

namespace {

int require_degree(const PoissonStructure& P, const char* where) {
    auto r = bivector_degree(P);
    if (!r)
        throw precondition_error(std::string(where) +
                                 ": bivector is not homogeneous of a single degree; "
                                 "use the degree-cutoff mode");
    return *r;
}

// Expands a homogeneous form into slice coordinates.
void scatter_form(const KForm& w, const GradedBasis& target, std::vector<Rational>& column) {
    for (const auto& [t, p] : w.coeffs())
        for (const auto& [m, c] : p.terms()) {
            if (!c.is_real()) throw std::logic_error("graded slice expects rational coefficients");
            column[target.index_of(t, m)] = c.re();
        }
}

}  // namespace

QMatrix differential_matrix(const PoissonStructure& P, int k, int d) {
    P.require_poisson("differential_matrix");
    const int r = require_degree(P, "differential_matrix");
    GradedBasis source(P.ring(), k, d);
    GradedBasis target(P.ring(), k + 1, d + r - 1);
    QMatrix M(target.size(), source.size());
    for (int col = 0; col < source.size(); ++col) {
        const auto& [t, m] = source.elems()[col];
        KForm w(P.ring(), k);
        w.add(t, Polynomial::monomial(P.ring(), m, Scalar(1)));
        KForm dw = ce_differential_raw(P, w);
        std::vector<Rational> column(target.size(), Rational(0));
        scatter_form(dw, target, column);
        for (int row = 0; row < target.size(); ++row) M.at(row, col) = column[row];
    }
    return M;
}

QMatrix koszul_matrix(const PoissonStructure& P, int k, int d) {
    P.require_poisson("koszul_matrix");
    const int r = require_degree(P, "koszul_matrix");
    GradedBasis source(P.ring(), k, d);
    GradedBasis target(P.ring(), k - 1, d + r - 1);
    QMatrix M(target.size(), source.size());
    for (int col = 0; col < source.size(); ++col) {
        const auto& [t, m] = source.elems()[col];
        KChain c(P.ring(), k);
        c.add(t, Polynomial::monomial(P.ring(), m, Scalar(1)));
        KChain b = koszul_boundary(P, c);
        std::vector<Rational> column(target.size(), Rational(0));
        for (const auto& [bt, p] : b.coeffs())
            for (const auto& [bm, bc] : p.terms()) column[target.index_of(bt, bm)] = bc.re();
        for (int row = 0; row < target.size(); ++row) M.at(row, col) = column[row];
    }
    return M;
}

DimTable cohomology_dims(const PoissonStructure& P, int kmax, int dmax) {
    const int r = require_degree(P, "cohomology_dims");
    const int n = P.ring()->size();
    DimTable table;
    for (int k = 0; k <= kmax; ++k)
        for (int d = 0; d <= dmax; ++d) {
            int z = (k > n) ? 0 : differential_matrix(P, k, d).nullity();
            int b = 0;
            int d_below = d - (r - 1);
            if (k >= 1 && k - 1 <= n && d_below >= 0) b = differential_matrix(P, k - 1, d_below).rank();
            if (b > z) throw std::logic_error("image exceeds kernel: d^2 != 0");
            table.rows.push_back({k, d, z, b, z - b});
        }
    return table;
}

DimTable homology_dims(const PoissonStructure& P, int kmax, int dmax) {
    const int r = require_degree(P, "homology_dims");
    const int n = P.ring()->size();
    DimTable table;
    for (int k = 0; k <= kmax; ++k)
        for (int d = 0; d <= dmax; ++d) {
            int z;
            if (k > n)
                z = 0;
            else if (k == 0)
                z = GradedBasis(P.ring(), 0, d).size();
            else
                z = koszul_matrix(P, k, d).nullity();
            int b = 0;
            int d_above = d - (r - 1);
            if (k + 1 <= n && d_above >= 0) b = koszul_matrix(P, k + 1, d_above).rank();
            if (b > z) throw std::logic_error("image exceeds kernel: boundary^2 != 0");
            table.rows.push_back({k, d, z, b, z - b});
        }
    return table;
}

DimTable cohomology_dims_truncated(const PoissonStructure& P, int kmax, int dmax) {
    P.require_poisson("cohomology_dims_truncated");
    int maxdeg = 0;
    for (const auto& [ij, p] : P.upper_entries()) maxdeg = std::max(maxdeg, p.total_degree());
    const int shift = std::max(maxdeg - 1, 0);
    const int n = P.ring()->size();

    // Exact differential on the degree <= dmax slice of level k, expressed in
    // the degree <= dmax + shift slice of level k+1.
    auto level_matrix = [&](int k) {
        auto src_mons = monomials_up_to_degree(n, dmax);
        auto dst_mons = monomials_up_to_degree(n, dmax + shift);
        auto src_tuples = increasing_tuples(n, k);
        auto dst_tuples = increasing_tuples(n, k + 1);
        std::map<std::pair<IndexTuple, std::vector<int>>, int> dst_index;
        int rows = 0;
        for (const auto& t : dst_tuples)
            for (const auto& m : dst_mons) dst_index.emplace(std::make_pair(t, m.e), rows++);
        QMatrix M(rows, static_cast<int>(src_tuples.size() * src_mons.size()));
        int col = 0;
        for (const auto& t : src_tuples)
            for (const auto& m : src_mons) {
                KForm w(P.ring(), k);
                w.add(t, Polynomial::monomial(P.ring(), m, Scalar(1)));
                KForm dw = ce_differential_raw(P, w);
                for (const auto& [dt, p] : dw.coeffs())
                    for (const auto& [dm, dc] : p.terms())
                        M.at(dst_index.at({dt, dm.e}), col) = dc.re();
                ++col;
            }
        return M;
    };

    // Rows of the target space that stay inside the truncated level above.
    auto truncated_rows = [&](int k) {
        auto dst_mons = monomials_up_to_degree(n, dmax + shift);
        std::vector<bool> keep;
        for (std::size_t t = 0; t < increasing_tuples(n, k + 1).size(); ++t)
            for (const auto& m : dst_mons) keep.push_back(m.degree() <= dmax);
        return keep;
    };

    DimTable table;
    table.truncated = true;
    for (int k = 0; k <= kmax; ++k) {
        QMatrix M = level_matrix(k);
        int z = M.nullity();
        int b = 0;
        if (k >= 1) {
            QMatrix below = level_matrix(k - 1);
            b = image_dim_within_rows(below, truncated_rows(k - 1));
        }
        table.rows.push_back({k, dmax, z, b, z - b});
    }
    return table;
}

std::optional<KForm> solve_coboundary(const PoissonStructure& P, const KForm& w, int bound) {
    P.require_poisson("solve_coboundary");
    require_same_ring(P.ring(), w.ring(), "solve_coboundary");
    const int k = w.arity();
    if (k < 1) throw error("solve_coboundary: the form must have positive arity");
    if (!ce_differential_raw(P, w).is_zero())
        throw precondition_error("solve_coboundary: the form is not closed");

    const RingPtr& ring = P.ring();
    const int n = ring->size();
    auto tuples = increasing_tuples(n, k - 1);
    auto mons = monomials_up_to_degree(n, bound);

    // One generator per (tuple, monomial); rows collected from every image
    // together with w itself.
    std::vector<KForm> images;
    images.reserve(tuples.size() * mons.size());
    std::map<std::pair<IndexTuple, std::vector<int>>, int> row_index;
    auto touch = [&](const KForm& f) {
        for (const auto& [t, p] : f.coeffs())
            for (const auto& [m, c] : p.terms())
                row_index.emplace(std::make_pair(t, m.e), 0);
    };
    for (const auto& t : tuples)
        for (const auto& m : mons) {
            KForm eta(ring, k - 1);
            eta.add(t, Polynomial::monomial(ring, m, Scalar(1)));
            images.push_back(ce_differential_raw(P, eta));
            touch(images.back());
        }
    touch(w);
    int rows = 0;
    for (auto& [key, idx] : row_index) idx = rows++;

    QMatrix A(rows, static_cast<int>(images.size()));
    for (int col = 0; col < static_cast<int>(images.size()); ++col)
        for (const auto& [t, p] : images[col].coeffs())
            for (const auto& [m, c] : p.terms()) A.at(row_index.at({t, m.e}), col) = c.re();
    std::vector<Rational> rhs(rows, Rational(0));
    for (const auto& [t, p] : w.coeffs())
        for (const auto& [m, c] : p.terms()) rhs[row_index.at({t, m.e})] = c.re();

    auto sol = solve_linear(A, rhs);
    if (!sol) return std::nullopt;

    KForm eta(ring, k - 1);
    int col = 0;
    for (const auto& t : tuples)
        for (const auto& m : mons) {
            if ((*sol)[col] != 0) eta.add(t, Polynomial::monomial(ring, m, Scalar((*sol)[col])));
            ++col;
        }
    if (ce_differential_raw(P, eta) != w)
        throw std::logic_error("solve_coboundary: candidate failed re-verification");
    return eta;
}

DimTable ce_lie_algebra_cohomology(const StructureConstants& c, int kmax, int dmax) {
    if (!c.satisfies_jacobi())
        throw precondition_error("ce_lie_algebra_cohomology: constants violate the Jacobi identity");
    const int n = c.dim();

    // Coadjoint-type action x_i . f = {x_i, f} on polynomials, written out
    // from the constants alone.
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
    RingPtr ring = make_ring(names);
    auto act = [&](int i, const Polynomial& f) {
        Polynomial out = Polynomial::zero(ring);
        for (int j = 0; j < n; ++j) {
            Polynomial br = Polynomial::zero(ring);
            for (int m = 0; m < n; ++m) br += Polynomial::variable(ring, m) * Scalar(c.c(i, j, m));
            out += br * f.derivative(j);
        }
        return out;
    };

    // CE matrix on Alt^k(g) tensor S^d, basis = (increasing tuple, monomial).
    auto matrix = [&](int k, int d) {
        auto src_tuples = increasing_tuples(n, k);
        auto dst_tuples = increasing_tuples(n, k + 1);
        auto mons = monomials_of_degree(n, d);
        std::map<std::pair<IndexTuple, std::vector<int>>, int> dst_index;
        int rows = 0;
        for (const auto& t : dst_tuples)
            for (const auto& m : mons) dst_index.emplace(std::make_pair(t, m.e), rows++);
        QMatrix M(rows, static_cast<int>(src_tuples.size() * mons.size()));
        std::map<std::vector<int>, int> src_tuple_pos;
        for (int i = 0; i < static_cast<int>(src_tuples.size()); ++i) src_tuple_pos[src_tuples[i]] = i;
        const int mcount = static_cast<int>(mons.size());

        auto add_poly = [&](const IndexTuple& t, const Polynomial& p, int col, int sign) {
            for (const auto& [m, coef] : p.terms()) {
                Rational v = coef.re();
                if (sign < 0) v = -v;
                M.at(dst_index.at({t, m.e}), col) += v;
            }
        };

        for (const auto& s : dst_tuples) {
            const int kk = k + 1;
            for (int r = 0; r < kk; ++r) {
                IndexTuple rest;
                for (int u = 0; u < kk; ++u)
                    if (u != r) rest.push_back(s[u]);
                auto pos = src_tuple_pos.find(rest);
                if (pos == src_tuple_pos.end()) continue;
                for (int mi = 0; mi < mcount; ++mi) {
                    int col = pos->second * mcount + mi;
                    Polynomial f = Polynomial::monomial(ring, mons[mi], Scalar(1));
                    Polynomial v = act(s[r], f);
                    int sign = (r % 2 == 0) ? 1 : -1;
                    if (kk % 2 == 1) sign = -sign;  // (-1)^n of (1.3)
                    add_poly(s, v, col, sign);
                }
            }
            for (int r = 0; r < kk; ++r)
                for (int t = r + 1; t < kk; ++t) {
                    IndexTuple rest;
                    for (int u = 0; u < kk; ++u)
                        if (u != r && u != t) rest.push_back(s[u]);
                    for (int m = 0; m < n; ++m) {
                        Rational cm = c.c(s[r], s[t], m);
                        if (cm == 0) continue;
                        // sorted insertion of m into rest
                        IndexTuple arg = rest;
                        int sign = ((r + t) % 2 == 0) ? 1 : -1;
                        if (kk % 2 == 1) sign = -sign;
                        bool dup = false;
                        int inversions = 0;
                        for (int u : rest) {
                            if (u == m) dup = true;
                            if (u < m) ++inversions;
                        }
                        if (dup) continue;
                        if (inversions % 2 == 1) sign = -sign;
                        arg.push_back(m);
                        std::sort(arg.begin(), arg.end());
                        auto pos = src_tuple_pos.find(arg);
                        if (pos == src_tuple_pos.end()) continue;
                        for (int mi = 0; mi < mcount; ++mi) {
                            int col = pos->second * mcount + mi;
                            Rational v = cm;
                            if (sign < 0) v = -v;
                            M.at(dst_index.at({s, mons[mi].e}), col) += v;
                        }
                    }
                }
        }
        return M;
    };

    DimTable table;
    for (int k = 0; k <= kmax; ++k)
        for (int d = 0; d <= dmax; ++d) {
            int z = (k > n) ? 0 : matrix(k, d).nullity();
            int b = (k >= 1 && k - 1 <= n) ? matrix(k - 1, d).rank() : 0;
            if (b > z) throw std::logic_error("oracle: image exceeds kernel");
            table.rows.push_back({k, d, z, b, z - b});
        }
    return table;
}

}  // namespace pk
