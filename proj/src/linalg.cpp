#include "pk/linalg.hpp"

#include <stdexcept>

namespace pk {

namespace {

// Bareiss elimination on an integer copy; returns the rank. Row scaling by
// the positive lcm of denominators preserves rank and kernel.
int bareiss_rank(const QMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int r = 0; r < rows; ++r) {
        mpz_class l(1);
        for (int c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
        for (int c = 0; c < cols; ++c) {
            mpq_class v = m.at(r, c) * Rational(l);
            if (v.get_den() != 1) throw std::logic_error("denominator clearing failed");
            a[r][c] = v.get_num();
        }
    }
    mpz_class prev(1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                mpz_class num = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("Bareiss division was not exact");
                a[r][c] = q;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace

int QMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return bareiss_rank(*this);
}

bool QMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

std::optional<std::vector<Rational>> solve_linear(const QMatrix& A, const std::vector<Rational>& b) {
    const int rows = A.rows(), cols = A.cols();
    if (static_cast<int>(b.size()) != rows) throw std::logic_error("solve_linear: size mismatch");
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m[r][c] = A.at(r, c);
        m[r][cols] = b[r];
    }
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = m[rank][col];
        for (int c = col; c <= cols; ++c) m[rank][c] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c <= cols; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (m[r][cols] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = m[r][cols];
    return x;
}

int image_dim_within_rows(const QMatrix& A, const std::vector<bool>& rows) {
    // dim = nullity(P A) - nullity(A) where P projects onto the excluded rows.
    int excluded = 0;
    for (bool keep : rows)
        if (!keep) ++excluded;
    QMatrix PA(excluded, A.cols());
    int r2 = 0;
    for (int r = 0; r < A.rows(); ++r) {
        if (rows[r]) continue;
        for (int c = 0; c < A.cols(); ++c) PA.at(r2, c) = A.at(r, c);
        ++r2;
    }
    return PA.nullity() - A.nullity();
}

}  // namespace pk
