#pragma once

#include <optional>
#include <vector>

#include "pk/scalar.hpp"

namespace pk {

// Dense exact rational matrix, row-major.
class QMatrix {
  public:
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, Rational(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    // Fraction-free (Bareiss) elimination after clearing row denominators;
    // pivots are the first nonzero entry in enumeration order.
    int rank() const;
    int nullity() const { return cols_ - rank(); }

    bool is_zero() const;

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

// One exact solution of A x = b (free unknowns set to zero), or nothing when
// the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(const QMatrix& A, const std::vector<Rational>& b);

// Dimension of { A u : (A u)_r = 0 for every row r outside `rows` }.
int image_dim_within_rows(const QMatrix& A, const std::vector<bool>& rows);

}  // namespace pk
