#ifndef TAUTRING_MATRIX_HPP
#define TAUTRING_MATRIX_HPP

#include <optional>
#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

/* Dense matrix of exact rationals. */
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    static ExactMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    ExactMatrix operator*(const ExactMatrix& o) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/*
 * Determinant by fraction-free (Bareiss) elimination on the row-scaled
 * integer matrix; deterministic pivoting (largest magnitude in the
 * current column, lowest row index on ties).
 */
Rational det(const ExactMatrix& m);

/* Determinant by rational Gaussian elimination; cross-check oracle for det. */
Rational det_gauss(const ExactMatrix& m);

/* Exact rank via fraction-free elimination with full pivoting. */
int rank(const ExactMatrix& m);

/*
 * One exact solution of m x = rhs (free variables set to zero), or
 * nullopt when the system is inconsistent.  Any shape.
 */
std::optional<std::vector<Rational>> solve(const ExactMatrix& m, const std::vector<Rational>& rhs);

/* X with a X = b for square nonsingular a; nullopt when a is singular. */
std::optional<ExactMatrix> solve_square(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace tautring

#endif
