#include "tautring/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace tautring {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::domain_error("ExactMatrix: dimension mismatch in product");
    ExactMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::domain_error("ExactMatrix: dimension mismatch in apply");
    std::vector<Rational> r(rows_);
    for (int j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) r[i] += at(i, j) * v[j];
    }
    return r;
}

namespace {

/* Row-scale to integers; returns the product of the scale factors applied. */
Rational to_integer_rows(const ExactMatrix& m, std::vector<std::vector<Integer>>& z) {
    z.assign(m.rows(), std::vector<Integer>(m.cols()));
    Rational applied(1);
    for (int i = 0; i < m.rows(); ++i) {
        Integer l(1);
        for (int j = 0; j < m.cols(); ++j) l = Integer::lcm(l, m.at(i, j).denominator());
        applied *= Rational(l);
        for (int j = 0; j < m.cols(); ++j) {
            Rational v = m.at(i, j) * Rational(l);
            z[i][j] = v.numerator();
        }
    }
    return applied;
}

/* Pivot row for column `col` among rows [from, n): largest |entry|, lowest index. */
int pick_pivot(const std::vector<std::vector<Integer>>& z, const std::vector<int>& rowp, int from, int n,
               int col) {
    int best = -1;
    Integer best_abs(0);
    for (int i = from; i < n; ++i) {
        Integer a = z[rowp[i]][col].abs();
        if (!a.is_zero() && (best == -1 || a > best_abs)) {
            best = i;
            best_abs = std::move(a);
        }
    }
    return best;
}

}  // namespace

Rational det(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("det: square matrix required");
    const int n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<std::vector<Integer>> z;
    Rational scale = to_integer_rows(m, z);
    std::vector<int> rowp(n);
    for (int i = 0; i < n; ++i) rowp[i] = i;

    int sign = 1;
    Integer prev(1);
    for (int k = 0; k < n - 1; ++k) {
        int piv = pick_pivot(z, rowp, k, n, k);
        if (piv == -1) return Rational(0);
        if (piv != k) {
            std::swap(rowp[k], rowp[piv]);
            sign = -sign;
        }
        const auto& pr = z[rowp[k]];
        for (int i = k + 1; i < n; ++i) {
            auto& ri = z[rowp[i]];
            for (int j = k + 1; j < n; ++j)
                ri[j] = Integer::div_exact(pr[k] * ri[j] - ri[k] * pr[j], prev);
            ri[k] = Integer(0);
        }
        prev = pr[k];
    }
    Integer d = z[rowp[n - 1]][n - 1];
    if (sign < 0) d = -d;
    return Rational(d) / scale;
}

Rational det_gauss(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::domain_error("det_gauss: square matrix required");
    const int n = m.rows();
    ExactMatrix a = m;
    Rational d(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        Rational best;
        for (int i = k; i < n; ++i) {
            Rational v = a.at(i, k).abs();
            if (!v.is_zero() && (piv == -1 || v > best)) {
                piv = i;
                best = v;
            }
        }
        if (piv == -1) return Rational(0);
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            d = -d;
        }
        d *= a.at(k, k);
        Rational inv = a.at(k, k).inverse();
        for (int i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            Rational f = a.at(i, k) * inv;
            for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return d;
}

int rank(const ExactMatrix& m) {
    std::vector<std::vector<Integer>> z;
    to_integer_rows(m, z);
    const int rows = m.rows(), cols = m.cols();
    std::vector<int> rowp(rows);
    for (int i = 0; i < rows; ++i) rowp[i] = i;

    int r = 0, col = 0;
    Integer prev(1);
    while (r < rows && col < cols) {
        int piv = pick_pivot(z, rowp, r, rows, col);
        if (piv == -1) {
            ++col;
            continue;
        }
        std::swap(rowp[r], rowp[piv]);
        const auto& pr = z[rowp[r]];
        for (int i = r + 1; i < rows; ++i) {
            auto& ri = z[rowp[i]];
            for (int j = col + 1; j < cols; ++j)
                ri[j] = Integer::div_exact(pr[col] * ri[j] - ri[col] * pr[j], prev);
            ri[col] = Integer(0);
        }
        prev = pr[col];
        ++r;
        ++col;
    }
    return r;
}

std::optional<std::vector<Rational>> solve(const ExactMatrix& m, const std::vector<Rational>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw std::domain_error("solve: rhs size mismatch");
    const int rows = m.rows(), cols = m.cols();
    ExactMatrix a(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) a.at(i, j) = m.at(i, j);
        a.at(i, cols) = rhs[i];
    }

    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int piv = -1;
        Rational best;
        for (int i = r; i < rows; ++i) {
            Rational v = a.at(i, col).abs();
            if (!v.is_zero() && (piv == -1 || v > best)) {
                piv = i;
                best = v;
            }
        }
        if (piv == -1) continue;
        if (piv != r)
            for (int j = col; j <= cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
        Rational inv = a.at(r, col).inverse();
        for (int j = col; j <= cols; ++j) a.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a.at(i, col).is_zero()) continue;
            Rational f = a.at(i, col);
            for (int j = col; j <= cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!a.at(i, cols).is_zero()) return std::nullopt;

    std::vector<Rational> x(cols);
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = a.at(i, cols);
    return x;
}

std::optional<ExactMatrix> solve_square(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw std::domain_error("solve_square: dimension mismatch");
    const int n = a.rows(), w = b.cols();
    ExactMatrix aug(n, n + w);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < w; ++j) aug.at(i, n + j) = b.at(i, j);
    }
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        Rational best;
        for (int i = k; i < n; ++i) {
            Rational v = aug.at(i, k).abs();
            if (!v.is_zero() && (piv == -1 || v > best)) {
                piv = i;
                best = v;
            }
        }
        if (piv == -1) return std::nullopt;
        if (piv != k)
            for (int j = k; j < n + w; ++j) std::swap(aug.at(k, j), aug.at(piv, j));
        Rational inv = aug.at(k, k).inverse();
        for (int j = k; j < n + w; ++j) aug.at(k, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == k || aug.at(i, k).is_zero()) continue;
            Rational f = aug.at(i, k);
            for (int j = k; j < n + w; ++j) aug.at(i, j) -= f * aug.at(k, j);
        }
    }
    ExactMatrix x(n, w);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < w; ++j) x.at(i, j) = aug.at(i, n + j);
    return x;
}

}  // namespace tautring
