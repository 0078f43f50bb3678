#pragma once

/**
 * Dense matrices over Q and the fraction-free elimination kernels everything
 * else is built on. All elimination uses single-step Bareiss (Gauss-Jordan
 * variant for reduced forms): rows are cleared to coprime integers first,
 * every intermediate entry is a minor of the cleared matrix, and every
 * division is exact. Pivots are chosen by minimal absolute value for
 * determinism and to slow coefficient growth.
 */

#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include <apc/errors.hpp>
#include <apc/rational.hpp>

namespace apc {

class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
    }

    static QMatrix identity(int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    QMatrix transposed() const {
        QMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    void swap_rows(int i, int k) {
        for (int j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
    }

    /// Scales each row by the lcm of its denominators and divides by the
    /// integer content: coprime integer entries, row space unchanged.
    void make_rows_primitive() {
        for (int i = 0; i < rows_; ++i) {
            Integer den = 1, g = 0;
            for (int j = 0; j < cols_; ++j) den = lcm(den, at(i, j).get_den());
            for (int j = 0; j < cols_; ++j)
                g = gcd(g, Integer(at(i, j).get_num() * (den / at(i, j).get_den())));
            if (g == 0) continue;
            Rational scale(den, g);
            scale.canonicalize();
            for (int j = 0; j < cols_; ++j) at(i, j) *= scale;
        }
    }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        if (a.cols_ != b.rows_) throw InvalidInput("matrix product dimension mismatch");
        QMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

namespace detail {

// Single-step fraction-free elimination. With jordan=true all non-pivot rows
// are updated (needed so later divisions stay exact and leftover rows vanish);
// otherwise only rows below the pivot. Pivot search is restricted to columns
// < pivot_col_limit. Returns the pivot columns in order.
inline std::vector<int> fraction_free_eliminate(QMatrix& m, bool jordan, int pivot_col_limit) {
    m.make_rows_primitive();
    std::vector<int> pivots;
    Rational prev(1);
    int r = 0;
    for (int col = 0; col < pivot_col_limit && r < m.rows(); ++col) {
        int best = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (m.at(i, col) == 0) continue;
            if (best == -1 || cmpabs_rational(m.at(i, col), m.at(best, col)) < 0) best = i;
        }
        if (best == -1) continue;
        if (best != r) m.swap_rows(best, r);
        const Rational piv = m.at(r, col);
        const int lo = jordan ? 0 : r + 1;
        for (int i = lo; i < m.rows(); ++i) {
            if (i == r) continue;
            const Rational mult = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) {
                if (j == col) continue;
                m.at(i, j) = (m.at(i, j) * piv - mult * m.at(r, j)) / prev;
            }
            m.at(i, col) = 0;
        }
        prev = piv;
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace detail

struct Rref {
    QMatrix mat;
    std::vector<int> pivot_cols;
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

/// Reduced row echelon form (pivot entries 1, zeros above and below).
/// With pivot_col_limit set, pivots are only taken in columns before the
/// limit; trailing columns are still reduced (multi-RHS solving).
inline Rref rref(QMatrix m, int pivot_col_limit = -1) {
    if (pivot_col_limit < 0) pivot_col_limit = m.cols();
    auto pivots = detail::fraction_free_eliminate(m, /*jordan=*/true, pivot_col_limit);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) {
        const Rational piv = m.at(r, pivots[r]);
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(r, j) != 0) m.at(r, j) /= piv;
    }
    return {std::move(m), std::move(pivots)};
}

inline int rank(QMatrix m) {
    return static_cast<int>(detail::fraction_free_eliminate(m, false, m.cols()).size());
}

inline Rational qmatrix_determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of non-square matrix");
    if (m.rows() == 0) return Rational(1);
    // track the row scaling applied by make_rows_primitive
    Rational scale(1);
    for (int i = 0; i < m.rows(); ++i) {
        Integer den = 1, g = 0;
        for (int j = 0; j < m.cols(); ++j) den = lcm(den, m.at(i, j).get_den());
        for (int j = 0; j < m.cols(); ++j)
            g = gcd(g, Integer(m.at(i, j).get_num() * (den / m.at(i, j).get_den())));
        if (g == 0) return Rational(0);  // zero row
        Rational s(den, g);
        s.canonicalize();
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) *= s;
        scale *= s;
    }
    Rational prev(1);
    int sign = 1;
    for (int col = 0; col < m.cols(); ++col) {
        int best = -1;
        for (int i = col; i < m.rows(); ++i) {
            if (m.at(i, col) == 0) continue;
            if (best == -1 || cmpabs_rational(m.at(i, col), m.at(best, col)) < 0) best = i;
        }
        if (best == -1) return Rational(0);
        if (best != col) {
            m.swap_rows(best, col);
            sign = -sign;
        }
        const Rational piv = m.at(col, col);
        for (int i = col + 1; i < m.rows(); ++i) {
            const Rational mult = m.at(i, col);
            for (int j = col + 1; j < m.cols(); ++j)
                m.at(i, j) = (m.at(i, j) * piv - mult * m.at(col, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = piv;
    }
    return Rational(sign) * m.at(m.rows() - 1, m.cols() - 1) / scale;
}

/// Basis of the left null space: K with K * M = 0, rows independent, in
/// reduced row echelon form so results are reproducible bit for bit.
inline QMatrix left_kernel_basis(const QMatrix& m) {
    const Rref red = rref(m.transposed());
    const int n = m.rows();
    std::vector<int> is_pivot(n, -1);
    for (int r = 0; r < red.rank(); ++r) is_pivot[red.pivot_cols[r]] = r;
    QMatrix k(n - red.rank(), n);
    int row = 0;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc] >= 0) continue;
        k.at(row, fc) = 1;
        for (int pc = 0; pc < n; ++pc)
            if (is_pivot[pc] >= 0) k.at(row, pc) = -red.mat.at(is_pivot[pc], fc);
        ++row;
    }
    return rref(std::move(k)).mat;
}

/// Solves C * K = B for C, one row of C per row of B. Throws Inconsistent if
/// some row of B is outside the row space of K.
inline QMatrix solve_right_many(const QMatrix& k, const QMatrix& b) {
    if (b.cols() != k.cols()) throw InvalidInput("solve_right dimension mismatch");
    const int r = k.rows();
    QMatrix aug(k.cols(), r + b.rows());
    for (int i = 0; i < k.rows(); ++i)
        for (int j = 0; j < k.cols(); ++j) aug.at(j, i) = k.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) aug.at(j, r + i) = b.at(i, j);
    const Rref red = rref(std::move(aug), r);
    // rows without a pivot must be zero in every RHS column
    for (int row = red.rank(); row < red.mat.rows(); ++row)
        for (int i = 0; i < b.rows(); ++i)
            if (red.mat.at(row, r + i) != 0)
                throw Inconsistent("right-hand side is not in the row space");
    QMatrix c(b.rows(), r);
    for (int p = 0; p < red.rank(); ++p)
        for (int i = 0; i < b.rows(); ++i) c.at(i, red.pivot_cols[p]) = red.mat.at(p, r + i);
    return c;
}

/// Coefficient vector c with c * K = b.
inline std::vector<Rational> solve_right(const QMatrix& k, std::span<const Rational> b) {
    QMatrix bm(1, static_cast<int>(b.size()));
    for (std::size_t j = 0; j < b.size(); ++j) bm.at(0, static_cast<int>(j)) = b[j];
    const QMatrix c = solve_right_many(k, bm);
    std::vector<Rational> out(c.cols());
    for (int j = 0; j < c.cols(); ++j) out[j] = c.at(0, j);
    return out;
}

/// Greedy pivot columns (leftmost first); stops after max_needed pivots.
inline std::vector<int> pivot_columns(QMatrix m, int max_needed) {
    auto pivots = detail::fraction_free_eliminate(m, false, m.cols());
    if (static_cast<int>(pivots.size()) > max_needed) pivots.resize(max_needed);
    return pivots;
}

}  // namespace apc
