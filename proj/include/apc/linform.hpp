#pragma once

/**
 * Homogeneous linear forms in the target variables and dense matrices of
 * them: the Z_p maps of a graded slice, the Delta submatrices, and their
 * exact determinants. The determinant runs fraction-free Bareiss over the
 * polynomial ring (every division is exact there), after clearing each row
 * to integer coefficients.
 */

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <apc/errors.hpp>
#include <apc/polydet.hpp>
#include <apc/polynomial.hpp>
#include <apc/qmatrix.hpp>
#include <apc/random.hpp>

namespace apc {

/// A linear form c_1*T_1 + ... + c_k*T_k (no constant term; zero allowed).
class TargetLinForm {
public:
    TargetLinForm() = default;
    explicit TargetLinForm(int nvars) : c_(nvars) {}
    explicit TargetLinForm(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    int nvars() const { return static_cast<int>(c_.size()); }
    const Rational& operator[](int i) const { return c_[i]; }
    Rational& operator[](int i) { return c_[i]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const TargetLinForm& o) const { return c_ == o.c_; }

    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != c_.size()) throw InvalidInput("point has wrong length");
        Rational s(0);
        for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i] * point[i];
        return s;
    }

    TargetPoly to_poly() const {
        std::vector<TargetPoly::Term> terms;
        for (int i = 0; i < nvars(); ++i)
            if (c_[i] != 0) terms.emplace_back(mono_variable(i), c_[i]);
        return TargetPoly::from_terms(nvars(), std::move(terms));
    }

    std::string str() const { return to_poly().str(); }

private:
    std::vector<Rational> c_;
};

class LinFormMatrix {
public:
    LinFormMatrix() : rows_(0), cols_(0), tvars_(0) {}
    LinFormMatrix(int rows, int cols, int tvars)
        : rows_(rows), cols_(cols), tvars_(tvars),
          e_(std::size_t(rows) * cols, TargetLinForm(tvars)) {
        if (rows < 0 || cols < 0) throw InvalidInput("negative matrix dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int target_vars() const { return tvars_; }

    TargetLinForm& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const TargetLinForm& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    bool operator==(const LinFormMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    LinFormMatrix select_columns(std::span<const int> idx) const {
        LinFormMatrix r(rows_, static_cast<int>(idx.size()), tvars_);
        for (int i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
        return r;
    }

    /// Keeps the rows whose indices are NOT in `idx` (order preserved).
    LinFormMatrix remove_rows(std::span<const int> idx) const {
        std::vector<bool> drop(rows_, false);
        for (int i : idx) drop[i] = true;
        LinFormMatrix r(rows_ - static_cast<int>(idx.size()), cols_, tvars_);
        int out = 0;
        for (int i = 0; i < rows_; ++i) {
            if (drop[i]) continue;
            for (int j = 0; j < cols_; ++j) r.at(out, j) = at(i, j);
            ++out;
        }
        return r;
    }

    QMatrix evaluate(std::span<const Rational> point) const {
        QMatrix m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).evaluate(point);
        return m;
    }

private:
    int rows_, cols_, tvars_;
    std::vector<TargetLinForm> e_;
};

/// A * B with entries expanded to (quadratic) polynomials; used to verify
/// that consecutive differentials compose to zero.
inline std::vector<TargetPoly> linform_product(const LinFormMatrix& a, const LinFormMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
    std::vector<TargetPoly> out;
    out.reserve(std::size_t(a.rows()) * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            TargetPoly sum(a.target_vars());
            for (int k = 0; k < a.cols(); ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                sum += a.at(i, k).to_poly() * b.at(k, j).to_poly();
            }
            out.push_back(std::move(sum));
        }
    return out;
}

inline LinFormMatrix qmatrix_times_linform(const QMatrix& a, const LinFormMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
    LinFormMatrix r(a.rows(), b.cols(), b.target_vars());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& c = a.at(i, k);
            if (c == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                for (int t = 0; t < b.target_vars(); ++t) r.at(i, j)[t] += c * b.at(k, j)[t];
        }
    return r;
}

inline LinFormMatrix linform_times_qmatrix(const LinFormMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
    LinFormMatrix r(a.rows(), b.cols(), a.target_vars());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Rational& c = b.at(k, j);
                if (c == 0) continue;
                for (int t = 0; t < a.target_vars(); ++t) r.at(i, j)[t] += a.at(i, k)[t] * c;
            }
        }
    return r;
}

namespace detail {

// Bareiss state over Z[T]: rows cleared to coprime integer coefficients
// (scale tracks the applied row multipliers), elimination fused via
// bareiss_update so every intermediate entry is an integer minor.
struct ZBareiss {
    int rows = 0, cols = 0, nvars = 0;
    int sign = 1;
    Rational scale = Rational(1);
    std::vector<ZPoly> a;

    ZPoly& at(int i, int j) { return a[std::size_t(i) * cols + j]; }

    static ZBareiss from(const LinFormMatrix& m) {
        ZBareiss z;
        z.rows = m.rows();
        z.cols = m.cols();
        z.nvars = m.target_vars();
        z.a.resize(std::size_t(z.rows) * z.cols);
        for (int i = 0; i < z.rows; ++i) {
            Integer den = 1, g = 0;
            for (int j = 0; j < z.cols; ++j)
                for (int t = 0; t < z.nvars; ++t) den = lcm(den, m.at(i, j)[t].get_den());
            for (int j = 0; j < z.cols; ++j)
                for (int t = 0; t < z.nvars; ++t) {
                    const Rational& c = m.at(i, j)[t];
                    if (c != 0) g = gcd(g, Integer(c.get_num() * (den / c.get_den())));
                }
            if (g == 0) g = 1;  // zero row
            Rational mult(den, g);
            mult.canonicalize();
            z.scale *= mult;
            for (int j = 0; j < z.cols; ++j) {
                ZPoly& p = z.at(i, j);
                for (int t = 0; t < z.nvars; ++t) {
                    const Rational& c = m.at(i, j)[t];
                    if (c == 0) continue;
                    p.terms.emplace_back(mono_variable(t),
                                         Integer(c.get_num() * (den / c.get_den()) / g));
                }
                if (!p.terms.empty()) p.deg = 1;
            }
        }
        return z;
    }

    // fraction-free forward elimination; returns the rank (pivot count)
    int eliminate(int stop_rank) {
        ZPoly prev;
        int r = 0;
        for (int col = 0; col < cols && r < rows && r < stop_rank; ++col) {
            int best = -1;
            for (int i = r; i < rows; ++i) {
                if (at(i, col).is_zero()) continue;
                if (best == -1 || at(i, col).term_count() < at(best, col).term_count()) best = i;
            }
            if (best == -1) continue;
            if (best != r) {
                for (int j = 0; j < cols; ++j) std::swap(at(best, j), at(r, j));
                sign = -sign;
            }
            const ZPoly piv = at(r, col);
            for (int i = r + 1; i < rows; ++i) {
                const ZPoly mult = std::move(at(i, col));
                at(i, col) = ZPoly();
                for (int j = col + 1; j < cols; ++j)
                    at(i, j) = bareiss_update(at(i, j), piv, mult, at(r, j), prev, nvars);
            }
            prev = piv;
            ++r;
        }
        return r;
    }
};

}  // namespace detail

/// Exact determinant; homogeneous of degree rows(M) or identically zero.
inline TargetPoly linform_determinant(const LinFormMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of non-square matrix");
    if (m.rows() == 0) return TargetPoly::constant(std::max(m.target_vars(), 1), 1);
    detail::ZBareiss b = detail::ZBareiss::from(m);
    const int r = b.eliminate(m.rows());
    if (r < m.rows()) return TargetPoly(m.target_vars());
    return detail::zpoly_to_target(b.at(m.rows() - 1, m.cols() - 1), m.target_vars(),
                                   Rational(b.sign) / b.scale);
}

/// Rank over the fraction field Q(T), computed symbolically.
inline int symbolic_rank(const LinFormMatrix& m, int stop_rank = -1) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    detail::ZBareiss b = detail::ZBareiss::from(m);
    return b.eliminate(stop_rank < 0 ? std::min(m.rows(), m.cols()) : stop_rank);
}

/// Generic rank: maximum scalar rank over a few seeded evaluations. Never
/// exceeds the true rank over Q(T).
inline int generic_rank(const LinFormMatrix& m, std::uint64_t seed, int samples = 3) {
    int best = 0;
    for (int s = 0; s < samples; ++s) {
        SeededRng rng(derive_seed(seed, 17, s));
        best = std::max(best, rank(m.evaluate(random_prime_point(m.target_vars(), rng))));
        if (best == std::min(m.rows(), m.cols())) break;
    }
    return best;
}

/// k column indices whose columns are independent over Q(T). Columns are
/// found greedily (leftmost first) on a scalar evaluation at distinct small
/// primes, then certified symbolically; fresh points are drawn on failure.
/// Randomness only influences which valid selection is returned.
inline std::vector<int> select_independent_columns(const LinFormMatrix& m, int k,
                                                   std::uint64_t seed, int max_retries = 5) {
    if (k == 0) return {};
    if (k > m.cols() || k > m.rows()) throw RankDeficient("matrix cannot contain " +
                                                          std::to_string(k) + " independent columns");
    int found = 0;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        SeededRng rng(derive_seed(seed, 1, attempt));
        const auto point = random_prime_point(m.target_vars(), rng);
        std::vector<int> sel = pivot_columns(m.evaluate(point), k);
        found = std::max(found, static_cast<int>(sel.size()));
        if (static_cast<int>(sel.size()) < k) continue;
        // certify the selection independently of the evaluation point
        const LinFormMatrix sub = m.select_columns(sel);
        const bool ok = (sub.rows() == k) ? !linform_determinant(sub).is_zero()
                                          : symbolic_rank(sub, k) == k;
        if (ok) return sel;
    }
    throw RankDeficient("only " + std::to_string(found) + " independent columns found, " +
                        std::to_string(k) + " required");
}

}  // namespace apc
