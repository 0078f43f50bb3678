#pragma once

/**
 * Graded slices of Koszul differentials. The exterior basis of Lambda^p is
 * the lex-ordered list of p-subsets of {0..n}; the differential acts by
 *
 *   d(e_{i1<...<ip}) = sum_k (-1)^{k+1} f_{ik} e_{...without ik...}
 *
 * Bases of each slice are indexed block-major: all monomials of one exterior
 * generator first, then the next generator (so column i + k*m addresses
 * monomial i of generator k, with m the monomial count).
 */

#include <string>
#include <vector>

#include <apc/linform.hpp>
#include <apc/monomial.hpp>
#include <apc/polynomial.hpp>
#include <apc/qmatrix.hpp>

namespace apc {

/// All monomials of one total degree, graded-lex descending; the ordering
/// fixes every matrix index downstream.
struct MonomialBasis {
    int nvars = 0;
    int degree = -1;
    std::vector<Monomial> monomials;

    int size() const { return static_cast<int>(monomials.size()); }

    int index_of(Monomial m) const { return static_cast<int>(mono_rank(m, nvars)); }
};

inline MonomialBasis monomial_basis(int nvars, int degree) {
    if (nvars < 1) throw InvalidInput("monomial basis needs at least one variable");
    MonomialBasis b;
    b.nvars = nvars;
    b.degree = degree;
    if (degree < 0) return b;
    const long long dim = homogeneous_dim(nvars, degree);
    b.monomials.reserve(dim);
    for (long long r = 0; r < dim; ++r) b.monomials.push_back(mono_unrank(r, nvars, degree));
    return b;
}

/// Lex-ordered p-subsets of {0, ..., n_plus_1 - 1}.
inline std::vector<std::vector<int>> koszul_exterior_basis(int n_plus_1, int p) {
    if (p < 0 || p > n_plus_1) throw InvalidInput("exterior degree out of range");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(p);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == p) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n_plus_1 - (p - depth); ++i) {
            cur[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace detail {

inline int subset_index(const std::vector<std::vector<int>>& sets, const std::vector<int>& s) {
    for (std::size_t i = 0; i < sets.size(); ++i)
        if (sets[i] == s) return static_cast<int>(i);
    throw InvalidInput("exterior subset not found");
}

}  // namespace detail

/// One graded slice of the p-th Koszul differential of f: the matrix of
/// (A_nu)^{C(n+1,p)} -> (A_{nu+d})^{C(n+1,p-1)} together with its bases.
struct KoszulSlice {
    int p = 0;
    int nu = 0;
    QMatrix matrix;
    std::vector<std::vector<int>> row_sets, col_sets;
    MonomialBasis row_monomials, col_monomials;
};

inline KoszulSlice koszul_matrix(const std::vector<ParamPoly>& f, int p, int nu) {
    if (f.empty()) throw InvalidInput("empty polynomial list");
    const int n = f.front().nvars();
    const int n_plus_1 = static_cast<int>(f.size());
    int d = -1;
    for (const auto& fi : f) {
        if (fi.nvars() != n) throw InvalidInput("mixed variable counts");
        if (!fi.is_homogeneous()) throw InvalidInput("koszul_matrix requires homogeneous forms");
        if (!fi.is_zero()) {
            if (d == -1) d = fi.degree();
            if (fi.degree() != d) throw InvalidInput("mixed degrees");
        }
    }
    if (d < 1) throw InvalidInput("forms must have degree at least 1");

    KoszulSlice s;
    s.p = p;
    s.nu = nu;
    s.col_sets = koszul_exterior_basis(n_plus_1, p);
    s.row_sets = koszul_exterior_basis(n_plus_1, p - 1);
    s.col_monomials = monomial_basis(n, nu);
    s.row_monomials = monomial_basis(n, nu + d);
    const int mc = s.col_monomials.size();
    const int mr = s.row_monomials.size();
    s.matrix = QMatrix(static_cast<int>(s.row_sets.size()) * mr,
                       static_cast<int>(s.col_sets.size()) * mc);
    for (std::size_t si = 0; si < s.col_sets.size(); ++si) {
        const auto& set = s.col_sets[si];
        for (std::size_t k = 0; k < set.size(); ++k) {
            std::vector<int> rest;
            for (int e : set)
                if (e != set[k]) rest.push_back(e);
            const int ri = detail::subset_index(s.row_sets, rest);
            const int sign = (k % 2 == 0) ? 1 : -1;
            const ParamPoly& fk = f[set[k]];
            for (int mi = 0; mi < mc; ++mi) {
                const Monomial base = s.col_monomials.monomials[mi];
                const int col = static_cast<int>(si) * mc + mi;
                for (const auto& [m, c] : fk.terms()) {
                    const int row = ri * mr + s.row_monomials.index_of(mono_mul(m, base));
                    s.matrix.at(row, col) += Rational(sign) * c;
                }
            }
        }
    }
    return s;
}

/// The same slice structure for the Koszul differential of the target
/// variables: entries are +-T_i, and the map preserves the parameter degree.
inline LinFormMatrix koszul_t_matrix(int n, int p, int nu) {
    const int n_plus_1 = n + 1;
    const auto col_sets = koszul_exterior_basis(n_plus_1, p);
    const auto row_sets = koszul_exterior_basis(n_plus_1, p - 1);
    const MonomialBasis basis = monomial_basis(n, nu);
    const int m = basis.size();
    LinFormMatrix z(static_cast<int>(row_sets.size()) * m,
                    static_cast<int>(col_sets.size()) * m, n_plus_1);
    for (std::size_t si = 0; si < col_sets.size(); ++si) {
        const auto& set = col_sets[si];
        for (std::size_t k = 0; k < set.size(); ++k) {
            std::vector<int> rest;
            for (int e : set)
                if (e != set[k]) rest.push_back(e);
            const int ri = detail::subset_index(row_sets, rest);
            const int sign = (k % 2 == 0) ? 1 : -1;
            for (int mi = 0; mi < m; ++mi)
                z.at(ri * m + mi, static_cast<int>(si) * m + mi)[set[k]] += Rational(sign);
        }
    }
    return z;
}

}  // namespace apc
