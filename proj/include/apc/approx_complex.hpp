#pragma once

/**
 * Graded slices of the approximation complex of cycles. The slice in degree
 * nu packages, for each homological index p, a basis K_p of the syzygies
 * (cycles of the p-th Koszul differential with coefficients of degree nu)
 * and the matrix Z_p of the target-variable differential expressed in the
 * bases K_p and K_{p-1}. Entries of Z_p are linear forms; consecutive maps
 * compose to zero.
 */

#include <array>
#include <string>
#include <vector>

#include <apc/koszul.hpp>
#include <apc/linform.hpp>
#include <apc/polynomial.hpp>
#include <apc/qmatrix.hpp>

namespace apc {

/// Lowest admissible slice degree: (n-1)(d-1) - indeg_sat.
inline int nu0(int n, int d, int indeg_sat) {
    if (indeg_sat < 0 || indeg_sat > d)
        throw InvalidInput("initial degree of the saturation must lie in [0, d]");
    return (n - 1) * (d - 1) - indeg_sat;
}

/// Basis of the degree-nu syzygies at homological index p: rows span the
/// left kernel of (the transpose of) the Koszul slice, in reduced row
/// echelon form.
inline QMatrix syzygy_basis(const std::vector<ParamPoly>& f, int p, int nu) {
    return left_kernel_basis(koszul_matrix(f, p, nu).matrix.transposed());
}

/// Matrix of v_1 in the basis K1: entry (i, j) = sum_k T_{k+1} K1(j, i + k*m)
/// with m the number of degree-nu monomials.
inline LinFormMatrix build_v1(const QMatrix& k1, int n, int nu) {
    const int m = static_cast<int>(homogeneous_dim(n, nu));
    if (k1.cols() != (n + 1) * m && k1.rows() > 0)
        throw InvalidInput("K1 has wrong column count");
    LinFormMatrix z(m, k1.rows(), n + 1);
    for (int j = 0; j < k1.rows(); ++j)
        for (int i = 0; i < m; ++i)
            for (int k = 0; k <= n; ++k) z.at(i, j)[k] = k1.at(j, i + k * m);
    return z;
}

/// Matrix of v_p (p >= 2): applies the target-variable Koszul differential to
/// each row of K_p, then expresses every coefficient layer of the result in
/// the basis K_{p-1}.
inline LinFormMatrix build_vp(const QMatrix& kp, const QMatrix& kp_minus_1, int p, int n,
                              int nu) {
    const int tvars = n + 1;
    const MonomialBasis basis = monomial_basis(n, nu);
    const int m = basis.size();
    const auto sets_p = koszul_exterior_basis(tvars, p);
    const auto sets_pm1 = koszul_exterior_basis(tvars, p - 1);
    if (kp.rows() > 0 && kp.cols() != static_cast<int>(sets_p.size()) * m)
        throw InvalidInput("K_p has wrong column count");
    if (kp_minus_1.cols() != static_cast<int>(sets_pm1.size()) * m && kp_minus_1.rows() > 0)
        throw InvalidInput("K_{p-1} has wrong column count");
    LinFormMatrix z(kp_minus_1.rows(), kp.rows(), tvars);
    if (kp.rows() == 0) return z;

    // Z'_p column for row j of K_p, flattened over ((p-1)-subset, monomial):
    // one scalar layer per target variable.
    const int len = static_cast<int>(sets_pm1.size()) * m;
    QMatrix layers(kp.rows() * tvars, len);  // row (j*tvars + t) = layer t of column j
    for (std::size_t si = 0; si < sets_p.size(); ++si) {
        const auto& set = sets_p[si];
        for (std::size_t k = 0; k < set.size(); ++k) {
            std::vector<int> rest;
            for (int e : set)
                if (e != set[k]) rest.push_back(e);
            const int ri = detail::subset_index(sets_pm1, rest);
            const Rational sign((k % 2 == 0) ? 1 : -1);
            for (int j = 0; j < kp.rows(); ++j)
                for (int mi = 0; mi < m; ++mi) {
                    const Rational& c = kp.at(j, static_cast<int>(si) * m + mi);
                    if (c == 0) continue;
                    layers.at(j * tvars + set[k], ri * m + mi) += sign * c;
                }
        }
    }
    // every layer lies in the row space of K_{p-1}; anything else is a bug
    const QMatrix coeff = solve_right_many(kp_minus_1, layers);
    for (int j = 0; j < kp.rows(); ++j)
        for (int t = 0; t < tvars; ++t)
            for (int r = 0; r < kp_minus_1.rows(); ++r)
                z.at(r, j)[t] = coeff.at(j * tvars + t, r);
    return z;
}

/// The assembled graded slice.
struct ComplexSlice {
    int n = 0;   // parameter variable count
    int d = 0;   // common degree of the forms
    int nu = 0;  // slice degree
    int ambient_dim = 0;                // dim A_nu = rows of Z_1
    std::vector<QMatrix> kernels;       // K_1 .. K_n
    std::vector<LinFormMatrix> maps;    // Z_1 .. Z_n

    const LinFormMatrix& z(int p) const { return maps.at(p - 1); }
    const QMatrix& k(int p) const { return kernels.at(p - 1); }

    /// Number of maps up to the last one with any columns.
    int length() const {
        int len = 0;
        for (std::size_t i = 0; i < maps.size(); ++i)
            if (maps[i].cols() > 0) len = static_cast<int>(i) + 1;
        return len;
    }

    std::vector<std::array<int, 2>> shapes() const {
        std::vector<std::array<int, 2>> s;
        for (const auto& mtx : maps) s.push_back({mtx.rows(), mtx.cols()});
        return s;
    }
};

/// Builds K_1..K_n and Z_1..Z_n in degree nu. With check=true (the default)
/// verifies Z_{p-1} * Z_p = 0 for every p, throwing ComplexPropertyViolated
/// otherwise.
inline ComplexSlice assemble_slice(const std::vector<ParamPoly>& f, int nu, bool check = true) {
    if (f.size() < 3) throw InvalidInput("need at least three forms");
    ComplexSlice s;
    s.n = f.front().nvars();
    if (static_cast<int>(f.size()) != s.n + 1)
        throw InvalidInput("need exactly n+1 forms in n parameter variables");
    s.nu = nu;
    int d = -1;
    bool all_zero = true;
    for (const auto& fi : f) {
        if (!fi.is_zero()) {
            all_zero = false;
            d = fi.degree();
        }
    }
    if (all_zero) throw InvalidInput("all forms are zero");
    s.d = d;
    s.ambient_dim = nu >= 0 ? static_cast<int>(homogeneous_dim(s.n, nu)) : 0;

    if (nu < 0) {  // empty slice
        for (int p = 1; p <= s.n; ++p) {
            s.kernels.emplace_back(0, 0);
            s.maps.emplace_back(0, 0, s.n + 1);
        }
        return s;
    }

    for (int p = 1; p <= s.n; ++p) s.kernels.push_back(syzygy_basis(f, p, nu));
    s.maps.push_back(build_v1(s.kernels[0], s.n, nu));
    for (int p = 2; p <= s.n; ++p)
        s.maps.push_back(build_vp(s.kernels[p - 1], s.kernels[p - 2], p, s.n, nu));

    if (check) {
        for (int p = 2; p <= s.n; ++p) {
            if (s.z(p).cols() == 0 || s.z(p - 1).cols() == 0) continue;
            for (const TargetPoly& e : linform_product(s.z(p - 1), s.z(p)))
                if (!e.is_zero())
                    throw ComplexPropertyViolated("Z_" + std::to_string(p - 1) + " * Z_" +
                                                  std::to_string(p) + " is nonzero");
        }
    }
    return s;
}

}  // namespace apc
