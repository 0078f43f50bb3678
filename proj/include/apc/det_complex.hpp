#pragma once

/**
 * Determinant of a generically exact slice via the Delta cascade: pick
 * independent columns of Z_1 to form the square Delta_1, drop the matching
 * rows of Z_2, select again, and so on until the remaining block is square.
 * The determinant of the complex is then the alternating quotient
 * det(Delta_1) det(Delta_3) ... / det(Delta_2) det(Delta_4) ...
 */

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <apc/approx_complex.hpp>
#include <apc/linform.hpp>
#include <apc/polynomial.hpp>
#include <apc/random.hpp>

namespace apc {

struct ExactnessReport {
    bool exact = false;
    std::vector<int> generic_ranks;              // one per nonempty map
    std::vector<std::array<int, 2>> shapes;      // all map shapes
    std::string detail;                          // human-readable failure cause
};

/// Evaluates the slice at seeded random points and checks that the scalar
/// ranks telescope: rank(Z_1) = dim A_nu and rank(Z_p) + rank(Z_{p+1}) =
/// cols(Z_p) for every p. This is exactly generic exactness of the slice
/// over the fraction field of the target variables.
inline ExactnessReport check_generic_exactness(const ComplexSlice& s, std::uint64_t seed) {
    ExactnessReport rep;
    rep.shapes = s.shapes();
    const int len = s.length();
    // columns must vanish beyond the last nonzero map by construction
    if (len == 0) {
        rep.exact = s.ambient_dim == 0;
        if (!rep.exact)
            rep.detail = "no syzygies in degree " + std::to_string(s.nu) + " but dim A_nu = " +
                         std::to_string(s.ambient_dim);
        else
            rep.detail = "empty slice";
        return rep;
    }
    for (int p = 1; p <= len; ++p)
        rep.generic_ranks.push_back(generic_rank(s.z(p), derive_seed(seed, 29, p)));

    if (rep.generic_ranks[0] != s.ambient_dim) {
        rep.detail = "v1 is not generically surjective: Z1 provides only " +
                     std::to_string(rep.generic_ranks[0]) + " independent columns where " +
                     std::to_string(s.ambient_dim) + " are needed";
        return rep;
    }
    for (int p = 1; p <= len; ++p) {
        const int next = p < len ? rep.generic_ranks[p] : 0;
        if (rep.generic_ranks[p - 1] + next != s.z(p).cols()) {
            rep.detail = "rank telescope fails at Z" + std::to_string(p) + ": rank " +
                         std::to_string(rep.generic_ranks[p - 1]) + " + rank " +
                         std::to_string(next) + " != " + std::to_string(s.z(p).cols()) +
                         " columns";
            return rep;
        }
    }
    rep.exact = true;
    rep.detail = "generically exact";
    return rep;
}

struct Delta {
    std::vector<int> selected_cols;  // column indices into Z_p (stage p)
    LinFormMatrix mat;
    TargetPoly det;
};

struct DetComplexResult {
    std::vector<Delta> deltas;
    TargetPoly quotient;  // det(Delta_1) det(Delta_3) ... / det(Delta_2) ...
    int degree = 0;       // alternating sum of the Delta sizes
    ExactnessReport exactness;
};

/// Runs the cascade. Throws NotGenericallyExact when the rank conditions
/// fail (nu too small, positive-dimensional base locus, a base point needing
/// n+1 local generators, or a non generically finite map), RankDeficient if
/// column selection keeps failing, and InexactDivision only on an internal
/// inconsistency.
inline DetComplexResult cascade(const ComplexSlice& s, std::uint64_t seed) {
    DetComplexResult res;
    res.exactness = check_generic_exactness(s, seed);
    if (!res.exactness.exact)
        throw NotGenericallyExact("slice nu=" + std::to_string(s.nu) +
                                  " is not generically exact: " + res.exactness.detail);
    const int tvars = s.n + 1;
    const int len = s.length();
    std::vector<int> prev_selection;
    for (int stage = 1; stage <= len; ++stage) {
        LinFormMatrix b = stage == 1 ? s.z(1) : s.z(stage).remove_rows(prev_selection);
        if (b.rows() == 0) break;
        Delta delta;
        if (b.rows() == b.cols()) {
            delta.selected_cols.resize(b.cols());
            for (int j = 0; j < b.cols(); ++j) delta.selected_cols[j] = j;
            delta.mat = std::move(b);
            delta.det = linform_determinant(delta.mat);
            if (delta.det.is_zero())
                throw NotGenericallyExact("square Delta" + std::to_string(stage) +
                                          " has zero determinant");
            res.deltas.push_back(std::move(delta));
            if (stage < len)
                throw NotGenericallyExact("Delta" + std::to_string(stage) +
                                          " is square but Z" + std::to_string(stage + 1) +
                                          " is nonzero");
            break;
        }
        // more columns than rows: select, retrying with fresh points if the
        // symbolic determinant happens to vanish for an unlucky selection
        const int k = b.rows();
        bool done = false;
        for (int attempt = 0; attempt < 5 && !done; ++attempt) {
            delta.selected_cols =
                select_independent_columns(b, k, derive_seed(seed, stage, attempt));
            delta.mat = b.select_columns(delta.selected_cols);
            delta.det = linform_determinant(delta.mat);
            done = !delta.det.is_zero();
        }
        if (!done)
            throw NotGenericallyExact("no nonsingular Delta" + std::to_string(stage) +
                                      " found after retries");
        prev_selection = delta.selected_cols;
        const int remaining = b.cols() - k;
        res.deltas.push_back(std::move(delta));
        if (stage == len) {
            if (remaining != 0)
                throw NotGenericallyExact("cascade ends with " + std::to_string(remaining) +
                                          " unmatched columns");
            break;
        }
    }
    // alternating quotient, computed as one exact division
    TargetPoly odd = TargetPoly::constant(tvars, 1);
    TargetPoly even = TargetPoly::constant(tvars, 1);
    res.degree = 0;
    for (std::size_t i = 0; i < res.deltas.size(); ++i) {
        if (i % 2 == 0) {
            odd *= res.deltas[i].det;
            res.degree += res.deltas[i].mat.rows();
        } else {
            even *= res.deltas[i].det;
            res.degree -= res.deltas[i].mat.rows();
        }
    }
    res.quotient = divexact(odd, even);
    return res;
}

struct DivisibilityReport {
    bool divisible = false;
    TargetPoly cofactor;  // Q with det(Delta_2) = Q * det(Delta_3)
};

/// Checks det(Delta_2) = Q * det(Delta_3) and reports Q. Vacuously true when
/// fewer than three Delta blocks exist.
inline DivisibilityReport divisibility_check(const DetComplexResult& res) {
    DivisibilityReport rep;
    if (res.deltas.size() < 2) {
        rep.divisible = true;
        rep.cofactor = TargetPoly::constant(res.quotient.nvars(), 1);
        return rep;
    }
    if (res.deltas.size() < 3) {
        rep.divisible = true;
        rep.cofactor = res.deltas[1].det;
        return rep;
    }
    try {
        rep.cofactor = divexact(res.deltas[1].det, res.deltas[2].det);
        rep.divisible = true;
    } catch (const InexactDivision&) {
        rep.divisible = false;
    }
    return rep;
}

}  // namespace apc
