#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <apc/errors.hpp>

namespace apc {

// A monomial in up to 7 variables, packed into one word: the top byte holds
// the total degree, the following bytes the exponents of X1, X2, ...
// Unsigned comparison of the packed words is exactly graded-lex descending
// with X1 > X2 > ..., the term order fixed for the whole project.
using Monomial = std::uint64_t;

inline constexpr int kMaxVars = 7;
inline constexpr int kMaxDegree = 255;

inline int mono_degree(Monomial m) { return static_cast<int>(m >> 56); }

inline int mono_exponent(Monomial m, int var) {
    return static_cast<int>((m >> (48 - 8 * var)) & 0xffu);
}

inline Monomial mono_one() { return 0; }

inline Monomial mono_from_exponents(std::span<const int> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVars))
        throw InvalidInput("too many variables (max 7)");
    int deg = 0;
    Monomial m = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw InvalidInput("negative exponent");
        deg += exps[i];
        m |= static_cast<Monomial>(exps[i]) << (48 - 8 * static_cast<int>(i));
    }
    if (deg > kMaxDegree) throw InvalidInput("monomial degree exceeds 255");
    return m | (static_cast<Monomial>(deg) << 56);
}

inline Monomial mono_variable(int var) {
    int exps[kMaxVars] = {0};
    exps[var] = 1;
    return mono_from_exponents(std::span<const int>(exps, var + 1));
}

inline std::vector<int> mono_exponents(Monomial m, int nvars) {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = mono_exponent(m, i);
    return e;
}

// Per-byte addition is carry-free: every exponent is bounded by the degree,
// and the degree check keeps all bytes below 256.
inline Monomial mono_mul(Monomial a, Monomial b) {
    if (mono_degree(a) + mono_degree(b) > kMaxDegree)
        throw InvalidInput("monomial degree overflow in product");
    return a + b;
}

inline bool mono_divides(Monomial a, Monomial b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (mono_exponent(a, i) > mono_exponent(b, i)) return false;
    return true;
}

/// b / a; caller must ensure divisibility.
inline Monomial mono_div(Monomial b, Monomial a) { return b - a; }

// ---- combinatorics used for basis indexing and dense multiplication ----

namespace detail {

// Pascal triangle cache: binomials up to n = 2*kMaxDegree + kMaxVars.
struct BinomialTable {
    static constexpr int kRows = 2 * kMaxDegree + kMaxVars + 2;
    long long c[kRows][kMaxVars + 2];
    BinomialTable() {
        for (int n = 0; n < kRows; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= kMaxVars + 1; ++k)
                c[n][k] = (k > n) ? 0 : (n == 0 ? 0 : c[n - 1][k - 1] + c[n - 1][k]);
        }
    }
};

inline const BinomialTable& binomial_table() {
    static const BinomialTable t;
    return t;
}

}  // namespace detail

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n < detail::BinomialTable::kRows && k <= kMaxVars + 1)
        return detail::binomial_table().c[n][k];
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// Number of monomials of total degree `deg` in `nvars` variables.
inline long long homogeneous_dim(int nvars, int deg) {
    if (deg < 0) return 0;
    return binomial(deg + nvars - 1, nvars - 1);
}

/// Position of `m` among all degree-deg(m) monomials in graded-lex descending
/// order: for each variable, the block of monomials with a larger exponent
/// contributes one binomial (hockey-stick sum).
inline long long mono_rank(Monomial m, int nvars) {
    const auto& bt = detail::binomial_table();
    long long rank = 0;
    int rem = mono_degree(m);
    for (int i = 0; i + 1 < nvars; ++i) {
        const int e = mono_exponent(m, i);
        const int k = nvars - i - 1;
        if (rem - e - 1 >= 0) rank += bt.c[rem - e - 1 + k][k];
        rem -= e;
    }
    return rank;
}

/// Inverse of mono_rank for fixed (nvars, deg).
inline Monomial mono_unrank(long long rank, int nvars, int deg) {
    int exps[kMaxVars] = {0};
    int rem = deg;
    for (int i = 0; i + 1 < nvars; ++i) {
        int e = rem;
        while (e >= 0) {
            const long long block = homogeneous_dim(nvars - i - 1, rem - e);
            if (rank < block) break;
            rank -= block;
            --e;
        }
        exps[i] = e;
        rem -= e;
    }
    exps[nvars - 1] = rem;
    return mono_from_exponents(std::span<const int>(exps, nvars));
}

}  // namespace apc
