#pragma once

/**
 * Fraction-free Bareiss over Z[T] for matrices of linear forms: the hot path
 * of the Delta cascade. Rows are cleared to integer coefficients first (the
 * scale is divided back out at the end), so all intermediate entries are
 * integer minors and every division is exact over Z[T].
 *
 * The Bareiss update t = (a*piv - mult*b) / prev runs fused in one dense
 * coefficient buffer indexed by graded-lex rank: both products accumulate
 * with addmul/submul, then the quotient is read off in place, leading rank
 * first. Buffers are reused across calls.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include <apc/monomial.hpp>
#include <apc/polynomial.hpp>
#include <apc/rational.hpp>

namespace apc {

namespace detail {

// homogeneous polynomial with integer coefficients; terms sorted descending
struct ZPoly {
    int deg = -1;  // -1 encodes zero
    std::vector<std::pair<Monomial, Integer>> terms;

    bool is_zero() const { return terms.empty(); }
    std::size_t term_count() const { return terms.size(); }
};

struct DenseScratch {
    std::vector<Integer> buf;
    std::vector<unsigned char> mark;

    void ensure(std::size_t dim) {
        if (buf.size() < dim) {
            buf.resize(dim);
            mark.resize(dim);
        }
    }
};

inline DenseScratch& dense_scratch() {
    thread_local DenseScratch s;
    return s;
}

// acc += sign * a * b over the dense buffer
inline void accumulate_product(DenseScratch& s, const ZPoly& a, const ZPoly& b, int sign,
                               int nvars) {
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            const long long r = mono_rank(ma + mb, nvars);
            s.mark[r] = 1;
            if (sign > 0)
                mpz_addmul(s.buf[r].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            else
                mpz_submul(s.buf[r].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
}

/// (a*piv - mult*b) / prev, all homogeneous integer polynomials; prev with
/// deg <= 0 means a constant divisor (1 before the first elimination step).
inline ZPoly bareiss_update(const ZPoly& a, const ZPoly& piv, const ZPoly& mult,
                            const ZPoly& b, const ZPoly& prev, int nvars) {
    const bool first = !a.is_zero() && !piv.is_zero();
    const bool second = !mult.is_zero() && !b.is_zero();
    ZPoly out;
    if (!first && !second) return out;
    const int dc = first ? a.deg + piv.deg : mult.deg + b.deg;
    const long long dim = homogeneous_dim(nvars, dc);
    DenseScratch& s = dense_scratch();
    s.ensure(static_cast<std::size_t>(dim));
    if (first) accumulate_product(s, a, piv, +1, nvars);
    if (second) accumulate_product(s, mult, b, -1, nvars);

    const bool constant_prev = prev.is_zero() || prev.deg == 0;
    const Integer* plc = prev.is_zero() ? nullptr : &prev.terms.front().second;
    const Monomial plm = prev.is_zero() ? mono_one() : prev.terms.front().first;
    out.deg = constant_prev ? dc : dc - prev.deg;
    Integer q, rem;
    for (long long r = 0; r < dim; ++r) {
        if (!s.mark[r]) continue;
        s.mark[r] = 0;
        Integer& c = s.buf[r];
        if (c == 0) continue;
        if (constant_prev) {
            if (plc && *plc != 1) {
                mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), plc->get_mpz_t());
                if (rem != 0) throw InexactDivision("Bareiss division is not exact");
                out.terms.emplace_back(mono_unrank(r, nvars, dc), q);
            } else {
                out.terms.emplace_back(mono_unrank(r, nvars, dc), c);
            }
            c = 0;
            continue;
        }
        const Monomial m = mono_unrank(r, nvars, dc);
        if (!mono_divides(plm, m)) throw InexactDivision("Bareiss division is not exact");
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), plc->get_mpz_t());
        if (rem != 0) throw InexactDivision("Bareiss division is not exact");
        c = 0;
        const Monomial qm = mono_div(m, plm);
        // subtract q * prev from the remainder (tail terms only)
        for (std::size_t k = 1; k < prev.terms.size(); ++k) {
            const long long rr = mono_rank(qm + prev.terms[k].first, nvars);
            s.mark[rr] = 1;
            mpz_submul(s.buf[rr].get_mpz_t(), q.get_mpz_t(), prev.terms[k].second.get_mpz_t());
        }
        out.terms.emplace_back(qm, q);
    }
    if (out.terms.empty()) out.deg = -1;
    return out;
}

inline TargetPoly zpoly_to_target(const ZPoly& p, int nvars, const Rational& factor) {
    std::vector<TargetPoly::Term> terms;
    terms.reserve(p.terms.size());
    for (const auto& [m, c] : p.terms) terms.emplace_back(m, Rational(c) * factor);
    return TargetPoly::from_terms(nvars, std::move(terms));
}

}  // namespace detail

}  // namespace apc
