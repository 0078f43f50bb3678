#pragma once

/**
 * Sparse multivariate polynomials over the rationals, in two separate
 * variable blocks: parameter variables (s, t, u, ... printed for X1, X2, ...)
 * and target variables (x, y, z, w, ... printed for T1, T2, ...). The two
 * blocks are distinct C++ types so parameter and target polynomials cannot
 * be mixed by accident.
 *
 * Terms are kept sorted in graded-lex descending order (X1 > X2 > ...,
 * T1 > T2 > ...); that order fixes leading terms, normalization and all
 * monomial-basis indexing downstream. No zero coefficient is ever stored.
 */

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <apc/errors.hpp>
#include <apc/monomial.hpp>
#include <apc/rational.hpp>

namespace apc {

struct ParamVars {
    static std::string name(int i) {
        static const char* base[] = {"s", "t", "u", "v"};
        if (i < 4) return base[i];
        return "X" + std::to_string(i + 1);
    }
    static constexpr char indexed_letter = 'X';
};

struct TargetVars {
    static std::string name(int i) {
        static const char* base[] = {"x", "y", "z", "w"};
        if (i < 4) return base[i];
        return "T" + std::to_string(i + 1);
    }
    static constexpr char indexed_letter = 'T';
};

template <class Vars>
class Poly {
public:
    using Term = std::pair<Monomial, Rational>;

    Poly() : nvars_(1) {}
    explicit Poly(int nvars) : nvars_(nvars) {
        if (nvars < 1 || nvars > kMaxVars) throw InvalidInput("variable count out of range");
    }

    static Poly zero(int nvars) { return Poly(nvars); }

    static Poly constant(int nvars, Rational c) {
        Poly p(nvars);
        if (c != 0) p.terms_.emplace_back(mono_one(), std::move(c));
        return p;
    }

    static Poly monomial(int nvars, Monomial m, Rational c) {
        Poly p(nvars);
        if (c != 0) p.terms_.emplace_back(m, std::move(c));
        return p;
    }

    static Poly variable(int nvars, int i) {
        if (i < 0 || i >= nvars) throw InvalidInput("variable index out of range");
        return monomial(nvars, mono_variable(i), 1);
    }

    /// Builds from unsorted (monomial, coefficient) pairs, combining duplicates.
    static Poly from_terms(int nvars, std::vector<Term> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const Term& a, const Term& b) { return a.first > b.first; });
        Poly p(nvars);
        for (auto& [m, c] : raw) {
            if (!p.terms_.empty() && p.terms_.back().first == m)
                p.terms_.back().second += c;
            else
                p.terms_.emplace_back(m, std::move(c));
            if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
        }
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = mono_degree(terms_.front().first);
        for (const auto& [m, c] : terms_)
            if (mono_degree(m) != d) return false;
        return true;
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw InvalidInput("leading term of zero polynomial");
        return terms_.front();
    }

    Rational coeff(Monomial m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, Monomial key) { return t.first > key; });
        if (it != terms_.end() && it->first == m) return it->second;
        return Rational(0);
    }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) { return add_scaled(o, Rational(1), mono_one()); }
    Poly& operator-=(const Poly& o) { return add_scaled(o, Rational(-1), mono_one()); }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [m, k] : terms_) k *= c;
        }
        return *this;
    }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
    Poly& operator*=(const Poly& o) { return *this = mul(*this, o); }

    /// Adds c * m * o to this polynomial (sorted merge).
    Poly& add_scaled(const Poly& o, const Rational& c, Monomial m) {
        check_same_vars(o);
        if (o.is_zero() || c == 0) return *this;
        std::vector<Term> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        auto ia = terms_.begin();
        auto ib = o.terms_.begin();
        while (ia != terms_.end() || ib != o.terms_.end()) {
            if (ib == o.terms_.end()) {
                merged.emplace_back(std::move(*ia++));
                continue;
            }
            const Monomial mb = mono_mul(ib->first, m);
            if (ia == terms_.end() || ia->first < mb) {
                merged.emplace_back(mb, c * ib->second);
                ++ib;
            } else if (ia->first > mb) {
                merged.emplace_back(std::move(*ia++));
            } else {
                Rational sum = ia->second + c * ib->second;
                if (sum != 0) merged.emplace_back(ia->first, std::move(sum));
                ++ia;
                ++ib;
            }
        }
        terms_ = std::move(merged);
        return *this;
    }

    static Poly mul(const Poly& a, const Poly& b) {
        a.check_same_vars(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.nvars_);
        if (a.is_homogeneous() && b.is_homogeneous()) return mul_homogeneous(a, b);
        Poly acc(a.nvars_);
        for (const auto& [m, c] : a.terms_) acc.add_scaled(b, c, m);
        return acc;
    }

    Poly pow(unsigned e) const {
        Poly r = constant(nvars_, 1);
        Poly base(*this);
        while (e) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            std::string vars;
            for (int i = 0; i < nvars_; ++i) {
                const int e = mono_exponent(m, i);
                if (e == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += Vars::name(i);
                if (e > 1) vars += "^" + std::to_string(e);
            }
            if (vars.empty()) {
                out += rational_to_string(a);
            } else {
                if (a != 1) out += rational_to_string(a) + "*";
                out += vars;
            }
        }
        return out;
    }

private:
    void check_same_vars(const Poly& o) const {
        if (nvars_ != o.nvars_) throw InvalidInput("mixed variable counts");
    }

    // Both factors homogeneous: accumulate into a dense coefficient table
    // indexed by graded-lex rank of the product degree. Output stays sorted
    // because rank order is exactly the term order.
    static Poly mul_homogeneous(const Poly& a, const Poly& b) {
        const int nv = a.nvars_;
        const int dc = mono_degree(a.terms_.front().first) + mono_degree(b.terms_.front().first);
        const long long dim = homogeneous_dim(nv, dc);
        std::vector<Rational> dense(static_cast<std::size_t>(dim));
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                dense[mono_rank(mono_mul(ma, mb), nv)] += ca * cb;
        Poly r(nv);
        for (long long i = 0; i < dim; ++i)
            if (dense[i] != 0)
                r.terms_.emplace_back(mono_unrank(i, nv, dc), std::move(dense[i]));
        return r;
    }

    int nvars_;
    std::vector<Term> terms_;
};

using ParamPoly = Poly<ParamVars>;
using TargetPoly = Poly<TargetVars>;

/// Exact division: returns q with q * den == num; throws InexactDivision otherwise.
template <class Vars>
Poly<Vars> divexact(const Poly<Vars>& num, const Poly<Vars>& den) {
    if (den.is_zero()) throw InvalidInput("division by zero polynomial");
    if (num.nvars() != den.nvars()) throw InvalidInput("mixed variable counts");
    Poly<Vars> q(num.nvars());
    Poly<Vars> r(num);
    const auto& [dm, dc] = den.leading_term();
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.leading_term();
        if (!mono_divides(dm, rm)) throw InexactDivision("polynomial division is not exact");
        const Monomial qm = mono_div(rm, dm);
        Rational qc = rc / dc;
        q += Poly<Vars>::monomial(num.nvars(), qm, qc);
        r.add_scaled(den, -qc, qm);
    }
    return q;
}

/// Scales a nonzero polynomial so its coefficients are coprime integers and
/// the leading coefficient is positive: the canonical representative modulo
/// scalars.
template <class Vars>
Poly<Vars> normalize(const Poly<Vars>& p) {
    if (p.is_zero()) throw InvalidInput("normalize of zero polynomial");
    Integer den = 1;
    for (const auto& [m, c] : p.terms()) den = lcm(den, c.get_den());
    Integer g = 0;
    for (const auto& [m, c] : p.terms()) {
        Integer scaled = c.get_num() * (den / c.get_den());
        g = gcd(g, scaled);
    }
    Rational unit(g, den);
    unit.canonicalize();
    if (p.leading_term().second < 0) unit = -unit;
    Poly<Vars> r(p);
    r *= Rational(1) / unit;
    return r;
}

/// Equality modulo a nonzero scalar.
template <class Vars>
bool equal_up_to_unit(const Poly<Vars>& a, const Poly<Vars>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return normalize(a) == normalize(b);
}

inline Rational evaluate(const TargetPoly& p, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) != p.nvars())
        throw InvalidInput("evaluation point has wrong length");
    Rational sum(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (int i = 0; i < p.nvars(); ++i)
            for (int e = mono_exponent(m, i); e > 0; --e) t *= point[i];
        sum += t;
    }
    return sum;
}

namespace detail {

// Generalized Horner over the sorted term list: terms sharing the exponent of
// the current variable form contiguous runs, so each variable level costs one
// multiplication per run instead of one per term.
template <class Vars>
ParamPoly substitute_recursive(std::span<const typename Poly<Vars>::Term> terms, int var,
                               int pvars, int tvars, const std::vector<ParamPoly>& f) {
    ParamPoly acc(pvars);
    if (terms.empty()) return acc;
    if (var == tvars) {
        Rational c(0);
        for (const auto& [m, k] : terms) c += k;
        return ParamPoly::constant(pvars, c);
    }
    int prev_exp = -1;
    std::size_t i = 0;
    while (i < terms.size()) {
        const int e = mono_exponent(terms[i].first, var);
        std::size_t j = i;
        while (j < terms.size() && mono_exponent(terms[j].first, var) == e) ++j;
        const ParamPoly inner =
            substitute_recursive<Vars>(terms.subspan(i, j - i), var + 1, pvars, tvars, f);
        if (prev_exp < 0)
            acc = inner;
        else
            acc = acc * f[var].pow(static_cast<unsigned>(prev_exp - e)) + inner;
        prev_exp = e;
        i = j;
    }
    if (prev_exp > 0) acc *= f[var].pow(static_cast<unsigned>(prev_exp));
    return acc;
}

}  // namespace detail

/// p(f_1, ..., f_k): expands a target polynomial along a parameterization.
/// All f_i must be homogeneous of one common degree.
inline ParamPoly substitute_targets(const TargetPoly& p, const std::vector<ParamPoly>& f) {
    if (static_cast<int>(f.size()) != p.nvars())
        throw InvalidInput("substitution needs one polynomial per target variable");
    if (f.empty()) throw InvalidInput("empty substitution list");
    const int nv = f.front().nvars();
    int d = -1;
    for (const auto& fi : f) {
        if (fi.nvars() != nv) throw InvalidInput("mixed variable counts in substitution");
        if (!fi.is_homogeneous()) throw InvalidInput("substitution requires homogeneous forms");
        if (!fi.is_zero()) {
            if (d == -1) d = fi.degree();
            if (fi.degree() != d) throw InvalidInput("mixed degrees in substitution");
        }
    }
    // order by the exponent bytes alone (degree byte shifted away) so every
    // recursion level sees descending exponent runs, homogeneous or not
    std::vector<TargetPoly::Term> sorted(p.terms());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return (a.first << 8) > (b.first << 8);
    });
    return detail::substitute_recursive<TargetVars>(std::span<const TargetPoly::Term>(sorted),
                                                    0, nv, p.nvars(), f);
}

// ---- gcd of binary forms ----

namespace detail {

// dense univariate gcd over Q, monic result, degree -1 encodes zero
inline std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    auto trim = [](std::vector<Rational>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            const Rational q = a.back() / b.back();
            const std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace detail

/// gcd of homogeneous binary forms: strip the common power of X2, run the
/// univariate Euclidean algorithm at X2 = 1, re-homogenize. The result is
/// normalized (coprime integer coefficients, positive leading coefficient).
inline ParamPoly binary_form_gcd(const std::vector<ParamPoly>& polys) {
    if (polys.empty()) throw InvalidInput("gcd of empty list");
    for (const auto& p : polys) {
        if (p.nvars() != 2) throw InvalidInput("binary_form_gcd requires 2 variables");
        if (!p.is_homogeneous()) throw InvalidInput("binary_form_gcd requires homogeneous forms");
    }
    // track min power of t across nonzero inputs, and fold univariate gcds
    bool any = false;
    int tpow = 0;
    std::vector<Rational> g;  // univariate gcd so far, in s at t=1
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        int tmin = kMaxDegree;
        for (const auto& [m, c] : p.terms()) tmin = std::min(tmin, mono_exponent(m, 1));
        std::vector<Rational> uni(static_cast<std::size_t>(p.degree() - tmin) + 1);
        for (const auto& [m, c] : p.terms()) uni[mono_exponent(m, 0)] = c;
        if (!any) {
            any = true;
            tpow = tmin;
            g = detail::univariate_gcd(uni, {});
        } else {
            tpow = std::min(tpow, tmin);
            g = detail::univariate_gcd(std::move(g), std::move(uni));
        }
    }
    if (!any) throw InvalidInput("gcd of all-zero list");
    const int gdeg = static_cast<int>(g.size()) - 1;
    std::vector<ParamPoly::Term> terms;
    for (int i = 0; i <= gdeg; ++i) {
        if (g[i] == 0) continue;
        const int exps[2] = {i, gdeg - i + tpow};
        terms.emplace_back(mono_from_exponents(exps), g[i]);
    }
    return normalize(ParamPoly::from_terms(2, std::move(terms)));
}

}  // namespace apc
