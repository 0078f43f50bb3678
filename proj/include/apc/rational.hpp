#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include <apc/errors.hpp>

namespace apc {

// The ground field: arbitrary-precision rationals. mpq_class keeps values
// canonical (gcd(|num|, den) = 1, den > 0, zero stored as 0/1) as long as
// every value entering the system is canonicalized, which the constructors
// below guarantee.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "123", "-4/6" (reduced on the fly). Throws ParseError on junk.
inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (text.empty() || mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw ParseError("invalid rational literal: '" + text + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw ParseError("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

/// "3", "-1/2": numerator and denominator as decimal strings, den omitted when 1.
inline std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Compares |a| and |b| without normalizing temporaries.
inline int cmpabs_rational(const Rational& a, const Rational& b) {
    Integer l = abs(a.get_num()) * b.get_den();
    Integer r = abs(b.get_num()) * a.get_den();
    return cmp(l, r);
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Least common multiple of the denominators of a coefficient range.
template <class It>
Integer denominator_lcm(It first, It last) {
    Integer l = 1;
    for (; first != last; ++first) l = lcm(l, first->get_den());
    return l;
}

}  // namespace apc
