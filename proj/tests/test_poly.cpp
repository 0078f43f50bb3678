#include <catch2/catch_amalgamated.hpp>

#include <apc/parse.hpp>
#include <apc/polynomial.hpp>
#include <apc/random.hpp>

using namespace apc;

namespace {

ParamPoly pp(const std::string& text, int nvars) { return parse_param_poly(text, nvars); }
TargetPoly tp(const std::string& text, int nvars) { return parse_target_poly(text, nvars); }

ParamPoly random_param_poly(SeededRng& rng, int nvars, int max_deg) {
    ParamPoly p(nvars);
    const int terms = 1 + static_cast<int>(rng.below(5));
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps(nvars);
        for (int i = 0; i < nvars; ++i) exps[i] = static_cast<int>(rng.below(max_deg + 1));
        const long num = rng.below(19) - 9;
        const long den = 1 + rng.below(3);
        p += ParamPoly::monomial(nvars, mono_from_exponents(exps), make_rational(num, den));
    }
    return p;
}

TargetPoly random_target_poly(SeededRng& rng, int nvars, int max_deg) {
    TargetPoly p(nvars);
    const int terms = 1 + static_cast<int>(rng.below(5));
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps(nvars);
        for (int i = 0; i < nvars; ++i) exps[i] = static_cast<int>(rng.below(max_deg + 1));
        const long num = rng.below(19) - 9;
        p += TargetPoly::monomial(nvars, mono_from_exponents(exps), make_rational(num));
    }
    return p;
}

}  // namespace

TEST_CASE("monomial packing and order") {
    const std::vector<int> a = {2, 0, 1};
    const Monomial m = mono_from_exponents(a);
    CHECK(mono_degree(m) == 3);
    CHECK(mono_exponent(m, 0) == 2);
    CHECK(mono_exponent(m, 2) == 1);
    // graded-lex: s^2*u > s*t^2 (same degree, first exponent decides)
    const std::vector<int> b = {1, 2, 0};
    CHECK(m > mono_from_exponents(b));
    // degree dominates
    const std::vector<int> c = {0, 0, 4};
    CHECK(mono_from_exponents(c) > m);
}

TEST_CASE("monomial rank/unrank round-trip") {
    for (int nv : {2, 3, 4}) {
        for (int deg : {0, 1, 3, 5}) {
            const long long dim = homogeneous_dim(nv, deg);
            Monomial prev = 0;
            for (long long r = 0; r < dim; ++r) {
                const Monomial m = mono_unrank(r, nv, deg);
                CHECK(mono_rank(m, nv) == r);
                if (r > 0) CHECK(m < prev);  // descending enumeration
                prev = m;
            }
        }
    }
}

TEST_CASE("product of parameter polynomials") {
    CHECK(pp("s^2", 2) * pp("t", 2) == pp("s^2*t", 2));
    CHECK(pp("s+t", 2) * pp("s-t", 2) == pp("s^2-t^2", 2));
    CHECK(pp("s^2*t", 3) * pp("u", 3) == pp("s^2*t*u", 3));
    CHECK((pp("s^2*t", 3) * pp("u", 3)).degree() == 4);
}

TEST_CASE("ring axioms on random operands") {
    SeededRng rng(2024);
    for (int i = 0; i < 30; ++i) {
        const ParamPoly a = random_param_poly(rng, 3, 3);
        const ParamPoly b = random_param_poly(rng, 3, 3);
        const ParamPoly c = random_param_poly(rng, 3, 3);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == ParamPoly::zero(3));
    }
}

TEST_CASE("divexact") {
    SECTION("worked examples") {
        CHECK(divexact(tp("-x^2*z + x*y^2", 4), tp("-x", 4)) == tp("x*z - y^2", 4));
        const TargetPoly p = tp("x*z - y^2", 4);
        CHECK(divexact(p, p) == tp("1", 4));
        const TargetPoly q = tp("(x*z - y^2)*(x + w)", 4);
        CHECK(divexact(q, tp("x + w", 4)) == p);
    }
    SECTION("inexact division throws") {
        CHECK_THROWS_AS(divexact(tp("x^2 + y", 4), tp("z", 4)), InexactDivision);
        CHECK_THROWS_AS(divexact(tp("x^2+1", 4), tp("x+1", 4)), InexactDivision);
        CHECK_THROWS_AS(divexact(tp("x", 4), tp("0", 4)), InvalidInput);
    }
    SECTION("round-trip on random operands") {
        SeededRng rng(99);
        for (int i = 0; i < 25; ++i) {
            const TargetPoly a = random_target_poly(rng, 4, 3);
            TargetPoly b = random_target_poly(rng, 4, 3);
            if (b.is_zero()) b = tp("x", 4);
            CHECK(divexact(a * b, b) == a);
        }
    }
}

TEST_CASE("normalize") {
    CHECK(normalize(tp("-2*x*z + 2*y^2", 4)) == tp("x*z - y^2", 4));
    CHECK(normalize(tp("-x*z + y^2", 4)) == tp("x*z - y^2", 4));
    CHECK(normalize(tp("1/2*x - 1/3*y", 4)) == tp("3*x - 2*y", 4));
    CHECK_THROWS_AS(normalize(tp("0", 4)), InvalidInput);
    // already canonical: untouched
    const char* eq331 =
        "x^6*z^3 + 3*x^5*y^2*z^2 + 3*x^4*y^4*z + 3*x^4*y*z^4 + x^3*y^6 + 6*x^3*y^3*z^3 "
        "+ 3*x^2*y^5*z^2 + 3*x^2*y^2*z^5 - x^2*y^2*z^2*w^3 + 3*x*y^4*z^4 + y^3*z^6";
    CHECK(normalize(tp(eq331, 4)) == tp(eq331, 4));
}

TEST_CASE("substitute_targets") {
    SECTION("worked examples") {
        const std::vector<ParamPoly> conic = {pp("s^2", 2), pp("s*t", 2), pp("t^2", 2)};
        CHECK(substitute_targets(tp("x*z - y^2", 3), conic).is_zero());
        const std::vector<ParamPoly> f333 = {pp("s*u^2", 3), pp("t^2*(s+u)", 3),
                                             pp("s*t*(s+u)", 3), pp("t*u*(s+u)", 3)};
        CHECK(substitute_targets(tp("x*y*z + x*y*w - z*w^2", 4), f333).is_zero());
        CHECK(substitute_targets(tp("x", 3), conic) == pp("s^2", 2));
    }
    SECTION("degree-9 equation vanishes on its parameterization") {
        const std::vector<ParamPoly> f331 = {pp("s^2*t", 3), pp("t^2*u", 3), pp("s*u^2", 3),
                                             pp("s^3 + t^3 + u^3", 3)};
        const TargetPoly eq = tp(
            "x^6*z^3 + 3*x^5*y^2*z^2 + 3*x^4*y^4*z + 3*x^4*y*z^4 + x^3*y^6 + 6*x^3*y^3*z^3 "
            "+ 3*x^2*y^5*z^2 + 3*x^2*y^2*z^5 - x^2*y^2*z^2*w^3 + 3*x*y^4*z^4 + y^3*z^6",
            4);
        CHECK(substitute_targets(eq, f331).is_zero());
    }
    SECTION("ring homomorphism on random inputs") {
        SeededRng rng(7);
        const std::vector<ParamPoly> f = {pp("s^2", 2), pp("s*t", 2), pp("t^2", 2)};
        for (int i = 0; i < 20; ++i) {
            const TargetPoly a = random_target_poly(rng, 3, 2);
            const TargetPoly b = random_target_poly(rng, 3, 2);
            CHECK(substitute_targets(a * b, f) ==
                  substitute_targets(a, f) * substitute_targets(b, f));
            CHECK(substitute_targets(a + b, f) ==
                  substitute_targets(a, f) + substitute_targets(b, f));
        }
    }
    SECTION("mixed degrees rejected") {
        const std::vector<ParamPoly> bad = {pp("s", 2), pp("t^2", 2), pp("s*t", 2)};
        CHECK_THROWS_AS(substitute_targets(tp("x+y+z", 3), bad), InvalidInput);
    }
}

TEST_CASE("binary form gcd") {
    SECTION("worked examples") {
        CHECK(binary_form_gcd({pp("s^3", 2), pp("s^2*t", 2), pp("s*t^2", 2)}) == pp("s", 2));
        CHECK(binary_form_gcd({pp("s^2", 2), pp("s*t", 2), pp("t^2", 2)}) == pp("1", 2));
        CHECK(binary_form_gcd({pp("s^2*t", 2), pp("s*t^2", 2)}) == pp("s*t", 2));
    }
    SECTION("t-power handling") {
        CHECK(binary_form_gcd({pp("t^3", 2), pp("s*t^2", 2)}) == pp("t^2", 2));
        CHECK(binary_form_gcd({pp("s^2 - t^2", 2), pp("s^2 + 2*s*t + t^2", 2)}) ==
              pp("s + t", 2));
    }
    SECTION("gcd divides inputs, cofactors coprime") {
        SeededRng rng(5);
        for (int i = 0; i < 15; ++i) {
            // build forms with a known common factor
            const ParamPoly g = pp("s + " + std::to_string(1 + rng.below(5)) + "*t", 2);
            std::vector<ParamPoly> fs;
            for (int k = 0; k < 3; ++k) {
                ParamPoly h(2);
                const long a = rng.below(9) + 1;
                const long b = rng.below(9) - 4;
                h = pp(std::to_string(a) + "*s^2", 2) + pp(std::to_string(b) + "*s*t", 2) +
                    pp(std::to_string(1 + rng.below(7)) + "*t^2", 2);
                fs.push_back(g * h);
            }
            const ParamPoly delta = binary_form_gcd(fs);
            std::vector<ParamPoly> cofactors;
            for (const auto& fi : fs) cofactors.push_back(divexact(fi, delta));
            CHECK(binary_form_gcd(cofactors) == pp("1", 2));
            // delta divides every input: divexact must not throw
            for (const auto& fi : fs) CHECK_NOTHROW(divexact(fi, delta));
        }
    }
    SECTION("errors") {
        CHECK_THROWS_AS(binary_form_gcd({}), InvalidInput);
        CHECK_THROWS_AS(binary_form_gcd({pp("0", 2), pp("0", 2)}), InvalidInput);
    }
}

TEST_CASE("printing is stable and parseable") {
    const TargetPoly p = tp("x*z - y^2", 4);
    CHECK(p.str() == "x*z - y^2");
    CHECK(tp(p.str(), 4) == p);
    CHECK(tp("-1/2*x + 3*w", 4).str() == "-1/2*x + 3*w");
    SeededRng rng(12);
    for (int i = 0; i < 20; ++i) {
        const TargetPoly q = random_target_poly(rng, 4, 4);
        CHECK(tp(q.str(), 4) == q);
    }
}

TEST_CASE("rational helpers") {
    CHECK(rational_from_string("-4/6") == make_rational(-2, 3));
    CHECK(rational_to_string(make_rational(-2, 3)) == "-2/3");
    CHECK(rational_to_string(make_rational(5)) == "5");
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("abc"), ParseError);
}
