#pragma once

/**
 * End-to-end implicitization: validate the parameterization, pick the slice
 * degree, assemble the slice, run the cascade, normalize the determinant and
 * verify it against the substitution oracle. The resulting determinant D is
 * P^beta times a possible extraneous factor G; splitting off G would need
 * polynomial factorization and is deliberately out of scope, so the report
 * carries degree bookkeeping instead.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <apc/approx_complex.hpp>
#include <apc/det_complex.hpp>
#include <apc/linform.hpp>
#include <apc/polynomial.hpp>

namespace apc {

/// A rational map P^{n-1} -> P^n given by n+1 forms of one degree d >= 1.
struct Parameterization {
    int n = 0;
    int d = 0;
    std::vector<ParamPoly> f;

    static Parameterization create(std::vector<ParamPoly> forms) {
        if (forms.size() < 3) throw InvalidInput("need at least three forms (n >= 2)");
        Parameterization p;
        p.n = forms.front().nvars();
        if (static_cast<int>(forms.size()) != p.n + 1)
            throw InvalidInput("need exactly n+1 forms in n parameter variables");
        p.d = -1;
        bool all_zero = true;
        for (const auto& fi : forms) {
            if (fi.nvars() != p.n) throw InvalidInput("mixed parameter variable counts");
            if (!fi.is_homogeneous()) throw InvalidInput("forms must be homogeneous");
            if (fi.is_zero()) continue;
            all_zero = false;
            if (p.d == -1) p.d = fi.degree();
            if (fi.degree() != p.d) throw InvalidInput("forms must share one degree");
        }
        if (all_zero) throw InvalidInput("all forms are zero");
        if (p.d < 1) throw InvalidInput("degree must be at least 1");
        p.f = std::move(forms);
        return p;
    }
};

/// True iff D(f_0, ..., f_n) = 0: the independent check that D vanishes on
/// the image of the parameterization.
inline bool verify_by_substitution(const TargetPoly& d, const Parameterization& p) {
    return substitute_targets(d, p.f).is_zero();
}

/// Point membership through the matrix representation: a point lies on the
/// hypersurface exactly when the rank of Z1 evaluated there drops below the
/// generic rank. Valid as a test for P^beta when the base locus is locally a
/// complete intersection; see ImplicitizationReport::membership_caveat.
inline bool membership_test(const LinFormMatrix& z1, std::span<const Rational> point,
                            int expected_rank) {
    bool all_zero = true;
    for (const auto& c : point)
        if (c != 0) all_zero = false;
    if (all_zero) throw InvalidInput("membership test at the zero point");
    return rank(z1.evaluate(point)) < expected_rank;
}

/// d^{n-1} - sum of base-point degrees: the degree of the determinant.
inline long long expected_degree(int n, int d, const std::vector<long long>& base_point_degrees) {
    long long pw = 1;
    for (int i = 1; i < n; ++i) pw *= d;
    long long sum = 0;
    for (long long dp : base_point_degrees) sum += dp;
    if (sum > pw) throw InvalidInput("base-point degrees exceed d^(n-1)");
    return pw - sum;
}

struct DegreeDrop {
    long long value = 0;            // d^{n-1} - sum of multiplicities = deg(P^beta)
    bool generically_finite = true; // false when the drop is zero
};

/// d^{n-1} - sum of algebraic multiplicities; zero flags a map that is not
/// generically finite onto its image.
inline DegreeDrop degree_drop(int n, int d, const std::vector<long long>& multiplicities) {
    long long pw = 1;
    for (int i = 1; i < n; ++i) pw *= d;
    long long sum = 0;
    for (long long ep : multiplicities) sum += ep;
    if (sum > pw) throw InvalidInput("multiplicities exceed d^(n-1)");
    return {pw - sum, pw != sum};
}

struct ImplicitizationReport {
    int nu_used = 0;
    std::vector<std::array<int, 2>> slice_shapes;  // Z_p shapes
    std::vector<int> delta_sizes;
    LinFormMatrix matrix_rep;   // Z_1: the compact representation of the hypersurface
    int generic_rank_z1 = 0;    // expected rank for membership tests
    TargetPoly determinant;     // normalized D = P^beta * G
    int degree = 0;
    bool verified = false;      // substitution oracle
    ParamPoly param_gcd;        // n = 2 only; constant 1 otherwise
    DetComplexResult cascade_result;
    std::vector<std::string> warnings;

    static constexpr const char* membership_caveat =
        "rank-drop membership agrees with D = 0; it identifies P^beta only when the base "
        "locus is locally a complete intersection";
};

/// Full pipeline. nu: explicit slice degree (wins over everything smaller
/// when indeg_sat is also given); indeg_sat: initial degree of the saturated
/// base-point ideal, used to lower the default bound; seed: drives all
/// evaluation points, never the result.
inline ImplicitizationReport implicitize(const Parameterization& p, std::optional<int> nu,
                                         std::optional<int> indeg_sat, std::uint64_t seed) {
    ImplicitizationReport rep;
    rep.param_gcd = ParamPoly::constant(p.n, 1);
    if (p.n == 2) {
        rep.param_gcd = binary_form_gcd(p.f);
        if (rep.param_gcd.degree() == p.d)
            throw DegenerateMap("gcd(f0,f1,f2) has degree d = " + std::to_string(p.d) +
                                ": the map does not define a curve");
        if (rep.param_gcd.degree() > 0)
            rep.warnings.push_back("common factor of degree " +
                                   std::to_string(rep.param_gcd.degree()) +
                                   " retained: delta = " + rep.param_gcd.str());
    }
    const int conservative = (p.n - 1) * (p.d - 1);
    if (indeg_sat) {
        const int bound = nu0(p.n, p.d, *indeg_sat);
        rep.nu_used = nu ? std::max(*nu, bound) : bound;
    } else {
        rep.nu_used = nu ? *nu : conservative;
    }
    if (rep.nu_used < conservative)
        rep.warnings.push_back("nu = " + std::to_string(rep.nu_used) +
                               " is below the no-base-point bound " +
                               std::to_string(conservative) +
                               "; valid only if base points lower indeg of the saturation");

    const ComplexSlice slice = assemble_slice(p.f, rep.nu_used, /*check=*/true);
    rep.slice_shapes = slice.shapes();
    rep.cascade_result = cascade(slice, seed);
    for (const auto& delta : rep.cascade_result.deltas)
        rep.delta_sizes.push_back(delta.mat.rows());
    rep.matrix_rep = slice.maps.front();
    rep.generic_rank_z1 = slice.ambient_dim;

    if (rep.cascade_result.quotient.is_zero())
        throw NotGenericallyExact("cascade produced a zero determinant");
    rep.determinant = normalize(rep.cascade_result.quotient);
    rep.degree = rep.determinant.degree();
    rep.verified = verify_by_substitution(rep.determinant, p);
    if (!rep.verified)
        throw OracleFailed("computed determinant does not vanish on the parameterization");
    if (p.n >= 3)
        rep.warnings.push_back(
            "determinant equals P^beta only if the base locus is locally a complete "
            "intersection; otherwise it contains an extraneous factor");
    return rep;
}

}  // namespace apc
