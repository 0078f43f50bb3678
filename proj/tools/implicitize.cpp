/**
 * Batch implicitization front-end. Reads a problem file, runs the pipeline,
 * prints the implicit equation, the matrix representation and diagnostics in
 * text or JSON form.
 *
 * Exit codes: 0 success, 1 input/parse error, 2 hypothesis violation
 * (degenerate map, slice not generically exact), 3 internal invariant
 * failure.
 */

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <apc/json_io.hpp>
#include <apc/pipeline.hpp>
#include <apc/problem.hpp>

namespace {

using namespace apc;

std::string shape_list(const std::vector<std::array<int, 2>>& shapes) {
    std::string out;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (i) out += "  ";
        out += "Z" + std::to_string(i + 1) + " " + std::to_string(shapes[i][0]) + "x" +
               std::to_string(shapes[i][1]);
    }
    return out;
}

void print_matrix_text(std::ostream& os, const LinFormMatrix& m) {
    os << "matrix " << m.rows() << "x" << m.cols() << ":\n";
    for (int i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << m.at(i, j).str();
        }
        os << "]\n";
    }
}

struct Options {
    std::string file;
    std::optional<int> nu, indeg;
    std::uint64_t seed = 0;
    std::string format = "text";
    bool matrix_only = false;
    bool verify = true;
    std::string check_point;
};

int run(const Options& opt) {
    const ProblemFile pf = parse_problem_file(opt.file);
    const std::optional<int> nu = opt.nu ? opt.nu : pf.nu;
    const std::optional<int> indeg = opt.indeg ? opt.indeg : pf.indeg;
    const std::uint64_t seed = opt.seed ? opt.seed : pf.seed.value_or(0);
    const Parameterization& param = pf.parameterization;

    ImplicitizationReport rep = implicitize(param, nu, indeg, seed);
    if (opt.verify && !rep.verified) throw OracleFailed("oracle check failed");

    std::optional<bool> member;
    std::vector<Rational> point;
    if (!opt.check_point.empty()) {
        point = parse_point(opt.check_point, param.n + 1);
        member = membership_test(rep.matrix_rep, point, rep.generic_rank_z1);
    }

    // degree bookkeeping from user-supplied base-point data
    std::optional<long long> expected_deg, drop;
    bool finite = true;
    if (!pf.base_point_degrees.empty())
        expected_deg = expected_degree(param.n, param.d, pf.base_point_degrees);
    if (!pf.multiplicities.empty()) {
        const DegreeDrop dd = degree_drop(param.n, param.d, pf.multiplicities);
        drop = dd.value;
        finite = dd.generically_finite;
    }

    if (opt.format == "json") {
        Json j;
        j["n"] = param.n;
        j["d"] = param.d;
        j["nu"] = rep.nu_used;
        j["seed"] = seed;
        j["matrix"] = to_json(rep.matrix_rep);
        if (!opt.matrix_only) {
            j["slice_shapes"] = rep.slice_shapes;
            j["delta_sizes"] = rep.delta_sizes;
            j["determinant"] = to_json(rep.determinant);
            j["determinant_text"] = rep.determinant.str();
            j["degree"] = rep.degree;
            j["oracle"] = rep.verified;
            if (param.n == 2) j["gcd"] = rep.param_gcd.str();
            if (expected_deg) j["expected_degree"] = *expected_deg;
            if (drop) {
                j["degree_P_beta"] = *drop;
                j["extraneous_degree"] = rep.degree - *drop;
                j["generically_finite"] = finite;
            }
            j["warnings"] = rep.warnings;
        }
        if (member) {
            Json m;
            Json coords = Json::array();
            for (const auto& c : point) coords.push_back(rational_to_string(c));
            m["point"] = coords;
            m["on_hypersurface"] = *member;
            m["expected_rank"] = rep.generic_rank_z1;
            m["caveat"] = ImplicitizationReport::membership_caveat;
            j["membership"] = m;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (opt.matrix_only) {
        print_matrix_text(std::cout, rep.matrix_rep);
    } else {
        std::cout << rep.determinant.str() << "\n\n";
        std::cout << "nu: " << rep.nu_used << "\n";
        std::cout << "slice: " << shape_list(rep.slice_shapes) << "\n";
        std::cout << "delta sizes:";
        for (int s : rep.delta_sizes) std::cout << " " << s;
        std::cout << "\n";
        std::cout << "degree: " << rep.degree << "\n";
        if (param.n == 2) std::cout << "gcd: " << rep.param_gcd.str() << "\n";
        if (expected_deg) std::cout << "expected degree (d^(n-1) - sum d_p): " << *expected_deg
                                    << "\n";
        if (drop) {
            std::cout << "degree of P^beta (d^(n-1) - sum e_p): " << *drop << "\n";
            std::cout << "extraneous factor degree: " << rep.degree - *drop << "\n";
            if (!finite) std::cout << "WARNING: map is not generically finite\n";
        }
        std::cout << "oracle D(f) == 0: " << (rep.verified ? "yes" : "NO") << "\n";
        print_matrix_text(std::cout, rep.matrix_rep);
        for (const auto& w : rep.warnings) std::cout << "note: " << w << "\n";
        if (member) {
            std::cout << "membership: point is " << (*member ? "ON" : "OFF")
                      << " the hypersurface (rank test, expected rank " << rep.generic_rank_z1
                      << ")\n";
            std::cout << "note: " << ImplicitizationReport::membership_caveat << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact implicitization of rational curves, surfaces and hypersurfaces"};
    Options opt;
    int nu_flag = INT32_MIN, indeg_flag = INT32_MIN;
    app.add_option("file", opt.file, "problem file")->required();
    app.add_option("--nu", nu_flag, "slice degree (overrides the default bound)");
    app.add_option("--indeg", indeg_flag, "initial degree of the saturated base-point ideal");
    app.add_option("--seed", opt.seed, "seed for evaluation points (default 0)");
    app.add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--matrix-only", opt.matrix_only, "print only the matrix representation Z1");
    app.add_flag("--verify,!--no-verify", opt.verify,
                 "run the substitution oracle on the result (default on)");
    app.add_option("--check", opt.check_point,
                   "membership test at a point, e.g. \"1:0:0:0\" or \"1,0,0,0\"");

    try {
        app.parse(argc, argv);
        if (nu_flag != INT32_MIN) opt.nu = nu_flag;
        if (indeg_flag != INT32_MIN) opt.indeg = indeg_flag;
        return run(opt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const apc::DegenerateMap& e) {
        std::cerr << "error (hypothesis): " << e.what() << "\n";
        return 2;
    } catch (const apc::NotGenericallyExact& e) {
        std::cerr << "error (hypothesis): " << e.what() << "\n";
        return 2;
    } catch (const apc::RankDeficient& e) {
        std::cerr << "error (hypothesis): " << e.what() << "\n";
        return 2;
    } catch (const apc::ParseError& e) {
        std::cerr << "error (input): " << e.what() << "\n";
        return 1;
    } catch (const apc::InvalidInput& e) {
        std::cerr << "error (input): " << e.what() << "\n";
        return 1;
    } catch (const apc::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
