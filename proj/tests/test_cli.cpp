// End-to-end checks of the command-line tool: spawns the built binary (path
// in APC_CLI), feeds it problem files and inspects output and exit codes.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <apc/json_io.hpp>
#include <apc/pipeline.hpp>

#include "test_util.hpp"

using namespace apc;
using namespace apc_test;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_dir() {
    static std::string dir = [] {
        std::string d = "/tmp/apc_cli_test_XXXXXX";
        REQUIRE(mkdtemp(d.data()) != nullptr);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("APC_CLI");
    REQUIRE(cli != nullptr);
    const std::string out = temp_dir() + "/out.txt";
    const std::string err = temp_dir() + "/err.txt";
    const std::string cmd = std::string(cli) + " " + args + " >" + out + " 2>" + err;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

std::string write_problem(const std::string& name, const std::string& body) {
    const std::string path = temp_dir() + "/" + name;
    std::ofstream f(path);
    f << body;
    return path;
}

const std::string kConic = "n = 2\nf0 = s^2\nf1 = s*t\nf2 = t^2\n";
const std::string kSurface331 =
    "n = 3\nf0 = s^2*t\nf1 = t^2*u\nf2 = s*u^2\nf3 = s^3 + t^3 + u^3\n";
const std::string kSurface332 =
    "n = 3\n"
    "f0 = s^2*t + 2*t^3 + s^2*u + 4*s*t*u + 4*t^2*u + 3*s*u^2 + 2*t*u^2 + 2*u^3\n"
    "f1 = -s^3 - 2*s*t^2 - 2*s^2*u - s*t*u + s*u^2 - 2*t*u^2 + 2*u^3\n"
    "f2 = -s^3 - 2*s^2*t - 3*s*t^2 - 3*s^2*u - 3*s*t*u + 2*t^2*u - 2*s*u^2 - 2*t*u^2\n"
    "f3 = s^3 + s^2*t + t^3 + s^2*u + t^2*u - s*u^2 - t*u^2 - u^3\n"
    "nu = 1\n";

}  // namespace

TEST_CASE("curve file prints the implicit equation") {
    const std::string file = write_problem("conic.txt", kConic);
    const RunResult r = run_cli(file);
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, r.out.find('\n')) == "x*z - y^2");
    CHECK(r.out.find("oracle D(f) == 0: yes") != std::string::npos);
}

TEST_CASE("hypothesis violation exits with code 2 and explains the defect") {
    const std::string file = write_problem("s331.txt", kSurface331);
    const RunResult r = run_cli(file + " --nu 3");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("9") != std::string::npos);
    CHECK(r.err.find("10") != std::string::npos);
}

TEST_CASE("parse failures exit with code 1") {
    CHECK(run_cli(temp_dir() + "/absent.txt").exit_code == 1);
    const std::string bad = write_problem("bad.txt", "n = 2\nf0 = s^\nf1 = t\nf2 = s\n");
    CHECK(run_cli(bad).exit_code == 1);
}

TEST_CASE("matrix-only JSON output round-trips") {
    const std::string file = write_problem("s332.txt", kSurface332);
    const RunResult r = run_cli(file + " --matrix-only --format json");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    const LinFormMatrix m = linform_matrix_from_json(j.at("matrix"));
    CHECK(m.rows() == 3);
    CHECK(m.cols() == 3);
    // identical to the in-process pipeline result
    const ImplicitizationReport rep =
        implicitize(Parameterization::create(surface_saturated_f()), 1, {}, 0);
    CHECK(m == rep.matrix_rep);
}

TEST_CASE("full JSON output reproduces the in-memory objects") {
    const std::string file = write_problem("s331b.txt", kSurface331);
    const RunResult r = run_cli(file + " --format json --seed 5");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.out);
    const ImplicitizationReport rep =
        implicitize(Parameterization::create(surface_nobp_f()), {}, {}, 5);
    CHECK(target_poly_from_json(j.at("determinant")) == rep.determinant);
    CHECK(linform_matrix_from_json(j.at("matrix")) == rep.matrix_rep);
    CHECK(j.at("degree").get<int>() == 9);
    CHECK(j.at("oracle").get<bool>() == true);
    CHECK(j.at("nu").get<int>() == 4);
}

TEST_CASE("identical file and seed give byte-identical output") {
    const std::string file = write_problem("s331c.txt", kSurface331);
    const RunResult a = run_cli(file + " --seed 9 --format json");
    const RunResult b = run_cli(file + " --seed 9 --format json");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    const RunResult c = run_cli(file + " --seed 9");
    const RunResult d = run_cli(file + " --seed 9");
    CHECK(c.out == d.out);
}

TEST_CASE("membership check flag") {
    const std::string file = write_problem("conic2.txt", kConic);
    const RunResult on = run_cli(file + " --check 1:2:4");
    CHECK(on.exit_code == 0);
    CHECK(on.out.find("membership: point is ON") != std::string::npos);
    const RunResult off = run_cli(file + " --check 1:1:3");
    CHECK(off.out.find("membership: point is OFF") != std::string::npos);
}
