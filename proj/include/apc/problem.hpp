#pragma once

/**
 * Line-oriented problem files:
 *
 *   # comment
 *   n = 3
 *   d = 3                     (optional, cross-checked)
 *   f0 = s^2*t
 *   f1 = t^2*u
 *   f2 = s*u^2
 *   f3 = s^3 + t^3 + u^3
 *   nu = 4                    (optional)
 *   indeg = 0                 (optional)
 *   seed = 1                  (optional)
 *   base_point_degrees = 1,1  (optional, degree bookkeeping)
 *   multiplicities = 1,1      (optional, degree bookkeeping)
 */

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <apc/parse.hpp>
#include <apc/pipeline.hpp>

namespace apc {

struct ProblemFile {
    int n = 0;
    std::vector<std::string> poly_text;
    Parameterization parameterization;
    std::optional<int> d;
    std::optional<int> nu;
    std::optional<int> indeg;
    std::optional<std::uint64_t> seed;
    std::vector<long long> base_point_degrees;
    std::vector<long long> multiplicities;
};

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (item.empty()) continue;
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw ParseError("invalid integer list entry '" + item + "'");
        }
    }
    return out;
}

}  // namespace detail

inline ProblemFile parse_problem(std::istream& in) {
    ProblemFile pf;
    std::vector<std::pair<int, std::string>> fs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::strip(line);
        if (t.empty() || t[0] == '#') continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = detail::strip(t.substr(0, eq));
        const std::string val = detail::strip(t.substr(eq + 1));
        auto as_int = [&](const std::string& v) {
            try {
                return std::stoll(v);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": invalid integer '" + v +
                                 "'");
            }
        };
        if (key == "n")
            pf.n = static_cast<int>(as_int(val));
        else if (key == "d")
            pf.d = static_cast<int>(as_int(val));
        else if (key == "nu")
            pf.nu = static_cast<int>(as_int(val));
        else if (key == "indeg")
            pf.indeg = static_cast<int>(as_int(val));
        else if (key == "seed")
            pf.seed = static_cast<std::uint64_t>(as_int(val));
        else if (key == "base_point_degrees")
            pf.base_point_degrees = detail::parse_int_list(val);
        else if (key == "multiplicities")
            pf.multiplicities = detail::parse_int_list(val);
        else if (key == "variables")
            ;  // informational; names are fixed by the grammar
        else if (key.size() >= 2 && key[0] == 'f')
            fs.emplace_back(static_cast<int>(as_int(key.substr(1))), val);
        else
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (pf.n < 2) throw ParseError("problem file must set n >= 2");
    if (static_cast<int>(fs.size()) != pf.n + 1)
        throw ParseError("expected " + std::to_string(pf.n + 1) + " polynomials f0..f" +
                         std::to_string(pf.n) + ", got " + std::to_string(fs.size()));
    std::vector<ParamPoly> polys(pf.n + 1, ParamPoly(pf.n));
    pf.poly_text.resize(pf.n + 1);
    std::vector<bool> seen(pf.n + 1, false);
    for (const auto& [idx, text] : fs) {
        if (idx < 0 || idx > pf.n) throw ParseError("polynomial index f" + std::to_string(idx) +
                                                    " out of range");
        if (seen[idx]) throw ParseError("duplicate polynomial f" + std::to_string(idx));
        seen[idx] = true;
        polys[idx] = parse_param_poly(text, pf.n);
        pf.poly_text[idx] = text;
    }
    pf.parameterization = Parameterization::create(std::move(polys));
    if (pf.d && *pf.d != pf.parameterization.d)
        throw ParseError("declared d = " + std::to_string(*pf.d) + " but forms have degree " +
                         std::to_string(pf.parameterization.d));
    return pf;
}

inline ProblemFile parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open problem file '" + path + "'");
    return parse_problem(in);
}

/// Parses "1:0:0:0", "1,0,0,0" or whitespace-separated rational coordinates.
inline std::vector<Rational> parse_point(const std::string& text, int expected) {
    std::string norm = text;
    for (char& c : norm)
        if (c == ':' || c == ',') c = ' ';
    std::stringstream ss(norm);
    std::vector<Rational> point;
    std::string item;
    while (ss >> item) point.push_back(rational_from_string(item));
    if (static_cast<int>(point.size()) != expected)
        throw ParseError("point needs " + std::to_string(expected) + " coordinates");
    return point;
}

}  // namespace apc
