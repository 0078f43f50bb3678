#pragma once

/**
 * JSON serialization for the CLI and for round-trip tests. Coefficients are
 * decimal strings ("3", "-1/2") so nothing is ever rounded; monomials are
 * exponent vectors. Key order is fixed (ordered_json) so identical runs give
 * byte-identical output.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include <apc/linform.hpp>
#include <apc/pipeline.hpp>
#include <apc/polynomial.hpp>

namespace apc {

using Json = nlohmann::ordered_json;

inline Json to_json(const TargetPoly& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t;
        t["exp"] = mono_exponents(m, p.nvars());
        t["coeff"] = rational_to_string(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["vars"] = p.nvars();
    j["terms"] = std::move(terms);
    return j;
}

inline TargetPoly target_poly_from_json(const Json& j) {
    const int nvars = j.at("vars").get<int>();
    std::vector<TargetPoly::Term> terms;
    for (const auto& t : j.at("terms")) {
        const std::vector<int> exps = t.at("exp").get<std::vector<int>>();
        terms.emplace_back(mono_from_exponents(exps),
                           rational_from_string(t.at("coeff").get<std::string>()));
    }
    return TargetPoly::from_terms(nvars, std::move(terms));
}

inline Json to_json(const LinFormMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) {
            Json entry = Json::array();
            for (int t = 0; t < m.target_vars(); ++t)
                entry.push_back(rational_to_string(m.at(i, j)[t]));
            row.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["vars"] = m.target_vars();
    j["entries"] = std::move(rows);
    return j;
}

inline LinFormMatrix linform_matrix_from_json(const Json& j) {
    LinFormMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>(), j.at("vars").get<int>());
    const Json& entries = j.at("entries");
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c)
            for (int t = 0; t < m.target_vars(); ++t)
                m.at(i, c)[t] = rational_from_string(entries[i][c][t].get<std::string>());
    return m;
}

}  // namespace apc
