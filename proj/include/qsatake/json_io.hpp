/*
   Copyright 2026 The qsatake Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QSATAKE_JSON_IO_HPP
#define QSATAKE_JSON_IO_HPP

// JSON views of library values. Exact numbers are strings ("3/4"); objects
// are std::map backed, so keys come out sorted and output is deterministic.

#include <string>
#include <vector>

#include <json.hpp>

#include "lie_tables.hpp"
#include "ore.hpp"
#include "poly.hpp"
#include "qde.hpp"
#include "schubert.hpp"

namespace qsatake {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return r.get_str(); }

// Coefficients low to high, plus the printed form.
inline json to_json(const QPoly& p, const std::string& var) {
    json c = json::array();
    for (const auto& a : p.coeffs()) c.push_back(a.get_str());
    return json{{"var", var}, {"coeffs", c}, {"text", p.to_string(var)}};
}

inline json to_json(const PartitionVector& v) {
    json terms = json::object();
    for (const auto& [l, c] : v.coeffs()) terms[to_string(l)] = c.to_string("q");
    return json{{"terms", terms}, {"pretty", pretty(v)}};
}

inline json to_json(const OreOperator& L) {
    json terms = json::object();
    for (const auto& [i, p] : L.terms()) terms[std::to_string(i)] = to_json(p, "D");
    return json{{"t_coefficients", terms}, {"factored", L.to_string()}, {"t_degree", L.t_degree()}, {"D_degree", L.D_degree()}};
}

inline json to_json(const Recurrence& r) {
    json c = json::array();
    for (const auto& p : r.c) c.push_back(to_json(p, "n"));
    return json{{"C", c}, {"text", r.to_string()}};
}

inline json to_json(const ConnectionMatrix& M) {
    json rows = json::array();
    for (std::size_t i = 0; i < M.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < M.dim(); ++j) row.push_back(M.m(i, j).to_string("t"));
        rows.push_back(row);
    }
    return json{{"basis", M.labels}, {"rows", rows}};
}

inline std::string root_string(const Root& b) {
    std::string s;
    for (int x : b) s += std::to_string(x);
    return s;
}

inline json to_json(const ExponentComparison& c) {
    json y = json::array(), z = json::array(), p = json::array(), conf = json::array();
    for (const auto& [b, v] : c.element.y) y.push_back({{"root", root_string(b)}, {"coeff", v.get_str()}});
    for (const auto& [b, v] : c.element.z) z.push_back({{"root", root_string(b)}, {"coeff", v.get_str()}});
    for (const auto& [w, v] : c.p_computed) p.push_back({{"word", w}, {"coeff", v.get_str()}});
    for (const auto& b : c.y_sign_conflicts) conf.push_back(root_string(b));
    return json{{"d", c.d},
                {"y", y},
                {"z", z},
                {"p", p},
                {"y_match", c.y_match},
                {"y_scalar", c.y_scalar.get_str()},
                {"y_conflicts", conf},
                {"p_match", c.p_match},
                {"p_scalar", c.p_scalar.get_str()},
                {"corrections", c.corrections}};
}

inline json to_json(const TableComparison& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back(to_json(r));
    return json{{"type", t.label},
                {"exponents", t.exponents_computed},
                {"expected_exponents", t.exponents_expected},
                {"xq_centralizer_dim", t.xq_centralizer_dim},
                {"exponents_match", t.exponents_match()},
                {"p_all_match", t.p_all_match()},
                {"y_all_match", t.y_all_match()},
                {"rows", rows}};
}

}  // namespace qsatake

#endif
