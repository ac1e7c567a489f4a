#pragma once

#include <json.hpp>

#include "qma/algebra.hpp"
#include "qma/cluster.hpp"
#include "qma/report.hpp"

namespace qma {

using Json = nlohmann::ordered_json;

inline Json laurent_to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
    return j;
}

inline Json matrix_to_json(const ExponentMatrix& a) {
    Json rows = Json::array();
    for (int i = 1; i <= a.shape().rows; ++i) {
        Json row = Json::array();
        for (int j = 1; j <= a.shape().cols; ++j) row.push_back(a.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json element_to_json(const AlgebraElement& x) {
    Json terms = Json::array();
    for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
        Json t = Json::object();
        t["matrix"] = matrix_to_json(it->first);
        t["coeff"] = laurent_to_json(it->second);
        terms.push_back(std::move(t));
    }
    return terms;
}

inline Json minor_spec_to_json(const MinorSpec& s) {
    return Json{{"rows", s.rows}, {"cols", s.cols}};
}

inline Json check_to_json(const CheckResult& r) {
    Json j = Json::object();
    j["identity"] = r.identity;
    j["shape"] = r.shape;
    j["index"] = r.index;
    j["status"] = r.pass ? "pass" : "fail";
    if (!r.witness.empty()) j["witness"] = r.witness;
    return j;
}

inline Json seed_to_json(const QuantumSeed& s) {
    Json vars = Json::array();
    for (const auto& v : s.vars) {
        Json jv = Json::object();
        jv["point"] = Json::array({v.point.row, v.point.col});
        if (v.concrete) jv["minor"] = minor_spec_to_json(v.spec);
        else jv["defining"] = v.note;
        vars.push_back(std::move(jv));
    }
    Json j = Json::object();
    j["variables"] = std::move(vars);
    j["lambda"] = s.lambda;
    j["b"] = s.b;
    j["ex"] = s.ex;
    return j;
}

inline Json line_data_to_json(const LineSeedData& d) {
    Json j = Json::object();
    j["line"] = render_line(d.line);
    j["seed"] = seed_to_json(d.full);
    j["n_small"] = d.n_small;
    j["n_small_mutable"] = d.n_small_mutable;
    j["lambda0"] = d.lambda0;
    j["b0"] = d.b0;
    j["bR"] = d.b_r;
    Json checks = Json::array();
    for (const auto& c : d.checks) checks.push_back(check_to_json(c));
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace qma
