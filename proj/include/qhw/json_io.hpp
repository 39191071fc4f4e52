#pragma once

#include "qhw/measures.hpp"
#include "qhw/report.hpp"
#include "qhw/tau.hpp"
#include "qhw/verify.hpp"

#include <json.hpp>

namespace qhw {

using Json = nlohmann::ordered_json;

inline Json to_json(const LaurentSeries& s) {
    Json coeffs = Json::array();
    for (long d = s.min_degree(); d < s.valid_order(); ++d)
        coeffs.push_back(rational_str(s.coeff(d)));
    return Json{{"var", var_name(s.var())},
                {"min_degree", s.min_degree()},
                {"coeffs", coeffs},
                {"valid_order", s.valid_order()}};
}

inline Json to_json(const DiscreteMeasure<Partition>& m) {
    Json support = Json::array();
    for (const auto& [elem, mass] : m.support)
        support.push_back(Json{{"element", elem.str()}, {"mass", rational_str(mass)}});
    return Json{{"support", support}, {"normalizer", rational_str(m.normalizer)}};
}

inline Json to_json(const DiscreteMeasure<BranchingConfig>& m) {
    Json support = Json::array();
    for (const auto& [elem, mass] : m.support)
        support.push_back(Json{{"element", elem.str()}, {"mass", rational_str(mass)}});
    return Json{{"support", support}, {"normalizer", rational_str(m.normalizer)}};
}

inline Json to_json(const ExpansionClaim& c) {
    Json terms = Json::object();
    for (const auto& [deg, coeff] : c.claimed) terms[std::to_string(deg)] = rational_str(coeff);
    return Json{{"source_ref", c.source_ref},
                {"var", var_name(c.var)},
                {"scale_power", c.scale_power},
                {"claimed", terms},
                {"validity", c.validity}};
}

inline Json to_json(const VerificationReport& rep) {
    Json status = Json::array();
    Json computed = Json::object();
    for (const auto& s : rep.status) {
        Json row{{"degree", s.degree},
                 {"ok", s.ok},
                 {"claimed", rational_str(s.claimed)},
                 {"computed", rational_str(s.computed)}};
        if (!s.label.empty()) row["label"] = s.label;
        status.push_back(std::move(row));
        const std::string key =
            s.label.empty() ? std::to_string(s.degree) : s.label + "@" + std::to_string(s.degree);
        computed[key] = rational_str(s.computed);
    }
    return Json{{"claim", to_json(rep.claim)},
                {"computed", computed},
                {"status", status},
                {"notes", rep.notes},
                {"all_ok", rep.all_ok()}};
}

inline Json to_json(const TauSlice& slice) {
    Json pairs = Json::array();
    for (const auto& [pair, row] : slice.coefficients) {
        Json coeffs = Json::array();
        for (const Rational& c : row) coeffs.push_back(rational_str(c));
        pairs.push_back(
            Json{{"mu", pair.first.str()}, {"nu", pair.second.str()}, {"coeffs", coeffs}});
    }
    return Json{{"n", slice.n}, {"pairs", pairs}};
}

inline Json to_json(const ConvergenceReport& rep) {
    Json seq = Json::array();
    for (const auto& [q, tv] : rep.distances)
        seq.push_back(Json{{"q", rational_str(q)}, {"tv", rational_str(tv)}});
    return Json{{"target", rep.target.str()}, {"distances", seq}, {"decreasing", rep.decreasing}};
}

}  // namespace qhw
