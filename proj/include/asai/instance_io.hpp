#pragma once

#include <json.hpp>

#include "asai/decider.hpp"

namespace asai {

// JSON instance documents:
// {
//   "field": {"p": 5, "f": 1},
//   "algebra": {"shape": "split3" | "quad_times_f" | "cubic_field",
//               "extension": "unramified" | "ramified",   (non-split shapes)
//               "presentation": 0 | 1,                     (ramified only)
//               "resolvent": <character>},                 (non-Galois cubic)
//   "components": [<component>...],
//   "psi_level": 0
// }
// <component>: {"kind": "principal_series", "alpha": <char>, "beta": <char>}
//            | {"kind": "sigma_twist", "chi": <char>}
//            | {"kind": "steinberg_twist", "chi": <char>}
//            | {"kind": "supercuspidal", "label": str, "dim": 2, "det": <char>,
//               "eps_sign": +-1, "twisted_eps_sign": +-1}
// <char>: {"k": int, "u": <value>}; <value> is an integer, a string "n/d", or
// an object with optional keys {"rational": int|"n/d", "root": [n, d],
// "q_half": m} multiplied together (root(n, d) = exp(2 pi i n/d)).

struct ParsedInstance {
    SessionPtr session;
    PeriodInput input;
};

ParsedInstance parse_instance(const nlohmann::json& doc);

AlgNumber parse_value(const SessionPtr& S, const nlohmann::json& v);

nlohmann::json report_to_json(const PeriodReport& r);
PeriodReport report_from_json(const nlohmann::json& j);
std::string format_report_text(const PeriodReport& r);

} // namespace asai
