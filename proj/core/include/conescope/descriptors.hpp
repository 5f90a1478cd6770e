#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "conescope/cone_geometry.hpp"
#include "conescope/dfa.hpp"
#include "conescope/group_model.hpp"
#include "conescope/order.hpp"

namespace conescope {

using Json = nlohmann::ordered_json;

// {"kind": "free"|"abelian"|"klein"|"product", "rank": n, "factors": [g, g]}
GroupModel model_from_json(const Json& j);
Json model_to_json(const GroupModel& m);

// {"name": ..., "kind": "magnus"|"hyperplane"|"lex_pair"|"klein",
//  "weights": [[p, q], ...], "leading": o, "trailing": o, "leading_factor": 0|1}
// Weights [p, q] mean p + q sqrt(2). leading_factor selects which factor of
// the product the leading order lives on (default 0).
Order order_from_json(const Json& j, const GroupModel& m);
Json order_to_json(const Order& o);

// {"states": [...], "initial": "s0", "accepting": [...], "alphabet": "ab",
//  "transitions": {"s0": {"a": "s1", "A": "sink", ...}, ...}}
ConeDfa dfa_from_json(const Json& j);
Json dfa_to_json(const ConeDfa& d);

// {"r": ..., "center": "word", "swamp": ["word", ...],
//  "witnesses": ["word", "word"], "verdict": "certified-tree"|...}
Json certificate_to_json(const SwampCertificate& c);
SwampCertificate certificate_from_json(const Json& j, const GroupModel& m);

SeparationVerdict separation_verdict_from_string(const std::string& s);

// Rejects keys outside `allowed`; `where` names the object in the message.
void require_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where);

}  // namespace conescope
