#pragma once

// JSON views of the data model for reports. nlohmann::json objects keep
// keys sorted, so dumps are stable.

#include <nlohmann/json.hpp>

#include "rtl/cnf.hpp"

namespace rtl {

using Json = nlohmann::json;

/// DIMACS-style signed integer literal (var + 1, negated when negative).
int dimacs_literal(Literal l);

/// {"variables": [...], "clauses": [[1, -2], ...]}
Json to_json(const Formula& f);
/// {"clause": "(P ∨ ¬Q)", "literals": [1, -2]}
Json to_json(const Formula& scope, const Clause& c);
/// {"scope": [...], "members": ["010", ...]} with one character per scope
/// variable in scope order.
Json to_json(const AssignmentSet& s);
std::string member_string(const AssignmentSet& s, std::uint64_t member);

Formula formula_from_json(const Json& j);

}  // namespace rtl
