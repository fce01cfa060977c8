#include "rtl/json_io.hpp"

#include "rtl/error.hpp"

namespace rtl {

int dimacs_literal(Literal l) {
  const int v = static_cast<int>(l.var()) + 1;
  return l.negative() ? -v : v;
}

Json to_json(const Formula& f) {
  Json clauses = Json::array();
  for (const auto& c : f.clauses()) {
    Json lits = Json::array();
    for (Literal l : c) lits.push_back(dimacs_literal(l));
    clauses.push_back(std::move(lits));
  }
  return Json{{"variables", f.names()}, {"clauses", std::move(clauses)}};
}

Json to_json(const Formula& scope, const Clause& c) {
  Json lits = Json::array();
  for (Literal l : c) lits.push_back(dimacs_literal(l));
  return Json{{"clause", scope.to_string(c)}, {"literals", std::move(lits)}};
}

std::string member_string(const AssignmentSet& s, std::uint64_t member) {
  std::string out(s.vars().size(), '0');
  for (std::size_t i = 0; i < out.size(); ++i) {
    if ((member >> i) & 1U) out[i] = '1';
  }
  return out;
}

Json to_json(const AssignmentSet& s) {
  Json members = Json::array();
  for (auto m : s.members()) members.push_back(member_string(s, m));
  return Json{{"scope", s.names()}, {"members", std::move(members)}, {"size", s.size()}};
}

Formula formula_from_json(const Json& j) {
  try {
    Formula f;
    for (const auto& n : j.at("variables")) f.add_var(n.get<std::string>());
    for (const auto& c : j.at("clauses")) {
      std::vector<Literal> lits;
      for (const auto& l : c) {
        const int v = l.get<int>();
        if (v == 0) throw ParseError(0, "literal 0 in JSON clause");
        lits.emplace_back(static_cast<Var>((v < 0 ? -v : v) - 1), v < 0);
      }
      f.add_clause(Clause(std::move(lits)));
    }
    return f;
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("malformed formula JSON: ") + e.what());
  }
}

}  // namespace rtl
