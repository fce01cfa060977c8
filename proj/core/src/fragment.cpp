#include "rtl/fragment.hpp"

#include <algorithm>

namespace rtl {

namespace {

constexpr const char* kAnd = " \xE2\x88\xA7 ";
constexpr const char* kImplies = " \xE2\x86\x92 ";
constexpr const char* kBottom = "\xE2\x8A\xA5";

void chain_horn(const Clause& c, Formula& out) {
  // Head literal: the positive one if any; the negative literals feed the chain.
  std::vector<Literal> head;
  std::vector<Literal> body;
  for (Literal l : c) (l.positive() ? head : body).push_back(l);

  std::vector<Literal> first = head;
  first.push_back(body[0]);
  Var link = out.fresh_var("y");
  first.push_back(Literal::neg(link));
  out.add_clause(Clause(std::move(first)));
  for (std::size_t i = 1; i < body.size(); ++i) {
    const Var next = out.fresh_var("y");
    out.add_clause(Clause{Literal::pos(link), body[i], Literal::neg(next)});
    link = next;
  }
  out.add_clause(Clause{Literal::pos(link)});
}

void split_wide(const Clause& c, Formula& out) {
  const auto lits = c.literals();
  Var link = out.fresh_var("y");
  out.add_clause(Clause{lits[0], lits[1], Literal::pos(link)});
  for (std::size_t i = 2; i + 2 < lits.size(); ++i) {
    const Var next = out.fresh_var("y");
    out.add_clause(Clause{Literal::neg(link), lits[i], Literal::pos(next)});
    link = next;
  }
  out.add_clause(Clause{Literal::neg(link), lits[lits.size() - 2], lits[lits.size() - 1]});
}

}  // namespace

bool is_horn(const Clause& c) { return c.positive_count() <= 1; }

bool is_horn(const Formula& f) {
  return std::all_of(f.clauses().begin(), f.clauses().end(),
                     [](const Clause& c) { return is_horn(c); });
}

ClauseFragment classify_clause(const Formula& scope, const Clause& c) {
  ClauseFragment info;
  info.three_cnf = c.size() <= 3;
  info.two_cnf = c.size() <= 2;
  info.horn = is_horn(c);

  std::optional<std::size_t> head;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].positive()) {
      head = i;
      break;
    }
  }
  std::string premise;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (head && i == *head) continue;
    if (!premise.empty()) premise += kAnd;
    premise += scope.to_string(c[i].complement());
  }
  const std::string conclusion = head ? scope.to_string(c[*head]) : std::string(kBottom);
  info.implication = premise.empty() ? conclusion : premise + kImplies + conclusion;
  return info;
}

FragmentInfo classify_fragment(const Formula& f) {
  FragmentInfo info;
  info.clauses.reserve(f.size());
  for (const auto& c : f.clauses()) {
    auto ci = classify_clause(f, c);
    info.three_cnf = info.three_cnf && ci.three_cnf;
    info.horn = info.horn && ci.horn;
    info.two_cnf = info.two_cnf && ci.two_cnf;
    info.clauses.push_back(std::move(ci));
  }
  return info;
}

Formula to_3cnf(const Formula& f) {
  Formula out = f.with_clauses({});
  for (const auto& c : f.clauses()) {
    if (c.size() <= 3) {
      out.add_clause(c);
    } else if (is_horn(c)) {
      chain_horn(c, out);
    } else {
      split_wide(c, out);
    }
  }
  return out;
}

}  // namespace rtl
