#include "rtl/resolution.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "packed.hpp"
#include "rtl/error.hpp"

namespace rtl {

using detail::PackedClause;

std::vector<Var> joint_variables(const Clause& a, const Clause& b) {
  std::vector<Var> out;
  for (Literal l : a) {
    if (b.contains(l.complement())) out.push_back(l.var());
  }
  return out;
}

Clause resolve(const Clause& a, const Clause& b) {
  const auto joint = joint_variables(a, b);
  if (joint.empty()) throw NotConnectedError("clauses share no joint variable");
  if (joint.size() > 1) {
    throw TautologyError("clauses share " + std::to_string(joint.size()) +
                         " joint variables; every resolvent is a tautology");
  }
  return a.without(joint[0]).merged(b.without(joint[0]));
}

ResolutionStep multi_resolve(const ClauseSet& pos, const ClauseSet& neg, Var v) {
  ResolutionStep step;
  step.joint_var = v;
  step.positive_antecedents = canonical(pos);
  step.negative_antecedents = canonical(neg);
  ClauseSet pos_rest;
  ClauseSet neg_rest;
  for (const auto& c : step.positive_antecedents) {
    if (!c.contains(Literal::pos(v)) || c.contains(Literal::neg(v))) {
      throw PreconditionError("positive antecedent does not contain the joint variable positively");
    }
    pos_rest.push_back(c.without(v));
  }
  for (const auto& c : step.negative_antecedents) {
    if (!c.contains(Literal::neg(v)) || c.contains(Literal::pos(v))) {
      throw PreconditionError("negative antecedent does not contain the joint variable negatively");
    }
    neg_rest.push_back(c.without(v));
  }
  for (auto& c : clauses_product(canonical(std::move(pos_rest)), canonical(std::move(neg_rest)))) {
    (c.tautological() ? step.tautologies : step.consequents).push_back(std::move(c));
  }
  return step;
}

std::optional<std::size_t> Closure::index_of(const Clause& c) const {
  auto it = std::find(clauses.begin(), clauses.end(), c);
  if (it == clauses.end()) return std::nullopt;
  return static_cast<std::size_t>(it - clauses.begin());
}

Closure closure(const Formula& f, const ClosureOptions& opts) {
  const auto sources = detail::pack_all(f);
  Closure out;
  std::vector<PackedClause> db;
  std::unordered_map<PackedClause, std::uint32_t, detail::PackedHash> index;

  auto intern = [&](PackedClause c) -> std::pair<std::uint32_t, bool> {
    auto [it, inserted] = index.emplace(c, static_cast<std::uint32_t>(db.size()));
    if (inserted) db.push_back(c);
    return {it->second, inserted};
  };

  for (const auto& c : sources) {
    if (c.tautological()) {
      out.source_nodes.emplace_back(std::nullopt);
      ++out.source_tautologies;
      continue;
    }
    out.source_nodes.emplace_back(intern(c).first);
    if (c.empty()) out.refuted = true;
  }
  out.initial_nodes = db.size();

  bool done = out.refuted && opts.stop_at_refutation;
  for (std::size_t j = 0; j < db.size() && !done; ++j) {
    for (std::size_t i = 0; i < j && !done; ++i) {
      const PackedClause a = db[i];
      const PackedClause b = db[j];
      const std::uint64_t clash = (a.pos & b.neg) | (a.neg & b.pos);
      if (clash == 0) continue;
      if (std::popcount(clash) > 1) {
        ++out.tautological_pairs;
        continue;
      }
      const PackedClause r{(a.pos | b.pos) & ~clash, (a.neg | b.neg) & ~clash};
      if (!index.contains(r) && db.size() >= opts.max_clauses) {
        out.truncated = true;
        done = true;
        break;
      }
      ++out.resolutions;
      auto [node, fresh] = intern(r);
      if (opts.record_steps) {
        out.steps.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), node,
                             static_cast<Var>(std::countr_zero(clash)), fresh});
      }
      if (r.empty()) {
        out.refuted = true;
        if (opts.stop_at_refutation) done = true;
      }
    }
  }

  out.clauses.reserve(db.size());
  for (auto c : db) out.clauses.push_back(detail::unpack(c));
  return out;
}

bool replay(const Formula& f, const Closure& c) {
  std::vector<Clause> db;
  for (const auto& src : f.clauses()) {
    if (src.tautological()) continue;
    if (std::find(db.begin(), db.end(), src) == db.end()) db.push_back(src);
  }
  if (db.size() != c.initial_nodes) return false;
  for (const auto& s : c.steps) {
    if (s.left >= db.size() || s.right >= db.size()) return false;
    Clause r;
    try {
      r = resolve(db[s.left], db[s.right]);
    } catch (const ResolutionError&) {
      return false;
    }
    if (s.fresh) {
      if (s.result != db.size() || std::find(db.begin(), db.end(), r) != db.end()) return false;
      db.push_back(std::move(r));
    } else if (s.result >= db.size() || db[s.result] != r) {
      return false;
    }
  }
  return db == c.clauses;
}

Json to_json(const Formula& scope, const Closure& c, bool include_steps) {
  Json clauses = Json::array();
  for (const auto& cl : c.clauses) clauses.push_back(scope.to_string(cl));
  Json j{{"clauses", std::move(clauses)},
         {"initial_nodes", c.initial_nodes},
         {"refuted", c.refuted},
         {"truncated", c.truncated},
         {"resolutions", c.resolutions},
         {"source_tautologies", c.source_tautologies},
         {"tautological_pairs", c.tautological_pairs}};
  if (include_steps) {
    Json steps = Json::array();
    for (const auto& s : c.steps) {
      steps.push_back(Json{{"left", s.left},
                           {"right", s.right},
                           {"result", s.result},
                           {"joint", scope.name(s.joint)},
                           {"fresh", s.fresh}});
    }
    j["steps"] = std::move(steps);
  }
  return j;
}

LinkageVerdict linkage_check(const Formula& f, const Clause& c1, const Clause& c2,
                             const EnumerationLimits& limits) {
  LinkageVerdict v;
  v.consequent = resolve(c1, c2);
  v.joint = joint_variables(c1, c2).front();

  const auto left = falsifiers(f, c1, limits);
  const auto right = falsifiers(f, c2, limits);
  const auto cons = falsifiers(f, v.consequent, limits);
  v.left_falsifiers = left.size();
  v.right_falsifiers = right.size();
  v.consequent_falsifiers = cons.size();

  const auto left_part = set_intersection(left, cons);
  const auto right_part = set_intersection(right, cons);
  v.split_by_joint = set_union(left_part, right_part) == cons;

  // Assignments falsifying every non-joint literal of either antecedent.
  std::vector<Literal> residue;
  for (const auto* c : {&c1, &c2}) {
    for (Literal l : *c) {
      if (l.var() != v.joint) residue.push_back(l);
    }
  }
  const auto all = set_union(left, right);
  std::vector<std::uint64_t> restricted;
  for (auto m : all.members()) {
    const bool keep = std::all_of(residue.begin(), residue.end(), [&](Literal l) {
      return !l.satisfied_by(((m >> l.var()) & 1U) != 0);
    });
    if (keep) restricted.push_back(m);
  }
  v.restriction_matches = all.with_members(std::move(restricted)) == cons;

  v.union_connected = components(all).size() == 1;

  std::size_t edges = 0;
  bool inside = true;
  for (auto a : left.members()) {
    for (std::size_t bit = 0; bit < f.num_vars(); ++bit) {
      const auto b = a ^ (std::uint64_t{1} << bit);
      if (!right.contains(b)) continue;
      ++edges;
      inside = inside && cons.contains(a) && cons.contains(b);
    }
  }
  v.bridge_in_consequent = edges > 0 && inside;

  v.holds = v.split_by_joint && v.restriction_matches && v.union_connected && v.bridge_in_consequent;
  return v;
}

}  // namespace rtl
