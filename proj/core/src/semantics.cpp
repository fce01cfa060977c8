#include "rtl/semantics.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <unordered_map>

#include "packed.hpp"
#include "rtl/error.hpp"

namespace rtl {

namespace {

std::vector<Var> identity_scope(const Formula& f) {
  std::vector<Var> vars(f.num_vars());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = static_cast<Var>(i);
  return vars;
}

template <class Keep>
AssignmentSet enumerate(const Formula& f, const EnumerationLimits& limits, Keep keep) {
  check_enumerable(f.num_vars(), limits);
  const auto packed = detail::pack_all(f);
  const std::uint64_t total = std::uint64_t{1} << f.num_vars();
  std::vector<std::uint64_t> members;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (keep(packed, m)) members.push_back(m);
  }
  return AssignmentSet(identity_scope(f), f.names(), std::move(members));
}

bool all_satisfied(const std::vector<detail::PackedClause>& cs, std::uint64_t m) {
  return std::all_of(cs.begin(), cs.end(), [m](const auto& c) { return c.satisfied_by(m); });
}

void require_same_scope(const AssignmentSet& a, const AssignmentSet& b) {
  if (!a.same_scope(b)) throw ScopeError("assignment sets have different scopes");
}

}  // namespace

void check_enumerable(std::size_t vars, const EnumerationLimits& limits) {
  const std::size_t cap = std::min(limits.max_vars, AssignmentSet::kMaxScope);
  if (vars > cap) throw EnumerationLimitError(vars, cap);
}

bool evaluate(const Clause& c, const Assignment& a) {
  return std::any_of(c.begin(), c.end(), [&](Literal l) { return a.satisfies(l); });
}

bool evaluate(const Formula& f, const Assignment& a) {
  if (a.size() != f.num_vars()) {
    throw ScopeError("assignment covers " + std::to_string(a.size()) +
                     " variables, formula scope has " + std::to_string(f.num_vars()));
  }
  return std::all_of(f.clauses().begin(), f.clauses().end(),
                     [&](const Clause& c) { return evaluate(c, a); });
}

AssignmentSet models(const Formula& f, const EnumerationLimits& limits) {
  return enumerate(f, limits, all_satisfied);
}

AssignmentSet countermodels(const Formula& f, const EnumerationLimits& limits) {
  return enumerate(f, limits,
                   [](const auto& cs, std::uint64_t m) { return !all_satisfied(cs, m); });
}

AssignmentSet exclusive_falsifiers(const Formula& f, std::size_t index,
                                   const EnumerationLimits& limits) {
  if (index >= f.size()) throw MembershipError("clause index " + std::to_string(index) + " not in formula");
  return enumerate(f, limits, [index](const auto& cs, std::uint64_t m) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (cs[i].satisfied_by(m) != (i != index)) return false;
    }
    return true;
  });
}

AssignmentSet exclusive_falsifiers(const Formula& f, const Clause& c,
                                   const EnumerationLimits& limits) {
  auto index = f.index_of(c);
  if (!index) throw MembershipError("clause " + f.to_string(c) + " is not in the formula");
  return exclusive_falsifiers(f, *index, limits);
}

AssignmentSet falsifiers(const Formula& f, const Clause& c, const EnumerationLimits& limits) {
  return enumerate(f.with_clauses({c}), limits,
                   [](const auto& cs, std::uint64_t m) { return !cs[0].satisfied_by(m); });
}

AssignmentSet full_space(const Formula& f, const EnumerationLimits& limits) {
  return enumerate(f.with_clauses({}), limits, [](const auto&, std::uint64_t) { return true; });
}

AssignmentSet project(const AssignmentSet& s, std::span<const Var> vars) {
  std::vector<std::size_t> positions;
  std::vector<std::string> names;
  positions.reserve(vars.size());
  for (Var v : vars) {
    auto pos = s.position(v);
    if (!pos) throw ScopeError("projection variable " + std::to_string(v) + " outside scope");
    positions.push_back(*pos);
    names.push_back(s.names()[*pos]);
  }
  std::vector<std::uint64_t> out;
  out.reserve(s.size());
  for (auto m : s.members()) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      r |= ((m >> positions[i]) & 1U) << i;
    }
    out.push_back(r);
  }
  return AssignmentSet(std::vector<Var>(vars.begin(), vars.end()), std::move(names), std::move(out));
}

AssignmentSet project(const AssignmentSet& s, std::span<const std::string> names) {
  std::vector<Var> vars;
  vars.reserve(names.size());
  for (const auto& n : names) {
    auto it = std::find(s.names().begin(), s.names().end(), n);
    if (it == s.names().end()) throw ScopeError("projection variable '" + n + "' outside scope");
    vars.push_back(s.vars()[static_cast<std::size_t>(it - s.names().begin())]);
  }
  return project(s, vars);
}

std::size_t hamming(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size()) throw ScopeError("hamming distance needs assignments over one scope");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a.values()[i] != b.values()[i];
  return d;
}

std::vector<AssignmentSet> components(const AssignmentSet& s) {
  const auto& members = s.members();
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i], i);

  std::vector<bool> seen(members.size(), false);
  std::vector<AssignmentSet> out;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < members.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint64_t> comp;
    queue.assign(1, start);
    seen[start] = true;
    while (!queue.empty()) {
      const auto cur = members[queue.back()];
      queue.pop_back();
      comp.push_back(cur);
      for (std::size_t bit = 0; bit < s.vars().size(); ++bit) {
        auto it = index.find(cur ^ (std::uint64_t{1} << bit));
        if (it != index.end() && !seen[it->second]) {
          seen[it->second] = true;
          queue.push_back(it->second);
        }
      }
    }
    out.push_back(s.with_members(std::move(comp)));
  }
  return out;
}

AssignmentSet set_union(const AssignmentSet& a, const AssignmentSet& b) {
  require_same_scope(a, b);
  std::vector<std::uint64_t> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                 std::back_inserter(out));
  return a.with_members(std::move(out));
}

AssignmentSet set_intersection(const AssignmentSet& a, const AssignmentSet& b) {
  require_same_scope(a, b);
  std::vector<std::uint64_t> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(out));
  return a.with_members(std::move(out));
}

}  // namespace rtl
