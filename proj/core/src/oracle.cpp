#include "rtl/oracle.hpp"

#include <algorithm>

#include "rtl/error.hpp"

namespace rtl {

namespace {

enum class Value : std::int8_t { Unset = -1, False = 0, True = 1 };

/// Counter-based DPLL: every clause tracks how many of its literals are true
/// and false under the current partial assignment.
class Dpll {
 public:
  explicit Dpll(const Formula& f)
      : f_(f), values_(f.num_vars(), Value::Unset), occurs_(2 * f.num_vars()),
        true_count_(f.size(), 0), false_count_(f.size(), 0) {
    for (std::size_t ci = 0; ci < f.size(); ++ci) {
      for (Literal l : f.clause(ci)) occurs_[l.code()].push_back(ci);
    }
  }

  SolveResult solve() {
    SolveResult r;
    for (std::size_t ci = 0; ci < f_.size(); ++ci) {
      if (f_.clause(ci).empty()) return r;
    }
    r.sat = search(r.stats);
    if (r.sat) {
      Assignment a(f_.num_vars());
      for (std::size_t v = 0; v < values_.size(); ++v) a.set(static_cast<Var>(v), values_[v] == Value::True);
      r.witness = std::move(a);
    }
    return r;
  }

 private:
  bool lit_true(Literal l) const {
    auto v = values_[l.var()];
    return v != Value::Unset && (v == Value::True) == l.positive();
  }

  // Returns false on conflict. The assignment is recorded on the trail even
  // when it conflicts so backtracking stays uniform.
  bool assign(Literal l, std::vector<Literal>& trail) {
    values_[l.var()] = l.positive() ? Value::True : Value::False;
    trail.push_back(l);
    bool ok = true;
    for (auto ci : occurs_[l.code()]) ++true_count_[ci];
    for (auto ci : occurs_[l.complement().code()]) {
      ++false_count_[ci];
      if (true_count_[ci] == 0 && false_count_[ci] == f_.clause(ci).size()) ok = false;
    }
    return ok;
  }

  void unassign(Literal l) {
    for (auto ci : occurs_[l.code()]) --true_count_[ci];
    for (auto ci : occurs_[l.complement().code()]) --false_count_[ci];
    values_[l.var()] = Value::Unset;
  }

  bool propagate(std::vector<Literal>& trail, SolveStats& stats) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t ci = 0; ci < f_.size(); ++ci) {
        const auto& c = f_.clause(ci);
        if (true_count_[ci] != 0 || false_count_[ci] + 1 != c.size()) continue;
        for (Literal l : c) {
          if (values_[l.var()] == Value::Unset) {
            ++stats.propagations;
            if (!assign(l, trail)) return false;
            changed = true;
            break;
          }
        }
      }
    }
    return true;
  }

  bool search(SolveStats& stats) {
    std::vector<Literal> trail;
    if (!propagate(trail, stats)) {
      undo(trail);
      return false;
    }
    auto next = std::find(values_.begin(), values_.end(), Value::Unset);
    if (next == values_.end()) return true;
    const auto v = static_cast<Var>(next - values_.begin());
    for (bool negative : {true, false}) {
      ++stats.decisions;
      std::vector<Literal> local;
      if (assign(Literal(v, negative), local) && search(stats)) return true;
      undo(local);
    }
    undo(trail);
    return false;
  }

  void undo(std::vector<Literal>& trail) {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) unassign(*it);
    trail.clear();
  }

  const Formula& f_;
  std::vector<Value> values_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<std::size_t> true_count_;
  std::vector<std::size_t> false_count_;
};

/// Counts models by splitting on the lowest unassigned variable of the first
/// undecided clause; satisfied subproblems contribute 2^free.
std::uint64_t count_split(const std::vector<Clause>& clauses, std::vector<Value>& values,
                          std::size_t free_vars) {
  const Clause* pending = nullptr;
  for (const auto& c : clauses) {
    bool sat = false;
    bool open = false;
    for (Literal l : c) {
      auto v = values[l.var()];
      if (v == Value::Unset) {
        open = true;
      } else if ((v == Value::True) == l.positive()) {
        sat = true;
        break;
      }
    }
    if (sat) continue;
    if (!open) return 0;
    if (!pending) pending = &c;
  }
  if (!pending) return std::uint64_t{1} << free_vars;
  Var branch = 0;
  for (Literal l : *pending) {
    if (values[l.var()] == Value::Unset) {
      branch = l.var();
      break;
    }
  }
  std::uint64_t total = 0;
  for (Value b : {Value::False, Value::True}) {
    values[branch] = b;
    total += count_split(clauses, values, free_vars - 1);
  }
  values[branch] = Value::Unset;
  return total;
}

}  // namespace

SolveResult dpll(const Formula& f) { return Dpll(f).solve(); }

std::uint64_t count_models(const Formula& f, const EnumerationLimits& limits) {
  check_enumerable(f.num_vars(), limits);
  std::vector<Value> values(f.num_vars(), Value::Unset);
  return count_split(f.clauses(), values, f.num_vars());
}

std::uint64_t count_models(const Formula& f, std::span<const Var> projection,
                           const EnumerationLimits& limits) {
  check_enumerable(projection.size(), limits);
  for (Var v : projection) {
    if (v >= f.num_vars()) throw ScopeError("projection variable outside formula scope");
  }
  // One satisfiability call per assignment of the projected variables.
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << projection.size();
  for (std::uint64_t m = 0; m < total; ++m) {
    Formula g = f;
    for (std::size_t i = 0; i < projection.size(); ++i) {
      g.add_clause(Clause{Literal(projection[i], ((m >> i) & 1U) == 0)});
    }
    if (dpll(g).sat) ++count;
  }
  return count;
}

MucVerdict is_muc(const Formula& f, std::size_t max_calls) {
  MucVerdict v;
  if (max_calls == 0) {
    v.complete = false;
    return v;
  }
  ++v.solver_calls;
  v.unsat = !dpll(f).sat;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (v.solver_calls >= max_calls) {
      v.complete = false;
      break;
    }
    ++v.solver_calls;
    if (!dpll(f.without_clause(i)).sat) v.redundant.push_back(i);
  }
  v.is_muc = v.complete && v.unsat && v.redundant.empty();
  return v;
}

Formula muc_extract(const Formula& f) {
  if (dpll(f).sat) throw PreconditionError("muc_extract needs an unsatisfiable formula");
  std::vector<Clause> kept = f.clauses();
  std::size_t i = 0;
  while (i < kept.size()) {
    std::vector<Clause> trial;
    trial.reserve(kept.size() - 1);
    for (std::size_t k = 0; k < kept.size(); ++k) {
      if (k != i) trial.push_back(kept[k]);
    }
    if (!dpll(f.with_clauses(trial)).sat) {
      kept = std::move(trial);
    } else {
      ++i;
    }
  }
  return f.with_clauses(std::move(kept));
}

}  // namespace rtl
