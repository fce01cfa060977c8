#include "rtl/rcnf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "rtl/error.hpp"
#include "rtl/fragment.hpp"
#include "rtl/product.hpp"

namespace rtl {

namespace {

class IndicatorScope {
 public:
  IndicatorScope(const Formula& source, Formula& out) : source_(source), out_(out) {}

  Var operator()(const Clause& c) { return out_.add_var(indicator_name(source_, c)); }

 private:
  const Formula& source_;
  Formula& out_;
};

class ClauseSink {
 public:
  explicit ClauseSink(Formula& out) : out_(out) {}

  void add(std::vector<Literal> lits) {
    Clause c(std::move(lits));
    if (seen_.insert(c).second) out_.add_clause(std::move(c));
  }

 private:
  Formula& out_;
  std::unordered_set<Clause, ClauseHash> seen_;
};

}  // namespace

std::string indicator_name(const Formula& scope, const Clause& c) {
  std::string out = "c[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += '|';
    if (c[i].negative()) out += '-';
    out += scope.name(c[i].var());
  }
  out += ']';
  return out;
}

RcnfEncoding rcnf_of(const Formula& f, ClosureOptions opts) {
  opts.record_steps = true;
  RcnfEncoding enc;
  enc.source = f;
  enc.closure = closure(f, opts);
  const auto& cl = enc.closure;
  enc.includes_closure = !cl.truncated;
  if (cl.truncated) {
    enc.warnings.push_back("closure truncated at " + std::to_string(opts.max_clauses) +
                           " clauses; encoding covers the explored part only");
  }

  enc.node_indicator.assign(cl.clauses.size(), std::nullopt);
  for (std::size_t n = 0; n < cl.clauses.size(); ++n) {
    if (cl.clauses[n].empty()) continue;
    enc.node_indicator[n] = enc.horn.add_var(indicator_name(f, cl.clauses[n]));
    enc.indicator_node.push_back(n);
  }

  std::set<std::size_t> units;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& node = cl.source_nodes[i];
    if (!node || !units.insert(*node).second) continue;
    if (const auto ind = enc.node_indicator[*node]) {
      enc.horn.add_clause(Clause{Literal::pos(*ind)});
    } else {
      enc.horn.add_clause(Clause{});
    }
  }
  for (const auto& s : cl.steps) {
    std::vector<Literal> lits{Literal::neg(*enc.node_indicator[s.left]),
                              Literal::neg(*enc.node_indicator[s.right])};
    if (const auto t = enc.node_indicator[s.result]) lits.push_back(Literal::pos(*t));
    enc.horn.add_clause(Clause(std::move(lits)));
  }
  return enc;
}

RcnfSize rcnf_size(const Formula& f, ClosureOptions opts) {
  const auto enc = rcnf_of(f, opts);
  return {enc.horn.num_vars(), enc.horn.size(), !enc.includes_closure};
}

const char* to_string(HornTemplate t) {
  switch (t) {
    case HornTemplate::unit: return "unit";
    case HornTemplate::binary: return "binary";
    case HornTemplate::ternary: return "ternary";
    case HornTemplate::empty: return "empty";
  }
  return "?";
}

HornRcnf horn_to_rcnf(const Formula& f) {
  if (!is_horn(f)) throw ClassificationError("horn_to_rcnf needs a Horn formula");
  HornRcnf out;
  out.rewritten = to_3cnf(f);
  const Formula& src = out.rewritten;
  IndicatorScope c(src, out.rcnf);
  ClauseSink sink(out.rcnf);

  for (const auto& cl : src.clauses()) {
    if (cl.tautological()) {
      out.templates.emplace_back(std::nullopt);
      continue;
    }
    if (cl.empty()) {
      out.templates.emplace_back(HornTemplate::empty);
      sink.add({});
      continue;
    }
    // Head first: the positive literal, or the first literal when headless.
    std::vector<Literal> lits(cl.begin(), cl.end());
    auto head = std::find_if(lits.begin(), lits.end(), [](Literal l) { return l.positive(); });
    if (head != lits.end()) std::rotate(lits.begin(), head, head + 1);
    const Literal i = lits[0];
    const Var whole = c(cl);
    const Var c_i = c(Clause{i});
    const Var c_not_i = c(Clause{~i});

    if (lits.size() == 1) {
      out.templates.emplace_back(HornTemplate::unit);
      sink.add({Literal::pos(whole)});
      sink.add({Literal::neg(whole), Literal::neg(c_not_i)});
    } else if (lits.size() == 2) {
      out.templates.emplace_back(HornTemplate::binary);
      const Var c_q = c(Clause{~lits[1]});
      sink.add({Literal::pos(whole)});
      sink.add({Literal::pos(c_i), Literal::neg(whole), Literal::neg(c_q)});
      sink.add({Literal::neg(c_i), Literal::neg(c_not_i)});
    } else {
      out.templates.emplace_back(HornTemplate::ternary);
      const Var c_j = c(Clause{~lits[1]});
      const Var c_k = c(Clause{~lits[2]});
      const Var c_ij = c(Clause{i, lits[1]});
      const Var c_ik = c(Clause{i, lits[2]});
      sink.add({Literal::pos(whole)});
      sink.add({Literal::pos(c_ik), Literal::neg(whole), Literal::neg(c_j)});
      sink.add({Literal::pos(c_ij), Literal::neg(whole), Literal::neg(c_k)});
      sink.add({Literal::pos(c_i), Literal::neg(c_ij), Literal::neg(c_j)});
      sink.add({Literal::pos(c_i), Literal::neg(c_ik), Literal::neg(c_k)});
      sink.add({Literal::neg(c_i), Literal::neg(c_not_i)});
    }
  }
  return out;
}

PropagationResult unit_propagate(const Formula& f) {
  if (!is_horn(f)) throw ClassificationError("unit_propagate needs a Horn formula");
  PropagationResult r;
  r.assignment = Assignment(f.num_vars());
  std::vector<std::size_t> pending(f.size(), 0);
  std::vector<std::vector<std::size_t>> body_of(f.num_vars());
  std::vector<Var> queue;

  // Returns false when a headless clause fires.
  auto fire = [&](std::size_t ci) {
    for (Literal l : f.clause(ci)) {
      if (!l.positive()) continue;
      if (!r.assignment[l.var()]) {
        r.assignment.set(l.var(), true);
        queue.push_back(l.var());
      }
      return true;
    }
    return false;
  };

  for (std::size_t ci = 0; ci < f.size(); ++ci) {
    for (Literal l : f.clause(ci)) {
      if (l.negative()) {
        body_of[l.var()].push_back(ci);
        ++pending[ci];
      }
    }
  }
  for (std::size_t ci = 0; ci < f.size(); ++ci) {
    if (pending[ci] == 0 && !fire(ci)) return r;
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (auto ci : body_of[queue[q]]) {
      if (--pending[ci] == 0 && !fire(ci)) return r;
    }
  }
  r.sat = true;
  return r;
}

GranularityReport granularity_report(const Formula& f, const EnumerationLimits& limits,
                                     ClosureOptions opts) {
  check_enumerable(f.num_vars(), limits);
  GranularityReport rep;
  rep.muc = is_muc(f);
  rep.precondition_met = rep.muc.is_muc;

  opts.record_steps = true;
  const auto cl = closure(f, opts);
  rep.closure_complete = !cl.truncated;

  std::set<std::uint32_t> antecedents;
  for (const auto& s : cl.steps) {
    antecedents.insert(s.left);
    antecedents.insert(s.right);
  }
  std::map<std::vector<std::uint64_t>, std::vector<std::string>> by_falsifiers;
  for (auto n : antecedents) {
    by_falsifiers[falsifiers(f, cl.clauses[n], limits).members()].push_back(
        indicator_name(f, cl.clauses[n]));
  }

  rep.correspondence_holds = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    ClauseGranularity g;
    g.index = i;
    g.clause = f.clause(i);
    g.exclusive = exclusive_falsifiers(f, i, limits);
    g.corresponds = !g.exclusive.empty();
    for (auto& comp : components(g.exclusive)) {
      ComponentMatch m{std::move(comp), {}};
      if (auto it = by_falsifiers.find(m.members.members()); it != by_falsifiers.end()) {
        m.indicators = it->second;
      }
      g.corresponds = g.corresponds && !m.indicators.empty();
      g.components.push_back(std::move(m));
    }
    const auto maxterms = maxterm_clauses(g.exclusive);
    const ReducibilityOptions ropts;
    if (maxterms.size() <= ropts.clause_cap) {
      g.reducible = is_product_reducible(maxterms, ropts).reducible;
    }
    rep.correspondence_holds = rep.correspondence_holds && g.corresponds;
    rep.clauses.push_back(std::move(g));
  }
  return rep;
}

Json to_json(const Formula& scope, const GranularityReport& r) {
  Json clauses = Json::array();
  for (const auto& g : r.clauses) {
    Json comps = Json::array();
    for (const auto& m : g.components) {
      comps.push_back(Json{{"members", to_json(m.members)["members"]},
                           {"indicators", m.indicators}});
    }
    clauses.push_back(Json{{"index", g.index},
                           {"clause", scope.to_string(g.clause)},
                           {"exclusive_falsifiers", to_json(g.exclusive)["members"]},
                           {"components", std::move(comps)},
                           {"reducible", g.reducible ? Json(*g.reducible) : Json(nullptr)},
                           {"corresponds", g.corresponds}});
  }
  return Json{{"precondition_met", r.precondition_met},
              {"is_muc", r.muc.is_muc},
              {"unsat", r.muc.unsat},
              {"redundant", r.muc.redundant},
              {"closure_complete", r.closure_complete},
              {"correspondence_holds", r.correspondence_holds},
              {"scope", scope.names()},
              {"clauses", std::move(clauses)}};
}

}  // namespace rtl
