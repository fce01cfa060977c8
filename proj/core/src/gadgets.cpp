#include "rtl/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "rtl/error.hpp"

namespace rtl {

namespace {

std::optional<std::uint64_t> first_difference(const AssignmentSet& a, const AssignmentSet& b) {
  std::vector<std::uint64_t> diff;
  std::set_symmetric_difference(a.members().begin(), a.members().end(), b.members().begin(),
                                b.members().end(), std::back_inserter(diff));
  if (diff.empty()) return std::nullopt;
  return diff.front();
}

void append(Formula& f, const TcnfInstance& t) {
  for (const auto& c : t.clauses) f.add_clause(c);
}

struct FamilyBuilder {
  GadgetFamily family;

  explicit FamilyBuilder(GadgetKind kind) { family.kind = kind; }

  FamilyBuilder& t(std::string_view a, std::string_view b, std::string_view c) {
    family.gadgets.push_back(add_tcnf(family.formula, a, b, c));
    return *this;
  }

  GadgetFamily done() {
    for (std::size_t v = 0; v < family.formula.num_vars(); ++v) {
      family.roles.emplace(family.formula.name(static_cast<Var>(v)), static_cast<Var>(v));
    }
    return std::move(family);
  }
};

}  // namespace

TcnfInstance tcnf(Literal l1, Literal l2, Literal l3) {
  if (l1.var() == l2.var() || l2.var() == l3.var() || l1.var() == l3.var()) {
    throw ConstructionError("tcnf needs three distinct variables");
  }
  TcnfInstance t{{l1, l2, l3}, {}};
  t.clauses = {Clause{~l1, ~l2}, Clause{~l2, ~l3}, Clause{~l1, ~l3}, Clause{l1, l2, l3}};
  return t;
}

TcnfInstance add_tcnf(Formula& f, std::string_view l1, std::string_view l2, std::string_view l3) {
  const Literal a = f.add_literal(l1);
  const Literal b = f.add_literal(l2);
  const Literal c = f.add_literal(l3);
  auto t = tcnf(a, b, c);
  append(f, t);
  return t;
}

std::vector<Clause> tcnf_complement(const TcnfInstance& t) {
  const auto [a, b, c] = t.lits;
  return {Clause{a, b, ~c}, Clause{a, ~b, c}, Clause{~a, b, c}};
}

EquivalenceVerdict verify_tcnf_complement(const Formula& scope, const TcnfInstance& t,
                                          const EnumerationLimits& limits) {
  const auto lhs = models(scope.with_clauses(t.clauses), limits);
  const auto rhs = countermodels(scope.with_clauses(tcnf_complement(t)), limits);
  EquivalenceVerdict v;
  v.counterexample = first_difference(lhs, rhs);
  v.holds = !v.counterexample;
  return v;
}

std::vector<Clause> ClauseGadget::clauses() const {
  std::vector<Clause> out;
  for (const auto& g : gadgets) out.insert(out.end(), g.clauses.begin(), g.clauses.end());
  return out;
}

ClauseGadget clause_to_tcnf(Formula& scope, const Clause& c) {
  if (c.size() != 3 || c.num_vars() != 3) {
    throw PreconditionError("clause_to_tcnf needs three literals over distinct variables, got " +
                            std::to_string(c.size()));
  }
  ClauseGadget g;
  g.source = c;
  g.fresh = {scope.fresh_var("S"), scope.fresh_var("T"), scope.fresh_var("U"),
             scope.fresh_var("V")};
  const auto [s, t, u, v] = g.fresh;
  g.gadgets = {tcnf(Literal::pos(s), Literal::pos(t), ~c[0]),
               tcnf(Literal::pos(t), Literal::pos(u), c[1]),
               tcnf(Literal::pos(u), Literal::pos(v), ~c[2])};
  return g;
}

ClauseTcnfVerdict verify_clause_tcnf(const Formula& g, const Clause& c,
                                     const EnumerationLimits& limits) {
  if (c.size() != 3 || c.num_vars() != 3) {
    throw PreconditionError("verify_clause_tcnf needs a three-literal clause");
  }
  const std::vector<Var> vars{c[0].var(), c[1].var(), c[2].var()};
  const auto extendable = project(models(g, limits), vars);
  ClauseTcnfVerdict v;
  for (std::size_t i = 0; i < 3; ++i) {
    if (c[i].negative()) v.expected |= std::uint64_t{1} << i;
  }
  for (std::uint64_t m = 0; m < 8; ++m) {
    if (!extendable.contains(m)) v.blocked.push_back(m);
  }
  v.holds = v.blocked == std::vector<std::uint64_t>{v.expected};
  if (!v.holds) {
    for (std::uint64_t m = 0; m < 8; ++m) {
      if ((m == v.expected) == extendable.contains(m)) {
        v.counterexample = m;
        break;
      }
    }
  }
  return v;
}

TcnfReduction reduce_3cnf_to_tcnf(const Formula& f) {
  TcnfReduction r;
  r.formula = f.with_clauses({});
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& c = f.clause(i);
    if (c.empty()) throw ClassificationError("clause " + std::to_string(i) + " is empty");
    if (c.size() > 3) {
      throw ClassificationError("clause " + std::to_string(i) + " has " +
                                std::to_string(c.size()) + " literals");
    }
    if (c.tautological()) {
      ++r.dropped_tautologies;
      continue;
    }
    std::vector<Clause> padded{c};
    while (padded.front().size() < 3) {
      const Var p = r.formula.fresh_var("p");
      r.padding.push_back(p);
      std::vector<Clause> next;
      for (const auto& base : padded) {
        for (bool neg : {false, true}) {
          std::vector<Literal> lits(base.begin(), base.end());
          lits.emplace_back(p, neg);
          next.emplace_back(std::move(lits));
        }
      }
      padded = std::move(next);
    }
    for (const auto& pc : padded) {
      auto g = clause_to_tcnf(r.formula, pc);
      for (const auto& cl : g.clauses()) r.formula.add_clause(cl);
      r.gadgets.push_back(std::move(g));
      r.source_of.push_back(i);
    }
  }
  return r;
}

CcnfInstance ccnf(const Graph& g, std::size_t root, const NegationMap& negations,
                  const std::vector<std::string>& edge_names) {
  if (!g.is_cubic()) throw StructureError("ccnf needs a 3-regular graph");
  if (!g.is_connected()) throw StructureError("ccnf needs a connected graph");
  if (root >= g.num_nodes()) throw StructureError("root out of range");
  if (!edge_names.empty() && edge_names.size() != g.num_edges()) {
    throw StructureError("expected " + std::to_string(g.num_edges()) + " edge names");
  }

  CcnfInstance out;
  out.graph = g;
  out.root = root;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    const std::string name = edge_names.empty()
                                 ? "e" + std::to_string(u) + "_" + std::to_string(v)
                                 : edge_names[e];
    if (out.formula.find_var(name)) throw StructureError("duplicate edge name '" + name + "'");
    out.edge_vars.push_back(out.formula.add_var(name));
  }
  out.ring_index = g.distances(root);
  const auto parent = g.bfs_tree(root);

  for (std::size_t node = 0; node < g.num_nodes(); ++node) {
    std::vector<std::size_t> order;
    if (parent[node]) order.push_back(*parent[node]);
    for (auto e : g.incident(node)) {
      if (!parent[node] || e != *parent[node]) order.push_back(e);
    }
    std::array<Literal, 3> lits;
    for (std::size_t k = 0; k < 3; ++k) {
      lits[k] = Literal(out.edge_vars[order[k]], negations.contains({node, order[k]}));
    }
    auto t = tcnf(lits[0], lits[1], lits[2]);
    append(out.formula, t);
    out.notation.push_back("t" + std::to_string(out.ring_index[node]) + ":" +
                           out.formula.to_string(lits[0]) + "-" + out.formula.to_string(lits[1]) +
                           out.formula.to_string(lits[2]));
    out.node_gadgets.push_back(std::move(t));
  }
  return out;
}

const char* to_string(GadgetKind k) {
  switch (k) {
    case GadgetKind::m1: return "m1";
    case GadgetKind::a_n: return "an";
    case GadgetKind::o_n: return "on";
    case GadgetKind::a_n_n1: return "ann1";
    case GadgetKind::o_n_n1: return "onn1";
    case GadgetKind::extended: return "extended";
  }
  return "?";
}

GadgetFamily m1() {
  return FamilyBuilder(GadgetKind::m1)
      .t("P", "Q", "R")
      .t("P", "S", "-T")
      .t("Q", "T", "-U")
      .t("R", "U", "-S")
      .done();
}

GadgetFamily a_n() { return FamilyBuilder(GadgetKind::a_n).t("M", "P", "Q").t("N", "Q", "R").done(); }

GadgetFamily o_n() { return FamilyBuilder(GadgetKind::o_n).t("M", "P", "Q").t("N", "-Q", "R").done(); }

GadgetFamily a_n_n1() {
  return FamilyBuilder(GadgetKind::a_n_n1)
      .t("M", "P", "Q")
      .t("N", "R", "S")
      .t("P", "U", "V")
      .t("R", "V", "W")
      .t("Q", "X", "Y")
      .t("S", "Y", "Z")
      .done();
}

GadgetFamily o_n_n1() {
  return FamilyBuilder(GadgetKind::o_n_n1)
      .t("M", "P", "Q")
      .t("N", "R", "S")
      .t("P", "U", "V")
      .t("R", "V", "W")
      .t("-Q", "X", "Y")
      .t("-S", "-Y", "Z")
      .done();
}

std::vector<std::string> m1_edge_names() { return {"P", "Q", "R", "T", "S", "U"}; }

NegationMap m1_negations() { return {{1, 3}, {2, 5}, {3, 4}}; }

GadgetFamily extend_m(std::size_t k, const std::optional<Graph>& graph) {
  if (k == 0) throw PreconditionError("extend_m needs k >= 1");
  if (k == 1) return m1();
  if (!graph) {
    throw UnsupportedError("extend_m(" + std::to_string(k) +
                           ") needs an explicit cubic graph; no degree-3 Moore graph family "
                           "exists beyond diameter 2");
  }
  const auto parent = graph->bfs_tree(0);
  std::vector<bool> tree(graph->num_edges(), false);
  for (const auto& p : parent) {
    if (p) tree[*p] = true;
  }
  NegationMap neg;
  for (std::size_t e = 0; e < graph->num_edges(); ++e) {
    if (!tree[e]) neg.emplace(std::max(graph->edge(e).first, graph->edge(e).second), e);
  }
  GadgetFamily fam;
  fam.kind = GadgetKind::extended;
  fam.ccnf = ccnf(*graph, 0, neg);
  fam.formula = fam.ccnf->formula;
  fam.gadgets = fam.ccnf->node_gadgets;
  for (std::size_t v = 0; v < fam.formula.num_vars(); ++v) {
    fam.roles.emplace(fam.formula.name(static_cast<Var>(v)), static_cast<Var>(v));
  }
  fam.sat = dpll(fam.formula).sat;
  fam.muc = is_muc(fam.formula);
  return fam;
}

RelationCheck check_relations(const GadgetFamily& g, const EnumerationLimits& limits) {
  using Pred = std::function<bool(const std::function<bool(const char*)>&)>;
  std::vector<std::pair<std::string, Pred>> rules;
  auto eq = [](const auto& x, const char* a, const char* b) { return x(a) == x(b); };
  switch (g.kind) {
    case GadgetKind::a_n:
      rules = {{"M = N -> P = R", [&](const auto& x) { return !eq(x, "M", "N") || eq(x, "P", "R"); }},
               {"M != N -> P != R", [&](const auto& x) { return eq(x, "M", "N") || !eq(x, "P", "R"); }}};
      break;
    case GadgetKind::o_n:
      rules = {{"M = N -> P != R", [&](const auto& x) { return !eq(x, "M", "N") || !eq(x, "P", "R"); }},
               {"M != N -> P = R", [&](const auto& x) { return eq(x, "M", "N") || eq(x, "P", "R"); }}};
      break;
    case GadgetKind::a_n_n1:
      rules = {{"M = N -> (U = W) = (X = Z)",
                [&](const auto& x) { return !eq(x, "M", "N") || eq(x, "U", "W") == eq(x, "X", "Z"); }},
               {"M != N -> (U = W) != (X = Z)",
                [&](const auto& x) { return eq(x, "M", "N") || eq(x, "U", "W") != eq(x, "X", "Z"); }}};
      break;
    case GadgetKind::o_n_n1:
      rules = {{"M = N != 1 -> (U = W) != (X = Z)",
                [&](const auto& x) {
                  return !(eq(x, "M", "N") && !x("M")) || eq(x, "U", "W") != eq(x, "X", "Z");
                }},
               {"M != N -> (U = W) = (X = Z)",
                [&](const auto& x) { return eq(x, "M", "N") || eq(x, "U", "W") == eq(x, "X", "Z"); }}};
      break;
    default:
      throw UnsupportedError(std::string("no relation pair is stated for ") + to_string(g.kind));
  }

  RelationCheck out;
  for (const auto& [text, _] : rules) out.statements.push_back(text);
  const auto ms = models(g.formula, limits);
  out.models = ms.size();
  out.holds = true;
  for (auto m : ms.members()) {
    auto value = [&](const char* role) { return ((m >> g.roles.at(role)) & 1U) != 0; };
    const std::function<bool(const char*)> x = value;
    for (const auto& [_, pred] : rules) {
      if (!pred(x)) {
        out.holds = false;
        out.counterexample = m;
        return out;
      }
    }
  }
  return out;
}

Ratio Ratio::of(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw PreconditionError("ratio with zero denominator");
  const auto g = std::gcd(num, den);
  return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

std::string Ratio::str() const { return std::to_string(num) + "/" + std::to_string(den); }

CountReport count_report(const EnumerationLimits& limits) {
  const auto an = a_n();
  const auto ann1 = a_n_n1();
  const std::vector<std::string> an_scope{"M", "N", "P", "R"};
  const std::vector<std::string> ann1_scope{"M", "N", "U", "W", "X", "Z"};

  auto vars_of = [](const GadgetFamily& g, const std::vector<std::string>& names) {
    std::vector<Var> out;
    for (const auto& n : names) out.push_back(g.roles.at(n));
    return out;
  };
  const auto an_vars = vars_of(an, an_scope);
  const auto ann1_vars = vars_of(ann1, ann1_scope);

  CountReport r;
  const auto an_models = models(an.formula, limits);
  const auto ann1_models = models(ann1.formula, limits);
  r.an_models = an_models.size();
  r.ann1_models = ann1_models.size();
  r.an_count = project(an_models, an_vars).size();
  r.ann1_count = project(ann1_models, ann1_vars).size();
  r.routes_agree = r.an_count == count_models(an.formula, an_vars, limits) &&
                   r.ann1_count == count_models(ann1.formula, ann1_vars, limits) &&
                   r.an_models == count_models(an.formula, limits) &&
                   r.ann1_models == count_models(ann1.formula, limits);
  r.an_clauses = an.formula.size();
  r.ann1_clauses = ann1.formula.size();
  r.clause_ratio = Ratio::of(r.an_clauses, r.ann1_clauses);
  r.model_ratio = Ratio::of(r.ann1_count, r.an_count);
  r.composite = r.model_ratio * r.clause_ratio;

  auto item = [&](std::string id, std::string expected, std::string observed,
                  std::vector<std::string> scope) {
    const bool match = expected == observed;
    r.items.push_back({std::move(id), std::move(expected), std::move(observed), match,
                       std::move(scope)});
  };
  item("an-count", "5", std::to_string(r.an_count), an_scope);
  item("ann1-count", "17", std::to_string(r.ann1_count), ann1_scope);
  item("clause-ratio", "1/3", r.clause_ratio.str(), {});
  item("model-ratio", "17/5", r.model_ratio.str(), {});
  item("composite-ratio", "17/15", r.composite.str(), {});
  return r;
}

Json to_json(const CountReport& r) {
  Json items = Json::array();
  for (const auto& i : r.items) {
    items.push_back(Json{{"id", i.id},
                         {"expected", i.expected},
                         {"observed", i.observed},
                         {"match", i.match},
                         {"scope", i.scope}});
  }
  return Json{{"an_count", r.an_count},
              {"ann1_count", r.ann1_count},
              {"an_models", r.an_models},
              {"ann1_models", r.ann1_models},
              {"an_clauses", r.an_clauses},
              {"ann1_clauses", r.ann1_clauses},
              {"clause_ratio", r.clause_ratio.str()},
              {"model_ratio", r.model_ratio.str()},
              {"composite_ratio", r.composite.str()},
              {"routes_agree", r.routes_agree},
              {"items", std::move(items)}};
}

}  // namespace rtl
