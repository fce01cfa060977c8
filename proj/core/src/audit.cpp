#include "rtl/audit.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "rtl/error.hpp"
#include "rtl/fragment.hpp"
#include "rtl/gadgets.hpp"
#include "rtl/generators.hpp"
#include "rtl/oracle.hpp"
#include "rtl/product.hpp"
#include "rtl/rcnf.hpp"

namespace rtl {

namespace {

using ClaimFn = std::function<void(ClaimResult&, const AuditOptions&)>;

struct ClaimDef {
  std::string id;
  std::string statement;
  ClaimFn run;
};

void decide(ClaimResult& r) {
  r.verdict = r.expected == r.observed ? Verdict::match : Verdict::mismatch;
}

// Per-claim seeds keep claims independent of which others were selected.
Rng claim_rng(const AuditOptions& o, std::uint64_t salt) {
  return Rng(o.seed * 0x9E3779B97F4A7C15ULL + salt);
}

Formula pqr_scope() {
  Formula f;
  for (const char* n : {"P", "Q", "R"}) f.add_var(n);
  return f;
}

void tcnf_complement_claim(ClaimResult& r, const AuditOptions& o) {
  auto rng = claim_rng(o, 1);
  constexpr int kTriples = 50;
  int exactly_one = 0;
  int complement = 0;
  for (int i = 0; i < kTriples; ++i) {
    Formula scope = pqr_scope();
    const auto t = tcnf(Literal(0, rng.coin()), Literal(1, rng.coin()), Literal(2, rng.coin()));
    const auto ms = models(scope.with_clauses(t.clauses), o.limits);
    const bool one = ms.size() == 3 && std::all_of(ms.members().begin(), ms.members().end(),
                                                   [&](std::uint64_t m) {
                                                     int count = 0;
                                                     for (Literal l : t.lits) {
                                                       count += l.satisfied_by((m >> l.var()) & 1U);
                                                     }
                                                     return count == 1;
                                                   });
    exactly_one += one;
    complement += verify_tcnf_complement(scope, t, o.limits).holds;
  }
  r.expected = Json{{"exactly_one", kTriples}, {"complement_holds", kTriples}};
  r.observed = Json{{"exactly_one", exactly_one}, {"complement_holds", complement}};
  decide(r);
}

void m1_muc_claim(ClaimResult& r, const AuditOptions&) {
  const auto m = m1();
  const auto v = is_muc(m.formula);
  r.expected = Json{{"unsat", true}, {"is_muc", true}};
  r.observed = Json{{"unsat", v.unsat}, {"is_muc", v.is_muc}};
  Json redundant = Json::array();
  for (auto i : v.redundant) redundant.push_back(m.formula.to_string(m.formula.clause(i)));
  r.details = Json{{"solver_calls", v.solver_calls},
                   {"redundant_indices", v.redundant},
                   {"redundant_clauses", std::move(redundant)},
                   {"clauses", m.formula.size()},
                   {"variables", m.formula.num_vars()}};
  decide(r);
}

void count_claim(ClaimResult& r, const AuditOptions& o, std::uint64_t expected, bool ann1) {
  const auto c = count_report(o.limits);
  r.expected = expected;
  r.observed = ann1 ? c.ann1_count : c.an_count;
  const auto& item = c.items[ann1 ? 1 : 0];
  r.details = Json{{"scope", item.scope},
                   {"unprojected_models", ann1 ? c.ann1_models : c.an_models},
                   {"routes_agree", c.routes_agree}};
  decide(r);
  if (!c.routes_agree) r.verdict = Verdict::mismatch;
}

void ratio_claim(ClaimResult& r, const AuditOptions& o) {
  const auto c = count_report(o.limits);
  r.expected = "17/15";
  r.observed = c.composite.str();
  r.details = Json{{"model_ratio", c.model_ratio.str()}, {"clause_ratio", c.clause_ratio.str()}};
  decide(r);
}

void clause_ratio_claim(ClaimResult& r, const AuditOptions& o) {
  const auto c = count_report(o.limits);
  r.expected = Json{{"an_clauses", 8}, {"ann1_clauses", 24}, {"ratio", "1/3"}};
  r.observed = Json{{"an_clauses", c.an_clauses},
                    {"ann1_clauses", c.ann1_clauses},
                    {"ratio", c.clause_ratio.str()}};
  decide(r);
}

void clause_tcnf_claim(ClaimResult& r, const AuditOptions& o) {
  Json patterns = Json::array();
  int holding = 0;
  for (std::uint64_t signs = 0; signs < 8; ++signs) {
    Formula f;
    for (const char* n : {"X", "Y", "Z"}) f.add_var(n);
    const Clause c{Literal(0, (signs & 1U) != 0), Literal(1, (signs & 2U) != 0),
                   Literal(2, (signs & 4U) != 0)};
    const auto g = clause_to_tcnf(f, c);
    const auto v = verify_clause_tcnf(f.with_clauses(g.clauses()), c, o.limits);
    holding += v.holds;
    patterns.push_back(Json{{"clause", f.to_string(c)}, {"holds", v.holds}, {"blocked", v.blocked}});
  }

  auto rng = claim_rng(o, 8);
  constexpr int kFormulas = 20;
  int agree = 0;
  for (int i = 0; i < kFormulas; ++i) {
    const auto f = random_3cnf(rng, 4, 3);
    const auto red = reduce_3cnf_to_tcnf(f);
    bool per_clause = true;
    for (const auto& g : red.gadgets) {
      per_clause = per_clause && verify_clause_tcnf(red.formula.with_clauses(g.clauses()), g.source,
                                                    o.limits).holds;
    }
    agree += per_clause && dpll(f).sat == dpll(red.formula).sat;
  }
  r.expected = Json{{"patterns_holding", 8}, {"formulas_agreeing", kFormulas}};
  r.observed = Json{{"patterns_holding", holding}, {"formulas_agreeing", agree}};
  r.details = Json{{"patterns", std::move(patterns)}};
  decide(r);
}

void rcnf_equisat_claim(ClaimResult& r, const AuditOptions& o) {
  std::size_t checked = 0;
  std::size_t agree = 0;
  std::size_t truncated = 0;
  auto check = [&](const Formula& f) {
    const auto enc = rcnf_of(f, o.closure);
    ++checked;
    truncated += !enc.includes_closure;
    agree += enc.includes_closure && dpll(f).sat == unit_propagate(enc.horn).sat;
  };
  for (const auto& f : small_formulas(3, 3)) check(f);
  auto rng = claim_rng(o, 6);
  constexpr std::size_t kRandom = 200;
  for (std::size_t i = 0; i < kRandom; ++i) {
    check(random_formula(rng, 4, rng.between(1, 4), 1, 3));
  }
  r.expected = Json{{"agree", checked}, {"truncated", 0}};
  r.observed = Json{{"agree", agree}, {"truncated", truncated}};
  r.details = Json{{"formulas", checked}};
  decide(r);
}

void horn_rcnf_claim(ClaimResult& r, const AuditOptions& o) {
  auto rng = claim_rng(o, 7);
  constexpr int kFormulas = 100;
  int agree = 0;
  int horn = 0;
  int sat = 0;
  for (int i = 0; i < kFormulas; ++i) {
    const auto vars = rng.between(1, 8);
    const auto f = random_horn(rng, vars, rng.between(1, 12), std::min<std::size_t>(vars, 5));
    const auto out = horn_to_rcnf(f);
    const bool expected = dpll(f).sat;
    sat += expected;
    horn += is_horn(out.rcnf);
    agree += unit_propagate(out.rcnf).sat == expected && dpll(out.rcnf).sat == expected;
  }
  r.expected = Json{{"agree", kFormulas}, {"horn_outputs", kFormulas}};
  r.observed = Json{{"agree", agree}, {"horn_outputs", horn}};
  r.details = Json{{"satisfiable_inputs", sat}};
  decide(r);
}

void tcnf_irreducible_claim(ClaimResult& r, const AuditOptions&) {
  const auto t = tcnf(Literal::pos(0), Literal::pos(1), Literal::pos(2));
  auto verdicts = [](const ClauseSet& x) {
    return Json{{"decomposable", decompose(x).has_value()},
                {"reducible", is_product_reducible(x).reducible}};
  };
  r.expected = Json{{"tcnf", {{"decomposable", false}, {"reducible", false}}},
                    {"complement", {{"decomposable", false}, {"reducible", false}}}};
  r.observed = Json{{"tcnf", verdicts(canonical(t.clauses))},
                    {"complement", verdicts(canonical(tcnf_complement(t)))}};
  decide(r);
}

void linkage_claim(ClaimResult& r, const AuditOptions& o) {
  auto rng = claim_rng(o, 10);
  constexpr int kPairs = 100;
  int holds = 0;
  for (int i = 0; i < kPairs; ++i) {
    const auto n = rng.between(2, 5);
    const Formula scope = empty_formula(n);
    const auto joint = static_cast<Var>(rng.below(n));
    std::vector<Literal> a{Literal::pos(joint)};
    std::vector<Literal> b{Literal::neg(joint)};
    // Other variables go to a, b, both (same sign) or neither.
    for (Var v = 0; v < n; ++v) {
      if (v == joint) continue;
      const bool neg = rng.coin();
      switch (rng.below(4)) {
        case 0: a.emplace_back(v, neg); break;
        case 1: b.emplace_back(v, neg); break;
        case 2: a.emplace_back(v, neg); b.emplace_back(v, neg); break;
        default: break;
      }
    }
    const Clause ca(std::move(a));
    const Clause cb(std::move(b));
    holds += linkage_check(scope.with_clauses({ca, cb}), ca, cb, o.limits).holds;
  }
  r.expected = kPairs;
  r.observed = holds;
  decide(r);
}

void granularity_claim(ClaimResult& r, const AuditOptions& o) {
  const auto m = m1();
  const auto rep = granularity_report(m.formula, o.limits, o.closure);
  std::size_t empty = 0;
  std::size_t corresponding = 0;
  for (const auto& c : rep.clauses) {
    empty += c.exclusive.empty();
    corresponding += c.corresponds;
  }
  r.expected = Json{{"precondition_met", true}, {"correspondence_holds", true}};
  r.observed = Json{{"precondition_met", rep.precondition_met},
                    {"correspondence_holds", rep.correspondence_holds}};
  r.details = Json{{"clauses", rep.clauses.size()},
                   {"empty_exclusive_sets", empty},
                   {"corresponding_clauses", corresponding},
                   {"closure_complete", rep.closure_complete}};
  r.verdict = Verdict::informational;
}

void size_claim(ClaimResult& r, const AuditOptions& o) {
  const auto s = rcnf_size(m1().formula, o.closure);
  r.expected = Json{{"variables", kM1RcnfVariables}, {"clauses", kM1RcnfClauses}, {"truncated", false}};
  r.observed = Json{{"variables", s.variables}, {"clauses", s.clauses}, {"truncated", s.truncated}};
  r.details = Json{{"source_clauses", 16}, {"source_variables", 6}, {"max_clauses", o.closure.max_clauses}};
  decide(r);
}

void relation_claim(ClaimResult& r, const AuditOptions& o, const GadgetFamily& g) {
  const auto c = check_relations(g, o.limits);
  r.expected = true;
  r.observed = c.holds;
  r.details = Json{{"statements", c.statements}, {"models", c.models}};
  decide(r);
}

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> defs = {
      {"tcnf-complement", "T(L1,L2,L3) is true exactly when one literal is true, and its models are the falsifiers of the three-clause complement", tcnf_complement_claim},
      {"tcnf-irreducible", "T_PQR and its complement admit no direct-sum factorization", tcnf_irreducible_claim},
      {"m1-muc", "m1 is a minimal unsatisfiable core", m1_muc_claim},
      {"an-count-5", "A_n has 5 assignments over (M,N,P,R)",
       [](ClaimResult& r, const AuditOptions& o) { count_claim(r, o, 5, false); }},
      {"ann1-count-17", "A_{n,n+1} has 17 assignments over (M,N,U,W,X,Z)",
       [](ClaimResult& r, const AuditOptions& o) { count_claim(r, o, 17, true); }},
      {"clause-ratio-1-3", "|A_n| / |A_{n,n+1}| = 1/3", clause_ratio_claim},
      {"ratio-17-15", "17/5 x 1/3 = 17/15", ratio_claim},
      {"relation-an", "A_n: M = N iff P = R",
       [](ClaimResult& r, const AuditOptions& o) { relation_claim(r, o, a_n()); }},
      {"relation-on", "O_n: M = N iff P != R",
       [](ClaimResult& r, const AuditOptions& o) { relation_claim(r, o, o_n()); }},
      {"relation-ann1", "A_{n,n+1}: M = N iff (U = W) = (X = Z)",
       [](ClaimResult& r, const AuditOptions& o) { relation_claim(r, o, a_n_n1()); }},
      {"relation-onn1", "O_{n,n+1}: M = N = 0 gives (U = W) != (X = Z), M != N gives equality",
       [](ClaimResult& r, const AuditOptions& o) { relation_claim(r, o, o_n_n1()); }},
      {"clause-tcnf-equiv", "three chained TCNFs block exactly the clause's falsifying triple", clause_tcnf_claim},
      {"rcnf-equisat", "F and its RCNF encoding are equisatisfiable", rcnf_equisat_claim},
      {"horn-rcnf-sat-preserve", "the Horn-to-RCNF templates preserve satisfiability", horn_rcnf_claim},
      {"linkage", "the countermodels of a resolvent are split by the joint variable", linkage_claim},
      {"granularity-m1", "exclusive-falsifier components of m1 match RCNF antecedents", granularity_claim},
      {"rcnf-size-growth", "RCNF(m1) size against the locked baseline", size_claim},
  };
  return defs;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::informational: return "informational";
  }
  return "?";
}

bool AuditReport::all_match() const {
  return std::none_of(claims.begin(), claims.end(),
                      [](const auto& c) { return c.verdict == Verdict::mismatch; });
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

AuditReport run_audit(const std::vector<std::string>& ids, const AuditOptions& opts) {
  std::set<std::string> wanted;
  bool all = false;
  for (const auto& id : ids) {
    if (id == "all") {
      all = true;
    } else if (std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end()) {
      throw UsageError("unknown claim '" + id + "'");
    } else {
      wanted.insert(id);
    }
  }
  AuditReport report;
  report.seed = opts.seed;
  for (const auto& def : registry()) {
    if (!all && !wanted.contains(def.id)) continue;
    ClaimResult r;
    r.id = def.id;
    r.statement = def.statement;
    const auto start = std::chrono::steady_clock::now();
    def.run(r, opts);
    if (opts.timings) {
      r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               start).count();
    }
    report.claims.push_back(std::move(r));
  }
  return report;
}

Json to_json(const AuditReport& r) {
  Json claims = Json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& c : r.claims) {
    ++counts[static_cast<int>(c.verdict)];
    Json j{{"id", c.id},
           {"statement", c.statement},
           {"expected", c.expected},
           {"observed", c.observed},
           {"verdict", to_string(c.verdict)}};
    if (!c.details.is_null()) j["details"] = c.details;
    if (c.runtime_ms) j["runtime_ms"] = *c.runtime_ms;
    claims.push_back(std::move(j));
  }
  return Json{{"schema", 1},
              {"seed", r.seed},
              {"claims", std::move(claims)},
              {"summary",
               {{"total", r.claims.size()},
                {"match", counts[0]},
                {"mismatch", counts[1]},
                {"informational", counts[2]}}}};
}

}  // namespace rtl
