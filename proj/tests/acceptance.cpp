// Acceptance checks. One PASS/FAIL line per criterion; every bound and time
// budget is fixed here. The exit status is 0 only when the failing set equals
// the --expect-fail set, so a known failure stays visible without breaking
// the suite, and any change in it (new failure or unexpected pass) does.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rtl/audit.hpp"
#include "rtl/fragment.hpp"
#include "rtl/gadgets.hpp"
#include "rtl/generators.hpp"
#include "rtl/oracle.hpp"
#include "rtl/product.hpp"
#include "rtl/rcnf.hpp"
#include "rtl/resolution.hpp"
#include "brute.hpp"

using namespace rtl;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome tcnf_semantics() {
  Rng rng(kSeed + 1);
  const Formula scope = empty_formula(3);
  for (int i = 0; i < 50; ++i) {
    const auto t = tcnf(Literal(0, rng.coin()), Literal(1, rng.coin()), Literal(2, rng.coin()));
    const auto got = models(scope.with_clauses(t.clauses)).members();
    std::vector<std::uint64_t> want;
    for (std::uint64_t m = 0; m < 8; ++m) {
      int on = 0;
      for (auto l : t.lits) on += brute::lit_true(l, m);
      if (on == 1) want.push_back(m);
    }
    if (got != want || got.size() != 3) return {false, fmt("triple %d: models differ", i)};
    if (!verify_tcnf_complement(scope, t).holds) return {false, fmt("triple %d: complement", i)};
  }
  return {true, "50 triples, 3 models each, complement verified"};
}

Outcome tcnf_irreducible() {
  const auto t = tcnf(Literal::pos(0), Literal::pos(1), Literal::pos(2));
  int checked = 0;
  for (const auto& x : {canonical(t.clauses), canonical(tcnf_complement(t))}) {
    const auto oracle = brute::factor_oracle(x);
    const bool dec = decompose(x).has_value();
    const bool red = is_product_reducible(x).reducible;
    if (dec || red || oracle.decomposable || oracle.reducible) {
      return {false, fmt("set %d: decompose=%d reducible=%d oracle=%d/%d", checked, dec, red,
                         oracle.decomposable, oracle.reducible)};
    }
    ++checked;
  }
  return {true, "T_PQR and complement irreducible, oracle agrees"};
}

Outcome m1_muc() {
  const auto f = m1().formula;
  const bool unsat = !dpll(f).sat && !brute::sat(f);
  const auto v = is_muc(f);
  const bool pass = f.num_vars() == 6 && unsat && v.is_muc && v.solver_calls == 17;
  std::ostringstream d;
  d << "vars=" << f.num_vars() << " unsat=" << unsat << " is_muc=" << v.is_muc
    << " calls=" << v.solver_calls << " redundant={";
  for (std::size_t i = 0; i < v.redundant.size(); ++i) d << (i ? "," : "") << v.redundant[i];
  d << "}";
  return {pass, d.str()};
}

Outcome cmuc_counts() {
  const auto r = run_audit({"an-count-5", "ann1-count-17"});
  const auto an = a_n();
  const auto ann1 = a_n_n1();
  std::vector<Var> an_vars;
  for (const char* n : {"M", "N", "P", "R"}) an_vars.push_back(an.roles.at(n));
  std::vector<Var> ann1_vars;
  for (const char* n : {"M", "N", "U", "W", "X", "Z"}) ann1_vars.push_back(ann1.roles.at(n));
  const auto an_oracle = brute::projected_count(an.formula, an_vars);
  const auto ann1_oracle = brute::projected_count(ann1.formula, ann1_vars);
  const auto an_obs = r.claims.at(0).observed.get<std::uint64_t>();
  const auto ann1_obs = r.claims.at(1).observed.get<std::uint64_t>();
  const bool agree = an_obs == an_oracle && ann1_obs == ann1_oracle;
  return {agree, fmt("an=%llu (oracle %llu, stated 5, %s) ann1=%llu (oracle %llu, stated 17, %s)",
                     (unsigned long long)an_obs, (unsigned long long)an_oracle,
                     to_string(r.claims[0].verdict), (unsigned long long)ann1_obs,
                     (unsigned long long)ann1_oracle, to_string(r.claims[1].verdict))};
}

Outcome clause_ratio() {
  const auto r = count_report();
  const bool pass = r.an_clauses == 8 && r.ann1_clauses == 24 && r.clause_ratio == Ratio::of(1, 3) &&
                    r.composite == Ratio::of(17, 15);
  return {pass, fmt("|A|=%zu |AA|=%zu ratio=%s composite=%s (stated 17/15)", r.an_clauses,
                    r.ann1_clauses, r.clause_ratio.str().c_str(), r.composite.str().c_str())};
}

Outcome rcnf_equisat() {
  std::vector<Formula> corpus = small_formulas(3, 3);
  const std::size_t exhaustive = corpus.size();
  Rng rng(kSeed + 6);
  for (int i = 0; i < 200; ++i) corpus.push_back(random_formula(rng, 4, 1 + rng.below(8), 1, 3));
  std::size_t unsat = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& f = corpus[i];
    const auto e = rcnf_of(f);
    if (e.closure.truncated) return {false, fmt("formula %zu: closure truncated", i)};
    const bool lhs = dpll(f).sat;
    if (lhs != unit_propagate(e.horn).sat) return {false, fmt("formula %zu disagrees", i)};
    unsat += !lhs;
  }
  return {true, fmt("%zu exhaustive + 200 random formulas, %zu unsat", exhaustive, unsat)};
}

Outcome horn_templates() {
  Rng rng(kSeed + 7);
  std::size_t unsat = 0;
  for (int i = 0; i < 100; ++i) {
    const auto f = random_horn(rng, 1 + rng.below(8), 1 + rng.below(12), 4);
    const auto h = horn_to_rcnf(f);
    if (!is_horn(h.rcnf)) return {false, fmt("formula %d: output not Horn", i)};
    const bool sat = dpll(f).sat;
    if (sat != unit_propagate(h.rcnf).sat) return {false, fmt("formula %d disagrees", i)};
    unsat += !sat;
  }
  return {true, fmt("100 Horn formulas, %zu unsat, all outputs Horn", unsat)};
}

Outcome clause_tcnf() {
  Formula base;
  base.add_var("X");
  base.add_var("Y");
  base.add_var("Z");
  std::vector<Clause> patterns{base.make_clause({"-X", "Y", "-Z"})};
  for (unsigned p = 0; p < 8; ++p) {
    patterns.push_back(Clause{Literal(0, p & 1U), Literal(1, (p >> 1) & 1U), Literal(2, (p >> 2) & 1U)});
  }
  std::string verdicts;
  for (const auto& c : patterns) {
    Formula scope = base;
    const auto g = clause_to_tcnf(scope, c);
    const auto gf = scope.with_clauses(g.clauses());
    const bool holds = gf.num_vars() == 7 && verify_clause_tcnf(gf, c).holds;
    verdicts += holds ? '1' : '0';
  }
  if (verdicts != std::string(9, '1')) return {false, "per-pattern verdicts " + verdicts};
  Rng rng(kSeed + 8);
  std::size_t unsat = 0;
  for (int i = 0; i < 20; ++i) {
    const auto f = random_3cnf(rng, 3 + rng.below(2), 3);
    const auto r = reduce_3cnf_to_tcnf(f);
    const bool sat = dpll(f).sat;
    if (sat != dpll(r.formula).sat) return {false, fmt("reduction %d disagrees", i)};
    unsat += !sat;
  }
  return {true, "9 patterns hold (" + verdicts + "), 20 reductions agree"};
}

Outcome resolution_properties() {
  Rng rng(kSeed + 9);
  std::size_t derived = 0;
  for (int i = 0; i < 60; ++i) {
    const std::size_t vars = 3 + rng.below(10);  // 3..12
    const auto f = random_formula(rng, vars, 2 + rng.below(vars), 2, 3);
    const auto c = closure(f);
    if (c.truncated) return {false, fmt("soundness formula %d truncated", i)};
    const auto ms = brute::models(f);
    for (const auto& cl : c.clauses) {
      for (auto m : ms) {
        if (!brute::clause_true(cl, m)) return {false, fmt("formula %d: unsound clause", i)};
      }
    }
    derived += c.clauses.size();
  }
  std::vector<Formula> unsat;
  for (auto& f : small_formulas(3, 3)) {
    if (!brute::sat(f)) unsat.push_back(std::move(f));
  }
  const std::size_t exhaustive = unsat.size();
  // Mixed widths up to 10 variables, then pure 3CNF, whose closures come
  // close to every clause over the scope, up to 8.
  for (std::size_t mixed = 0; mixed < 300;) {
    const std::size_t vars = 4 + rng.below(7);
    auto f = random_formula(rng, vars, 3 * vars, 1, 3);
    if (!brute::sat(f)) {
      unsat.push_back(std::move(f));
      ++mixed;
    }
  }
  for (std::size_t pure = 0; pure < 20;) {
    const std::size_t vars = 4 + rng.below(5);
    auto f = random_3cnf(rng, vars, 6 * vars);
    if (!brute::sat(f)) {
      unsat.push_back(std::move(f));
      ++pure;
    }
  }
  ClosureOptions opts;
  opts.stop_at_refutation = true;
  opts.record_steps = false;
  for (std::size_t i = 0; i < unsat.size(); ++i) {
    if (!closure(unsat[i], opts).refuted) return {false, fmt("unsat formula %zu not refuted", i)};
  }
  return {true, fmt("60 formulas sound (%zu clauses), %zu unsat refuted (%zu exhaustive)", derived,
                    unsat.size(), exhaustive)};
}

Outcome linkage() {
  Rng rng(kSeed + 10);
  int pairs = 0;
  while (pairs < 100) {
    const auto f = random_formula(rng, 2 + rng.below(4), 2, 1, 3);
    if (joint_variables(f.clause(0), f.clause(1)).size() != 1) continue;
    const auto v = linkage_check(f, f.clause(0), f.clause(1));
    if (!v.holds) return {false, fmt("pair %d: %s", pairs, f.to_string().c_str())};
    ++pairs;
  }
  return {true, "100 resolvable pairs"};
}

Outcome rcnf_growth() {
  const auto s = rcnf_size(m1().formula);
  const bool pass = !s.truncated && s.variables == kM1RcnfVariables && s.clauses == kM1RcnfClauses;
  return {pass, fmt("variables=%zu clauses=%zu (baseline %zu/%zu)%s", s.variables, s.clauses,
                    kM1RcnfVariables, kM1RcnfClauses, s.truncated ? " truncated" : "")};
}

Outcome determinism() {
  AuditOptions opts;
  opts.seed = kSeed;
  const auto a = to_json(run_audit({"all"}, opts)).dump(2);
  const auto b = to_json(run_audit({"all"}, opts)).dump(2);
  return {a == b, fmt("%zu bytes, %s", a.size(), a == b ? "identical" : "differ")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "tcnf-semantics", 1, tcnf_semantics},
      {2, "tcnf-irreducible", 5, tcnf_irreducible},
      {3, "m1-muc", 1, m1_muc},
      {4, "cmuc-counts", 10, cmuc_counts},
      {5, "clause-ratio", 1, clause_ratio},
      {6, "rcnf-equisat", 60, rcnf_equisat},
      {7, "horn-templates", 30, horn_templates},
      {8, "clause-tcnf", 10, clause_tcnf},
      {9, "resolution", 60, resolution_properties},
      {10, "linkage", 10, linkage},
      {11, "rcnf-growth", 120, rcnf_growth},
      {12, "determinism", 120, determinism},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.budget_s) {
      o.pass = false;
      o.detail += fmt(" [over budget %.0f s]", c.budget_s);
    }
    if (!o.pass) failed.insert(c.id);
    std::printf("%s %2d %-17s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::printf("%zu/%zu passed", criteria.size() - failed.size(), criteria.size());
  if (!expected.empty()) std::printf(", expected failures:");
  for (int id : expected) std::printf(" %d", id);
  std::printf("\n");
  return failed == expected ? 0 : 1;
}
