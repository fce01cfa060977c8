// rtl: generate gadget formulas, run reductions, count models and audit claims.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rtl/audit.hpp"
#include "rtl/dimacs.hpp"
#include "rtl/error.hpp"
#include "rtl/fragment.hpp"
#include "rtl/gadgets.hpp"
#include "rtl/generators.hpp"
#include "rtl/json_io.hpp"
#include "rtl/oracle.hpp"
#include "rtl/rcnf.hpp"

namespace {

enum Exit : int { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

using rtl::Formula;
using rtl::Json;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rtl::UsageError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json size_of(const Formula& f) {
  return Json{{"variables", f.num_vars()}, {"clauses", f.size()}};
}

rtl::Graph load_graph(const std::string& spec) {
  if (spec == "k4") return rtl::Graph::k4();
  if (spec == "petersen") return rtl::Graph::petersen();
  std::ifstream in(spec);
  if (!in) throw rtl::UsageError("unknown graph '" + spec + "' (k4, petersen or an edge-list file)");
  std::vector<rtl::Graph::Edge> edges;
  std::size_t nodes = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::size_t u = 0;
    std::size_t v = 0;
    if (!(ls >> u >> v)) throw rtl::ParseError(lineno, "expected two node indices");
    edges.emplace_back(u, v);
    nodes = std::max({nodes, u + 1, v + 1});
  }
  return rtl::Graph::from_edges(nodes, std::move(edges));
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::vector<std::string> literals;
  std::string out;
  std::string graph = "k4";
  std::size_t root = 0;
  std::size_t k = 1;
};

int run_gen(const GenArgs& a) {
  Formula f;
  if (a.kind == "tcnf") {
    std::vector<std::string> lits = a.literals.empty()
                                        ? std::vector<std::string>{"P", "Q", "R"}
                                        : a.literals;
    if (lits.size() != 3) throw rtl::UsageError("tcnf takes exactly three literals");
    rtl::add_tcnf(f, lits[0], lits[1], lits[2]);
  } else if (a.kind == "m1") {
    f = rtl::m1().formula;
  } else if (a.kind == "an") {
    f = rtl::a_n().formula;
  } else if (a.kind == "on") {
    f = rtl::o_n().formula;
  } else if (a.kind == "ann1") {
    f = rtl::a_n_n1().formula;
  } else if (a.kind == "onn1") {
    f = rtl::o_n_n1().formula;
  } else if (a.kind == "ccnf") {
    f = rtl::ccnf(load_graph(a.graph), a.root).formula;
  } else if (a.kind == "extend") {
    std::optional<rtl::Graph> g;
    if (a.k >= 2) g = load_graph(a.graph);
    f = rtl::extend_m(a.k, g).formula;
  } else {
    throw rtl::UsageError("unknown kind '" + a.kind + "'");
  }
  if (a.kind != "tcnf" && !a.literals.empty()) {
    throw rtl::UsageError(a.kind + " takes no positional literals");
  }
  write_text(a.out, rtl::to_dimacs(f));
  return kOk;
}

// ---- reduce ---------------------------------------------------------------

struct ReduceArgs {
  std::string mode;
  std::string in;
  std::string out;
  std::string sidecar;
  std::size_t max_clauses = 100000;
};

int run_reduce(const ReduceArgs& a) {
  const Formula src = rtl::read_dimacs_file(a.in);
  Formula result;
  Json side{{"schema", 1}, {"mode", a.mode}, {"input", size_of(src)}};
  int code = kOk;

  if (a.mode == "to3cnf") {
    result = rtl::to_3cnf(src);
    std::vector<std::string> fresh(result.names().begin() + static_cast<long>(src.num_vars()),
                                   result.names().end());
    side["fresh_variables"] = fresh;
  } else if (a.mode == "horn2rcnf") {
    const auto h = rtl::horn_to_rcnf(src);
    result = h.rcnf;
    Json templates = Json::array();
    for (std::size_t i = 0; i < h.rewritten.size(); ++i) {
      const auto& t = h.templates[i];
      templates.push_back(Json{{"clause", h.rewritten.to_string(h.rewritten.clause(i))},
                               {"template", t ? Json(rtl::to_string(*t)) : Json(nullptr)}});
    }
    side["rewritten"] = size_of(h.rewritten);
    side["templates"] = std::move(templates);
  } else if (a.mode == "3cnf2tcnf") {
    const auto r = rtl::reduce_3cnf_to_tcnf(src);
    result = r.formula;
    Json table = Json::array();
    for (std::size_t i = 0; i < r.gadgets.size(); ++i) {
      const auto& g = r.gadgets[i];
      std::vector<std::string> fresh;
      for (auto v : g.fresh) fresh.push_back(result.name(v));
      table.push_back(Json{{"source_index", r.source_of[i]},
                           {"clause", result.to_string(g.source)},
                           {"fresh", fresh}});
    }
    std::vector<std::string> padding;
    for (auto v : r.padding) padding.push_back(result.name(v));
    side["gadgets"] = std::move(table);
    side["padding"] = padding;
    side["dropped_tautologies"] = r.dropped_tautologies;
  } else if (a.mode == "rcnf") {
    rtl::ClosureOptions opts;
    opts.max_clauses = a.max_clauses;
    const auto enc = rtl::rcnf_of(src, opts);
    result = enc.horn;
    side["closure"] = Json{{"clauses", enc.closure.clauses.size()},
                           {"resolutions", enc.closure.resolutions},
                           {"tautological_pairs", enc.closure.tautological_pairs},
                           {"refuted", enc.closure.refuted},
                           {"truncated", enc.closure.truncated},
                           {"max_clauses", a.max_clauses}};
    side["includes_closure"] = enc.includes_closure;
    side["warnings"] = enc.warnings;
    if (!enc.includes_closure) {
      for (const auto& w : enc.warnings) std::cerr << "rtl: warning: " << w << "\n";
      code = kResource;
    }
  } else {
    throw rtl::UsageError("unknown mode '" + a.mode + "'");
  }

  side["output"] = size_of(result);
  write_text(a.out, rtl::to_dimacs(result));
  std::string sidecar = a.sidecar;
  if (sidecar.empty() && !a.out.empty() && a.out != "-") sidecar = a.out + ".json";
  if (!sidecar.empty()) write_text(sidecar, dump(side));
  return code;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> claims;
  std::string json;
  bool timings = false;
  std::size_t max_clauses = 100000;
  std::size_t max_vars = 24;
};

int run_verify(const VerifyArgs& a) {
  rtl::AuditOptions opts;
  opts.seed = rtl::seed_from_env();
  opts.timings = a.timings;
  opts.closure.max_clauses = a.max_clauses;
  opts.limits.max_vars = a.max_vars;
  const auto claims = a.claims.empty() ? std::vector<std::string>{"all"} : a.claims;
  const auto report = rtl::run_audit(claims, opts);
  write_text(a.json, dump(rtl::to_json(report)));
  for (const auto& c : report.claims) {
    std::cerr << c.id << ": " << rtl::to_string(c.verdict) << "\n";
  }
  return report.all_match() ? kOk : kMismatch;
}

// ---- count ----------------------------------------------------------------

struct CountArgs {
  std::string in;
  std::string project;
  std::size_t max_vars = 24;
};

int run_count(const CountArgs& a) {
  const Formula f = rtl::read_dimacs_file(a.in);
  rtl::EnumerationLimits limits;
  limits.max_vars = a.max_vars;
  std::uint64_t n = 0;
  if (a.project.empty()) {
    n = rtl::count_models(f, limits);
  } else {
    std::vector<rtl::Var> vars;
    std::stringstream ss(a.project);
    std::string name;
    while (std::getline(ss, name, ',')) {
      auto v = f.find_var(name);
      if (!v) throw rtl::UsageError("unknown variable '" + name + "' in --project");
      vars.push_back(*v);
    }
    n = rtl::count_models(f, vars, limits);
  }
  std::cout << n << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CNF gadget laboratory and claim auditor"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a gadget formula as DIMACS");
  gen_cmd->add_option("kind", gen.kind, "tcnf, m1, an, on, ann1, onn1, ccnf or extend")->required();
  gen_cmd->add_option("literals", gen.literals, "Three literal specs for tcnf, e.g. P ~S T");
  gen_cmd->add_option("-o,--output", gen.out, "Output path (default stdout)");
  gen_cmd->add_option("--graph", gen.graph, "k4, petersen or an edge-list file")
      ->capture_default_str();
  gen_cmd->add_option("--root", gen.root, "Root node for ccnf")->capture_default_str();
  gen_cmd->add_option("--k", gen.k, "Level for extend")->capture_default_str();

  ReduceArgs red;
  auto* red_cmd = app.add_subcommand("reduce", "Apply a reduction to a DIMACS file");
  red_cmd->add_option("mode", red.mode, "to3cnf, horn2rcnf, 3cnf2tcnf or rcnf")->required();
  red_cmd->add_option("input", red.in, "Input DIMACS file")->required();
  red_cmd->add_option("-o,--output", red.out, "Output DIMACS (default stdout)");
  red_cmd->add_option("--sidecar", red.sidecar, "Sidecar JSON path (default <output>.json)");
  red_cmd->add_option("--max-clauses", red.max_clauses, "Closure clause cap for rcnf")
      ->capture_default_str();

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Audit claims and emit a JSON report");
  ver_cmd->add_option("claims", ver.claims, "Claim ids or 'all' (default all)");
  ver_cmd->add_option("--json", ver.json, "Report path (default stdout)");
  ver_cmd->add_flag("--timings", ver.timings, "Include runtime_ms per claim");
  ver_cmd->add_option("--max-clauses", ver.max_clauses, "Closure clause cap")
      ->capture_default_str();
  ver_cmd->add_option("--max-vars", ver.max_vars, "Enumeration variable cap")
      ->capture_default_str();
  ver_cmd->add_flag_callback("--list", [] {
    for (const auto& id : rtl::claim_ids()) std::cout << id << "\n";
    throw CLI::Success();
  }, "List claim ids and exit");

  CountArgs cnt;
  auto* cnt_cmd = app.add_subcommand("count", "Print the exact (projected) model count");
  cnt_cmd->add_option("input", cnt.in, "Input DIMACS file")->required();
  cnt_cmd->add_option("--project", cnt.project, "Comma-separated variable names");
  cnt_cmd->add_option("--max-vars", cnt.max_vars, "Enumeration variable cap")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*red_cmd) return run_reduce(red);
    if (*ver_cmd) return run_verify(ver);
    if (*cnt_cmd) return run_count(cnt);
  } catch (const rtl::EnumerationLimitError& e) {
    std::cerr << "rtl: " << e.what() << "\n";
    return kResource;
  } catch (const rtl::SearchLimitError& e) {
    std::cerr << "rtl: " << e.what() << "\n";
    return kResource;
  } catch (const rtl::Error& e) {
    std::cerr << "rtl: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
