#pragma once

// Exactly-one gadgets (TCNF), the clause-to-TCNF translation, CCNF assembly
// over cubic graphs and the fixed gadget families built from them.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rtl/cnf.hpp"
#include "rtl/graph.hpp"
#include "rtl/json_io.hpp"
#include "rtl/oracle.hpp"
#include "rtl/semantics.hpp"

namespace rtl {

/// T(L1, L2, L3) = (¬L1 ∨ ¬L2)(¬L2 ∨ ¬L3)(¬L1 ∨ ¬L3)(L1 ∨ L2 ∨ L3): true
/// exactly when one of the three literals is true.
struct TcnfInstance {
  std::array<Literal, 3> lits;
  std::vector<Clause> clauses;
};

/// Throws ConstructionError when two literals share a variable.
TcnfInstance tcnf(Literal l1, Literal l2, Literal l3);
/// Resolves literal specs ("P", "-T") in `f`, adding variables as needed, and
/// appends the four clauses.
TcnfInstance add_tcnf(Formula& f, std::string_view l1, std::string_view l2, std::string_view l3);

/// The three-clause formula whose falsifiers are the models of T:
/// (L1 ∨ L2 ∨ ¬L3)(L1 ∨ ¬L2 ∨ L3)(¬L1 ∨ L2 ∨ L3).
std::vector<Clause> tcnf_complement(const TcnfInstance& t);

struct EquivalenceVerdict {
  bool holds = false;
  /// A member of the symmetric difference, over the formula scope.
  std::optional<std::uint64_t> counterexample;
};

/// models(T) = countermodels(complement) over the scope of `scope`.
EquivalenceVerdict verify_tcnf_complement(const Formula& scope, const TcnfInstance& t,
                                          const EnumerationLimits& limits = {});

/// T(S, T, g1) ∧ T(T, U, g2) ∧ T(U, V, g3) for C = (l1 ∨ l2 ∨ l3) with
/// g1 = ¬l1, g2 = l2, g3 = ¬l3. The blocked triple (g1, g2, g3) = (1, 0, 1)
/// is then exactly C's falsifying assignment.
struct ClauseGadget {
  Clause source;
  std::array<Var, 4> fresh{};
  std::array<TcnfInstance, 3> gadgets;

  std::vector<Clause> clauses() const;
};

/// Adds four fresh variables to `scope`. Throws PreconditionError unless C has
/// exactly three literals over distinct variables.
ClauseGadget clause_to_tcnf(Formula& scope, const Clause& c);

struct ClauseTcnfVerdict {
  bool holds = false;
  /// Triples over C's variables (bit i = value of C's i-th variable) that no
  /// extension of G satisfies.
  std::vector<std::uint64_t> blocked;
  std::uint64_t expected = 0;
  std::optional<std::uint64_t> counterexample;
};

/// Checks, by enumerating the scope of `g`, that the blocked triples of G are
/// exactly C's falsifier.
ClauseTcnfVerdict verify_clause_tcnf(const Formula& g, const Clause& c,
                                     const EnumerationLimits& limits = {});

struct TcnfReduction {
  Formula formula;
  std::vector<ClauseGadget> gadgets;
  /// Source clause index of every gadget.
  std::vector<std::size_t> source_of;
  /// Fresh variables used to pad clauses shorter than three literals.
  std::vector<Var> padding;
  std::size_t dropped_tautologies = 0;
};

/// Pads short clauses to width 3 through fresh variables, drops tautologies
/// and replaces every clause by its gadget. ClassificationError for clauses
/// wider than 3 or empty.
TcnfReduction reduce_3cnf_to_tcnf(const Formula& f);

struct CcnfInstance {
  Graph graph;
  std::size_t root = 0;
  Formula formula;
  std::vector<TcnfInstance> node_gadgets;
  std::vector<Var> edge_vars;
  /// BFS distance from the root.
  std::vector<std::size_t> ring_index;
  /// "t<m>:A-BC": ring index, then the edge towards the root, then the rest.
  std::vector<std::string> notation;
};

/// Pairs (node, edge) whose literal appears negated in that node's gadget.
using NegationMap = std::set<std::pair<std::size_t, std::size_t>>;

/// One variable per edge (named by `edge_names`, default "e<u>_<v>") and one
/// gadget per node. Node literals list the BFS parent edge first and the
/// remaining incident edges by index. StructureError unless cubic and
/// connected.
CcnfInstance ccnf(const Graph& g, std::size_t root, const NegationMap& negations = {},
                  const std::vector<std::string>& edge_names = {});

enum class GadgetKind { m1, a_n, o_n, a_n_n1, o_n_n1, extended };

const char* to_string(GadgetKind k);

struct GadgetFamily {
  GadgetKind kind = GadgetKind::m1;
  Formula formula;
  std::vector<TcnfInstance> gadgets;
  std::map<std::string, Var> roles;
  std::optional<CcnfInstance> ccnf;
  std::optional<bool> sat;
  std::optional<MucVerdict> muc;
};

/// T_PQR ∧ T_{P-ST̄} ∧ T_{Q-TŪ} ∧ T_{R-US̄}.
GadgetFamily m1();
/// T_{M-PQ} ∧ T_{N-QR}.
GadgetFamily a_n();
/// T_{M-PQ} ∧ T_{N-Q̄R}.
GadgetFamily o_n();
/// T_{M-PQ} ∧ T_{N-RS} ∧ T_{P-UV} ∧ T_{R-VW} ∧ T_{Q-XY} ∧ T_{S-YZ}.
GadgetFamily a_n_n1();
/// T_{M-PQ} ∧ T_{N-RS} ∧ T_{P-UV} ∧ T_{R-VW} ∧ T_{Q̄-XY} ∧ T_{S̄-ȲZ}.
GadgetFamily o_n_n1();

/// Names for the six K4 edges and the negations under which ccnf over K4
/// rooted at node 0 yields m1's clause set.
std::vector<std::string> m1_edge_names();
NegationMap m1_negations();

/// k = 1 gives m1(). For k >= 2 a cubic graph is required (UnsupportedError
/// otherwise): BFS-tree edges stay positive at both ends, every other edge is
/// negated at its higher-index endpoint, and SAT/MUC verdicts come from the
/// oracle.
GadgetFamily extend_m(std::size_t k, const std::optional<Graph>& graph = std::nullopt);

struct RelationCheck {
  bool holds = false;
  std::size_t models = 0;
  std::vector<std::string> statements;
  std::optional<std::uint64_t> counterexample;
};

/// The implication pair stated for a_n, o_n, a_n_n1 and o_n_n1, checked on
/// every model. UnsupportedError for other kinds.
RelationCheck check_relations(const GadgetFamily& g, const EnumerationLimits& limits = {});

struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Ratio of(std::uint64_t num, std::uint64_t den);
  std::string str() const;
  friend Ratio operator*(const Ratio& a, const Ratio& b) {
    return of(a.num * b.num, a.den * b.den);
  }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct CountItem {
  std::string id;
  std::string expected;
  std::string observed;
  bool match = false;
  std::vector<std::string> scope;
};

struct CountReport {
  std::uint64_t an_count = 0;
  std::uint64_t ann1_count = 0;
  std::uint64_t an_models = 0;
  std::uint64_t ann1_models = 0;
  std::size_t an_clauses = 0;
  std::size_t ann1_clauses = 0;
  Ratio clause_ratio;
  Ratio model_ratio;
  Ratio composite;
  /// Enumeration and the DPLL-based counter gave the same projected counts.
  bool routes_agree = false;
  std::vector<CountItem> items;
};

CountReport count_report(const EnumerationLimits& limits = {});

Json to_json(const CountReport& r);

}  // namespace rtl
