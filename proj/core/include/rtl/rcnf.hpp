#pragma once

// Horn encodings of resolution topology: one indicator variable per clause
// ("this restriction is present"), one implication per resolution step.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rtl/cnf.hpp"
#include "rtl/json_io.hpp"
#include "rtl/oracle.hpp"
#include "rtl/resolution.hpp"
#include "rtl/semantics.hpp"

namespace rtl {

/// Indicator name for a clause: "c[" + literals joined by "|" + "]", negative
/// literals prefixed with "-", e.g. "c[P|-Q]".
std::string indicator_name(const Formula& scope, const Clause& c);

struct RcnfEncoding {
  Formula horn;
  Formula source;
  Closure closure;
  /// Closure node of each indicator variable, by indicator index.
  std::vector<std::size_t> indicator_node;
  /// Indicator of each closure node; nullopt for the empty clause.
  std::vector<std::optional<Var>> node_indicator;
  bool includes_closure = true;
  std::vector<std::string> warnings;
};

/// Units for the source clauses, then (¬a ∨ ¬b ∨ t) per step with a
/// non-empty consequent t and (¬a ∨ ¬b) per step deriving the empty clause.
/// An empty source clause is copied as the empty clause.
RcnfEncoding rcnf_of(const Formula& f, ClosureOptions opts = {});

struct RcnfSize {
  std::size_t variables = 0;
  std::size_t clauses = 0;
  bool truncated = false;
};

RcnfSize rcnf_size(const Formula& f, ClosureOptions opts = {});

enum class HornTemplate { unit, binary, ternary, empty };

const char* to_string(HornTemplate t);

struct HornRcnf {
  Formula rcnf;
  /// The chained width-3 rewrite the templates were applied to.
  Formula rewritten;
  /// Template used for each clause of `rewritten`; nullopt for tautologies,
  /// which are dropped.
  std::vector<std::optional<HornTemplate>> templates;
};

/// Chain rewrite to width <= 3, then per clause:
///   (R)          -> (c_R)(¬c_R ∨ ¬c_R̄)
///   (P ∨ ¬q)     -> (c_Pq̄)(c_P ∨ ¬c_Pq̄ ∨ ¬c_q)(¬c_P ∨ ¬c_P̄)
///   (I ∨ ¬j ∨ ¬k) -> six conjuncts through c_Ij̄, c_Ik̄ and c_I
/// In headless clauses the first literal takes the role of P or I.
/// Duplicate output clauses are dropped. ClassificationError unless Horn.
HornRcnf horn_to_rcnf(const Formula& f);

struct PropagationResult {
  bool sat = false;
  /// Forced-true variables; everything else false. Meaningful when sat.
  Assignment assignment;
};

/// Linear-time forward chaining for Horn formulas. ClassificationError
/// unless Horn.
PropagationResult unit_propagate(const Formula& f);

struct ComponentMatch {
  AssignmentSet members;
  /// Antecedent indicators whose clause has exactly these falsifiers.
  std::vector<std::string> indicators;
};

struct ClauseGranularity {
  std::size_t index = 0;
  Clause clause;
  AssignmentSet exclusive;
  std::vector<ComponentMatch> components;
  /// Product reducibility of the maxterm clauses of `exclusive`; nullopt
  /// when the set exceeds the search cap.
  std::optional<bool> reducible;
  bool corresponds = false;
};

struct GranularityReport {
  bool precondition_met = false;  // the formula is a MUC
  MucVerdict muc;
  bool closure_complete = true;
  std::vector<ClauseGranularity> clauses;
  /// Every clause has a nonempty exclusive set and every component matches
  /// at least one antecedent indicator.
  bool correspondence_holds = false;
};

GranularityReport granularity_report(const Formula& f, const EnumerationLimits& limits = {},
                                     ClosureOptions opts = {});

Json to_json(const Formula& scope, const GranularityReport& r);

}  // namespace rtl
