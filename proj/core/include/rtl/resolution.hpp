#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rtl/cnf.hpp"
#include "rtl/json_io.hpp"
#include "rtl/product.hpp"
#include "rtl/semantics.hpp"

namespace rtl {

/// Variables occurring positively in one clause and negatively in the other.
std::vector<Var> joint_variables(const Clause& a, const Clause& b);

/// Resolvent of two clauses sharing exactly one joint variable. Throws
/// NotConnectedError for zero joint variables and TautologyError for two or
/// more.
Clause resolve(const Clause& a, const Clause& b);

/// Aggregated resolution on one joint variable. Consequents are the product
/// of the antecedents with the joint variable removed; tautological products
/// are set aside in `tautologies`.
struct ResolutionStep {
  ClauseSet positive_antecedents;
  ClauseSet negative_antecedents;
  Var joint_var = 0;
  ClauseSet consequents;
  ClauseSet tautologies;
};

/// Throws PreconditionError when an antecedent lacks `v` in the required
/// polarity.
ResolutionStep multi_resolve(const ClauseSet& pos, const ClauseSet& neg, Var v);

/// One pairwise resolution inside a closure, by clause-database index.
struct DerivationStep {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  std::uint32_t result = 0;
  Var joint = 0;
  bool fresh = false;  // this step introduced `result`
};

struct ClosureOptions {
  std::size_t max_clauses = 100000;
  /// End saturation as soon as the empty clause is derived.
  bool stop_at_refutation = false;
  bool record_steps = true;
};

/// Saturated clause database. Every resolvable pair (i, j) is resolved once,
/// in FIFO order j = 0, 1, ...; i < j. Duplicate clauses share one node,
/// tautologies are dropped and counted.
struct Closure {
  std::vector<Clause> clauses;
  std::vector<DerivationStep> steps;
  /// Node of each source clause, by source index; nullopt for tautologies.
  std::vector<std::optional<std::size_t>> source_nodes;
  std::size_t initial_nodes = 0;
  std::size_t source_tautologies = 0;
  /// Pairs skipped because they clash on two or more variables.
  std::size_t tautological_pairs = 0;
  std::size_t resolutions = 0;
  bool refuted = false;
  bool truncated = false;

  std::optional<std::size_t> index_of(const Clause& c) const;
};

/// Throws ScopeError for formulas wider than 64 variables.
Closure closure(const Formula& f, const ClosureOptions& opts = {});

/// Re-executes the derivation log from the source clauses and checks it
/// rebuilds the same clause database.
bool replay(const Formula& f, const Closure& c);

Json to_json(const Formula& scope, const Closure& c, bool include_steps = true);

/// Countermodel geometry of one resolution step over the formula's scope.
struct LinkageVerdict {
  bool holds = false;
  /// ‾[consequent] = (‾[c1] ∩ ‾[consequent]) ∪ (‾[c2] ∩ ‾[consequent]).
  bool split_by_joint = false;
  /// (‾[c1] ∪ ‾[c2]) restricted to assignments falsifying every non-joint
  /// literal equals ‾[consequent].
  bool restriction_matches = false;
  /// ‾[c1] ∪ ‾[c2] is one Hamming component.
  bool union_connected = false;
  /// Every Hamming edge between ‾[c1] and ‾[c2] lies inside ‾[consequent],
  /// and at least one exists.
  bool bridge_in_consequent = false;
  Clause consequent;
  Var joint = 0;
  std::size_t consequent_falsifiers = 0;
  std::size_t left_falsifiers = 0;
  std::size_t right_falsifiers = 0;
};

LinkageVerdict linkage_check(const Formula& f, const Clause& c1, const Clause& c2,
                             const EnumerationLimits& limits = {});

}  // namespace rtl
