#pragma once

// Clauses product (pairwise literal-set unions) and bounded search for direct
// sums X = Y × Z.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rtl/cnf.hpp"

namespace rtl {

/// Sorted, duplicate-free clause list (canonical clause order).
using ClauseSet = std::vector<Clause>;

ClauseSet canonical(std::vector<Clause> clauses);
ClauseSet canonical(const Formula& f);

/// All unions y ∪ z, deduplicated. Tautological unions are kept; callers can
/// detect them with Clause::tautological().
ClauseSet clauses_product(const ClauseSet& a, const ClauseSet& b);

/// X = left × right with |X| > |left| + |right|, both sides holding at least
/// two nonempty non-tautological clauses. witness[i] gives the (left, right)
/// indices whose union is X[i].
struct Factorization {
  ClauseSet left;
  ClauseSet right;
  std::vector<std::pair<std::size_t, std::size_t>> witness;
};

struct DecomposeOptions {
  /// Upper bound on clauses per factor; 0 means bounded only by |X|.
  std::size_t max_factor_size = 0;
  /// Largest clause set accepted.
  std::size_t clause_cap = 12;
};

/// Deterministic exhaustive search; factors are tried in (size, literal)
/// order with |left| <= |right|. Throws SearchLimitError above the cap.
std::optional<Factorization> decompose(const ClauseSet& x, const DecomposeOptions& opts = {});

/// Re-multiplies the factors and checks every invariant of a Factorization.
bool check_factorization(const ClauseSet& x, const Factorization& f);

struct ReducibilityOptions {
  /// Largest witness subset considered; 0 means all subsets.
  std::size_t subset_cap = 0;
  std::size_t clause_cap = 12;
};

struct ReducibilityVerdict {
  bool reducible = false;
  ClauseSet witness;  // the factored subset x ⊆ X
  std::optional<Factorization> factorization;
};

ReducibilityVerdict is_product_reducible(const ClauseSet& x, const ReducibilityOptions& opts = {});
ReducibilityVerdict is_product_reducible(const Formula& f, const ReducibilityOptions& opts = {});

/// One row of the projection table: representative sub-clause `a` and
/// B_[a] = { x \ a : x ∈ X, a ⊊ x }.
struct ProjectionEntry {
  Clause representative;
  ClauseSet projection;
};

struct ProjectionTable {
  std::vector<ProjectionEntry> entries;
  /// max |B_[a] ∩ B_[b]| over distinct representatives.
  std::size_t max_pairwise_intersection = 0;
};

ProjectionTable projection_table(const ClauseSet& x);

/// One full-width clause per member, falsified by that member alone. Its
/// countermodels are exactly `s`.
ClauseSet maxterm_clauses(const AssignmentSet& s);

}  // namespace rtl
