#pragma once

// Ground-truth machinery used to audit everything else. Deliberately plain:
// no learning, deterministic branching, no shared code with the enumeration
// engine in semantics.hpp.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "rtl/cnf.hpp"
#include "rtl/semantics.hpp"

namespace rtl {

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
};

struct SolveResult {
  bool sat = false;
  std::optional<Assignment> witness;
  SolveStats stats;
};

/// DPLL with unit propagation. Branches on the lowest-index unassigned
/// variable, trying false first; unconstrained variables end up false.
SolveResult dpll(const Formula& f);

/// Exact model count over the scope, or the number of distinct restrictions
/// of models to `projection` when given.
std::uint64_t count_models(const Formula& f, const EnumerationLimits& limits = {});
std::uint64_t count_models(const Formula& f, std::span<const Var> projection,
                           const EnumerationLimits& limits = {});

struct MucVerdict {
  bool is_muc = false;
  bool unsat = false;
  /// False when the call budget ran out before every deletion was checked.
  bool complete = true;
  std::size_t solver_calls = 0;
  /// Clause indices whose deletion leaves the formula unsatisfiable.
  std::vector<std::size_t> redundant;
};

/// One solver call on F and one per single-clause deletion; never stops
/// early so the full redundancy list is reported.
MucVerdict is_muc(const Formula& f,
                  std::size_t max_calls = std::numeric_limits<std::size_t>::max());

/// Deletion-based extraction in ascending clause order. Throws
/// PreconditionError when F is satisfiable.
Formula muc_extract(const Formula& f);

}  // namespace rtl
