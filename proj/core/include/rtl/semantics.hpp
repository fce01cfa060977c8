#pragma once

// Evaluation, exhaustive model enumeration and the Hamming geometry of
// assignment sets.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rtl/cnf.hpp"

namespace rtl {

struct EnumerationLimits {
  /// Largest scope that may be enumerated exhaustively.
  std::size_t max_vars = 24;
};

/// Throws EnumerationLimitError when `vars` exceeds the cap.
void check_enumerable(std::size_t vars, const EnumerationLimits& limits);

/// Tautological clauses are always true; the empty clause is always false.
bool evaluate(const Clause& c, const Assignment& a);
/// Throws ScopeError unless `a` is total over the formula's scope.
bool evaluate(const Formula& f, const Assignment& a);

/// [F]: every assignment over the scope that satisfies all clauses.
AssignmentSet models(const Formula& f, const EnumerationLimits& limits = {});
/// The complement of models() within the full assignment space.
AssignmentSet countermodels(const Formula& f, const EnumerationLimits& limits = {});
/// Assignments falsifying exactly the clause at `index` and no other clause.
AssignmentSet exclusive_falsifiers(const Formula& f, std::size_t index,
                                   const EnumerationLimits& limits = {});
/// As above for the first occurrence of `c`; MembershipError when absent.
AssignmentSet exclusive_falsifiers(const Formula& f, const Clause& c,
                                   const EnumerationLimits& limits = {});
/// Falsifiers of a single clause over the scope of `f`.
AssignmentSet falsifiers(const Formula& f, const Clause& c, const EnumerationLimits& limits = {});

/// The full 2^n assignment space of a formula's scope.
AssignmentSet full_space(const Formula& f, const EnumerationLimits& limits = {});

/// Restriction of every member to `vars` (in the given order), deduplicated.
AssignmentSet project(const AssignmentSet& s, std::span<const Var> vars);
AssignmentSet project(const AssignmentSet& s, std::span<const std::string> names);

std::size_t hamming(const Assignment& a, const Assignment& b);
/// Partition under Hamming-1 adjacency. Components are listed by smallest
/// member, members ascending.
std::vector<AssignmentSet> components(const AssignmentSet& s);

AssignmentSet set_union(const AssignmentSet& a, const AssignmentSet& b);
AssignmentSet set_intersection(const AssignmentSet& a, const AssignmentSet& b);

}  // namespace rtl
