#pragma once

#include <string>
#include <vector>

#include "rtl/cnf.hpp"

namespace rtl {

struct ClauseFragment {
  bool three_cnf = false;  // at most 3 literals
  bool horn = false;       // at most 1 positive literal
  bool two_cnf = false;    // at most 2 literals
  /// Implication reading, e.g. "¬x_P ∧ ¬x_Q → x_R" or "x_p ∧ x_q → x_r".
  std::string implication;
};

struct FragmentInfo {
  bool three_cnf = true;
  bool horn = true;
  bool two_cnf = true;
  std::vector<ClauseFragment> clauses;
};

bool is_horn(const Clause& c);
bool is_horn(const Formula& f);

/// Fragment membership of the whole formula plus a per-clause implication
/// rendering: the consequent is the last positive literal (or ⊥ when there is
/// none) and the premises are the complements of the remaining literals.
FragmentInfo classify_fragment(const Formula& f);
ClauseFragment classify_clause(const Formula& scope, const Clause& c);

/// Equisatisfiable rewrite with every clause of width <= 3. Horn clauses are
/// chained so the result stays Horn:
///   (I ∨ ¬j ∨ ¬k ∨ ¬l) -> (I ∨ ¬j ∨ ¬y0)(y0 ∨ ¬k ∨ ¬y1)(y1 ∨ ¬l ∨ ¬y2)(y2)
/// Other wide clauses use the usual split through fresh linking variables.
/// Fresh variables are named "_y<N>".
Formula to_3cnf(const Formula& f);

}  // namespace rtl
