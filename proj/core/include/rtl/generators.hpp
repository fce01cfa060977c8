#pragma once

// Seeded formula generators for the randomized suites. Draws use only the
// raw 64-bit engine output, so sequences are identical across standard
// libraries.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rtl/cnf.hpp"

namespace rtl {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Seed from RTL_SEED, 0 when unset or unparsable.
std::uint64_t seed_from_env();

/// Scope x1..xn.
Formula empty_formula(std::size_t vars);

/// Clauses of width in [min_width, max_width] over distinct variables; the
/// upper width is clamped to the scope.
Formula random_formula(Rng& rng, std::size_t vars, std::size_t clauses, std::size_t min_width,
                       std::size_t max_width);
/// As above with at most one positive literal per clause.
Formula random_horn(Rng& rng, std::size_t vars, std::size_t clauses, std::size_t max_width);
/// Clauses of exactly three literals.
Formula random_3cnf(Rng& rng, std::size_t vars, std::size_t clauses);

/// Every formula over x1..xn (n = 1..max_vars) made of at most max_clauses
/// distinct nonempty non-tautological clauses, in canonical order.
std::vector<Formula> small_formulas(std::size_t max_vars, std::size_t max_clauses);

}  // namespace rtl
