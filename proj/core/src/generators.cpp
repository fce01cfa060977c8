#include "rtl/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <functional>

#include "rtl/error.hpp"

namespace rtl {

namespace {

std::vector<Var> pick_vars(Rng& rng, std::size_t vars, std::size_t count) {
  std::vector<Var> pool(vars);
  for (std::size_t i = 0; i < vars; ++i) pool[i] = static_cast<Var>(i);
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + rng.below(vars - i)]);
  }
  pool.resize(count);
  return pool;
}

// Clamps the upper width to the scope; the lower one must fit as given.
std::size_t check_width(std::size_t vars, std::size_t min_width, std::size_t max_width) {
  if (min_width > max_width || min_width > vars) {
    throw PreconditionError("clause width range [" + std::to_string(min_width) + ", " +
                            std::to_string(max_width) + "] does not fit " + std::to_string(vars) +
                            " variables");
  }
  return std::min(max_width, vars);
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("Rng::below needs a positive bound");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("RTL_SEED");
  if (!s) return 0;
  std::uint64_t seed = 0;
  const auto* end = s + std::strlen(s);
  auto [ptr, ec] = std::from_chars(s, end, seed);
  if (ec != std::errc() || ptr != end) return 0;
  return seed;
}

Formula empty_formula(std::size_t vars) {
  Formula f;
  for (std::size_t i = 1; i <= vars; ++i) f.add_var("x" + std::to_string(i));
  return f;
}

Formula random_formula(Rng& rng, std::size_t vars, std::size_t clauses, std::size_t min_width,
                       std::size_t max_width) {
  max_width = check_width(vars, min_width, max_width);
  Formula f = empty_formula(vars);
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<Literal> lits;
    for (Var v : pick_vars(rng, vars, rng.between(min_width, max_width))) {
      lits.emplace_back(v, rng.coin());
    }
    f.add_clause(Clause(std::move(lits)));
  }
  return f;
}

Formula random_horn(Rng& rng, std::size_t vars, std::size_t clauses, std::size_t max_width) {
  max_width = check_width(vars, 1, max_width);
  Formula f = empty_formula(vars);
  for (std::size_t c = 0; c < clauses; ++c) {
    const auto chosen = pick_vars(rng, vars, rng.between(1, max_width));
    // Half of the clauses get a head, placed on a random chosen variable.
    const auto head = rng.coin() ? rng.below(chosen.size()) : chosen.size();
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < chosen.size(); ++i) lits.emplace_back(chosen[i], i != head);
    f.add_clause(Clause(std::move(lits)));
  }
  return f;
}

Formula random_3cnf(Rng& rng, std::size_t vars, std::size_t clauses) {
  return random_formula(rng, vars, clauses, 3, 3);
}

std::vector<Formula> small_formulas(std::size_t max_vars, std::size_t max_clauses) {
  std::vector<Formula> out;
  for (std::size_t n = 1; n <= max_vars; ++n) {
    const Formula scope = empty_formula(n);
    // Every variable is absent, positive or negative: 3^n - 1 nonempty clauses.
    std::vector<Clause> pool;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
      std::vector<Literal> lits;
      std::size_t rest = code;
      for (std::size_t v = 0; v < n; ++v, rest /= 3) {
        if (rest % 3 != 0) lits.emplace_back(static_cast<Var>(v), rest % 3 == 2);
      }
      pool.emplace_back(std::move(lits));
    }
    std::sort(pool.begin(), pool.end());

    std::vector<Clause> current;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
      out.push_back(scope.with_clauses(current));
      if (current.size() == max_clauses) return;
      for (std::size_t i = from; i < pool.size(); ++i) {
        current.push_back(pool[i]);
        extend(i + 1);
        current.pop_back();
      }
    };
    extend(0);
  }
  return out;
}

}  // namespace rtl
