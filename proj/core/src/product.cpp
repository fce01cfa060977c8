#include "rtl/product.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "rtl/error.hpp"

namespace rtl {

namespace {

constexpr std::size_t kMaxSubClauseWidth = 16;

using Mask = std::uint64_t;

/// Nonempty, non-tautological sub-clauses of the members of `x`.
ClauseSet sub_clauses(const ClauseSet& x, bool proper_only) {
  std::vector<Clause> out;
  for (const auto& c : x) {
    if (c.size() > kMaxSubClauseWidth) {
      throw SearchLimitError("clause wider than " + std::to_string(kMaxSubClauseWidth) +
                             " literals in factor search");
    }
    const auto lits = c.literals();
    const Mask full = (Mask{1} << lits.size()) - 1;
    for (Mask pick = 1; pick <= full; ++pick) {
      if (proper_only && pick == full) continue;
      std::vector<Literal> sub;
      for (std::size_t i = 0; i < lits.size(); ++i) {
        if ((pick >> i) & 1U) sub.push_back(lits[i]);
      }
      Clause s(std::move(sub));
      if (!s.tautological()) out.push_back(std::move(s));
    }
  }
  return canonical(std::move(out));
}

/// Shared search for both decompose (exact cover of X) and reducibility
/// (some product inside X larger than its description).
class FactorSearch {
 public:
  enum class Mode { Exact, Subset };

  FactorSearch(const ClauseSet& x, Mode mode, std::size_t max_factor, std::size_t subset_cap)
      : x_(x), mode_(mode), subset_cap_(subset_cap == 0 ? x.size() : subset_cap) {
    for (std::size_t i = 0; i < x_.size(); ++i) index_.emplace(x_[i], i);
    cands_ = sub_clauses(x_, false);
    max_factor_ = max_factor == 0 ? x_.size() : max_factor;
  }

  std::optional<Factorization> run() {
    if (x_.size() < 6) return std::nullopt;  // |Y|,|Z| >= 2 and |Y|·|Z| >= |X| > |Y|+|Z|
    std::vector<std::size_t> all(cands_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> y;
    if (extend_left(y, all, 0)) return result_;
    return std::nullopt;
  }

 private:
  std::optional<std::size_t> lookup(const Clause& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t max_left() const { return std::min(max_factor_, (x_.size() - 1) / 2); }

  bool extend_left(std::vector<std::size_t>& y, const std::vector<std::size_t>& pool,
                   std::size_t from) {
    if (y.size() >= 2 && search_right(y, pool)) return true;
    if (y.size() >= max_left()) return false;
    for (std::size_t i = from; i < cands_.size(); ++i) {
      std::vector<std::size_t> next;
      for (auto z : pool) {
        if (lookup(cands_[i].merged(cands_[z]))) next.push_back(z);
      }
      // |Z| >= max(2, |Y|) and the pool only shrinks as Y grows.
      if (next.size() < std::max<std::size_t>(2, y.size() + 1)) continue;
      y.push_back(i);
      if (extend_left(y, next, i + 1)) return true;
      y.pop_back();
    }
    return false;
  }

  bool search_right(const std::vector<std::size_t>& y, const std::vector<std::size_t>& pool) {
    std::vector<Mask> cover(pool.size(), 0);
    for (std::size_t k = 0; k < pool.size(); ++k) {
      for (auto yi : y) cover[k] |= Mask{1} << *lookup(cands_[yi].merged(cands_[pool[k]]));
    }
    const std::size_t lo = std::max<std::size_t>(2, y.size());
    const std::size_t hi = std::min(max_factor_, x_.size() - 1 - y.size());
    std::vector<std::size_t> z;
    for (std::size_t size = lo; size <= hi; ++size) {
      if (pick_right(y, pool, cover, z, 0, 0, size)) return true;
    }
    return false;
  }

  bool pick_right(const std::vector<std::size_t>& y, const std::vector<std::size_t>& pool,
                  const std::vector<Mask>& cover, std::vector<std::size_t>& z, std::size_t from,
                  Mask covered, std::size_t size) {
    if (z.size() == size) {
      const auto count = static_cast<std::size_t>(std::popcount(covered));
      const bool ok = mode_ == Mode::Exact ? count == x_.size()
                                           : count > y.size() + z.size() && count <= subset_cap_;
      if (ok) record(y, pool, z);
      return ok;
    }
    for (std::size_t k = from; k + (size - z.size()) <= pool.size(); ++k) {
      z.push_back(k);
      if (pick_right(y, pool, cover, z, k + 1, covered | cover[k], size)) return true;
      z.pop_back();
    }
    return false;
  }

  void record(const std::vector<std::size_t>& y, const std::vector<std::size_t>& pool,
              const std::vector<std::size_t>& z) {
    Factorization f;
    for (auto i : y) f.left.push_back(cands_[i]);
    for (auto k : z) f.right.push_back(cands_[pool[k]]);
    f.left = canonical(std::move(f.left));
    f.right = canonical(std::move(f.right));
    result_ = std::move(f);
  }

  const ClauseSet& x_;
  Mode mode_;
  std::size_t subset_cap_;
  std::size_t max_factor_ = 0;
  std::unordered_map<Clause, std::size_t, ClauseHash> index_;
  ClauseSet cands_;
  std::optional<Factorization> result_;
};

/// Fills in the witness map of `f` against the clause set it multiplies to.
void attach_witness(const ClauseSet& target, Factorization& f) {
  f.witness.assign(target.size(), {0, 0});
  for (std::size_t i = 0; i < f.left.size(); ++i) {
    for (std::size_t j = 0; j < f.right.size(); ++j) {
      auto u = f.left[i].merged(f.right[j]);
      auto it = std::lower_bound(target.begin(), target.end(), u);
      if (it != target.end() && *it == u) {
        f.witness[static_cast<std::size_t>(it - target.begin())] = {i, j};
      }
    }
  }
}

}  // namespace

ClauseSet canonical(std::vector<Clause> clauses) {
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  return clauses;
}

ClauseSet canonical(const Formula& f) { return canonical(f.clauses()); }

ClauseSet clauses_product(const ClauseSet& a, const ClauseSet& b) {
  std::vector<Clause> out;
  out.reserve(a.size() * b.size());
  for (const auto& y : a) {
    for (const auto& z : b) out.push_back(y.merged(z));
  }
  return canonical(std::move(out));
}

std::optional<Factorization> decompose(const ClauseSet& x_in, const DecomposeOptions& opts) {
  const ClauseSet x = canonical(x_in);
  if (x.size() > opts.clause_cap || x.size() > 64) {
    throw SearchLimitError("decompose: " + std::to_string(x.size()) + " clauses exceed cap " +
                           std::to_string(opts.clause_cap));
  }
  FactorSearch search(x, FactorSearch::Mode::Exact, opts.max_factor_size, 0);
  auto f = search.run();
  if (f) attach_witness(x, *f);
  return f;
}

bool check_factorization(const ClauseSet& x_in, const Factorization& f) {
  const ClauseSet x = canonical(x_in);
  if (f.left.size() < 2 || f.right.size() < 2) return false;
  if (x.size() <= f.left.size() + f.right.size()) return false;
  for (const auto* side : {&f.left, &f.right}) {
    for (const auto& c : *side) {
      if (c.empty() || c.tautological()) return false;
    }
  }
  if (clauses_product(f.left, f.right) != x) return false;
  if (f.witness.size() != x.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [l, r] = f.witness[i];
    if (l >= f.left.size() || r >= f.right.size()) return false;
    if (f.left[l].merged(f.right[r]) != x[i]) return false;
  }
  return true;
}

ReducibilityVerdict is_product_reducible(const ClauseSet& x_in, const ReducibilityOptions& opts) {
  const ClauseSet x = canonical(x_in);
  if (x.size() > opts.clause_cap || x.size() > 64) {
    throw SearchLimitError("reducibility: " + std::to_string(x.size()) +
                           " clauses exceed cap " + std::to_string(opts.clause_cap));
  }
  ReducibilityVerdict verdict;
  FactorSearch search(x, FactorSearch::Mode::Subset, 0, opts.subset_cap);
  if (auto f = search.run()) {
    verdict.reducible = true;
    verdict.witness = clauses_product(f->left, f->right);
    attach_witness(verdict.witness, *f);
    verdict.factorization = std::move(f);
  }
  return verdict;
}

ReducibilityVerdict is_product_reducible(const Formula& f, const ReducibilityOptions& opts) {
  return is_product_reducible(canonical(f), opts);
}

ProjectionTable projection_table(const ClauseSet& x_in) {
  const ClauseSet x = canonical(x_in);
  ProjectionTable table;
  for (const auto& a : sub_clauses(x, true)) {
    ProjectionEntry e{a, {}};
    for (const auto& c : x) {
      if (c.size() > a.size() && a.subset_of(c)) {
        Clause rest = c;
        for (Literal l : a) rest = rest.without(l.var());
        e.projection.push_back(std::move(rest));
      }
    }
    e.projection = canonical(std::move(e.projection));
    if (!e.projection.empty()) table.entries.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < table.entries.size(); ++j) {
      const auto& p = table.entries[i].projection;
      const auto& q = table.entries[j].projection;
      std::vector<Clause> common;
      std::set_intersection(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(common));
      table.max_pairwise_intersection = std::max(table.max_pairwise_intersection, common.size());
    }
  }
  return table;
}

ClauseSet maxterm_clauses(const AssignmentSet& s) {
  std::vector<Clause> out;
  out.reserve(s.size());
  for (auto m : s.members()) {
    std::vector<Literal> lits;
    for (std::size_t i = 0; i < s.vars().size(); ++i) {
      lits.emplace_back(s.vars()[i], ((m >> i) & 1U) != 0);
    }
    out.emplace_back(std::move(lits));
  }
  return canonical(std::move(out));
}

}  // namespace rtl
