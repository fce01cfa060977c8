#pragma once

// Brute-force reference implementations for tests. Nothing here calls into
// the library's semantics, oracle or product code; formulas are read only
// through their clause and literal accessors.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "rtl/cnf.hpp"

namespace brute {

using Mask = std::uint64_t;

inline bool lit_true(rtl::Literal l, Mask m) {
  const bool value = ((m >> l.var()) & 1U) != 0;
  return value != l.negative();
}

inline bool clause_true(const rtl::Clause& c, Mask m) {
  return std::any_of(c.begin(), c.end(), [m](rtl::Literal l) { return lit_true(l, m); });
}

inline bool formula_true(const std::vector<rtl::Clause>& cs, Mask m) {
  return std::all_of(cs.begin(), cs.end(), [m](const auto& c) { return clause_true(c, m); });
}

inline std::vector<Mask> models(const std::vector<rtl::Clause>& cs, std::size_t vars) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << vars); ++m) {
    if (formula_true(cs, m)) out.push_back(m);
  }
  return out;
}

inline std::vector<Mask> models(const rtl::Formula& f) { return brute::models(f.clauses(), f.num_vars()); }

inline bool sat(const rtl::Formula& f) {
  for (Mask m = 0; m < (Mask{1} << f.num_vars()); ++m) {
    if (formula_true(f.clauses(), m)) return true;
  }
  return false;
}

inline std::size_t projected_count(const rtl::Formula& f, const std::vector<rtl::Var>& vars) {
  std::set<Mask> seen;
  for (Mask m : brute::models(f)) {
    Mask p = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) p |= ((m >> vars[i]) & 1U) << i;
    seen.insert(p);
  }
  return seen.size();
}

inline bool entails(const rtl::Formula& f, const rtl::Clause& c) {
  for (Mask m = 0; m < (Mask{1} << f.num_vars()); ++m) {
    if (formula_true(f.clauses(), m) && !clause_true(c, m)) return false;
  }
  return true;
}

/// Assignments falsifying clause i and no other clause.
inline std::vector<Mask> exclusive(const rtl::Formula& f, std::size_t i) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << f.num_vars()); ++m) {
    bool ok = !clause_true(f.clause(i), m);
    for (std::size_t j = 0; ok && j < f.size(); ++j) {
      if (j != i && !clause_true(f.clause(j), m)) ok = false;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

inline bool is_muc(const rtl::Formula& f) {
  if (sat(f)) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!sat(f.without_clause(i))) return false;
  }
  return true;
}

/// Clause as a sorted set of literal codes.
using LitSet = std::vector<std::uint32_t>;

inline LitSet codes(const rtl::Clause& c) {
  LitSet out;
  for (auto l : c) out.push_back(l.code());
  return out;
}

inline bool tautology(const LitSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] ^ s[i - 1]) == 1U) return true;
  }
  return false;
}

/// Every nonempty non-tautological sub-clause of the members of X.
inline std::vector<LitSet> sub_clauses(const std::vector<rtl::Clause>& x) {
  std::set<LitSet> out;
  for (const auto& c : x) {
    const auto lits = codes(c);
    for (Mask pick = 1; pick < (Mask{1} << lits.size()); ++pick) {
      LitSet s;
      for (std::size_t i = 0; i < lits.size(); ++i) {
        if ((pick >> i) & 1U) s.push_back(lits[i]);
      }
      if (!tautology(s)) out.insert(s);
    }
  }
  return {out.begin(), out.end()};
}

inline void subsets(const std::vector<LitSet>& pool, std::size_t from, std::vector<LitSet>& cur,
                    const auto& visit) {
  if (!cur.empty()) visit(cur);
  for (std::size_t i = from; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsets(pool, i + 1, cur, visit);
    cur.pop_back();
  }
}

struct FactorVerdict {
  bool decomposable = false;  // X = Y × Z exactly
  bool reducible = false;     // some x ⊆ X with x = Y × Z
};

inline LitSet merge(const LitSet& a, const LitSet& b) {
  LitSet u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

/// Exhaustive over factor pairs (Y, Z) of sub-clauses with |Y|, |Z| >= 2 and
/// |Y × Z| > |Y| + |Z|. Y grows one clause at a time; Z ranges over every
/// subset of the sub-clauses compatible with all of Y.
inline FactorVerdict factor_oracle(const std::vector<rtl::Clause>& x_in) {
  std::set<LitSet> x;
  for (const auto& c : x_in) x.insert(codes(c));
  const auto pool = sub_clauses(x_in);
  FactorVerdict v;
  auto grow = [&](auto& self, std::vector<LitSet>& y, const std::vector<LitSet>& cand,
                  std::size_t from) -> void {
    if (y.size() >= 2) {
      std::vector<LitSet> z;
      subsets(cand, 0, z, [&](const std::vector<LitSet>& zz) {
        if (zz.size() < 2) return;
        std::set<LitSet> p;
        for (const auto& a : y) {
          for (const auto& b : zz) p.insert(merge(a, b));
        }
        if (p.size() <= y.size() + zz.size()) return;
        v.reducible = true;
        if (p == x) v.decomposable = true;
      });
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      std::vector<LitSet> next;
      for (const auto& z : cand) {
        if (x.count(merge(pool[i], z)) != 0) next.push_back(z);
      }
      if (next.size() < 2) continue;
      y.push_back(pool[i]);
      self(self, y, next, i + 1);
      y.pop_back();
    }
  };
  std::vector<LitSet> y;
  grow(grow, y, pool, 0);
  return v;
}

}  // namespace brute
