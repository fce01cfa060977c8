#pragma once

// Bitmask view of clauses over at most 64 variables; shared by the
// enumeration and saturation engines.

#include <bit>
#include <cstdint>
#include <vector>

#include "rtl/cnf.hpp"
#include "rtl/error.hpp"

namespace rtl::detail {

struct PackedClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;

  bool empty() const { return (pos | neg) == 0; }
  bool tautological() const { return (pos & neg) != 0; }
  /// Satisfied by the total assignment `m` (bit v = value of variable v).
  bool satisfied_by(std::uint64_t m) const { return ((m & pos) | (~m & neg)) != 0; }
  friend bool operator==(PackedClause, PackedClause) = default;
};

struct PackedHash {
  std::size_t operator()(PackedClause c) const noexcept {
    std::uint64_t h = c.pos * 0x9E3779B97F4A7C15ULL;
    h ^= (c.neg + 0x632BE59BD9B4E019ULL) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

inline PackedClause pack(const Clause& c) {
  PackedClause p;
  for (Literal l : c) {
    if (l.var() >= 64) throw ScopeError("packed clause needs variables below 64");
    (l.negative() ? p.neg : p.pos) |= std::uint64_t{1} << l.var();
  }
  return p;
}

inline Clause unpack(PackedClause p) {
  std::vector<Literal> lits;
  lits.reserve(static_cast<std::size_t>(std::popcount(p.pos | p.neg)));
  for (std::uint64_t bits = p.pos | p.neg; bits; bits &= bits - 1) {
    const auto v = static_cast<Var>(std::countr_zero(bits));
    if ((p.pos >> v) & 1U) lits.push_back(Literal::pos(v));
    if ((p.neg >> v) & 1U) lits.push_back(Literal::neg(v));
  }
  return Clause(std::move(lits));
}

inline std::vector<PackedClause> pack_all(const Formula& f) {
  if (f.num_vars() > 64) throw ScopeError("formula wider than 64 variables");
  std::vector<PackedClause> out;
  out.reserve(f.size());
  for (const auto& c : f.clauses()) out.push_back(pack(c));
  return out;
}

}  // namespace rtl::detail
