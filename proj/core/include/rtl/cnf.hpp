#pragma once

// Core CNF data model: literals, clauses, formulas with an explicit variable
// scope, total assignments and canonical assignment sets.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rtl {

using Var = std::uint32_t;

class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Var var, bool negative) : code_(2 * var + (negative ? 1 : 0)) {}

  static constexpr Literal pos(Var v) { return Literal(v, false); }
  static constexpr Literal neg(Var v) { return Literal(v, true); }

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool negative() const { return (code_ & 1U) != 0; }
  constexpr bool positive() const { return !negative(); }
  constexpr Literal complement() const { return from_code(code_ ^ 1U); }
  constexpr Literal operator~() const { return complement(); }

  /// Dense encoding 2*var + negative; orders x before ¬x before y.
  constexpr std::uint32_t code() const { return code_; }
  static constexpr Literal from_code(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  /// True when `value` makes this literal true.
  constexpr bool satisfied_by(bool value) const { return value != negative(); }

  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  std::uint32_t code_ = 0;
};

/// A set of literals. Literals are kept sorted by code and deduplicated, so
/// two clauses with the same literal set compare equal.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> lits);
  Clause(std::initializer_list<Literal> lits);

  std::span<const Literal> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }
  Literal operator[](std::size_t i) const { return lits_[i]; }

  /// Contains some x together with ¬x.
  bool tautological() const;
  bool contains(Literal l) const;
  bool mentions(Var v) const;
  /// Number of distinct variables (|c|).
  std::size_t num_vars() const;
  std::size_t positive_count() const;
  /// Largest variable index mentioned, if any.
  std::optional<Var> max_var() const;

  Clause without(Var v) const;
  /// Literal-set union.
  Clause merged(const Clause& other) const;
  /// Every literal of this clause occurs in `other`.
  bool subset_of(const Clause& other) const;

  /// Canonical order: by size, then lexicographically by literal code.
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);
  friend bool operator==(const Clause& a, const Clause& b) = default;

 private:
  std::vector<Literal> lits_;
};

struct ClauseHash {
  std::size_t operator()(const Clause& c) const noexcept;
};

/// Ordered multiset of clauses over an explicit variable scope. The scope
/// must cover every mentioned variable and may be larger.
class Formula {
 public:
  Formula() = default;

  /// Interns `name`, returning the existing index when already present.
  Var add_var(std::string_view name);
  /// Adds a variable with a fresh name built from `stem` under the reserved
  /// "_" prefix (e.g. "_y0"), skipping names already in scope.
  Var fresh_var(std::string_view stem);
  Var var(std::string_view name) const;
  std::optional<Var> find_var(std::string_view name) const;
  const std::string& name(Var v) const;
  const std::vector<std::string>& names() const { return names_; }
  std::size_t num_vars() const { return names_.size(); }

  /// Parses "P", "-P", "~P" or "¬P", interning the variable when new.
  Literal add_literal(std::string_view spec);
  Literal literal(std::string_view spec) const;
  /// Convenience builder: clause from literal specs, interning variables.
  Clause make_clause(std::initializer_list<std::string_view> specs);

  void add_clause(Clause c);
  void add_clause(std::initializer_list<std::string_view> specs) {
    add_clause(make_clause(specs));
  }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(std::size_t i) const { return clauses_.at(i); }
  /// |F|, the number of clauses.
  std::size_t size() const { return clauses_.size(); }
  bool empty() const { return clauses_.empty(); }

  /// Same scope, different clauses.
  Formula with_clauses(std::vector<Clause> clauses) const;
  Formula without_clause(std::size_t index) const;
  std::optional<std::size_t> index_of(const Clause& c) const;

  std::string to_string(Literal l) const;
  /// "(P ∨ ¬Q)"; the empty clause renders as "□".
  std::string to_string(const Clause& c) const;
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.names_ == b.names_ && a.clauses_ == b.clauses_;
  }

 private:
  void check_scope(const Clause& c) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Var> index_;
  std::vector<Clause> clauses_;
};

/// Total truth assignment over a formula's scope, indexed by Var.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t vars, bool value = false) : values_(vars, value) {}
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}
  static Assignment from_mask(std::uint64_t mask, std::size_t vars);

  std::size_t size() const { return values_.size(); }
  bool operator[](Var v) const { return values_[v]; }
  bool value(Var v) const;
  void set(Var v, bool value) { values_.at(v) = value; }
  bool satisfies(Literal l) const { return l.satisfied_by(value(l.var())); }
  const std::vector<bool>& values() const { return values_; }
  std::uint64_t mask() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

/// Canonical set of assignments over a fixed variable list. Members are
/// bitmasks (bit i holds the value of vars()[i]) kept sorted and unique.
class AssignmentSet {
 public:
  static constexpr std::size_t kMaxScope = 62;

  AssignmentSet() = default;
  AssignmentSet(std::vector<Var> vars, std::vector<std::string> names,
                std::vector<std::uint64_t> members);

  const std::vector<Var>& vars() const { return vars_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::uint64_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::uint64_t member) const;
  /// Position of `v` in vars(), if present.
  std::optional<std::size_t> position(Var v) const;
  bool value(std::uint64_t member, Var v) const;
  bool same_scope(const AssignmentSet& other) const { return vars_ == other.vars_; }

  AssignmentSet with_members(std::vector<std::uint64_t> members) const;

  friend bool operator==(const AssignmentSet&, const AssignmentSet&) = default;

 private:
  std::vector<Var> vars_;
  std::vector<std::string> names_;
  std::vector<std::uint64_t> members_;
};

}  // namespace rtl
