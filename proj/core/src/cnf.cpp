#include "rtl/cnf.hpp"

#include <algorithm>

#include "rtl/error.hpp"

namespace rtl {

namespace {

void canonicalize(std::vector<Literal>& lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

std::string_view strip_negation(std::string_view spec, bool& negative) {
  negative = false;
  constexpr std::string_view kNot = "\xC2\xAC";  // U+00AC
  if (spec.starts_with('-') || spec.starts_with('~') || spec.starts_with('!')) {
    negative = true;
    spec.remove_prefix(1);
  } else if (spec.starts_with(kNot)) {
    negative = true;
    spec.remove_prefix(kNot.size());
  }
  return spec;
}

}  // namespace

Clause::Clause(std::vector<Literal> lits) : lits_(std::move(lits)) { canonicalize(lits_); }

Clause::Clause(std::initializer_list<Literal> lits) : lits_(lits) { canonicalize(lits_); }

bool Clause::tautological() const {
  for (std::size_t i = 1; i < lits_.size(); ++i) {
    if (lits_[i].var() == lits_[i - 1].var()) return true;
  }
  return false;
}

bool Clause::contains(Literal l) const {
  return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::mentions(Var v) const {
  return contains(Literal::pos(v)) || contains(Literal::neg(v));
}

std::size_t Clause::num_vars() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (i == 0 || lits_[i].var() != lits_[i - 1].var()) ++n;
  }
  return n;
}

std::size_t Clause::positive_count() const {
  return static_cast<std::size_t>(
      std::count_if(lits_.begin(), lits_.end(), [](Literal l) { return l.positive(); }));
}

std::optional<Var> Clause::max_var() const {
  if (lits_.empty()) return std::nullopt;
  return lits_.back().var();
}

Clause Clause::without(Var v) const {
  std::vector<Literal> out;
  out.reserve(lits_.size());
  for (Literal l : lits_) {
    if (l.var() != v) out.push_back(l);
  }
  Clause c;
  c.lits_ = std::move(out);
  return c;
}

Clause Clause::merged(const Clause& other) const {
  Clause c;
  c.lits_.reserve(lits_.size() + other.lits_.size());
  std::set_union(lits_.begin(), lits_.end(), other.lits_.begin(), other.lits_.end(),
                 std::back_inserter(c.lits_));
  return c;
}

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
  if (auto c = a.lits_.size() <=> b.lits_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.lits_.begin(), a.lits_.end(),
                                                b.lits_.begin(), b.lits_.end());
}

std::size_t ClauseHash::operator()(const Clause& c) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Literal l : c) {
    h ^= l.code();
    h *= 0x100000001b3ULL;
  }
  return h ^ c.size();
}

// --- Formula ---------------------------------------------------------------

Var Formula::add_var(std::string_view name) {
  if (name.empty()) throw ScopeError("variable name must be nonempty");
  std::string key(name);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const auto v = static_cast<Var>(names_.size());
  names_.push_back(key);
  index_.emplace(std::move(key), v);
  return v;
}

Var Formula::fresh_var(std::string_view stem) {
  for (std::size_t n = 0;; ++n) {
    std::string candidate = "_" + std::string(stem) + std::to_string(n);
    if (!index_.contains(candidate)) return add_var(candidate);
  }
}

Var Formula::var(std::string_view name) const {
  if (auto v = find_var(name)) return *v;
  throw ScopeError("unknown variable '" + std::string(name) + "'");
}

std::optional<Var> Formula::find_var(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

const std::string& Formula::name(Var v) const {
  if (v >= names_.size()) throw ScopeError("variable index " + std::to_string(v) + " out of scope");
  return names_[v];
}

Literal Formula::add_literal(std::string_view spec) {
  bool negative = false;
  auto name = strip_negation(spec, negative);
  return Literal(add_var(name), negative);
}

Literal Formula::literal(std::string_view spec) const {
  bool negative = false;
  auto name = strip_negation(spec, negative);
  return Literal(var(name), negative);
}

Clause Formula::make_clause(std::initializer_list<std::string_view> specs) {
  std::vector<Literal> lits;
  lits.reserve(specs.size());
  for (auto s : specs) lits.push_back(add_literal(s));
  return Clause(std::move(lits));
}

void Formula::check_scope(const Clause& c) const {
  if (auto m = c.max_var(); m && *m >= names_.size()) {
    throw ScopeError("clause mentions variable " + std::to_string(*m) +
                     " outside a scope of " + std::to_string(names_.size()));
  }
}

void Formula::add_clause(Clause c) {
  check_scope(c);
  clauses_.push_back(std::move(c));
}

Formula Formula::with_clauses(std::vector<Clause> clauses) const {
  Formula f;
  f.names_ = names_;
  f.index_ = index_;
  for (auto& c : clauses) f.add_clause(std::move(c));
  return f;
}

Formula Formula::without_clause(std::size_t index) const {
  if (index >= clauses_.size()) throw MembershipError("clause index out of range");
  std::vector<Clause> rest;
  rest.reserve(clauses_.size() - 1);
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (i != index) rest.push_back(clauses_[i]);
  }
  return with_clauses(std::move(rest));
}

std::optional<std::size_t> Formula::index_of(const Clause& c) const {
  auto it = std::find(clauses_.begin(), clauses_.end(), c);
  if (it == clauses_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - clauses_.begin());
}

std::string Formula::to_string(Literal l) const {
  return (l.negative() ? "\xC2\xAC" : "") + name(l.var());
}

std::string Formula::to_string(const Clause& c) const {
  if (c.empty()) return "\xE2\x96\xA1";
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " \xE2\x88\xA8 ";
    out += to_string(c[i]);
  }
  return out + ")";
}

std::string Formula::to_string() const {
  if (clauses_.empty()) return "\xE2\x8A\xA4";
  std::string out;
  for (std::size_t i = 0; i < clauses_.size(); ++i) {
    if (i) out += " \xE2\x88\xA7 ";
    out += to_string(clauses_[i]);
  }
  return out;
}

// --- Assignment ------------------------------------------------------------

Assignment Assignment::from_mask(std::uint64_t mask, std::size_t vars) {
  Assignment a(vars);
  for (std::size_t i = 0; i < vars && i < 64; ++i) a.values_[i] = ((mask >> i) & 1U) != 0;
  return a;
}

bool Assignment::value(Var v) const {
  if (v >= values_.size()) {
    throw ScopeError("assignment does not cover variable " + std::to_string(v));
  }
  return values_[v];
}

std::uint64_t Assignment::mask() const {
  if (values_.size() > 64) throw ScopeError("assignment wider than 64 variables");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

// --- AssignmentSet ---------------------------------------------------------

AssignmentSet::AssignmentSet(std::vector<Var> vars, std::vector<std::string> names,
                             std::vector<std::uint64_t> members)
    : vars_(std::move(vars)), names_(std::move(names)), members_(std::move(members)) {
  if (vars_.size() != names_.size()) throw ScopeError("scope names do not match scope variables");
  if (vars_.size() > kMaxScope) throw ScopeError("assignment set scope wider than 62 variables");
  const std::uint64_t limit = vars_.empty() ? 1 : (std::uint64_t{1} << vars_.size());
  for (auto m : members_) {
    if (m >= limit) throw ScopeError("assignment set member outside its scope");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool AssignmentSet::contains(std::uint64_t member) const {
  return std::binary_search(members_.begin(), members_.end(), member);
}

std::optional<std::size_t> AssignmentSet::position(Var v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

bool AssignmentSet::value(std::uint64_t member, Var v) const {
  auto pos = position(v);
  if (!pos) throw ScopeError("variable " + std::to_string(v) + " outside assignment set scope");
  return ((member >> *pos) & 1U) != 0;
}

AssignmentSet AssignmentSet::with_members(std::vector<std::uint64_t> members) const {
  return AssignmentSet(vars_, names_, std::move(members));
}

}  // namespace rtl
