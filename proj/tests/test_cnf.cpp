#include <gtest/gtest.h>

#include "rtl/cnf.hpp"
#include "rtl/error.hpp"
#include "rtl/fragment.hpp"
#include "brute.hpp"

using namespace rtl;

TEST(Literal, CodeRoundTrip) {
  const Literal l(3, true);
  EXPECT_EQ(l.var(), 3U);
  EXPECT_TRUE(l.negative());
  EXPECT_EQ(l.code(), 7U);
  EXPECT_EQ(Literal::from_code(7), l);
  EXPECT_EQ(~l, Literal::pos(3));
  EXPECT_TRUE(l.satisfied_by(false));
  EXPECT_FALSE(l.satisfied_by(true));
}

TEST(Clause, SortedAndDeduplicated) {
  const Clause c{Literal::neg(2), Literal::pos(0), Literal::neg(2)};
  ASSERT_EQ(c.size(), 2U);
  EXPECT_EQ(c[0], Literal::pos(0));
  EXPECT_EQ(c[1], Literal::neg(2));
}

TEST(Clause, TautologyAndQueries) {
  const Clause t{Literal::pos(1), Literal::neg(1), Literal::pos(2)};
  EXPECT_TRUE(t.tautological());
  EXPECT_EQ(t.num_vars(), 2U);
  const Clause c{Literal::pos(0), Literal::neg(1)};
  EXPECT_FALSE(c.tautological());
  EXPECT_TRUE(c.mentions(1));
  EXPECT_FALSE(c.mentions(2));
  EXPECT_EQ(c.positive_count(), 1U);
  EXPECT_EQ(c.without(0), Clause{Literal::neg(1)});
  EXPECT_TRUE(Clause{Literal::neg(1)}.subset_of(c));
  EXPECT_EQ(c.merged(Clause{Literal::pos(2)}).size(), 3U);
  EXPECT_FALSE(Clause{}.max_var().has_value());
}

TEST(Clause, CanonicalOrderIsSizeThenLex) {
  const Clause a{Literal::pos(5)};
  const Clause b{Literal::pos(0), Literal::pos(1)};
  const Clause c{Literal::pos(0), Literal::neg(1)};
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_LT(Clause{}, a);
}

TEST(Formula, ScopeAndSpecs) {
  Formula f;
  f.add_clause({"P", "-Q"});
  f.add_clause({"~R", "!P"});
  f.add_clause({"\xC2\xACQ"});
  EXPECT_EQ(f.num_vars(), 3U);
  EXPECT_EQ(f.var("Q"), 1U);
  EXPECT_EQ(f.add_var("P"), 0U);
  EXPECT_EQ(f.literal("-R"), Literal::neg(2));
  EXPECT_THROW(f.var("Z"), ScopeError);
  EXPECT_EQ(f.to_string(f.clause(0)), "(P \xE2\x88\xA8 \xC2\xACQ)");
  EXPECT_EQ(f.to_string(Clause{}), "\xE2\x96\xA1");
  EXPECT_EQ(f.with_clauses({}).to_string(), "\xE2\x8A\xA4");
}

TEST(Formula, ScopeCheckOnAdd) {
  Formula f;
  f.add_var("a");
  EXPECT_THROW(f.add_clause(Clause{Literal::pos(4)}), ScopeError);
}

TEST(Formula, FreshVariablesNeverCollide) {
  Formula f;
  f.add_var("_y0");
  const Var v = f.fresh_var("y");
  EXPECT_EQ(f.name(v), "_y1");
  EXPECT_EQ(f.name(f.fresh_var("y")), "_y2");
}

TEST(Formula, WithoutAndIndex) {
  Formula f;
  f.add_clause({"a"});
  f.add_clause({"-a", "b"});
  EXPECT_EQ(f.without_clause(0).size(), 1U);
  EXPECT_EQ(f.index_of(f.make_clause({"b", "-a"})), std::optional<std::size_t>(1));
  EXPECT_FALSE(f.index_of(f.make_clause({"b"})).has_value());
}

TEST(Assignment, MaskRoundTrip) {
  const auto a = Assignment::from_mask(0b101, 3);
  EXPECT_TRUE(a[0]);
  EXPECT_FALSE(a[1]);
  EXPECT_EQ(a.mask(), 0b101U);
  EXPECT_THROW(a.value(3), ScopeError);
}

TEST(AssignmentSet, ValidatesAndSorts) {
  const AssignmentSet s({0, 1}, {"a", "b"}, {3, 1, 1});
  EXPECT_EQ(s.members(), (std::vector<std::uint64_t>{1, 3}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_THROW(AssignmentSet({0}, {"a"}, {2}), ScopeError);
  std::vector<Var> wide(63);
  std::vector<std::string> names(63, "v");
  EXPECT_THROW(AssignmentSet(wide, names, {}), ScopeError);
}

TEST(Fragment, Classification) {
  Formula f;
  f.add_clause({"P", "-Q", "-R"});
  f.add_clause({"P", "Q"});
  const auto info = classify_fragment(f);
  EXPECT_TRUE(info.three_cnf);
  EXPECT_FALSE(info.horn);
  EXPECT_FALSE(info.two_cnf);
  EXPECT_TRUE(info.clauses[0].horn);
  EXPECT_EQ(info.clauses[0].implication, "Q \xE2\x88\xA7 R \xE2\x86\x92 P");
}

TEST(Fragment, HornChainRewriteStaysHornAndEquisatisfiable) {
  Formula f;
  f.add_clause({"I", "-j", "-k", "-l"});
  f.add_clause({"j"});
  f.add_clause({"k"});
  f.add_clause({"l"});
  f.add_clause({"-I"});
  const auto g = to_3cnf(f);
  EXPECT_TRUE(is_horn(g));
  for (const auto& c : g.clauses()) EXPECT_LE(c.size(), 3U);
  EXPECT_EQ(brute::sat(f), brute::sat(g));
  EXPECT_FALSE(brute::sat(g));
  // First link of the chain and its closing unit.
  EXPECT_EQ(g.to_string(g.clause(0)), "(I \xE2\x88\xA8 \xC2\xACj \xE2\x88\xA8 \xC2\xAC_y0)");
  EXPECT_EQ(g.to_string(g.clause(3)), "(_y2)");
}

TEST(Fragment, WideNonHornSplitPreservesProjectedModels) {
  Formula f;
  f.add_clause({"a", "b", "c", "d", "e"});
  const auto g = to_3cnf(f);
  for (const auto& c : g.clauses()) EXPECT_LE(c.size(), 3U);
  std::vector<Var> orig{0, 1, 2, 3, 4};
  EXPECT_EQ(brute::projected_count(g, orig), brute::models(f).size());
}
