#include <gtest/gtest.h>

#include "rtl/error.hpp"
#include "rtl/generators.hpp"
#include "rtl/json_io.hpp"
#include "rtl/semantics.hpp"
#include "brute.hpp"

using namespace rtl;

TEST(Semantics, EvaluateHandlesTautologyAndEmpty) {
  const Assignment a(2);
  EXPECT_TRUE(evaluate(Clause{Literal::pos(0), Literal::neg(0)}, a));
  EXPECT_FALSE(evaluate(Clause{}, a));
  Formula f;
  f.add_clause({"a"});
  EXPECT_THROW(evaluate(f, Assignment(3)), ScopeError);
}

TEST(Semantics, EmptyFormulaHasFullSpace) {
  Formula f;
  f.add_var("a");
  f.add_var("b");
  EXPECT_EQ(models(f).size(), 4U);
  EXPECT_TRUE(countermodels(f).empty());
}

TEST(Semantics, ModelsMatchBruteForce) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_formula(rng, 1 + rng.below(8), rng.below(10), 1, 3);
    ASSERT_EQ(models(f).members(), brute::models(f)) << f.to_string();
    EXPECT_EQ(models(f).size() + countermodels(f).size(), std::size_t{1} << f.num_vars());
  }
}

TEST(Semantics, EnumerationCap) {
  Formula f = empty_formula(25);
  EXPECT_THROW(models(f), EnumerationLimitError);
  EnumerationLimits small{4};
  EXPECT_THROW(models(empty_formula(5), small), EnumerationLimitError);
}

TEST(Semantics, ExclusiveFalsifiersMatchBruteForce) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_formula(rng, 2 + rng.below(5), 1 + rng.below(6), 1, 3);
    for (std::size_t c = 0; c < f.size(); ++c) {
      EXPECT_EQ(exclusive_falsifiers(f, c).members(), brute::exclusive(f, c));
    }
  }
}

TEST(Semantics, ExclusiveFalsifiersErrors) {
  Formula f;
  f.add_clause({"a"});
  EXPECT_THROW(exclusive_falsifiers(f, 3), MembershipError);
  EXPECT_THROW(exclusive_falsifiers(f, f.make_clause({"-a"})), MembershipError);
}

TEST(Semantics, ProjectionByName) {
  Formula f;
  f.add_clause({"a", "b"});
  f.add_var("c");
  const std::vector<std::string> names{"b"};
  const auto p = project(models(f), std::span<const std::string>(names));
  EXPECT_EQ(p.size(), 2U);
  EXPECT_EQ(p.names(), names);
}

TEST(Semantics, HammingComponents) {
  const AssignmentSet s({0, 1, 2}, {"a", "b", "c"}, {0b000, 0b001, 0b011, 0b110});
  const auto comps = components(s);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0].members(), (std::vector<std::uint64_t>{0b000, 0b001, 0b011}));
  EXPECT_EQ(comps[1].members(), (std::vector<std::uint64_t>{0b110}));
  EXPECT_EQ(hamming(Assignment::from_mask(0b000, 3), Assignment::from_mask(0b110, 3)), 2U);
}

TEST(Semantics, SetAlgebra) {
  const AssignmentSet a({0, 1}, {"a", "b"}, {0, 1});
  const AssignmentSet b({0, 1}, {"a", "b"}, {1, 2});
  EXPECT_EQ(set_union(a, b).size(), 3U);
  EXPECT_EQ(set_intersection(a, b).members(), std::vector<std::uint64_t>{1});
  const AssignmentSet other({1}, {"b"}, {});
  EXPECT_THROW(set_union(a, other), ScopeError);
}

TEST(JsonIo, MemberStringsAndRoundTrip) {
  Formula f;
  f.add_clause({"a", "-b"});
  const auto j = to_json(models(f));
  EXPECT_EQ(j["scope"], Json::array({"a", "b"}));
  EXPECT_EQ(j["members"][0], "00");
  EXPECT_EQ(formula_from_json(to_json(f)), f);
  EXPECT_EQ(to_json(f, f.clause(0))["literals"], Json::array({1, -2}));
}
