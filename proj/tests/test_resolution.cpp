#include <gtest/gtest.h>

#include "rtl/error.hpp"
#include "rtl/generators.hpp"
#include "rtl/resolution.hpp"
#include "brute.hpp"

using namespace rtl;

TEST(Resolve, SingleJointVariable) {
  const Clause a{Literal::pos(0), Literal::pos(1)};
  const Clause b{Literal::neg(0), Literal::pos(2)};
  EXPECT_EQ(joint_variables(a, b), std::vector<Var>{0});
  EXPECT_EQ(resolve(a, b), (Clause{Literal::pos(1), Literal::pos(2)}));
  EXPECT_EQ(resolve(b, a), resolve(a, b));
}

TEST(Resolve, Errors) {
  const Clause a{Literal::pos(0), Literal::pos(1)};
  EXPECT_THROW(resolve(a, Clause{Literal::pos(2)}), NotConnectedError);
  EXPECT_THROW(resolve(a, Clause{Literal::neg(0), Literal::neg(1)}), TautologyError);
}

TEST(MultiResolve, ProductOfAntecedents) {
  const ClauseSet pos{Clause{Literal::pos(0), Literal::pos(1)}, Clause{Literal::pos(0), Literal::pos(2)}};
  const ClauseSet neg{Clause{Literal::neg(0), Literal::pos(3)}, Clause{Literal::neg(0), Literal::neg(1)}};
  const auto step = multi_resolve(pos, neg, 0);
  EXPECT_EQ(step.consequents.size(), 3U);
  EXPECT_EQ(step.tautologies.size(), 1U);
  EXPECT_THROW(multi_resolve(neg, pos, 0), PreconditionError);
}

TEST(Closure, RefutesContradiction) {
  Formula f;
  f.add_clause({"x1"});
  f.add_clause({"-x1"});
  const auto c = closure(f);
  EXPECT_TRUE(c.refuted);
  EXPECT_FALSE(c.truncated);
  EXPECT_EQ(c.clauses.size(), 3U);
  EXPECT_EQ(c.resolutions, 1U);
  ASSERT_EQ(c.steps.size(), 1U);
  EXPECT_TRUE(c.steps[0].fresh);
  EXPECT_TRUE(c.clauses[c.steps[0].result].empty());
  EXPECT_TRUE(replay(f, c));
}

TEST(Closure, SourceBookkeeping) {
  Formula f;
  f.add_clause({"a", "-a"});
  f.add_clause({"b"});
  f.add_clause({"b"});
  const auto c = closure(f);
  EXPECT_EQ(c.source_tautologies, 1U);
  EXPECT_FALSE(c.source_nodes[0].has_value());
  EXPECT_EQ(c.source_nodes[1], c.source_nodes[2]);
  EXPECT_EQ(c.initial_nodes, 1U);
}

TEST(Closure, TruncationAndEarlyStop) {
  Rng rng(5);
  const auto f = random_3cnf(rng, 10, 40);
  ClosureOptions small;
  small.max_clauses = 50;
  const auto c = closure(f, small);
  EXPECT_TRUE(c.truncated);
  EXPECT_LE(c.clauses.size(), 50U);

  Formula g;
  g.add_clause({"a"});
  g.add_clause({"-a"});
  g.add_clause({"a", "b"});
  g.add_clause({"-b", "c"});
  ClosureOptions stop;
  stop.stop_at_refutation = true;
  EXPECT_TRUE(closure(g, stop).refuted);
  EXPECT_LE(closure(g, stop).resolutions, closure(g).resolutions);
}

TEST(Closure, SoundAndRefutationComplete) {
  Rng rng(8);
  for (int i = 0; i < 150; ++i) {
    const auto f = random_formula(rng, 2 + rng.below(5), 1 + rng.below(8), 1, 3);
    const auto c = closure(f);
    ASSERT_FALSE(c.truncated);
    for (const auto& clause : c.clauses) EXPECT_TRUE(brute::entails(f, clause));
    EXPECT_EQ(c.refuted, !brute::sat(f)) << f.to_string();
    EXPECT_TRUE(replay(f, c));
  }
}

TEST(Closure, JsonCarriesSteps) {
  Formula f;
  f.add_clause({"a"});
  f.add_clause({"-a"});
  const auto c = closure(f);
  const auto j = to_json(f, c);
  EXPECT_EQ(j["steps"].size(), 1U);
  EXPECT_TRUE(j["refuted"].get<bool>());
  EXPECT_FALSE(to_json(f, c, false).contains("steps"));
}

TEST(Linkage, HoldsOnRandomResolutions) {
  Rng rng(13);
  int checked = 0;
  for (int i = 0; i < 100 && checked < 60; ++i) {
    const auto f = random_formula(rng, 3 + rng.below(4), 2, 1, 3);
    const auto& a = f.clause(0);
    const auto& b = f.clause(1);
    if (joint_variables(a, b).size() != 1) continue;
    const auto v = linkage_check(f, a, b);
    EXPECT_TRUE(v.holds) << f.to_string();
    EXPECT_TRUE(v.split_by_joint);
    EXPECT_TRUE(v.restriction_matches);
    EXPECT_TRUE(v.union_connected);
    EXPECT_TRUE(v.bridge_in_consequent);
    EXPECT_EQ(v.consequent, resolve(a, b));
    ++checked;
  }
  EXPECT_GT(checked, 20);
}
