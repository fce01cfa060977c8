#include <gtest/gtest.h>

#include "rtl/error.hpp"
#include "rtl/fragment.hpp"
#include "rtl/generators.hpp"
#include "rtl/oracle.hpp"
#include "rtl/rcnf.hpp"
#include "brute.hpp"

using namespace rtl;

namespace {

std::vector<std::string> clause_strings(const Formula& f) {
  std::vector<std::string> out;
  for (const auto& c : f.clauses()) out.push_back(f.to_string(c));
  return out;
}

}  // namespace

TEST(Indicator, Names) {
  Formula f;
  const auto c = f.make_clause({"P", "-Q"});
  EXPECT_EQ(indicator_name(f, c), "c[P|-Q]");
  EXPECT_EQ(indicator_name(f, f.make_clause({"-R"})), "c[-R]");
}

TEST(Rcnf, Contradiction) {
  Formula f;
  f.add_clause({"x1"});
  f.add_clause({"-x1"});
  const auto e = rcnf_of(f);
  EXPECT_EQ(e.horn.names(), (std::vector<std::string>{"c[x1]", "c[-x1]"}));
  EXPECT_EQ(clause_strings(e.horn),
            (std::vector<std::string>{"(c[x1])", "(c[-x1])",
                                      "(\xC2\xAC" "c[x1] \xE2\x88\xA8 \xC2\xAC" "c[-x1])"}));
  EXPECT_TRUE(is_horn(e.horn));
  EXPECT_FALSE(dpll(e.horn).sat);
  EXPECT_FALSE(e.node_indicator[e.closure.clauses.size() - 1].has_value());
}

TEST(Rcnf, SingleUnitAndEmptySource) {
  Formula f;
  f.add_clause({"x1"});
  const auto s = rcnf_size(f);
  EXPECT_EQ(s.variables, 1U);
  EXPECT_EQ(s.clauses, 1U);
  EXPECT_FALSE(s.truncated);

  Formula g;
  g.add_var("a");
  g.add_clause(Clause{});
  const auto e = rcnf_of(g);
  ASSERT_EQ(e.horn.size(), 1U);
  EXPECT_TRUE(e.horn.clause(0).empty());
}

TEST(Rcnf, SizeMatchesEncoding) {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const auto f = random_formula(rng, 2 + rng.below(4), 1 + rng.below(6), 1, 3);
    const auto e = rcnf_of(f);
    const auto s = rcnf_size(f);
    EXPECT_EQ(s.variables, e.horn.num_vars());
    EXPECT_EQ(s.clauses, e.horn.size());
  }
}

TEST(Rcnf, EquisatisfiableAndHorn) {
  Rng rng(18);
  for (int i = 0; i < 150; ++i) {
    const auto f = random_formula(rng, 2 + rng.below(5), 1 + rng.below(9), 1, 3);
    const auto e = rcnf_of(f);
    ASSERT_TRUE(e.includes_closure);
    EXPECT_TRUE(is_horn(e.horn));
    EXPECT_EQ(unit_propagate(e.horn).sat, brute::sat(f)) << f.to_string();
  }
}

TEST(HornRcnf, BinaryTemplate) {
  Formula f;
  f.add_clause({"P", "-q"});
  const auto h = horn_to_rcnf(f);
  ASSERT_EQ(h.templates.size(), 1U);
  EXPECT_EQ(h.templates[0], HornTemplate::binary);
  EXPECT_EQ(h.rcnf.names(), (std::vector<std::string>{"c[P|-q]", "c[P]", "c[-P]", "c[q]"}));
  EXPECT_EQ(h.rcnf.size(), 3U);
  EXPECT_EQ(h.rcnf.clause(0), Clause{Literal::pos(0)});
  EXPECT_EQ(h.rcnf.clause(1), (Clause{Literal::neg(0), Literal::pos(1), Literal::neg(3)}));
  EXPECT_EQ(h.rcnf.clause(2), (Clause{Literal::neg(1), Literal::neg(2)}));
}

TEST(HornRcnf, TemplateShapes) {
  Formula f;
  f.add_clause({"R"});
  f.add_clause({"I", "-j", "-k"});
  f.add_clause({"-a", "-b"});
  f.add_clause({"a", "-a"});
  const auto h = horn_to_rcnf(f);
  ASSERT_EQ(h.templates.size(), 4U);
  EXPECT_EQ(h.templates[0], HornTemplate::unit);
  EXPECT_EQ(h.templates[1], HornTemplate::ternary);
  EXPECT_EQ(h.templates[2], HornTemplate::binary);
  EXPECT_FALSE(h.templates[3].has_value());
  EXPECT_EQ(h.rcnf.size(), 2U + 6U + 3U);
  EXPECT_TRUE(is_horn(h.rcnf));
  EXPECT_STREQ(to_string(HornTemplate::ternary), "ternary");
}

TEST(HornRcnf, RejectsNonHorn) {
  Formula f;
  f.add_clause({"a", "b"});
  EXPECT_THROW(horn_to_rcnf(f), ClassificationError);
  EXPECT_THROW(unit_propagate(f), ClassificationError);
}

TEST(HornRcnf, PreservesSatisfiability) {
  Rng rng(19);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_horn(rng, 2 + rng.below(6), 1 + rng.below(10), 4);
    const auto h = horn_to_rcnf(f);
    EXPECT_TRUE(is_horn(h.rcnf));
    EXPECT_EQ(unit_propagate(h.rcnf).sat, brute::sat(f)) << f.to_string();
  }
}

TEST(UnitPropagate, AgreesWithDpllAndGivesMinimalModel) {
  Rng rng(20);
  for (int i = 0; i < 300; ++i) {
    const auto f = random_horn(rng, 1 + rng.below(10), rng.below(14), 3);
    const auto r = unit_propagate(f);
    ASSERT_EQ(r.sat, dpll(f).sat);
    ASSERT_EQ(r.sat, brute::sat(f));
    if (!r.sat) continue;
    EXPECT_TRUE(evaluate(f, r.assignment));
    // The least model sits below every other model.
    for (auto m : brute::models(f)) EXPECT_EQ(r.assignment.mask() & ~m, 0U);
  }
}

TEST(Granularity, Contradiction) {
  Formula f;
  f.add_clause({"x1"});
  f.add_clause({"-x1"});
  const auto g = granularity_report(f);
  EXPECT_TRUE(g.precondition_met);
  EXPECT_TRUE(g.closure_complete);
  ASSERT_EQ(g.clauses.size(), 2U);
  EXPECT_EQ(g.clauses[0].exclusive.size(), 1U);
  ASSERT_EQ(g.clauses[0].components.size(), 1U);
  EXPECT_EQ(g.clauses[0].components[0].indicators, std::vector<std::string>{"c[x1]"});
  EXPECT_TRUE(g.correspondence_holds);
  const auto j = to_json(f, g);
  EXPECT_TRUE(j["precondition_met"].get<bool>());
}

TEST(Granularity, SatisfiableFailsPrecondition) {
  Formula f;
  f.add_clause({"a", "b"});
  const auto g = granularity_report(f);
  EXPECT_FALSE(g.precondition_met);
  EXPECT_FALSE(g.correspondence_holds);
}
