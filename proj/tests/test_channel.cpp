#include <gtest/gtest.h>

#include <random>

#include "pscodes/channel.hpp"

using namespace pscodes;

TEST(Corrupt, EmptyPlanIsIdentity) {
    auto x = prefix_suffix_compositions(BitString::parse("0110"));
    EXPECT_EQ(corrupt(x, {}), x);
}

TEST(Corrupt, DeleteMassZeroAtSizeOne) {
    auto x = prefix_suffix_compositions(BitString::parse("01"));
    auto y = corrupt(x, {{1, Delete{0}}});
    EXPECT_EQ(y.group(1), (std::vector<CompositionPair>{{0, 1}}));
    EXPECT_EQ(distance(x, y), 1);
}

TEST(Corrupt, SubstituteAndInsert) {
    auto x = prefix_suffix_compositions(BitString::parse("0110"));
    auto y = corrupt(x, {{2, Substitute{1, 2}}, {4, Insert{{4, 0}}}});
    EXPECT_EQ(distance(x, y), 2);
    EXPECT_EQ(y.group(4).size(), 3u);
}

TEST(Corrupt, RejectsInvalidEvents) {
    auto x = prefix_suffix_compositions(BitString::parse("0110"));
    EXPECT_THROW(corrupt(x, {{2, Substitute{1, 1}}}), PlanError);
    EXPECT_THROW(corrupt(x, {{2, Substitute{2, 0}}}), PlanError);
    EXPECT_THROW(corrupt(x, {{2, Delete{2}}}), PlanError);
    EXPECT_THROW(corrupt(x, {{2, Insert{{0, 3}}}}), PlanError);
    EXPECT_THROW(corrupt(x, {{5, Delete{0}}}), PlanError);
    EXPECT_THROW(corrupt(x, {{2, Delete{1}}, {2, Delete{1}}}), PlanError);
    EXPECT_THROW(corrupt(x, {{1, ReplaceGroup{x.group(1)}}}), PlanError);
}

TEST(RandomPlan, BudgetZeroIsEmpty) {
    auto x = prefix_suffix_compositions(BitString::parse("0110"));
    EXPECT_TRUE(random_plan(x, 0, 5).empty());
}

TEST(RandomPlan, DeterministicPerSeed) {
    auto x = prefix_suffix_compositions(BitString::parse("0010111"));
    EXPECT_EQ(random_plan(x, 3, 99), random_plan(x, 3, 99));
    bool differs = false;
    for (std::uint64_t s = 0; s < 20 && !differs; ++s) differs = random_plan(x, 3, s) != random_plan(x, 3, 99);
    EXPECT_TRUE(differs);
}

TEST(RandomPlan, DistanceEqualsBudget) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 12);
        BitString c;
        for (int i = 0; i < n; ++i) c.push_back(rng() & 1);
        auto x = prefix_suffix_compositions(c);
        const int t = static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(n, 4) + 1));
        auto plan = random_plan(x, t, rng());
        ASSERT_EQ(static_cast<int>(plan.size()), t);
        EXPECT_EQ(distance(x, corrupt(x, plan)), t);
    }
}

TEST(RandomPlan, EmptyGroupGetsInsertion) {
    CompositionMultiset x(1);
    auto plan = random_plan(x, 1, 4);
    ASSERT_EQ(plan.size(), 1u);
    EXPECT_TRUE(std::holds_alternative<Insert>(plan[0].action));
}

TEST(PlanText, RoundTrip) {
    ErrorPlan plan{{1, Delete{0}}, {2, Substitute{1, 2}}, {3, Insert{{1, 2}}}, {4, ReplaceGroup{{{4, 0}, {0, 4}}}}};
    const auto text = to_text(plan);
    EXPECT_EQ(text, "1 delete 0\n2 substitute 1 2\n3 insert 1,2\n4 replace 4,0 0,4\n");
    EXPECT_EQ(parse_plan("# seed=3\n" + text), plan);
    EXPECT_THROW(parse_plan("1 smash 2\n"), PlanError);
    EXPECT_THROW(parse_plan("1 delete\n"), PlanError);
    EXPECT_THROW(parse_plan("1 delete 0 0\n"), PlanError);
    EXPECT_THROW(parse_plan("1 insert 12\n"), PlanError);
}
