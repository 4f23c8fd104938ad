#include <gtest/gtest.h>

#include "test_support.hpp"
#include "nrsched/evaluator.hpp"
#include "nrsched/greedy.hpp"
#include "nrsched/instgen.hpp"
#include "nrsched/oracle.hpp"

using namespace nrsched;

TEST(SptList, InstanceA) {
  const SolveReport r = spt_list(fixtures::instance_a());
  EXPECT_EQ(r.objective, 12);
  EXPECT_EQ(r.schedule->start, (std::vector<Int>{2, 0, 4}));
  EXPECT_EQ(r.guarantee, "2");
  EXPECT_EQ(r.spt_lower_bound, 10);
  EXPECT_EQ(r.supply_lower_bound, 4);
}

TEST(SptList, TwoIdenticalJobs) {
  const Instance two = Instance::normal({Job{1, 1, 1}, Job{1, 1, 1}}, SupplyProfile({0, 5}, {1, 1}));
  const SolveReport r = spt_list(two);
  EXPECT_EQ(r.schedule->start, (std::vector<Int>{0, 5}));
  EXPECT_EQ(r.objective, 7);
}

TEST(SptList, SingleSupplyIsSmithOptimal) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenOptions o;
    o.abar = 2;
    const Instance raw = gen_random(seed, 7, 1, o);
    std::vector<Job> unit = raw.jobs();
    for (Job& j : unit) j.w = 1;
    const Instance inst = Instance::normal(unit, raw.supply());
    ASSERT_EQ(spt_list(inst).objective, spt_lower_bound(inst));
  }
}

TEST(SptList, Guards) {
  const Instance mixed = Instance::normal({Job{1, 1, 1}, Job{1, 1, 2}}, SupplyProfile({0}, {3}));
  try {
    spt_list(mixed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonUniformRequirement);
  }
  const Instance zero = Instance::normal({Job{1, 1, 0}}, SupplyProfile({0}, {1}));
  try {
    spt_list(zero);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroRequirement);
  }
  const Instance weighted = Instance::normal({Job{1, 3, 1}}, SupplyProfile({0}, {1}));
  EXPECT_FALSE(spt_list(weighted).guarantee.has_value());
  EXPECT_FALSE(spt_list(weighted).warnings.empty());
}

TEST(SptList, HmeMatchesExpanded) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    GenOptions o;
    o.family = Family::Hme;
    o.classes = 3;
    const Instance h = gen_random(seed, 8, 3, o);
    const SolveReport compact = spt_list(h);
    ASSERT_TRUE(compact.compact.has_value());
    ASSERT_EQ(compact.objective, spt_list(expand_hme(h)).objective);
    ASSERT_EQ(spt_lower_bound(h), spt_lower_bound(expand_hme(h)));
    ASSERT_EQ(supply_lower_bound(h), supply_lower_bound(expand_hme(h)));
  }
}

TEST(LowerBounds, Values) {
  EXPECT_EQ(spt_lower_bound(Instance::normal({Job{7, 1, 1}}, SupplyProfile({0}, {1}))), 7);
  const Instance k = Instance::hme({JobClass{5, 3, 1, 1}}, SupplyProfile({0}, {5}));
  EXPECT_EQ(spt_lower_bound(k), block_contribution(5, 0, 3));
  EXPECT_EQ(supply_lower_bound(fixtures::instance_c()), 2 * 3);
  EXPECT_EQ(supply_lower_bound(Instance::normal({Job{1, 1, 1}}, SupplyProfile({0}, {4}))), 0);
  const Instance forced = Instance::normal({Job{1, 1, 1}, Job{1, 1, 1}}, SupplyProfile({0, 10}, {1, 1}));
  EXPECT_EQ(supply_lower_bound(forced), 10);
}

TEST(LowerBounds, BelowOptimum) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    GenOptions o;
    o.abar = 1 + static_cast<Int>(seed % 3);
    o.surplus = static_cast<Int>(seed % 4);
    const Instance raw = gen_random(seed, 6, 1 + seed % 3, o);
    std::vector<Job> unit = raw.jobs();
    for (Job& j : unit) j.w = 1;
    const Instance inst = Instance::normal(unit, raw.supply());
    const Wide opt = permutation_oracle(inst).objective;
    ASSERT_LE(spt_lower_bound(inst), opt);
    ASSERT_LE(supply_lower_bound(inst), opt);
    ASSERT_LE(spt_list(inst).objective, 2 * opt);
  }
}

TEST(WeightOrder, TightPair) {
  for (Int w = 2; w <= 100; ++w) {
    const Instance t = gen_tight_pair(w, 1);
    ASSERT_EQ(weight_order_list(t).objective, tight_pair_greedy_value(w, 1));
  }
  EXPECT_EQ(weight_order_list(gen_tight_pair(10, 1)).objective, 218);
}

TEST(WeightOrder, SingleJob) {
  const SolveReport r = weight_order_list(Instance::normal({Job{1, 5, 5}}, SupplyProfile({0}, {5})));
  EXPECT_EQ(r.objective, 5);
  EXPECT_EQ(r.schedule->start, std::vector<Int>{0});
}

TEST(WeightOrder, RatioAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    GenOptions o;
    o.family = Family::UnitPWEqA;
    const std::size_t q = 2 + seed % 3;
    const Instance inst = gen_random(seed, 7, q, o);
    const SolveReport r = weight_order_list(inst);
    ASSERT_TRUE(check_feasible(inst, *r.schedule));
    const Wide opt = permutation_oracle(inst).objective;
    ASSERT_LE(r.objective, (q == 2 ? 2 : 3) * opt);
    ASSERT_EQ(*r.guarantee, q == 2 ? "2" : "3");
  }
}

TEST(WeightOrder, RequiresUnitPEqualWA) {
  try {
    weight_order_list(fixtures::instance_a());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ModelMismatch);
  }
  const Instance h = Instance::hme({JobClass{2, 1, 3, 3}, JobClass{1, 1, 1, 1}}, SupplyProfile({0, 4}, {4, 3}));
  const SolveReport r = weight_order_list(h);
  EXPECT_EQ(r.objective, weight_order_list(expand_hme(h)).objective);
}
