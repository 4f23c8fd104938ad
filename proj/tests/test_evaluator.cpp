#include <gtest/gtest.h>

#include <numeric>

#include "test_support.hpp"
#include "nrsched/evaluator.hpp"
#include "nrsched/instgen.hpp"
#include "nrsched/ordering.hpp"

using namespace nrsched;

TEST(Feasibility, TightPair) {
  const Instance t = gen_tight_pair(10, 1);
  EXPECT_TRUE(check_feasible(t, Schedule{{10, 11}}));
  const auto bad = check_feasible(t, Schedule{{0, 1}});
  EXPECT_FALSE(bad);
  EXPECT_FALSE(bad.violation.empty());
}

TEST(Feasibility, ZeroConsumption) {
  const Instance one = Instance::normal({Job{1, 1, 0}}, SupplyProfile({0}, {1}));
  EXPECT_TRUE(check_feasible(one, Schedule{{0}}));
}

TEST(Feasibility, MachineConflictsAndShape) {
  const Instance a = fixtures::instance_a();
  EXPECT_FALSE(check_feasible(a, Schedule{{0, 1, 3}}));   // job 1 runs [0,2)
  EXPECT_FALSE(check_feasible(a, Schedule{{0, 2}}));      // wrong length
  EXPECT_FALSE(check_feasible(a, Schedule{{-1, 2, 3}}));  // negative start
  EXPECT_TRUE(check_feasible(a, Schedule{{0, 2, 3}}));
  // Only one unit before u_2 = 2.
  EXPECT_FALSE(check_feasible(a, Schedule{{1, 0, 10}}));
}

TEST(Objective, InstanceA) {
  const Instance a = fixtures::instance_a();
  EXPECT_EQ(objective(a, Schedule{{2, 0, 4}}), 12);
  EXPECT_EQ(objective(a, Schedule{{0, 2, 3}}), 11);
  try {
    objective(a, Schedule{{0, 0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfeasibleSchedule);
  }
}

TEST(BlockContribution, Values) {
  EXPECT_EQ(block_contribution(3, 5, 2), 27);
  EXPECT_EQ(block_contribution(1, 0, 7), 7);
  EXPECT_EQ(block_contribution(200, 0, 1), 20100);
  for (Wide k = 0; k <= 30; ++k)
    for (Wide t = 0; t <= 6; ++t)
      for (Wide p = 1; p <= 6; ++p) {
        Wide sum = 0;
        for (Wide i = 1; i <= k; ++i) sum += t + i * p;
        ASSERT_EQ(block_contribution(k, t, p), sum);
      }
}

TEST(LeftShift, InstanceAOrders) {
  const Instance a = fixtures::instance_a();
  const std::vector<std::size_t> spt{1, 0, 2};
  EXPECT_EQ(canonical_left_shift(a, spt).start, (std::vector<Int>{2, 0, 4}));
  const std::vector<std::size_t> ident{0, 1, 2};
  EXPECT_EQ(canonical_left_shift(a, ident).start, (std::vector<Int>{0, 2, 3}));
  const std::vector<std::size_t> dup{0, 0, 2};
  EXPECT_THROW(canonical_left_shift(a, dup), Error);
}

TEST(LeftShift, AmpleSupplyHasNoIdle) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GenOptions o;
    o.family = Family::General;
    const Instance g = gen_random(seed, 6, 1, o);
    std::vector<std::size_t> order(6);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const Schedule s = canonical_left_shift(g, order);
    Int t = 0;
    for (std::size_t j : order) {
      ASSERT_EQ(s.start[j], t);
      t += g.jobs()[j].p;
    }
  }
}

TEST(LeftShift, Unsolvable) {
  const Instance over = Instance::normal({Job{1, 1, 3}}, SupplyProfile({0}, {2}));
  const std::vector<std::size_t> order{0};
  try {
    canonical_left_shift(over, order);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unsolvable);
  }
}

TEST(Compact, AgreesWithExpandedSchedule) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    GenOptions o;
    o.family = Family::Hme;
    o.classes = 1 + seed % 3;
    const Instance h = gen_random(seed, 7, 1 + seed % 3, o);
    std::vector<std::size_t> order(h.classes().size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (seed % 2) std::reverse(order.begin(), order.end());
    const CompactSchedule c = canonical_left_shift_classes(h, order);
    const Schedule e = expand_schedule(h, c);
    const Instance flat = expand_hme(h);
    ASSERT_TRUE(check_feasible(h, c));
    ASSERT_TRUE(check_feasible(flat, e));
    ASSERT_EQ(objective(h, c), objective(flat, e));
    const CompactSchedule back = compress_schedule(h, e);
    ASSERT_TRUE(check_feasible(h, back));
    ASSERT_EQ(objective(h, back), objective(h, c));
  }
}

TEST(Compact, DetectsViolations) {
  const Instance c = fixtures::instance_c();
  // Class 1 in period 1, class 2 from u_2 = 3.
  const CompactSchedule good{{Block{0, 0, 0, 2}, Block{1, 1, 3, 2}}};
  EXPECT_TRUE(check_feasible(c, good));
  EXPECT_EQ(objective(c, good), 21);
  EXPECT_FALSE(check_feasible(c, CompactSchedule{{Block{0, 0, 0, 2}, Block{1, 1, 1, 2}}}));  // before u_2
  EXPECT_FALSE(check_feasible(c, CompactSchedule{{Block{0, 0, 0, 2}, Block{0, 1, 2, 2}}}));  // resource
  EXPECT_FALSE(check_feasible(c, CompactSchedule{{Block{0, 0, 0, 2}, Block{1, 1, 3, 1}}}));  // count
  EXPECT_FALSE(check_feasible(c, CompactSchedule{{Block{0, 0, 0, 2}, Block{1, 1, 3, 2}, Block{1, 0, 4, 0}}}));
  EXPECT_FALSE(check_feasible(c, CompactSchedule{{Block{0, 0, 4, 2}, Block{1, 1, 3, 2}}}));  // overlap
}

TEST(PeriodStarts, Recurrence) {
  const SupplyProfile s({0, 3, 10}, {1, 1, 1});
  const std::vector<Wide> p{5, 1, 2};
  EXPECT_EQ(period_starts(s, p), (std::vector<Wide>{0, 5, 10}));
  const std::vector<Wide> q{0, 9, 0};
  EXPECT_EQ(period_starts(s, q), (std::vector<Wide>{0, 3, 12}));
}

TEST(Ordering, Wspt) {
  const std::vector<Job> a{{1, 3, 1}, {2, 1, 1}};
  EXPECT_EQ(wspt_order(std::span<const Job>(a)), (std::vector<std::size_t>{0, 1}));
  const std::vector<Job> tie{{4, 2, 1}, {2, 1, 1}};
  EXPECT_EQ(wspt_order(std::span<const Job>(tie)), (std::vector<std::size_t>{1, 0}));
  const std::vector<Job> same{{3, 3, 1}, {1, 1, 1}, {2, 2, 1}, {1, 1, 1}};
  EXPECT_EQ(wspt_order(std::span<const Job>(same)), (std::vector<std::size_t>{1, 3, 2, 0}));
}
