#include <gtest/gtest.h>

#include "test_support.hpp"
#include "nrsched/evaluator.hpp"
#include "nrsched/instgen.hpp"
#include "nrsched/oracle.hpp"

using namespace nrsched;

TEST(Oracle, InstanceA) {
  const auto p = permutation_oracle(fixtures::instance_a());
  EXPECT_EQ(p.objective, 11);
  EXPECT_EQ(p.order, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(assignment_oracle(fixtures::instance_a()).objective, 11);
}

TEST(Oracle, TightPairAndInstanceC) {
  EXPECT_EQ(permutation_oracle(gen_tight_pair(10, 1)).objective, 119);
  EXPECT_EQ(assignment_oracle(gen_tight_pair(10, 1)).objective, 119);
  EXPECT_EQ(assignment_oracle(fixtures::instance_c()).objective, 21);
  EXPECT_EQ(permutation_oracle(fixtures::instance_c()).objective, 21);
}

TEST(Oracle, SingleJob) {
  const Instance one = Instance::normal({Job{4, 3, 1}}, SupplyProfile({0}, {1}));
  EXPECT_EQ(permutation_oracle(one).objective, 12);
  EXPECT_EQ(assignment_oracle(one).objective, 12);
}

TEST(Oracle, Guards) {
  GenOptions o;
  const Instance big = gen_random(1, 10, 2, o);
  try {
    permutation_oracle(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
  EXPECT_NO_THROW(assignment_oracle(big));
  const Instance over = Instance::normal({Job{1, 1, 3}}, SupplyProfile({0}, {2}));
  EXPECT_THROW(permutation_oracle(over), Error);
  EXPECT_THROW(assignment_oracle_serial(over), Error);
}

TEST(Oracle, ParallelMatchesSerial) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    GenOptions o;
    o.family = static_cast<Family>(seed % 3);
    const Instance inst = gen_random(seed, 1 + seed % 7, 1 + seed % 3, o);
    const auto par = permutation_oracle(inst);
    const auto ser = permutation_oracle_serial(inst);
    ASSERT_EQ(par.objective, ser.objective);
    ASSERT_EQ(par.order, ser.order);
    ASSERT_EQ(assignment_oracle(inst).objective, assignment_oracle_serial(inst).objective);
  }
}

TEST(Oracle, PermutationEqualsAssignment) {
  for (std::uint64_t seed = 100; seed < 250; ++seed) {
    GenOptions o;
    o.family = static_cast<Family>(seed % 3);
    o.surplus = static_cast<Int>(seed % 3);
    const Instance inst = gen_random(seed, 1 + seed % 8, 1 + seed % 3, o);
    const auto p = permutation_oracle(inst);
    const auto a = assignment_oracle(inst);
    ASSERT_EQ(p.objective, a.objective) << seed;
    ASSERT_TRUE(check_feasible(inst, p.schedule));
    ASSERT_TRUE(check_feasible(inst, a.schedule));
    ASSERT_EQ(objective(inst, a.schedule), a.objective);
  }
}
