#include <gtest/gtest.h>

#include "test_support.hpp"
#include "nrsched/model.hpp"

using namespace nrsched;

TEST(SupplyProfile, CumulativeSums) {
  SupplyProfile s({0, 4}, {3, 4});
  EXPECT_EQ(s.cumulative(), (std::vector<Wide>{3, 7}));
  EXPECT_EQ(s.total(), 7);
  EXPECT_EQ(SupplyProfile({0}, {5}).cumulative(), std::vector<Wide>{5});
}

TEST(SupplyProfile, RejectsBadInput) {
  EXPECT_THROW(SupplyProfile({1}, {1}), Error);
  EXPECT_THROW(SupplyProfile({0, 0}, {1, 1}), Error);
  EXPECT_THROW(SupplyProfile({0, 3}, {1, 0}), Error);
  EXPECT_THROW(SupplyProfile({}, {}), Error);
  EXPECT_THROW(SupplyProfile({0, 1}, {1}), Error);
  try {
    SupplyProfile({0, 5, 5}, {1, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvariantViolation);
    EXPECT_NE(std::string(e.what()).find("u strictly increasing"), std::string::npos);
  }
}

TEST(SupplyProfile, PeriodLookup) {
  SupplyProfile s({0, 3, 7}, {2, 1, 4});
  EXPECT_EQ(s.period_at(0), 0u);
  EXPECT_EQ(s.period_at(2), 0u);
  EXPECT_EQ(s.period_at(3), 1u);
  EXPECT_EQ(s.period_at(100), 2u);
  EXPECT_EQ(s.first_covering(0), 0u);
  EXPECT_EQ(s.first_covering(2), 0u);
  EXPECT_EQ(s.first_covering(3), 1u);
  EXPECT_EQ(s.first_covering(7), 2u);
  EXPECT_FALSE(s.first_covering(8).has_value());
}

TEST(Instance, Accessors) {
  const Instance a = fixtures::instance_a();
  EXPECT_FALSE(a.is_hme());
  EXPECT_EQ(a.job_count(), 3);
  EXPECT_EQ(a.total_demand(), 3);
  EXPECT_TRUE(a.demand_covered());
  EXPECT_EQ(a.uniform_requirement(), 1);
  EXPECT_THROW(a.classes(), Error);

  const Instance c = fixtures::instance_c();
  EXPECT_TRUE(c.is_hme());
  EXPECT_EQ(c.job_count(), 4);
  EXPECT_THROW(c.jobs(), Error);

  const Instance mixed = Instance::normal({Job{1, 1, 1}, Job{1, 1, 2}}, SupplyProfile({0}, {3}));
  EXPECT_FALSE(mixed.uniform_requirement().has_value());
}

TEST(Instance, Validation) {
  const SupplyProfile s({0}, {1});
  EXPECT_THROW(Instance::normal({}, s), Error);
  EXPECT_THROW(Instance::normal({Job{0, 1, 1}}, s), Error);
  EXPECT_THROW(Instance::normal({Job{1, 0, 1}}, s), Error);
  EXPECT_THROW(Instance::normal({Job{1, 1, -1}}, s), Error);
  EXPECT_THROW(Instance::hme({JobClass{0, 1, 1, 1}}, s), Error);
  EXPECT_NO_THROW(Instance::normal({Job{1, 1, 0}}, s));
  // Demand above supply is representable; solvers report it.
  EXPECT_FALSE(Instance::normal({Job{1, 1, 5}}, s).demand_covered());
}

TEST(Capacity, FloorDivision) {
  const Instance two = Instance::normal({Job{1, 1, 2}}, SupplyProfile({0, 1}, {3, 4}));
  EXPECT_EQ(prefix_supply(two), (std::vector<Wide>{3, 7}));
  EXPECT_EQ(job_capacity_prefix(two, 2), (std::vector<Int>{1, 3}));
  const Instance one = Instance::normal({Job{1, 1, 1}}, SupplyProfile({0, 1}, {1, 2}));
  EXPECT_EQ(job_capacity_prefix(one, 1), (std::vector<Int>{1, 3}));
  EXPECT_EQ(job_capacity_prefix(fixtures::instance_c(), 1), (std::vector<Int>{2, 4}));
  EXPECT_THROW(job_capacity_prefix(one, 0), Error);
}

TEST(ExpandHme, ReplicatesInClassOrder) {
  const Instance single = Instance::hme({JobClass{3, 2, 1, 1}}, SupplyProfile({0}, {3}));
  EXPECT_EQ(expand_hme(single).jobs(), (std::vector<Job>(3, Job{2, 1, 1})));

  const Instance e = expand_hme(fixtures::instance_c());
  EXPECT_EQ(e.jobs(), (std::vector<Job>{{1, 3, 1}, {1, 3, 1}, {2, 1, 1}, {2, 1, 1}}));
  EXPECT_EQ(e.supply(), fixtures::instance_c().supply());
  EXPECT_EQ(class_offsets(fixtures::instance_c()), (std::vector<std::size_t>{0, 2, 4}));
}

TEST(ExpandHme, SizeLimit) {
  const Instance big = Instance::hme({JobClass{1'000'000'000, 1, 1, 1}}, SupplyProfile({0}, {1'000'000'000}));
  try {
    expand_hme(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeLimit);
  }
}

TEST(Wide, DecimalRoundTrip) {
  const Wide big = static_cast<Wide>(1) << 100;
  EXPECT_EQ(to_string(big), "1267650600228229401496703205376");
  EXPECT_EQ(parse_wide("1267650600228229401496703205376"), big);
  EXPECT_EQ(parse_wide("-42"), -42);
  EXPECT_EQ(to_string(static_cast<Wide>(0)), "0");
  EXPECT_THROW(parse_wide("12x"), std::invalid_argument);
  EXPECT_THROW(parse_wide("999999999999999999999999999999999999999999"), std::out_of_range);
}

TEST(Ratio, Parsing) {
  EXPECT_EQ(parse_ratio("1/4"), (Ratio{1, 4}));
  EXPECT_EQ(parse_ratio("0.25"), (Ratio{1, 4}));
  EXPECT_EQ(parse_ratio("2/8"), (Ratio{1, 4}));
  EXPECT_EQ(parse_ratio("1"), (Ratio{1, 1}));
  EXPECT_EQ(parse_ratio("-0.5"), (Ratio{-1, 2}));
  EXPECT_THROW(parse_ratio("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_ratio("abc"), std::invalid_argument);
  EXPECT_EQ(parse_ratio("0.1").to_string(), "1/10");
}
