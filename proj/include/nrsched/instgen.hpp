#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nrsched/model.hpp"

namespace nrsched {

enum class Family {
  UniformA,   // common requirement abar, arbitrary p and w
  UnitPWEqA,  // p = 1, w = a
  General,    // independent p, w, a (a may be 0)
  Hme,        // h classes with a common requirement abar
};

/// "uniform_a", "unit_p_w_eq_a", "general", "hme". Throws InvalidProfile.
Family parse_family(const std::string& name);
std::string to_string(Family family);

struct GenOptions {
  Family family = Family::UniformA;
  Int abar = 1;
  std::size_t classes = 2;  // Hme only
  Int pmax = 9;             // p, w (and a for General / UnitPWEqA) drawn from [1, pmax]
  Int surplus = 0;          // total supply = total demand + surplus
  Int horizon = 0;          // supply times drawn from [1, horizon]; 0 = total processing time
};

/// Deterministic random instance with n jobs (total multiplicity for Hme)
/// and q supply points, u_1 = 0.
Instance gen_random(std::uint64_t seed, std::size_t n, std::size_t q, const GenOptions& options);

/// Scheduling instance built from an EQUAL-CARDINALITY PARTITION instance:
/// n medium jobs (p = medium_base + e_i), big_base small jobs (p = 1) and
/// big_base big jobs (p = big_base), all with a = 1, w = 1, two supplies.
/// The "no" direction of the reduction needs medium_base = 20^{n^2} and
/// big_base = 200^{n^2}; smaller bases keep only the "yes" direction.
struct PartitionReduction {
  Instance instance;
  Int medium_base = 0;
  Int big_base = 0;
  Int half_sum = 0;  // A
  Int u2 = 0;
  Wide v_small = 0;
  Wide v_medium = 0;
  Wide v_big = 0;
  Wide threshold = 0;  // v_small + v_medium + v_big
  std::size_t small_class = 0;
  std::size_t big_class = 1;
  std::vector<std::size_t> medium_class_of;  // per item
};

PartitionReduction gen_partition_reduction(std::span<const Int> items, Int medium_base, Int big_base);

/// Scaled bases 20 n^2 and 200 n^2.
PartitionReduction gen_partition_reduction(std::span<const Int> items);

/// The certificate schedule for a half H (item indices, |H| = n/2, sum A):
/// H's medium jobs from 0, then small, remaining medium and big jobs from
/// u2, each group in non-decreasing p order.
CompactSchedule partition_yes_schedule(const PartitionReduction& red, std::span<const std::size_t> half);

/// Two unit jobs with w = a: weights w and w - gap, supplies w - gap at 0 and
/// w at time w.
Instance gen_tight_pair(Int w, Int gap);
Wide tight_pair_greedy_value(Int w, Int gap);   // 2w^2 + 3w - gap(w+2)
Wide tight_pair_optimum(Int w, Int gap);        // w^2 + 2w - gap

}  // namespace nrsched
