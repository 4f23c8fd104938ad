#pragma once

#include <cstddef>
#include <vector>

#include "nrsched/model.hpp"

namespace nrsched {

struct PermutationOptimum {
  Wide objective = 0;
  std::vector<std::size_t> order;  // lexicographically smallest optimal order
  Schedule schedule;
};

struct AssignmentOptimum {
  Wide objective = 0;
  std::vector<std::size_t> period_of;  // indexed by job
  Schedule schedule;
};

inline constexpr std::size_t kPermutationOracleCap = 9;
inline constexpr std::size_t kAssignmentOracleCap = 12;

/// Exact optimum by list-scheduling every permutation (left-shifted schedules
/// dominate for a fixed order). Hme input is expanded. Parallel over the
/// first job with OpenMP; throws SizeLimit above `max_jobs`, Unsolvable when
/// demand exceeds supply.
PermutationOptimum permutation_oracle(const Instance& inst, std::size_t max_jobs = kPermutationOracleCap);

/// Straightforward reference: std::next_permutation + canonical_left_shift.
PermutationOptimum permutation_oracle_serial(const Instance& inst, std::size_t max_jobs = kPermutationOracleCap);

/// Exact optimum over all prefix-feasible job-to-period assignments (sum of
/// assigned requirements through period l at most b_l), each evaluated with
/// WSPT order inside the periods. Branches pruned on prefix infeasibility;
/// parallel over the first job's period.
AssignmentOptimum assignment_oracle(const Instance& inst, std::size_t max_jobs = kAssignmentOracleCap);

/// Reference: plain odometer over all q^n assignments.
AssignmentOptimum assignment_oracle_serial(const Instance& inst, std::size_t max_jobs = kAssignmentOracleCap);

}  // namespace nrsched
