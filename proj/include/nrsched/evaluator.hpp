#pragma once

#include <span>
#include <string>
#include <vector>

#include "nrsched/model.hpp"

namespace nrsched {

struct FeasibilityReport {
  bool feasible = true;
  std::string violation;  // first violation found, empty when feasible

  explicit operator bool() const noexcept { return feasible; }
};

/// Machine and resource feasibility of an explicit schedule (normal instance).
/// A job starting at t may consume everything supplied at u_l <= t.
FeasibilityReport check_feasible(const Instance& inst, const Schedule& sched);

/// Same check on a compact schedule of an hme instance, without expanding it.
FeasibilityReport check_feasible(const Instance& inst, const CompactSchedule& sched);

/// Sum of w_j (S_j + p_j). Throws InfeasibleSchedule.
Wide objective(const Instance& inst, const Schedule& sched);
Wide objective(const Instance& inst, const CompactSchedule& sched);

/// Unit-weight contribution of k jobs of length p run back to back from t:
/// k*t + k(k+1)/2 * p.
Wide block_contribution(Wide k, Wide t, Wide p);

/// List schedule: each job in `order` starts as soon as the machine is free
/// and the cumulative supply covers its demand. Throws Unsolvable.
Schedule canonical_left_shift(const Instance& inst, std::span<const std::size_t> order);

/// List schedule of an hme instance with the classes taken in `class_order`
/// (all jobs of a class consecutive). Emits at most one block per
/// (period, class).
CompactSchedule canonical_left_shift_classes(const Instance& inst,
                                             std::span<const std::size_t> class_order);

/// Explicit schedule for `expand_hme(inst)`: each class's jobs are handed to
/// its blocks in start-time order.
Schedule expand_schedule(const Instance& inst, const CompactSchedule& sched);

/// Inverse of expand_schedule: runs of back-to-back jobs of one class become
/// blocks, each booked against the period in which it starts.
CompactSchedule compress_schedule(const Instance& inst, const Schedule& expanded);

/// Block start times for a period assignment: t_0 = 0 and
/// t_l = max(u_l, t_{l-1} + P_{l-1}).
std::vector<Wide> period_starts(const SupplyProfile& supply, std::span<const Wide> period_processing);

/// Schedule for a job-to-period assignment; within a period jobs follow
/// `order`. `period_of` is indexed by job.
Schedule schedule_from_assignment(const Instance& inst, std::span<const std::size_t> order,
                                  std::span<const std::size_t> period_of);

}  // namespace nrsched
