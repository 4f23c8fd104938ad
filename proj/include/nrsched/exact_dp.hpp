#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nrsched/model.hpp"
#include "nrsched/report.hpp"

namespace nrsched {

/// Per-period aggregates of a (partial) job-to-period assignment: job count,
/// total processing time, total weight, and weighted completion time of the
/// period's jobs when run in WSPT order from time 0.
struct DpState {
  std::vector<Int> count;
  std::vector<Wide> processing;
  std::vector<Wide> weight;
  std::vector<Wide> weighted_completion;

  friend bool operator==(const DpState&, const DpState&) = default;
};

struct DpOptions {
  std::size_t max_periods = 6;
  std::size_t state_cap = 10'000'000;
  /// Re-evaluate this many terminal states through the evaluator and throw
  /// std::logic_error on any mismatch with terminal_value.
  std::size_t verify_terminals = 0;
};

/// Exact pseudo-polynomial DP for a common requirement ā >= 1 and few supply
/// periods. Jobs are assigned to periods in WSPT order; a period can take
/// another job only while the prefix count stays within n_l = floor(b_l/ā).
/// Hme input is expanded first (subject to the expansion cap).
SolveReport dp_solve(const Instance& inst, const DpOptions& options = {});

/// Objective of a complete assignment: sum over periods of WP_l + t_l * W_l
/// where t_l = max(u_l, max_{l'<l} (u_l' + P_l' + ... + P_{l-1})).
/// Throws NotTerminal unless the counts add up to `job_count`.
Wide terminal_value(const DpState& state, const SupplyProfile& supply, Wide job_count);

/// Aggregates of an explicit assignment (period_of indexed by job), jobs
/// taken in `order` within each period.
DpState assignment_state(const Instance& inst, std::span<const std::size_t> order,
                         std::span<const std::size_t> period_of);

}  // namespace nrsched
