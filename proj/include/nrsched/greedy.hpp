#pragma once

#include "nrsched/model.hpp"
#include "nrsched/report.hpp"

namespace nrsched {

/// List scheduling in non-decreasing p order. Requires a common requirement
/// ā >= 1; a 2-approximation when all weights are 1 (otherwise a warning is
/// attached to the report). Accepts hme input and then returns a compact
/// schedule.
SolveReport spt_list(const Instance& inst);

/// List scheduling in non-increasing w order for p_j = 1, w_j = a_j
/// instances: 3-approximation, 2-approximation when q = 2. Throws
/// ModelMismatch otherwise. Accepts hme input.
SolveReport weight_order_list(const Instance& inst);

/// Sum of completion times of the resource-free SPT sequence.
Wide spt_lower_bound(const Instance& inst);

/// sum_{l>=2} u_l * (n_l - n_{l-1}), with n_l capped at n.
Wide supply_lower_bound(const Instance& inst);

}  // namespace nrsched
