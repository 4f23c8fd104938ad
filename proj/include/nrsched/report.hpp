#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nrsched/model.hpp"

namespace nrsched {

/// Outcome of one solver run. Exactly one of `schedule` / `compact` is set.
struct SolveReport {
  std::string algorithm;
  Wide objective = 0;
  std::optional<Schedule> schedule;
  std::optional<CompactSchedule> compact;

  /// Certified approximation factor, e.g. "2", "1+3*1/4 = 7/4".
  std::optional<std::string> guarantee;
  std::optional<Wide> spt_lower_bound;
  std::optional<Wide> supply_lower_bound;

  std::vector<std::string> warnings;
  std::size_t states = 0;  // DP states stored, 0 for list algorithms
};

}  // namespace nrsched
