#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nrsched/model.hpp"
#include "nrsched/report.hpp"

namespace nrsched {

// Instance file:
//
//   NORMAL                      HME
//   jobs <n>                    classes <h>
//   job <p> <w> <a>   (n x)     class <s> <p> <w> <a>   (h x)
//   supplies <q>
//   supply <u> <btilde>  (q x, increasing u)
//
// '#' starts a comment; blank lines are ignored.
Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& inst);

// Schedule file: `start <job> <t>` lines (normal) or
// `block <period> <class> <t> <count>` lines (hme), indices 1-based, plus an
// optional `objective <value>` line.
struct ScheduleFile {
  std::optional<Schedule> schedule;
  std::optional<CompactSchedule> compact;
  std::optional<Wide> objective;
};

ScheduleFile parse_schedule(std::string_view text, const Instance& inst);
std::string emit_schedule(const Schedule& sched, std::optional<Wide> objective = std::nullopt);
std::string emit_schedule(const CompactSchedule& sched, std::optional<Wide> objective = std::nullopt);
std::string emit_schedule(const SolveReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace nrsched
