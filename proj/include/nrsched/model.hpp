#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nrsched/error.hpp"
#include "nrsched/wide.hpp"

namespace nrsched {

/// A single job: processing time, weight and resource requirement.
struct Job {
  Int p = 1;
  Int w = 1;
  Int a = 0;

  friend bool operator==(const Job&, const Job&) = default;
};

/// `s` identical jobs sharing (p, w, a).
struct JobClass {
  Int s = 1;
  Int p = 1;
  Int w = 1;
  Int a = 0;

  friend bool operator==(const JobClass&, const JobClass&) = default;
};

/// Supply time points u (u[0] = 0, strictly increasing) with the quantity
/// delivered at each point.
class SupplyProfile {
 public:
  SupplyProfile(std::vector<Int> times, std::vector<Int> quantities);

  std::size_t periods() const noexcept { return times_.size(); }
  const std::vector<Int>& times() const noexcept { return times_; }
  const std::vector<Int>& quantities() const noexcept { return quantities_; }
  Int time(std::size_t period) const { return times_.at(period); }

  /// Cumulative supply b_l, l = 0..q-1.
  const std::vector<Wide>& cumulative() const noexcept { return cumulative_; }
  Wide total() const noexcept { return cumulative_.back(); }

  /// Index of the latest supply point u_l <= t.
  std::size_t period_at(Wide t) const;

  /// Smallest period whose cumulative supply covers `demand`, or nullopt.
  std::optional<std::size_t> first_covering(Wide demand) const;

  friend bool operator==(const SupplyProfile& x, const SupplyProfile& y) {
    return x.times_ == y.times_ && x.quantities_ == y.quantities_;
  }

 private:
  std::vector<Int> times_;
  std::vector<Int> quantities_;
  std::vector<Wide> cumulative_;
};

enum class InstanceKind { Normal, Hme };

/// Problem instance: explicit jobs or high-multiplicity job classes plus a
/// supply profile. Immutable after construction.
class Instance {
 public:
  static Instance normal(std::vector<Job> jobs, SupplyProfile supply);
  static Instance hme(std::vector<JobClass> classes, SupplyProfile supply);

  InstanceKind kind() const noexcept {
    return std::holds_alternative<std::vector<Job>>(items_) ? InstanceKind::Normal
                                                             : InstanceKind::Hme;
  }
  bool is_hme() const noexcept { return kind() == InstanceKind::Hme; }

  /// Throws ModelMismatch when called on the other kind.
  const std::vector<Job>& jobs() const;
  const std::vector<JobClass>& classes() const;

  const SupplyProfile& supply() const noexcept { return supply_; }

  /// Number of jobs (sum of multiplicities for hme input).
  Wide job_count() const noexcept;
  Wide total_demand() const noexcept;
  bool demand_covered() const noexcept { return total_demand() <= supply_.total(); }

  /// Common requirement if all jobs share one, otherwise nullopt.
  std::optional<Int> uniform_requirement() const;

  friend bool operator==(const Instance& x, const Instance& y) {
    return x.items_ == y.items_ && x.supply_ == y.supply_;
  }

 private:
  Instance(std::variant<std::vector<Job>, std::vector<JobClass>> items, SupplyProfile supply)
      : items_(std::move(items)), supply_(std::move(supply)) {}

  std::variant<std::vector<Job>, std::vector<JobClass>> items_;
  SupplyProfile supply_;
};

/// Explicit start time per job, indexed like the instance's jobs.
struct Schedule {
  std::vector<Int> start;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Run of `count` consecutive jobs of class `cls` starting at `start`,
/// booked against supply period `period` (both indices 0-based).
struct Block {
  std::size_t period = 0;
  std::size_t cls = 0;
  Int start = 0;
  Int count = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

struct CompactSchedule {
  std::vector<Block> blocks;

  friend bool operator==(const CompactSchedule&, const CompactSchedule&) = default;
};

/// b_l = sum of the first l supplied quantities.
std::vector<Wide> prefix_supply(const Instance& inst);

/// n_l = floor(b_l / abar). Requires every job to need exactly `abar` >= 1.
std::vector<Int> job_capacity_prefix(const Instance& inst, Int abar);

inline constexpr Wide kDefaultExpansionCap = 1'000'000;

/// Replicates each class into explicit jobs, preserving class order.
Instance expand_hme(const Instance& inst, Wide cap = kDefaultExpansionCap);

/// Index of the first expanded job of each class (plus a final sentinel).
std::vector<std::size_t> class_offsets(const Instance& inst);

/// Exact rational a/b, used for accuracy parameters.
struct Ratio {
  Int num = 0;
  Int den = 1;

  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Accepts "1/4", "0.25", "1". Result is reduced; throws std::invalid_argument.
Ratio parse_ratio(const std::string& text);

}  // namespace nrsched
