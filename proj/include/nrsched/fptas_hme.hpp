#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nrsched/model.hpp"
#include "nrsched/report.hpp"

namespace nrsched {

/// Exponent vector (k_1..k_q); the class may place up to floor((1+eps)^k_l)
/// jobs in period l. kEmptyPeriod stands for a cap of 0.
struct EligibleTuple {
  std::vector<long> k;

  friend bool operator==(const EligibleTuple&, const EligibleTuple&) = default;
};

/// ceil(log_{1+eps} s): the largest exponent worth considering for a class
/// of multiplicity s.
long max_multiplicity_exponent(Int s, Ratio eps);

inline constexpr long kEmptyPeriod = -1;

/// floor((1+eps)^k) for each entry of the tuple, computed exactly.
std::vector<Int> geometric_caps(const EligibleTuple& tuple, Ratio eps);

/// All tuples over {0..max_multiplicity_exponent(s)}^q whose caps add up to
/// at least s, in lexicographic order. With `allow_empty` each entry may also
/// be kEmptyPeriod.
std::vector<EligibleTuple> enumerate_eligible(Int s, std::size_t q, Ratio eps, bool allow_empty = false);

/// Backward fill: period q gets min(s, cap_q), then q-1, and so on.
/// Throws IneligibleTuple when the caps cannot hold s jobs.
std::vector<Int> allocate(Int s, const EligibleTuple& tuple, Ratio eps);

struct HmeFptasOptions {
  std::size_t max_periods = 6;
  std::size_t state_cap = 10'000'000;
  /// Also offer tuples that leave a period without jobs of the class. Without
  /// them every class keeps at least one job in period q, and the (1+eps)^4
  /// bound fails on some inputs.
  bool allow_empty_periods = true;
};

struct HmeFptasStats {
  std::size_t states = 0;
  std::size_t terminal_states = 0;
  std::vector<std::size_t> eligible_per_class;     // in input class order
  std::vector<std::size_t> allocations_per_class;  // distinct δ vectors
  std::string rounded_value;
};

/// FPTAS for hme input with a common requirement ā >= 1: one DP stage per
/// class (classes in WSPT order), one transition per distinct allocation,
/// components rounded to powers of 1 + eps/(2h). Returns a compact schedule
/// whose true objective is at most (1+eps)^4 OPT.
SolveReport hme_fptas_solve(const Instance& inst, Ratio eps, const HmeFptasOptions& options = {},
                            HmeFptasStats* stats = nullptr);

/// "(1+eps)^4" as an exact rational string.
std::string hme_fptas_guarantee(Ratio eps);

}  // namespace nrsched
