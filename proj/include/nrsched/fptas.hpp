#pragma once

#include <cstddef>
#include <string>

#include "nrsched/model.hpp"
#include "nrsched/report.hpp"

namespace nrsched {

struct FptasOptions {
  std::size_t max_periods = 6;
  std::size_t state_cap = 10'000'000;
};

struct FptasStats {
  std::size_t states = 0;
  std::size_t terminal_states = 0;
  // Distinct non-zero exponents seen per component family across all stored states.
  std::size_t distinct_processing = 0;
  std::size_t distinct_weight = 0;
  std::size_t distinct_weighted_completion = 0;
  std::string rounded_value;  // eq. (1) value of the chosen terminal, exact rational
};

/// FPTAS for a common requirement ā >= 1 and constant q: the exact DP with
/// P, W, WP rounded up to powers of 1 + eps/(2n) after every transition.
/// The reported objective is the true objective of the reconstructed
/// schedule, at most (1 + 3 eps) OPT.
SolveReport fptas_solve(const Instance& inst, Ratio eps, const FptasOptions& options = {},
                        FptasStats* stats = nullptr);

/// "1+3*eps" as an exact rational string.
std::string fptas_guarantee(Ratio eps);

}  // namespace nrsched
