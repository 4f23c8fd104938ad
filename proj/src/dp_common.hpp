#pragma once

// Pieces shared by the exact DP and both FPTAS variants.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nrsched/model.hpp"

namespace nrsched::detail {

/// Hash for flat integer state keys.
struct KeyHash {
  template <class T>
  std::size_t operator()(const std::vector<T>& key) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.size();
    for (const T& v : key) {
      const auto wide = static_cast<unsigned __int128>(v);
      for (std::uint64_t part : {static_cast<std::uint64_t>(wide), static_cast<std::uint64_t>(wide >> 64)}) {
        h ^= part + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
      }
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

/// True iff adding `extra[l]` jobs to each period keeps every prefix count
/// within the capacity prefix n_l.
template <class Count, class Extra>
bool prefix_within(std::span<const Count> counts, std::span<const Extra> extra, std::span<const Int> capacity) {
  Wide running = 0;
  for (std::size_t l = 0; l < counts.size(); ++l) {
    running += static_cast<Wide>(counts[l]) + static_cast<Wide>(extra[l]);
    if (running > capacity[l]) return false;
  }
  return true;
}

/// Terminal state value over an arithmetic type T that supports +, * and <.
/// `time` converts a supply time point into T.
template <class T, class Time>
T state_value(std::span<const T> processing, std::span<const T> weight, std::span<const T> weighted,
              const SupplyProfile& supply, Time time) {
  const std::size_t q = supply.periods();
  T value = time(0);
  for (std::size_t l = 0; l < q; ++l) {
    T start = time(supply.time(l));
    for (std::size_t from = 0; from < l; ++from) {
      T candidate = time(supply.time(from));
      for (std::size_t k = from; k < l; ++k) candidate = candidate + processing[k];
      if (start < candidate) start = candidate;
    }
    value = value + weighted[l] + start * weight[l];
  }
  return value;
}

template <class T>
std::size_t argmin_first(const std::vector<T>& values) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] < values[best]) best = k;
  return best;
}

}  // namespace nrsched::detail
