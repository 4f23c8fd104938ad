#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "nrsched/wide.hpp"

namespace nrsched {

namespace detail {

inline std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

}  // namespace detail

/// Smith's rule: non-increasing w/p, compared as w_i*p_j vs w_j*p_i.
/// Ties go to the shorter job, then the smaller index.
template <class Item>
std::vector<std::size_t> wspt_order(std::span<const Item> items) {
  auto idx = detail::identity(items.size());
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    const Wide lhs = static_cast<Wide>(items[x].w) * items[y].p;
    const Wide rhs = static_cast<Wide>(items[y].w) * items[x].p;
    if (lhs != rhs) return lhs > rhs;
    if (items[x].p != items[y].p) return items[x].p < items[y].p;
    return x < y;
  });
  return idx;
}

/// Non-decreasing p, ties by index.
template <class Item>
std::vector<std::size_t> spt_order(std::span<const Item> items) {
  auto idx = detail::identity(items.size());
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return items[x].p < items[y].p; });
  return idx;
}

/// Non-increasing w, ties by index.
template <class Item>
std::vector<std::size_t> weight_order(std::span<const Item> items) {
  auto idx = detail::identity(items.size());
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return items[x].w > items[y].w; });
  return idx;
}

}  // namespace nrsched
