#include "nrsched/evaluator.hpp"

#include <algorithm>
#include <numeric>

namespace nrsched {

namespace {

std::string job_label(std::size_t j) { return "job " + std::to_string(j + 1); }

FeasibilityReport violation(std::string what) { return FeasibilityReport{false, std::move(what)}; }

Wide checked_start(const Instance& inst, Wide demand, Wide machine_free) {
  const auto period = inst.supply().first_covering(demand);
  if (!period)
    throw Error(ErrorKind::Unsolvable, "cumulative demand " + to_string(demand) + " exceeds total supply " +
                                           to_string(inst.supply().total()));
  return std::max<Wide>(machine_free, inst.supply().time(*period));
}

}  // namespace

FeasibilityReport check_feasible(const Instance& inst, const Schedule& sched) {
  const auto& jobs = inst.jobs();
  if (sched.start.size() != jobs.size())
    return violation("schedule has " + std::to_string(sched.start.size()) + " start times for " +
                     std::to_string(jobs.size()) + " jobs");
  for (std::size_t j = 0; j < jobs.size(); ++j)
    if (sched.start[j] < 0) return violation(job_label(j) + " has negative start time");

  std::vector<std::size_t> by_start(jobs.size());
  std::iota(by_start.begin(), by_start.end(), std::size_t{0});
  std::stable_sort(by_start.begin(), by_start.end(),
                   [&](std::size_t x, std::size_t y) { return sched.start[x] < sched.start[y]; });

  for (std::size_t k = 1; k < by_start.size(); ++k) {
    const std::size_t prev = by_start[k - 1];
    const std::size_t cur = by_start[k];
    if (static_cast<Wide>(sched.start[prev]) + jobs[prev].p > sched.start[cur])
      return violation(job_label(cur) + " starts at " + std::to_string(sched.start[cur]) + " while " +
                       job_label(prev) + " runs until " +
                       to_string(static_cast<Wide>(sched.start[prev]) + jobs[prev].p));
  }

  const SupplyProfile& supply = inst.supply();
  Wide consumed = 0;
  for (std::size_t k = 0; k < by_start.size(); ++k) {
    const std::size_t j = by_start[k];
    consumed += jobs[j].a;
    const bool last_at_time = k + 1 == by_start.size() || sched.start[by_start[k + 1]] != sched.start[j];
    if (!last_at_time) continue;
    const std::size_t period = supply.period_at(sched.start[j]);
    const Wide available = supply.cumulative()[period];
    if (consumed > available)
      return violation(job_label(j) + " at time " + std::to_string(sched.start[j]) + " brings consumption to " +
                       to_string(consumed) + " > supply " + to_string(available) + " available since u_" +
                       std::to_string(period + 1));
  }
  return {};
}

FeasibilityReport check_feasible(const Instance& inst, const CompactSchedule& sched) {
  const auto& classes = inst.classes();
  const SupplyProfile& supply = inst.supply();
  const std::size_t q = supply.periods();

  std::vector<Wide> placed(classes.size(), 0);
  for (std::size_t b = 0; b < sched.blocks.size(); ++b) {
    const Block& blk = sched.blocks[b];
    const std::string label = "block " + std::to_string(b + 1);
    if (blk.cls >= classes.size()) return violation(label + " refers to unknown class");
    if (blk.period >= q) return violation(label + " refers to unknown period");
    if (blk.count < 1) return violation(label + " has non-positive count");
    if (blk.start < supply.time(blk.period))
      return violation(label + " starts before u_" + std::to_string(blk.period + 1));
    placed[blk.cls] += blk.count;
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (placed[i] != classes[i].s)
      return violation("class " + std::to_string(i + 1) + " has " + to_string(placed[i]) + " jobs placed, expected " +
                       std::to_string(classes[i].s));

  std::vector<std::size_t> order(sched.blocks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return sched.blocks[x].start < sched.blocks[y].start;
  });

  auto block_end = [&](const Block& blk) {
    return static_cast<Wide>(blk.start) + static_cast<Wide>(blk.count) * classes[blk.cls].p;
  };
  for (std::size_t k = 1; k < order.size(); ++k) {
    const Block& prev = sched.blocks[order[k - 1]];
    const Block& cur = sched.blocks[order[k]];
    if (block_end(prev) > cur.start)
      return violation("block " + std::to_string(order[k] + 1) + " overlaps block " + std::to_string(order[k - 1] + 1));
  }

  // Within a block job k starts at t + k*p; check the last job of the block
  // that starts inside each supply period the block touches.
  Wide consumed = 0;
  for (std::size_t idx : order) {
    const Block& blk = sched.blocks[idx];
    const JobClass& c = classes[blk.cls];
    const Wide t = blk.start;
    const Wide last_start = t + static_cast<Wide>(blk.count - 1) * c.p;
    for (std::size_t l = supply.period_at(t); l < q && supply.time(l) <= last_start; ++l) {
      Wide k_last = blk.count - 1;
      if (l + 1 < q) {
        const Wide next_u = supply.time(l + 1);
        if (next_u <= t) continue;
        k_last = std::min<Wide>(k_last, (next_u - 1 - t) / c.p);
      }
      const Wide need = consumed + (k_last + 1) * c.a;
      if (need > supply.cumulative()[l])
        return violation("block " + std::to_string(idx + 1) + " brings consumption to " + to_string(need) +
                         " > supply " + to_string(supply.cumulative()[l]) + " available since u_" +
                         std::to_string(l + 1));
    }
    consumed += static_cast<Wide>(blk.count) * c.a;
  }
  return {};
}

Wide objective(const Instance& inst, const Schedule& sched) {
  if (auto report = check_feasible(inst, sched); !report)
    throw Error(ErrorKind::InfeasibleSchedule, report.violation);
  const auto& jobs = inst.jobs();
  Wide total = 0;
  for (std::size_t j = 0; j < jobs.size(); ++j)
    total += static_cast<Wide>(jobs[j].w) * (static_cast<Wide>(sched.start[j]) + jobs[j].p);
  return total;
}

Wide objective(const Instance& inst, const CompactSchedule& sched) {
  if (auto report = check_feasible(inst, sched); !report)
    throw Error(ErrorKind::InfeasibleSchedule, report.violation);
  const auto& classes = inst.classes();
  Wide total = 0;
  for (const Block& blk : sched.blocks) {
    const JobClass& c = classes[blk.cls];
    total += static_cast<Wide>(c.w) * block_contribution(blk.count, blk.start, c.p);
  }
  return total;
}

Wide block_contribution(Wide k, Wide t, Wide p) { return k * t + k * (k + 1) / 2 * p; }

Schedule canonical_left_shift(const Instance& inst, std::span<const std::size_t> order) {
  const auto& jobs = inst.jobs();
  if (!inst.demand_covered())
    throw Error(ErrorKind::Unsolvable, "total demand " + to_string(inst.total_demand()) + " exceeds total supply " +
                                           to_string(inst.supply().total()));
  if (order.size() != jobs.size()) throw Error(ErrorKind::InvariantViolation, "order is not a permutation");

  Schedule sched{std::vector<Int>(jobs.size(), -1)};
  Wide machine_free = 0;
  Wide consumed = 0;
  for (std::size_t j : order) {
    if (j >= jobs.size() || sched.start[j] != -1)
      throw Error(ErrorKind::InvariantViolation, "order is not a permutation");
    consumed += jobs[j].a;
    const Wide start = checked_start(inst, consumed, machine_free);
    sched.start[j] = static_cast<Int>(start);
    machine_free = start + jobs[j].p;
  }
  return sched;
}

CompactSchedule canonical_left_shift_classes(const Instance& inst, std::span<const std::size_t> class_order) {
  const auto& classes = inst.classes();
  const SupplyProfile& supply = inst.supply();
  if (!inst.demand_covered())
    throw Error(ErrorKind::Unsolvable, "total demand " + to_string(inst.total_demand()) + " exceeds total supply " +
                                           to_string(supply.total()));
  if (class_order.size() != classes.size()) throw Error(ErrorKind::InvariantViolation, "order is not a permutation");

  std::vector<bool> seen(classes.size(), false);
  CompactSchedule sched;
  Wide machine_free = 0;
  Wide consumed = 0;
  for (std::size_t i : class_order) {
    if (i >= classes.size() || seen[i]) throw Error(ErrorKind::InvariantViolation, "order is not a permutation");
    seen[i] = true;
    const JobClass& c = classes[i];
    Wide remaining = c.s;
    while (remaining > 0) {
      const Wide start = checked_start(inst, consumed + c.a, machine_free);
      const std::size_t period = *supply.first_covering(consumed + c.a);
      const Wide fits = c.a == 0 ? remaining : (supply.cumulative()[period] - consumed) / c.a;
      const Wide count = std::min(remaining, fits);
      sched.blocks.push_back(Block{period, i, static_cast<Int>(start), static_cast<Int>(count)});
      machine_free = start + count * c.p;
      consumed += count * c.a;
      remaining -= count;
    }
  }
  return sched;
}

Schedule expand_schedule(const Instance& inst, const CompactSchedule& sched) {
  const auto& classes = inst.classes();
  const auto offsets = class_offsets(inst);
  std::vector<std::size_t> order(sched.blocks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return sched.blocks[x].start < sched.blocks[y].start;
  });
  Schedule out{std::vector<Int>(offsets.back(), 0)};
  std::vector<std::size_t> next = offsets;
  for (std::size_t idx : order) {
    const Block& blk = sched.blocks[idx];
    if (blk.cls >= classes.size()) throw Error(ErrorKind::InvariantViolation, "block refers to unknown class");
    for (Int k = 0; k < blk.count; ++k) {
      if (next[blk.cls] >= offsets[blk.cls + 1])
        throw Error(ErrorKind::InvariantViolation, "class " + std::to_string(blk.cls + 1) + " over-allocated");
      out.start[next[blk.cls]++] = blk.start + k * classes[blk.cls].p;
    }
  }
  return out;
}

CompactSchedule compress_schedule(const Instance& inst, const Schedule& expanded) {
  const auto& classes = inst.classes();
  const auto offsets = class_offsets(inst);
  if (expanded.start.size() != offsets.back())
    throw Error(ErrorKind::InvariantViolation, "schedule length does not match the expanded instance");
  std::vector<std::size_t> cls_of(offsets.back());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t j = offsets[c]; j < offsets[c + 1]; ++j) cls_of[j] = c;

  std::vector<std::size_t> order(cls_of.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return expanded.start[x] < expanded.start[y]; });

  CompactSchedule out;
  for (std::size_t j : order) {
    const std::size_t c = cls_of[j];
    const Int t = expanded.start[j];
    if (t < 0) throw Error(ErrorKind::InvariantViolation, "negative start time");
    if (!out.blocks.empty()) {
      Block& last = out.blocks.back();
      if (last.cls == c && static_cast<Wide>(last.start) + static_cast<Wide>(last.count) * classes[c].p == t) {
        ++last.count;
        continue;
      }
    }
    out.blocks.push_back(Block{inst.supply().period_at(t), c, t, 1});
  }
  return out;
}

std::vector<Wide> period_starts(const SupplyProfile& supply, std::span<const Wide> period_processing) {
  std::vector<Wide> starts(supply.periods(), 0);
  for (std::size_t l = 0; l < starts.size(); ++l) {
    starts[l] = supply.time(l);
    if (l > 0) starts[l] = std::max(starts[l], starts[l - 1] + period_processing[l - 1]);
  }
  return starts;
}

Schedule schedule_from_assignment(const Instance& inst, std::span<const std::size_t> order,
                                  std::span<const std::size_t> period_of) {
  const auto& jobs = inst.jobs();
  const std::size_t q = inst.supply().periods();
  std::vector<Wide> processing(q, 0);
  for (std::size_t j = 0; j < jobs.size(); ++j) processing.at(period_of[j]) += jobs[j].p;
  std::vector<Wide> cursor = period_starts(inst.supply(), processing);
  Schedule sched{std::vector<Int>(jobs.size(), 0)};
  for (std::size_t j : order) {
    Wide& t = cursor[period_of[j]];
    sched.start[j] = static_cast<Int>(t);
    t += jobs[j].p;
  }
  return sched;
}

}  // namespace nrsched
