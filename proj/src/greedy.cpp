#include "nrsched/greedy.hpp"

#include <algorithm>

#include "nrsched/evaluator.hpp"
#include "nrsched/ordering.hpp"

namespace nrsched {

namespace {

Int require_uniform(const Instance& inst) {
  const auto abar = inst.uniform_requirement();
  if (!abar) throw Error(ErrorKind::NonUniformRequirement, "jobs have different resource requirements");
  if (*abar == 0) throw Error(ErrorKind::ZeroRequirement, "abar = 0: the resource never binds");
  return *abar;
}

template <class Item>
bool unit_weights(const std::vector<Item>& items) {
  return std::all_of(items.begin(), items.end(), [](const Item& x) { return x.w == 1; });
}

template <class Item>
void require_unit_p_w_eq_a(const std::vector<Item>& items) {
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (items[k].p != 1 || items[k].w != items[k].a)
      throw Error(ErrorKind::ModelMismatch,
                  "item " + std::to_string(k + 1) + " violates p = 1, w = a (p=" + std::to_string(items[k].p) +
                      ", w=" + std::to_string(items[k].w) + ", a=" + std::to_string(items[k].a) + ")");
  }
}

void fill_from(const Instance& inst, SolveReport& report, std::span<const std::size_t> order) {
  if (inst.is_hme()) {
    report.compact = canonical_left_shift_classes(inst, order);
    report.objective = objective(inst, *report.compact);
  } else {
    report.schedule = canonical_left_shift(inst, order);
    report.objective = objective(inst, *report.schedule);
  }
}

}  // namespace

SolveReport spt_list(const Instance& inst) {
  require_uniform(inst);
  SolveReport report;
  report.algorithm = "spt";
  bool unit = false;
  if (inst.is_hme()) {
    const auto& classes = inst.classes();
    fill_from(inst, report, spt_order(std::span<const JobClass>(classes)));
    unit = unit_weights(classes);
  } else {
    const auto& jobs = inst.jobs();
    fill_from(inst, report, spt_order(std::span<const Job>(jobs)));
    unit = unit_weights(jobs);
  }
  report.spt_lower_bound = spt_lower_bound(inst);
  report.supply_lower_bound = supply_lower_bound(inst);
  if (unit) {
    report.guarantee = "2";
  } else {
    report.warnings.push_back("weights are not all 1: the factor-2 guarantee does not apply");
  }
  return report;
}

SolveReport weight_order_list(const Instance& inst) {
  SolveReport report;
  report.algorithm = "wgreedy";
  if (inst.is_hme()) {
    const auto& classes = inst.classes();
    require_unit_p_w_eq_a(classes);
    fill_from(inst, report, weight_order(std::span<const JobClass>(classes)));
  } else {
    const auto& jobs = inst.jobs();
    require_unit_p_w_eq_a(jobs);
    fill_from(inst, report, weight_order(std::span<const Job>(jobs)));
  }
  report.guarantee = inst.supply().periods() <= 2 ? "2" : "3";
  return report;
}

Wide spt_lower_bound(const Instance& inst) {
  Wide total = 0;
  Wide t = 0;
  if (inst.is_hme()) {
    const auto& classes = inst.classes();
    for (std::size_t i : spt_order(std::span<const JobClass>(classes))) {
      total += block_contribution(classes[i].s, t, classes[i].p);
      t += static_cast<Wide>(classes[i].s) * classes[i].p;
    }
  } else {
    const auto& jobs = inst.jobs();
    for (std::size_t j : spt_order(std::span<const Job>(jobs))) {
      t += jobs[j].p;
      total += t;
    }
  }
  return total;
}

Wide supply_lower_bound(const Instance& inst) {
  const Int abar = require_uniform(inst);
  const auto capacity = job_capacity_prefix(inst, abar);
  const Wide n = inst.job_count();
  const SupplyProfile& supply = inst.supply();
  Wide bound = 0;
  for (std::size_t l = 1; l < capacity.size(); ++l) {
    const Wide released = std::min<Wide>(capacity[l], n) - std::min<Wide>(capacity[l - 1], n);
    bound += static_cast<Wide>(supply.time(l)) * released;
  }
  return bound;
}

}  // namespace nrsched
