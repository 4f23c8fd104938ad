#include "nrsched/exact_dp.hpp"

#include <stdexcept>
#include <unordered_map>

#include "dp_common.hpp"
#include "nrsched/evaluator.hpp"
#include "nrsched/ordering.hpp"

namespace nrsched {

namespace {

// Flat key layout: [N_1..N_q, P_1..P_q, W_1..W_q, WP_1..WP_q].
using Key = std::vector<Wide>;

struct Node {
  Key key;
  std::uint32_t parent = 0;
  std::uint32_t period = 0;
};

DpState unpack(const Key& key, std::size_t q) {
  DpState s;
  for (std::size_t l = 0; l < q; ++l) {
    s.count.push_back(static_cast<Int>(key[l]));
    s.processing.push_back(key[q + l]);
    s.weight.push_back(key[2 * q + l]);
    s.weighted_completion.push_back(key[3 * q + l]);
  }
  return s;
}

Int require_uniform(const Instance& inst) {
  const auto abar = inst.uniform_requirement();
  if (!abar) throw Error(ErrorKind::NonUniformRequirement, "jobs have different resource requirements");
  if (*abar == 0) throw Error(ErrorKind::ZeroRequirement, "abar = 0: use an unconstrained method");
  return *abar;
}

}  // namespace

Wide terminal_value(const DpState& state, const SupplyProfile& supply, Wide job_count) {
  const std::size_t q = supply.periods();
  if (state.count.size() != q || state.processing.size() != q || state.weight.size() != q ||
      state.weighted_completion.size() != q)
    throw Error(ErrorKind::InvariantViolation, "state does not match the number of supply periods");
  Wide assigned = 0;
  for (Int c : state.count) assigned += c;
  if (assigned != job_count)
    throw Error(ErrorKind::NotTerminal, to_string(assigned) + " of " + to_string(job_count) + " jobs assigned");
  return detail::state_value<Wide>(state.processing, state.weight, state.weighted_completion, supply,
                                   [](Int u) { return static_cast<Wide>(u); });
}

DpState assignment_state(const Instance& inst, std::span<const std::size_t> order,
                         std::span<const std::size_t> period_of) {
  const auto& jobs = inst.jobs();
  const std::size_t q = inst.supply().periods();
  DpState s{std::vector<Int>(q, 0), std::vector<Wide>(q, 0), std::vector<Wide>(q, 0), std::vector<Wide>(q, 0)};
  for (std::size_t j : order) {
    const std::size_t l = period_of[j];
    s.count[l] += 1;
    s.processing[l] += jobs[j].p;
    s.weight[l] += jobs[j].w;
    s.weighted_completion[l] += static_cast<Wide>(jobs[j].w) * s.processing[l];
  }
  return s;
}

SolveReport dp_solve(const Instance& input, const DpOptions& options) {
  const Int abar = require_uniform(input);
  const Instance inst = input.is_hme() ? expand_hme(input) : input;
  const auto& jobs = inst.jobs();
  const std::size_t q = inst.supply().periods();
  if (q > options.max_periods)
    throw Error(ErrorKind::SizeLimit,
                std::to_string(q) + " supply periods exceed the limit of " + std::to_string(options.max_periods));
  if (!inst.demand_covered()) throw Error(ErrorKind::Unsolvable, "total demand exceeds total supply");

  const std::vector<Int> capacity = job_capacity_prefix(inst, abar);
  const std::vector<std::size_t> order = wspt_order(std::span<const Job>(jobs));
  const std::size_t n = jobs.size();

  std::vector<std::vector<Node>> layers(n + 1);
  layers[0].push_back(Node{Key(4 * q, 0), 0, 0});
  std::size_t stored = 1;
  std::vector<Wide> extra(q, 0);

  for (std::size_t step = 0; step < n; ++step) {
    const Job& job = jobs[order[step]];
    std::unordered_map<Key, std::uint32_t, detail::KeyHash> index;
    auto& next = layers[step + 1];
    for (std::uint32_t from = 0; from < layers[step].size(); ++from) {
      const Key& key = layers[step][from].key;
      const std::span<const Wide> counts(key.data(), q);
      for (std::size_t l = 0; l < q; ++l) {
        extra.assign(q, 0);
        extra[l] = 1;
        if (!detail::prefix_within<Wide, Wide>(counts, extra, capacity)) continue;
        Key succ = key;
        succ[l] += 1;
        succ[q + l] += job.p;
        succ[2 * q + l] += job.w;
        succ[3 * q + l] += static_cast<Wide>(job.w) * succ[q + l];
        if (index.contains(succ)) continue;
        if (++stored > options.state_cap)
          throw Error(ErrorKind::StateSpaceExceeded, "state cap " + std::to_string(options.state_cap) +
                                                         " reached after " + std::to_string(step) + " of " +
                                                         std::to_string(n) + " jobs (" + std::to_string(stored) +
                                                         " states)");
        index.emplace(succ, static_cast<std::uint32_t>(next.size()));
        next.push_back(Node{std::move(succ), from, static_cast<std::uint32_t>(l)});
      }
    }
    if (next.empty()) throw Error(ErrorKind::Unsolvable, "no resource-feasible assignment");
  }

  const auto& terminals = layers[n];
  std::vector<Wide> values;
  values.reserve(terminals.size());
  for (const Node& node : terminals)
    values.push_back(terminal_value(unpack(node.key, q), inst.supply(), static_cast<Wide>(n)));
  const std::size_t best = detail::argmin_first(values);

  auto reconstruct = [&](std::size_t terminal) {
    std::vector<std::size_t> period_of(n, 0);
    std::uint32_t at = static_cast<std::uint32_t>(terminal);
    for (std::size_t step = n; step > 0; --step) {
      const Node& node = layers[step][at];
      period_of[order[step - 1]] = node.period;
      at = node.parent;
    }
    return period_of;
  };

  for (std::size_t k = 0; k < std::min(options.verify_terminals, terminals.size()); ++k) {
    const std::size_t t = k * terminals.size() / std::min(options.verify_terminals, terminals.size());
    const Schedule s = schedule_from_assignment(inst, order, reconstruct(t));
    if (objective(inst, s) != values[t])
      throw std::logic_error("terminal value disagrees with the evaluator on state " + std::to_string(t));
  }

  SolveReport report;
  report.algorithm = "dp";
  report.schedule = schedule_from_assignment(inst, order, reconstruct(best));
  report.objective = objective(inst, *report.schedule);
  report.guarantee = "1";
  report.states = stored;
  if (report.objective != values[best]) throw std::logic_error("reconstructed schedule disagrees with DP value");
  if (input.is_hme()) report.warnings.push_back("hme input expanded to explicit jobs");
  return report;
}

}  // namespace nrsched
