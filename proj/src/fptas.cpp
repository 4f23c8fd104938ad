#include "nrsched/fptas.hpp"

#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "dp_common.hpp"
#include "nrsched/evaluator.hpp"
#include "nrsched/ordering.hpp"
#include "nrsched/rounding.hpp"

namespace nrsched {

namespace {

constexpr Int kZeroMark = std::numeric_limits<Int>::min();

// Flat key: [N_1..N_q, e(P_1)..e(P_q), e(W_1)..e(W_q), e(WP_1)..e(WP_q)],
// where e() is the rounding exponent or kZeroMark.
using Key = std::vector<Int>;

struct Node {
  Key key;
  std::uint32_t parent = 0;
  std::uint32_t period = 0;
};

RoundedValue decode(Int e) { return e == kZeroMark ? RoundedValue::make_zero() : RoundedValue::power(e); }
Int encode(RoundedValue r) { return r.zero ? kZeroMark : r.exponent; }

}  // namespace

std::string fptas_guarantee(Ratio eps) {
  mpq_class factor = 1 + 3 * mpq_class(eps.num, eps.den);
  factor.canonicalize();
  return factor.get_str();
}

SolveReport fptas_solve(const Instance& input, Ratio eps, const FptasOptions& options, FptasStats* stats) {
  validate_epsilon(eps);
  const auto abar = input.uniform_requirement();
  if (!abar) throw Error(ErrorKind::NonUniformRequirement, "jobs have different resource requirements");
  if (*abar == 0) throw Error(ErrorKind::ZeroRequirement, "abar = 0: use an unconstrained method");
  const Instance inst = input.is_hme() ? expand_hme(input) : input;
  const auto& jobs = inst.jobs();
  const std::size_t q = inst.supply().periods();
  if (q > options.max_periods)
    throw Error(ErrorKind::SizeLimit,
                std::to_string(q) + " supply periods exceed the limit of " + std::to_string(options.max_periods));
  if (!inst.demand_covered()) throw Error(ErrorKind::Unsolvable, "total demand exceeds total supply");

  const std::size_t n = jobs.size();
  const std::vector<Int> capacity = job_capacity_prefix(inst, *abar);
  const std::vector<std::size_t> order = wspt_order(std::span<const Job>(jobs));
  GeometricRounding rounding(fptas_rounding_step(eps, static_cast<Int>(n)));

  Key initial(4 * q, kZeroMark);
  for (std::size_t l = 0; l < q; ++l) initial[l] = 0;
  std::vector<std::vector<Node>> layers(n + 1);
  layers[0].push_back(Node{initial, 0, 0});
  std::size_t stored = 1;
  std::set<Int> seen_p, seen_w, seen_wp;
  std::vector<Int> extra(q, 0);

  for (std::size_t step = 0; step < n; ++step) {
    const Job& job = jobs[order[step]];
    const mpz_class p(static_cast<long>(job.p));
    const mpz_class w(static_cast<long>(job.w));
    std::unordered_map<Key, std::uint32_t, detail::KeyHash> index;
    auto& next = layers[step + 1];
    for (std::uint32_t from = 0; from < layers[step].size(); ++from) {
      const Key& key = layers[step][from].key;
      const std::span<const Int> counts(key.data(), q);
      for (std::size_t l = 0; l < q; ++l) {
        extra.assign(q, 0);
        extra[l] = 1;
        if (!detail::prefix_within<Int, Int>(counts, extra, capacity)) continue;

        const auto old_p = rounding.scaled(decode(key[q + l]));
        const auto old_w = rounding.scaled(decode(key[2 * q + l]));
        const auto old_wp = rounding.scaled(decode(key[3 * q + l]));
        const auto p_plus = rounding.add(old_p, rounding.from_int(p));
        Key succ = key;
        succ[l] += 1;
        succ[q + l] = encode(rounding.round(p_plus));
        succ[2 * q + l] = encode(rounding.round(rounding.add(old_w, rounding.from_int(w))));
        succ[3 * q + l] = encode(rounding.round(rounding.add(old_wp, rounding.mul(p_plus, w))));
        if (index.contains(succ)) continue;
        if (++stored > options.state_cap)
          throw Error(ErrorKind::StateSpaceExceeded, "state cap " + std::to_string(options.state_cap) +
                                                         " reached after " + std::to_string(step) + " of " +
                                                         std::to_string(n) + " jobs");
        seen_p.insert(succ[q + l]);
        seen_w.insert(succ[2 * q + l]);
        seen_wp.insert(succ[3 * q + l]);
        index.emplace(succ, static_cast<std::uint32_t>(next.size()));
        next.push_back(Node{std::move(succ), from, static_cast<std::uint32_t>(l)});
      }
    }
    if (next.empty()) throw Error(ErrorKind::Unsolvable, "no resource-feasible assignment");
  }

  const auto& terminals = layers[n];
  std::vector<mpq_class> values;
  values.reserve(terminals.size());
  std::vector<mpq_class> proc(q), weight(q), weighted(q);
  for (const Node& node : terminals) {
    for (std::size_t l = 0; l < q; ++l) {
      proc[l] = rounding.value(decode(node.key[q + l]));
      weight[l] = rounding.value(decode(node.key[2 * q + l]));
      weighted[l] = rounding.value(decode(node.key[3 * q + l]));
    }
    values.push_back(detail::state_value<mpq_class>(proc, weight, weighted, inst.supply(),
                                                    [](Int u) { return mpq_class(static_cast<long>(u)); }));
  }
  const std::size_t best = detail::argmin_first(values);

  std::vector<std::size_t> period_of(n, 0);
  std::uint32_t at = static_cast<std::uint32_t>(best);
  for (std::size_t step = n; step > 0; --step) {
    const Node& node = layers[step][at];
    period_of[order[step - 1]] = node.period;
    at = node.parent;
  }

  SolveReport report;
  report.algorithm = "fptas";
  report.schedule = schedule_from_assignment(inst, order, period_of);
  report.objective = objective(inst, *report.schedule);
  report.guarantee = fptas_guarantee(eps);
  report.states = stored;
  if (input.is_hme()) report.warnings.push_back("hme input expanded to explicit jobs");
  if (mpq_class(to_string(report.objective)) > values[best])
    throw std::logic_error("true objective exceeds the rounded terminal value");

  if (stats != nullptr) {
    auto nonzero = [](const std::set<Int>& s) { return s.size() - (s.contains(kZeroMark) ? 1 : 0); };
    stats->states = stored;
    stats->terminal_states = terminals.size();
    stats->distinct_processing = nonzero(seen_p);
    stats->distinct_weight = nonzero(seen_w);
    stats->distinct_weighted_completion = nonzero(seen_wp);
    stats->rounded_value = values[best].get_str();
  }
  return report;
}

}  // namespace nrsched
