#include "nrsched/fptas_hme.hpp"

#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <gmpxx.h>

#include "dp_common.hpp"
#include "nrsched/evaluator.hpp"
#include "nrsched/ordering.hpp"
#include "nrsched/rounding.hpp"

namespace nrsched {

namespace {

constexpr Int kZeroMark = std::numeric_limits<Int>::min();

using Key = std::vector<Int>;

struct Node {
  Key key;
  std::uint32_t parent = 0;
  std::uint32_t allocation = 0;  // index into the stage's allocation list
};

RoundedValue decode(Int e) { return e == kZeroMark ? RoundedValue::make_zero() : RoundedValue::power(e); }
Int encode(RoundedValue r) { return r.zero ? kZeroMark : r.exponent; }

// floor((1+eps)^k) for k = 0, 1, ... computed from exact integer powers.
class GrowthTable {
 public:
  explicit GrowthTable(Ratio eps) : num_(static_cast<long>(eps.num + eps.den)), den_(static_cast<long>(eps.den)) {
    validate_epsilon(eps);
  }

  Int floor_power(long k) {
    if (k < 0) throw Error(ErrorKind::InvariantViolation, "negative exponent");
    while (static_cast<long>(cache_.size()) <= k) {
      mpz_class top, bottom, q;
      mpz_pow_ui(top.get_mpz_t(), num_.get_mpz_t(), cache_.size());
      mpz_pow_ui(bottom.get_mpz_t(), den_.get_mpz_t(), cache_.size());
      mpz_fdiv_q(q.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());
      cache_.push_back(q.fits_slong_p() ? q.get_si() : std::numeric_limits<Int>::max());
    }
    return cache_[static_cast<std::size_t>(k)];
  }

 private:
  mpz_class num_;
  mpz_class den_;
  std::vector<Int> cache_;
};

}  // namespace

long max_multiplicity_exponent(Int s, Ratio eps) {
  if (s < 1) throw Error(ErrorKind::InvariantViolation, "multiplicity must be positive");
  validate_epsilon(eps);
  // Smallest k with (1+eps)^k >= s, i.e. (num+den)^k >= s * den^k.
  const mpz_class base(static_cast<long>(eps.num + eps.den));
  const mpz_class den(static_cast<long>(eps.den));
  mpz_class top = 1, bottom = 1;
  long k = 0;
  while (top < mpz_class(static_cast<long>(s)) * bottom) {
    top *= base;
    bottom *= den;
    ++k;
  }
  return k;
}

std::vector<Int> geometric_caps(const EligibleTuple& tuple, Ratio eps) {
  GrowthTable growth(eps);
  std::vector<Int> caps;
  caps.reserve(tuple.k.size());
  for (long k : tuple.k) caps.push_back(k == kEmptyPeriod ? 0 : growth.floor_power(k));
  return caps;
}

std::vector<EligibleTuple> enumerate_eligible(Int s, std::size_t q, Ratio eps, bool allow_empty) {
  if (q == 0) throw Error(ErrorKind::InvariantViolation, "at least one period is required");
  const long top = max_multiplicity_exponent(s, eps);
  const long bottom = allow_empty ? kEmptyPeriod : 0;
  GrowthTable growth(eps);
  std::vector<EligibleTuple> out;
  std::vector<long> k(q, bottom);
  while (true) {
    Wide total = 0;
    for (long e : k) total += e == kEmptyPeriod ? 0 : growth.floor_power(e);
    if (total >= s) out.push_back(EligibleTuple{k});
    std::size_t pos = q;
    while (pos > 0 && k[pos - 1] == top) k[--pos] = bottom;
    if (pos == 0) break;
    ++k[pos - 1];
  }
  return out;
}

std::vector<Int> allocate(Int s, const EligibleTuple& tuple, Ratio eps) {
  const std::vector<Int> caps = geometric_caps(tuple, eps);
  std::vector<Int> delta(caps.size(), 0);
  Int left = s;
  for (std::size_t l = caps.size(); l-- > 0;) {
    delta[l] = std::min(left, caps[l]);
    left -= delta[l];
  }
  if (left > 0)
    throw Error(ErrorKind::IneligibleTuple, "caps hold only " + std::to_string(s - left) + " of " + std::to_string(s) +
                                                " jobs");
  return delta;
}

std::string hme_fptas_guarantee(Ratio eps) {
  mpq_class base = 1 + mpq_class(eps.num, eps.den);
  base.canonicalize();
  mpq_class factor = base * base * base * base;
  return factor.get_str();
}

SolveReport hme_fptas_solve(const Instance& inst, Ratio eps, const HmeFptasOptions& options, HmeFptasStats* stats) {
  validate_epsilon(eps);
  const auto& classes = inst.classes();
  const auto abar = inst.uniform_requirement();
  if (!abar) throw Error(ErrorKind::NonUniformRequirement, "classes have different resource requirements");
  if (*abar == 0) throw Error(ErrorKind::ZeroRequirement, "abar = 0: use an unconstrained method");
  const std::size_t q = inst.supply().periods();
  const std::size_t h = classes.size();
  if (q > options.max_periods)
    throw Error(ErrorKind::SizeLimit,
                std::to_string(q) + " supply periods exceed the limit of " + std::to_string(options.max_periods));
  if (!inst.demand_covered()) throw Error(ErrorKind::Unsolvable, "total demand exceeds total supply");

  const std::vector<Int> capacity = job_capacity_prefix(inst, *abar);
  const std::vector<std::size_t> order = wspt_order(std::span<const JobClass>(classes));
  GeometricRounding rounding(Ratio{eps.num, 2 * static_cast<Int>(h) * eps.den});

  // Distinct allocations per stage.
  std::vector<std::vector<std::vector<Int>>> allocations(h);
  std::vector<std::size_t> eligible_count(h, 0);
  for (std::size_t stage = 0; stage < h; ++stage) {
    const JobClass& c = classes[order[stage]];
    std::set<std::vector<Int>> distinct;
    const auto tuples = enumerate_eligible(c.s, q, eps, options.allow_empty_periods);
    eligible_count[order[stage]] = tuples.size();
    for (const EligibleTuple& t : tuples) {
      auto delta = allocate(c.s, t, eps);
      if (distinct.insert(delta).second) allocations[stage].push_back(std::move(delta));
    }
  }

  Key initial(4 * q, kZeroMark);
  for (std::size_t l = 0; l < q; ++l) initial[l] = 0;
  std::vector<std::vector<Node>> stages(h + 1);
  stages[0].push_back(Node{initial, 0, 0});
  std::size_t stored = 1;

  for (std::size_t stage = 0; stage < h; ++stage) {
    const JobClass& c = classes[order[stage]];
    const mpz_class p(static_cast<long>(c.p));
    const mpz_class w(static_cast<long>(c.w));
    std::unordered_map<Key, std::uint32_t, detail::KeyHash> index;
    auto& next = stages[stage + 1];
    for (std::uint32_t from = 0; from < stages[stage].size(); ++from) {
      const Key& key = stages[stage][from].key;
      for (std::uint32_t a = 0; a < allocations[stage].size(); ++a) {
        const auto& delta = allocations[stage][a];
        const std::span<const Int> counts(key.data(), q);
        if (!detail::prefix_within<Int, Int>(counts, delta, capacity)) continue;
        Key succ = key;
        for (std::size_t l = 0; l < q; ++l) {
          if (delta[l] == 0) continue;  // rounding is idempotent on stored values
          const mpz_class d(static_cast<long>(delta[l]));
          const auto old_p = rounding.scaled(decode(key[q + l]));
          const auto old_w = rounding.scaled(decode(key[2 * q + l]));
          const auto old_wp = rounding.scaled(decode(key[3 * q + l]));
          succ[l] += delta[l];
          succ[q + l] = encode(rounding.round(rounding.add(old_p, rounding.from_int(d * p))));
          succ[2 * q + l] = encode(rounding.round(rounding.add(old_w, rounding.from_int(d * w))));
          // WP + (δ P + δ(δ+1)/2 p) w, with the predecessor's rounded P.
          const mpz_class triangle = d * (d + 1) / 2 * p;
          const auto inner = rounding.add(rounding.mul(old_p, d), rounding.from_int(triangle));
          succ[3 * q + l] = encode(rounding.round(rounding.add(old_wp, rounding.mul(inner, w))));
        }
        if (index.contains(succ)) continue;
        if (++stored > options.state_cap)
          throw Error(ErrorKind::StateSpaceExceeded, "state cap " + std::to_string(options.state_cap) +
                                                         " reached at class stage " + std::to_string(stage + 1));
        index.emplace(succ, static_cast<std::uint32_t>(next.size()));
        next.push_back(Node{std::move(succ), from, a});
      }
    }
    if (next.empty()) throw Error(ErrorKind::Unsolvable, "no resource-feasible allocation");
  }

  const auto& terminals = stages[h];
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

  // delta_per_stage[stage] = allocation chosen for class order[stage].
  std::vector<const std::vector<Int>*> chosen(h, nullptr);
  std::uint32_t at = static_cast<std::uint32_t>(best);
  for (std::size_t stage = h; stage > 0; --stage) {
    const Node& node = stages[stage][at];
    chosen[stage - 1] = &allocations[stage - 1][node.allocation];
    at = node.parent;
  }

  std::vector<Wide> period_processing(q, 0);
  for (std::size_t stage = 0; stage < h; ++stage)
    for (std::size_t l = 0; l < q; ++l)
      period_processing[l] += static_cast<Wide>((*chosen[stage])[l]) * classes[order[stage]].p;
  std::vector<Wide> cursor = period_starts(inst.supply(), period_processing);

  SolveReport report;
  report.algorithm = "fptas-hme";
  report.compact.emplace();
  for (std::size_t l = 0; l < q; ++l) {
    for (std::size_t stage = 0; stage < h; ++stage) {
      const Int count = (*chosen[stage])[l];
      if (count == 0) continue;
      const std::size_t cls = order[stage];
      report.compact->blocks.push_back(Block{l, cls, static_cast<Int>(cursor[l]), count});
      cursor[l] += static_cast<Wide>(count) * classes[cls].p;
    }
  }
  report.objective = objective(inst, *report.compact);
  report.guarantee = hme_fptas_guarantee(eps);
  report.states = stored;
  if (mpq_class(to_string(report.objective)) > values[best])
    throw std::logic_error("true objective exceeds the rounded terminal value");

  if (stats != nullptr) {
    stats->states = stored;
    stats->terminal_states = terminals.size();
    stats->eligible_per_class = eligible_count;
    stats->allocations_per_class.assign(h, 0);
    for (std::size_t stage = 0; stage < h; ++stage) stats->allocations_per_class[order[stage]] = allocations[stage].size();
    stats->rounded_value = values[best].get_str();
  }
  return report;
}

}  // namespace nrsched
