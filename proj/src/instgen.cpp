#include "nrsched/instgen.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace nrsched {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi]; modulo bias is irrelevant at these ranges, and
  // avoiding std::uniform_int_distribution keeps streams identical across
  // standard libraries.
  Int between(Int lo, Int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

// k distinct sorted values from [lo, hi].
std::vector<Int> distinct_sorted(Rng& rng, std::size_t k, Int lo, Int hi) {
  std::set<Int> picked;
  while (picked.size() < k) picked.insert(rng.between(lo, hi));
  return {picked.begin(), picked.end()};
}

SupplyProfile random_supply(Rng& rng, std::size_t q, Wide demand, Int surplus, Int horizon) {
  const Wide wanted = std::max<Wide>(demand + surplus, static_cast<Wide>(q));
  if (wanted > std::numeric_limits<Int>::max()) throw Error(ErrorKind::OverflowBudget, "total supply too large");
  const Int total = static_cast<Int>(wanted);
  horizon = std::max<Int>(horizon, static_cast<Int>(q) - 1);

  std::vector<Int> times{0};
  for (Int u : distinct_sorted(rng, q - 1, 1, std::max<Int>(horizon, 1))) times.push_back(u);

  std::vector<Int> cuts = distinct_sorted(rng, q - 1, 1, total - 1);
  cuts.push_back(total);
  std::vector<Int> quantities;
  Int prev = 0;
  for (Int cut : cuts) {
    quantities.push_back(cut - prev);
    prev = cut;
  }
  return SupplyProfile(std::move(times), std::move(quantities));
}

Wide checked_mul(Wide x, Wide y) {
  Wide r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorKind::OverflowBudget, "128-bit overflow");
  return r;
}

Wide checked_add(Wide x, Wide y) {
  Wide r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorKind::OverflowBudget, "128-bit overflow");
  return r;
}

Int narrow(Wide v, const char* what) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    throw Error(ErrorKind::OverflowBudget, std::string(what) + " does not fit 64 bits");
  return static_cast<Int>(v);
}

// binom(k + 1, 2)
Wide triangle(Wide k) { return checked_mul(k, k + 1) / 2; }

}  // namespace

Family parse_family(const std::string& name) {
  if (name == "uniform_a") return Family::UniformA;
  if (name == "unit_p_w_eq_a") return Family::UnitPWEqA;
  if (name == "general") return Family::General;
  if (name == "hme") return Family::Hme;
  throw Error(ErrorKind::InvalidProfile, "unknown profile '" + name + "'");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::UniformA: return "uniform_a";
    case Family::UnitPWEqA: return "unit_p_w_eq_a";
    case Family::General: return "general";
    case Family::Hme: return "hme";
  }
  return "unknown";
}

Instance gen_random(std::uint64_t seed, std::size_t n, std::size_t q, const GenOptions& options) {
  if (n < 1 || q < 1) throw Error(ErrorKind::InvalidProfile, "n and q must be at least 1");
  if (options.pmax < 1) throw Error(ErrorKind::InvalidProfile, "pmax must be at least 1");
  if (options.surplus < 0) throw Error(ErrorKind::InvalidProfile, "surplus must be non-negative");
  Rng rng(seed);

  if (options.family == Family::Hme) {
    const std::size_t h = options.classes;
    if (h < 1 || h > n) throw Error(ErrorKind::InvalidProfile, "hme needs 1 <= classes <= n");
    if (options.abar < 1) throw Error(ErrorKind::InvalidProfile, "hme profile needs abar >= 1");
    std::vector<Int> cuts = distinct_sorted(rng, h - 1, 1, static_cast<Int>(n) - 1);
    cuts.push_back(static_cast<Int>(n));
    std::vector<JobClass> classes;
    Int prev = 0;
    Wide processing = 0;
    for (Int cut : cuts) {
      JobClass c{cut - prev, rng.between(1, options.pmax), rng.between(1, options.pmax), options.abar};
      processing += static_cast<Wide>(c.s) * c.p;
      classes.push_back(c);
      prev = cut;
    }
    const Int horizon = options.horizon > 0 ? options.horizon : narrow(processing, "horizon");
    const Wide demand = static_cast<Wide>(n) * options.abar;
    SupplyProfile supply = random_supply(rng, q, demand, options.surplus, horizon);
    return Instance::hme(std::move(classes), std::move(supply));
  }

  std::vector<Job> jobs;
  jobs.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Job job;
    switch (options.family) {
      case Family::UniformA:
        if (options.abar < 1) throw Error(ErrorKind::InvalidProfile, "uniform_a profile needs abar >= 1");
        job = Job{rng.between(1, options.pmax), rng.between(1, options.pmax), options.abar};
        break;
      case Family::UnitPWEqA: {
        const Int w = rng.between(1, options.pmax);
        job = Job{1, w, w};
        break;
      }
      case Family::General:
        job = Job{rng.between(1, options.pmax), rng.between(1, options.pmax), rng.between(0, options.pmax)};
        break;
      case Family::Hme:
        break;
    }
    jobs.push_back(job);
  }
  Wide processing = 0;
  Wide demand = 0;
  for (const Job& j : jobs) {
    processing += j.p;
    demand += j.a;
  }
  const Int horizon = options.horizon > 0 ? options.horizon : narrow(processing, "horizon");
  SupplyProfile supply = random_supply(rng, q, demand, options.surplus, horizon);
  return Instance::normal(std::move(jobs), std::move(supply));
}

PartitionReduction gen_partition_reduction(std::span<const Int> items, Int medium_base, Int big_base) {
  const std::size_t n = items.size();
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::InvalidProfile, "partition needs an even, positive item count");
  if (medium_base < 1 || big_base < 1) throw Error(ErrorKind::InvalidProfile, "bases must be positive");
  Wide sum = 0;
  for (Int e : items) {
    if (e < 0) throw Error(ErrorKind::InvalidProfile, "item sizes must be non-negative");
    sum = checked_add(sum, e);
  }
  if (sum % 2 != 0) throw Error(ErrorKind::InvalidProfile, "item sizes must add up to an even total 2A");

  const Wide half_n = static_cast<Wide>(n / 2);
  const Wide A = sum / 2;
  const Wide M = big_base;
  const Wide u2 = checked_add(checked_mul(half_n, medium_base), A);

  PartitionReduction red{Instance::normal({Job{}}, SupplyProfile({0}, {1}))};
  red.medium_base = medium_base;
  red.big_base = big_base;
  red.half_sum = narrow(A, "A");
  red.u2 = narrow(u2, "u2");

  red.v_small = checked_add(checked_mul(M, u2), triangle(M));
  red.v_medium = checked_add(checked_mul(2 * checked_add(medium_base, A), triangle(half_n)),
                             checked_mul(checked_add(u2, M), half_n));
  const Wide big_start = checked_add(checked_add(checked_add(u2, M), checked_mul(medium_base, half_n)), A);
  red.v_big = checked_add(checked_mul(M, big_start), checked_mul(M, triangle(M)));
  red.threshold = checked_add(checked_add(red.v_small, red.v_medium), red.v_big);
  // Big jobs end at big_start + M^2; all completion times must fit 64 bits.
  narrow(checked_add(big_start, checked_mul(M, M)), "makespan");

  std::vector<JobClass> classes{JobClass{big_base, 1, 1, 1}, JobClass{big_base, big_base, 1, 1}};
  std::map<Int, std::size_t> class_of_size;
  for (Int e : items) {
    if (class_of_size.contains(e)) continue;
    class_of_size.emplace(e, 0);
  }
  for (auto& [e, cls] : class_of_size) {
    cls = classes.size();
    const Int count = static_cast<Int>(std::count(items.begin(), items.end(), e));
    classes.push_back(JobClass{count, narrow(checked_add(medium_base, e), "medium processing time"), 1, 1});
  }
  for (Int e : items) red.medium_class_of.push_back(class_of_size.at(e));

  const Int b1 = static_cast<Int>(n / 2);
  const Int b2 = narrow(checked_add(checked_mul(2, M), half_n), "b2");
  red.instance = Instance::hme(std::move(classes), SupplyProfile({0, red.u2}, {b1, b2}));
  return red;
}

PartitionReduction gen_partition_reduction(std::span<const Int> items) {
  const Int n2 = static_cast<Int>(items.size() * items.size());
  return gen_partition_reduction(items, 20 * n2, 200 * n2);
}

CompactSchedule partition_yes_schedule(const PartitionReduction& red, std::span<const std::size_t> half) {
  const auto& classes = red.instance.classes();
  const std::size_t n = red.medium_class_of.size();
  if (half.size() * 2 != n) throw Error(ErrorKind::InvalidProfile, "half must contain n/2 items");
  std::vector<Int> before(classes.size(), 0);
  std::vector<bool> in_half(n, false);
  for (std::size_t i : half) {
    if (i >= n || in_half[i]) throw Error(ErrorKind::InvalidProfile, "half must list distinct item indices");
    in_half[i] = true;
    before[red.medium_class_of[i]] += 1;
  }

  // Medium classes were created in increasing size order.
  std::vector<std::size_t> medium;
  for (std::size_t c = 2; c < classes.size(); ++c) medium.push_back(c);

  CompactSchedule sched;
  Wide t = 0;
  for (std::size_t c : medium) {
    if (before[c] == 0) continue;
    sched.blocks.push_back(Block{0, c, static_cast<Int>(t), before[c]});
    t += static_cast<Wide>(before[c]) * classes[c].p;
  }
  t = std::max<Wide>(t, red.u2);
  sched.blocks.push_back(Block{1, red.small_class, static_cast<Int>(t), red.big_base});
  t += red.big_base;
  for (std::size_t c : medium) {
    const Int after = classes[c].s - before[c];
    if (after == 0) continue;
    sched.blocks.push_back(Block{1, c, static_cast<Int>(t), after});
    t += static_cast<Wide>(after) * classes[c].p;
  }
  sched.blocks.push_back(Block{1, red.big_class, static_cast<Int>(t), red.big_base});
  return sched;
}

Instance gen_tight_pair(Int w, Int gap) {
  if (gap < 1 || w <= gap) throw Error(ErrorKind::InvalidProfile, "tight pair needs w > gap >= 1");
  return Instance::normal({Job{1, w, w}, Job{1, w - gap, w - gap}}, SupplyProfile({0, w}, {w - gap, w}));
}

Wide tight_pair_greedy_value(Int w, Int gap) {
  const Wide W = w;
  return 2 * W * W + 3 * W - static_cast<Wide>(gap) * (W + 2);
}

Wide tight_pair_optimum(Int w, Int gap) {
  const Wide W = w;
  return W * W + 2 * W - gap;
}

}  // namespace nrsched
