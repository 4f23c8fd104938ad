#include "nrsched/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "dp_common.hpp"
#include "nrsched/evaluator.hpp"
#include "nrsched/exact_dp.hpp"
#include "nrsched/ordering.hpp"

namespace nrsched {

namespace {

Instance prepare(const Instance& inst, std::size_t max_jobs) {
  if (inst.job_count() > static_cast<Wide>(max_jobs))
    throw Error(ErrorKind::SizeLimit, "oracle limited to " + std::to_string(max_jobs) + " jobs, instance has " +
                                          to_string(inst.job_count()));
  Instance expanded = inst.is_hme() ? expand_hme(inst) : inst;
  if (!expanded.demand_covered())
    throw Error(ErrorKind::Unsolvable, "total demand " + to_string(expanded.total_demand()) +
                                           " exceeds total supply " + to_string(expanded.supply().total()));
  return expanded;
}

// Depth-first enumeration of job orders in lexicographic order, with the
// list schedule built incrementally. A partial sum that already reaches the
// incumbent cannot lead to a strictly better order.
class OrderSearch {
 public:
  OrderSearch(const std::vector<Job>& jobs, const SupplyProfile& supply)
      : jobs_(jobs), supply_(supply), used_(jobs.size(), false) {}

  void run_from(std::size_t first) {
    path_.clear();
    descend(first, 0, 0, 0);
  }

  bool found() const { return best_.has_value(); }
  Wide best() const { return *best_; }
  const std::vector<std::size_t>& best_order() const { return best_order_; }

 private:
  void descend(std::size_t j, Wide machine_free, Wide consumed, Wide partial) {
    const Job& job = jobs_[j];
    const Wide need = consumed + job.a;
    const std::size_t period = *supply_.first_covering(need);
    const Wide start = std::max<Wide>(machine_free, supply_.time(period));
    const Wide end = start + job.p;
    const Wide value = partial + static_cast<Wide>(job.w) * end;
    if (best_ && value >= *best_) return;

    used_[j] = true;
    path_.push_back(j);
    if (path_.size() == jobs_.size()) {
      best_ = value;
      best_order_ = path_;
    } else {
      for (std::size_t next = 0; next < jobs_.size(); ++next)
        if (!used_[next]) descend(next, end, need, value);
    }
    path_.pop_back();
    used_[j] = false;
  }

  const std::vector<Job>& jobs_;
  const SupplyProfile& supply_;
  std::vector<bool> used_;
  std::vector<std::size_t> path_;
  std::optional<Wide> best_;
  std::vector<std::size_t> best_order_;
};

// Depth-first enumeration of period assignments for jobs taken in WSPT order.
class AssignmentSearch {
 public:
  AssignmentSearch(const std::vector<Job>& jobs, const SupplyProfile& supply, std::vector<std::size_t> order)
      : jobs_(jobs),
        supply_(supply),
        order_(std::move(order)),
        q_(supply.periods()),
        demand_prefix_(q_, 0),
        processing_(q_, 0),
        weight_(q_, 0),
        weighted_(q_, 0),
        path_(jobs.size(), 0) {}

  void run_from(std::size_t first_period) { branch(0, first_period); }

  bool found() const { return best_.has_value(); }
  Wide best() const { return *best_; }
  const std::vector<std::size_t>& best_path() const { return best_path_; }

 private:
  void branch(std::size_t step, std::size_t period) {
    const Job& job = jobs_[order_[step]];
    for (std::size_t l = period; l < q_; ++l)
      if (demand_prefix_[l] + job.a > supply_.cumulative()[l]) return;

    for (std::size_t l = period; l < q_; ++l) demand_prefix_[l] += job.a;
    const Wide saved_wp = weighted_[period];
    processing_[period] += job.p;
    weight_[period] += job.w;
    weighted_[period] += static_cast<Wide>(job.w) * processing_[period];
    path_[step] = period;

    if (step + 1 == jobs_.size()) {
      const Wide value = detail::state_value<Wide>(processing_, weight_, weighted_, supply_,
                                                   [](Int u) { return static_cast<Wide>(u); });
      if (!best_ || value < *best_) {
        best_ = value;
        best_path_ = path_;
      }
    } else {
      for (std::size_t l = 0; l < q_; ++l) branch(step + 1, l);
    }

    weighted_[period] = saved_wp;
    weight_[period] -= job.w;
    processing_[period] -= job.p;
    for (std::size_t l = period; l < q_; ++l) demand_prefix_[l] -= job.a;
  }

  const std::vector<Job>& jobs_;
  const SupplyProfile& supply_;
  std::vector<std::size_t> order_;
  std::size_t q_;
  std::vector<Wide> demand_prefix_;
  std::vector<Wide> processing_;
  std::vector<Wide> weight_;
  std::vector<Wide> weighted_;
  std::vector<std::size_t> path_;
  std::optional<Wide> best_;
  std::vector<std::size_t> best_path_;
};

}  // namespace

PermutationOptimum permutation_oracle(const Instance& input, std::size_t max_jobs) {
  const Instance inst = prepare(input, max_jobs);
  const auto& jobs = inst.jobs();
  const std::size_t n = jobs.size();

  std::vector<std::optional<Wide>> best(n);
  std::vector<std::vector<std::size_t>> best_order(n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t first = 0; first < n; ++first) {
    OrderSearch search(jobs, inst.supply());
    search.run_from(first);
    if (search.found()) {
      best[first] = search.best();
      best_order[first] = search.best_order();
    }
  }

  std::size_t winner = 0;
  for (std::size_t first = 1; first < n; ++first)
    if (*best[first] < *best[winner]) winner = first;

  PermutationOptimum out;
  out.objective = *best[winner];
  out.order = best_order[winner];
  out.schedule = canonical_left_shift(inst, out.order);
  return out;
}

PermutationOptimum permutation_oracle_serial(const Instance& input, std::size_t max_jobs) {
  const Instance inst = prepare(input, max_jobs);
  std::vector<std::size_t> order(inst.jobs().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::optional<PermutationOptimum> best;
  do {
    Schedule s = canonical_left_shift(inst, order);
    const Wide value = objective(inst, s);
    if (!best || value < best->objective) best = PermutationOptimum{value, order, std::move(s)};
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

AssignmentOptimum assignment_oracle(const Instance& input, std::size_t max_jobs) {
  const Instance inst = prepare(input, max_jobs);
  const auto& jobs = inst.jobs();
  const std::size_t q = inst.supply().periods();
  const std::vector<std::size_t> order = wspt_order(std::span<const Job>(jobs));

  std::vector<std::optional<Wide>> best(q);
  std::vector<std::vector<std::size_t>> best_path(q);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t first = 0; first < q; ++first) {
    AssignmentSearch search(jobs, inst.supply(), order);
    search.run_from(first);
    if (search.found()) {
      best[first] = search.best();
      best_path[first] = search.best_path();
    }
  }

  std::optional<std::size_t> winner;
  for (std::size_t first = 0; first < q; ++first)
    if (best[first] && (!winner || *best[first] < *best[*winner])) winner = first;
  if (!winner) throw Error(ErrorKind::Unsolvable, "no resource-feasible assignment");

  AssignmentOptimum out;
  out.objective = *best[*winner];
  out.period_of.assign(jobs.size(), 0);
  for (std::size_t step = 0; step < jobs.size(); ++step) out.period_of[order[step]] = best_path[*winner][step];
  out.schedule = schedule_from_assignment(inst, order, out.period_of);
  return out;
}

AssignmentOptimum assignment_oracle_serial(const Instance& input, std::size_t max_jobs) {
  const Instance inst = prepare(input, max_jobs);
  const auto& jobs = inst.jobs();
  const std::size_t n = jobs.size();
  const std::size_t q = inst.supply().periods();
  const std::vector<std::size_t> order = wspt_order(std::span<const Job>(jobs));

  std::optional<AssignmentOptimum> best;
  std::vector<std::size_t> period_of(n, 0);
  while (true) {
    std::vector<Wide> demand(q, 0);
    for (std::size_t j = 0; j < n; ++j) demand[period_of[j]] += jobs[j].a;
    bool feasible = true;
    Wide running = 0;
    for (std::size_t l = 0; l < q && feasible; ++l) {
      running += demand[l];
      feasible = running <= inst.supply().cumulative()[l];
    }
    if (feasible) {
      const Wide value = terminal_value(assignment_state(inst, order, period_of), inst.supply(), static_cast<Wide>(n));
      if (!best || value < best->objective) best = AssignmentOptimum{value, period_of, {}};
    }
    std::size_t pos = 0;
    while (pos < n && period_of[pos] == q - 1) period_of[pos++] = 0;
    if (pos == n) break;
    ++period_of[pos];
  }
  if (!best) throw Error(ErrorKind::Unsolvable, "no resource-feasible assignment");
  best->schedule = schedule_from_assignment(inst, order, best->period_of);
  return *best;
}

}  // namespace nrsched
