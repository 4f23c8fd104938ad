#include "nrsched/model.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace nrsched {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::InvariantViolation, what);
}

}  // namespace

SupplyProfile::SupplyProfile(std::vector<Int> times, std::vector<Int> quantities)
    : times_(std::move(times)), quantities_(std::move(quantities)) {
  require(!times_.empty(), "at least one supply is required");
  require(times_.size() == quantities_.size(), "supply times and quantities differ in length");
  require(times_[0] == 0, "first supply must be at time 0");
  for (std::size_t l = 1; l < times_.size(); ++l)
    require(times_[l - 1] < times_[l], "u strictly increasing");
  cumulative_.reserve(quantities_.size());
  Wide sum = 0;
  for (Int b : quantities_) {
    require(b >= 1, "supplied quantities must be positive");
    sum += b;
    cumulative_.push_back(sum);
  }
}

std::size_t SupplyProfile::period_at(Wide t) const {
  auto it = std::upper_bound(times_.begin(), times_.end(), t,
                             [](Wide value, Int u) { return value < u; });
  if (it == times_.begin()) throw Error(ErrorKind::InvariantViolation, "negative time");
  return static_cast<std::size_t>(it - times_.begin()) - 1;
}

std::optional<std::size_t> SupplyProfile::first_covering(Wide demand) const {
  auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), demand);
  if (it == cumulative_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - cumulative_.begin());
}

Instance Instance::normal(std::vector<Job> jobs, SupplyProfile supply) {
  require(!jobs.empty(), "instance has no jobs");
  for (const Job& j : jobs) {
    require(j.p >= 1, "processing time must be >= 1");
    require(j.w >= 1, "weight must be >= 1");
    require(j.a >= 0, "resource requirement must be >= 0");
  }
  return Instance(std::move(jobs), std::move(supply));
}

Instance Instance::hme(std::vector<JobClass> classes, SupplyProfile supply) {
  require(!classes.empty(), "instance has no job classes");
  for (const JobClass& c : classes) {
    require(c.s >= 1, "multiplicity must be >= 1");
    require(c.p >= 1, "processing time must be >= 1");
    require(c.w >= 1, "weight must be >= 1");
    require(c.a >= 0, "resource requirement must be >= 0");
  }
  return Instance(std::move(classes), std::move(supply));
}

const std::vector<Job>& Instance::jobs() const {
  if (const auto* jobs = std::get_if<std::vector<Job>>(&items_)) return *jobs;
  throw Error(ErrorKind::ModelMismatch, "instance is high-multiplicity encoded");
}

const std::vector<JobClass>& Instance::classes() const {
  if (const auto* classes = std::get_if<std::vector<JobClass>>(&items_)) return *classes;
  throw Error(ErrorKind::ModelMismatch, "instance is not high-multiplicity encoded");
}

Wide Instance::job_count() const noexcept {
  if (const auto* jobs = std::get_if<std::vector<Job>>(&items_)) return static_cast<Wide>(jobs->size());
  Wide n = 0;
  for (const JobClass& c : std::get<std::vector<JobClass>>(items_)) n += c.s;
  return n;
}

Wide Instance::total_demand() const noexcept {
  Wide demand = 0;
  if (const auto* jobs = std::get_if<std::vector<Job>>(&items_)) {
    for (const Job& j : *jobs) demand += j.a;
  } else {
    for (const JobClass& c : std::get<std::vector<JobClass>>(items_)) demand += static_cast<Wide>(c.s) * c.a;
  }
  return demand;
}

std::optional<Int> Instance::uniform_requirement() const {
  std::optional<Int> common;
  auto visit = [&](Int a) {
    if (!common) common = a;
    return *common == a;
  };
  if (const auto* jobs = std::get_if<std::vector<Job>>(&items_)) {
    for (const Job& j : *jobs)
      if (!visit(j.a)) return std::nullopt;
  } else {
    for (const JobClass& c : std::get<std::vector<JobClass>>(items_))
      if (!visit(c.a)) return std::nullopt;
  }
  return common;
}

std::vector<Wide> prefix_supply(const Instance& inst) { return inst.supply().cumulative(); }

std::vector<Int> job_capacity_prefix(const Instance& inst, Int abar) {
  if (abar == 0) throw Error(ErrorKind::ZeroRequirement, "abar = 0 has no resource constraint");
  if (abar < 0) throw Error(ErrorKind::InvariantViolation, "abar must be positive");
  const auto common = inst.uniform_requirement();
  if (!common || *common != abar)
    throw Error(ErrorKind::NonUniformRequirement, "jobs do not all require " + std::to_string(abar));
  std::vector<Int> capacity;
  capacity.reserve(inst.supply().periods());
  for (Wide b : inst.supply().cumulative()) capacity.push_back(static_cast<Int>(b / abar));
  return capacity;
}

Instance expand_hme(const Instance& inst, Wide cap) {
  const auto& classes = inst.classes();
  if (inst.job_count() > cap)
    throw Error(ErrorKind::SizeLimit, "expansion to " + to_string(inst.job_count()) +
                                          " jobs exceeds cap " + to_string(cap));
  std::vector<Job> jobs;
  jobs.reserve(static_cast<std::size_t>(inst.job_count()));
  for (const JobClass& c : classes)
    for (Int k = 0; k < c.s; ++k) jobs.push_back(Job{c.p, c.w, c.a});
  return Instance::normal(std::move(jobs), inst.supply());
}

std::vector<std::size_t> class_offsets(const Instance& inst) {
  const auto& classes = inst.classes();
  std::vector<std::size_t> offsets{0};
  for (const JobClass& c : classes) offsets.push_back(offsets.back() + static_cast<std::size_t>(c.s));
  return offsets;
}

std::string Ratio::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

Int parse_int(std::string_view s) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not an integer: " + std::string(s));
  return v;
}

}  // namespace

Ratio parse_ratio(const std::string& text) {
  Int num = 0;
  Int den = 1;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = parse_int(std::string_view(text).substr(0, slash));
    den = parse_int(std::string_view(text).substr(slash + 1));
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string_view whole = std::string_view(text).substr(0, dot);
    const std::string_view frac = std::string_view(text).substr(dot + 1);
    const bool negative = !whole.empty() && whole.front() == '-';
    if (negative) whole.remove_prefix(1);
    if (frac.size() > 17) throw std::invalid_argument("too many decimal digits: " + text);
    if (!frac.empty() && (frac.front() == '-' || frac.front() == '+'))
      throw std::invalid_argument("malformed decimal: " + text);
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = (whole.empty() ? 0 : parse_int(whole)) * den + (frac.empty() ? 0 : parse_int(frac));
    if (negative) num = -num;
  } else {
    num = parse_int(text);
  }
  if (den <= 0) throw std::invalid_argument("denominator must be positive: " + text);
  const Int g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Ratio{num, den};
}

}  // namespace nrsched
