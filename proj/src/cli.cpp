#include "nrsched/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nrsched/evaluator.hpp"
#include "nrsched/exact_dp.hpp"
#include "nrsched/fptas.hpp"
#include "nrsched/fptas_hme.hpp"
#include "nrsched/greedy.hpp"
#include "nrsched/instgen.hpp"
#include "nrsched/io.hpp"
#include "nrsched/oracle.hpp"

namespace nrsched::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvariantViolation:
    case ErrorKind::InvalidEpsilon:
    case ErrorKind::InvalidProfile:
    case ErrorKind::OverflowBudget:
      return kExitInput;
    default:
      return kExitSolver;
  }
}

Ratio epsilon_from(const std::string& text) {
  try {
    return parse_ratio(text);
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::InvalidEpsilon, "cannot parse --eps '" + text + "'");
  }
}

SolveReport exact_reference(const Instance& inst) {
  SolveReport report;
  report.algorithm = "oracle";
  report.guarantee = "1";
  if (inst.job_count() <= static_cast<Wide>(kPermutationOracleCap)) {
    auto opt = permutation_oracle(inst);
    report.objective = opt.objective;
    report.schedule = std::move(opt.schedule);
  } else {
    auto opt = assignment_oracle(inst);
    report.objective = opt.objective;
    report.schedule = std::move(opt.schedule);
  }
  return report;
}

SolveReport dispatch(const std::string& algo, const Instance& inst, Ratio eps) {
  SolveReport report;
  if (algo == "spt") {
    report = spt_list(inst);
  } else if (algo == "wgreedy") {
    report = weight_order_list(inst);
  } else if (algo == "dp") {
    report = dp_solve(inst);
  } else if (algo == "fptas") {
    report = fptas_solve(inst, eps);
  } else if (algo == "fptas-hme") {
    report = hme_fptas_solve(inst, eps);
  } else {
    report = exact_reference(inst);
  }
  // Schedules of the expanded instance are handed back in compact form.
  if (inst.is_hme() && report.schedule) {
    report.compact = compress_schedule(inst, *report.schedule);
    report.schedule.reset();
  }
  return report;
}

json report_json(const SolveReport& r) {
  json j;
  j["algorithm"] = r.algorithm;
  j["objective"] = to_string(r.objective);
  if (r.guarantee) j["guarantee"] = *r.guarantee;
  if (r.spt_lower_bound) j["spt_lower_bound"] = to_string(*r.spt_lower_bound);
  if (r.supply_lower_bound) j["supply_lower_bound"] = to_string(*r.supply_lower_bound);
  if (r.states > 0) j["states"] = r.states;
  j["warnings"] = r.warnings;
  if (r.schedule) j["start"] = r.schedule->start;
  if (r.compact) {
    json blocks = json::array();
    for (const Block& b : r.compact->blocks) blocks.push_back({b.period + 1, b.cls + 1, b.start, b.count});
    j["blocks"] = blocks;
  }
  return j;
}

std::string report_header(const SolveReport& r) {
  std::ostringstream out;
  out << "# algorithm " << r.algorithm << '\n';
  if (r.guarantee) out << "# guarantee " << *r.guarantee << '\n';
  if (r.spt_lower_bound) out << "# spt_lower_bound " << to_string(*r.spt_lower_bound) << '\n';
  if (r.supply_lower_bound) out << "# supply_lower_bound " << to_string(*r.supply_lower_bound) << '\n';
  if (r.states > 0) out << "# states " << r.states << '\n';
  for (const auto& w : r.warnings) out << "# warning: " << w << '\n';
  return out.str();
}

std::vector<Int> parse_items(const std::string& text) {
  std::vector<Int> items;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    try {
      std::size_t used = 0;
      items.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidProfile, "malformed item '" + piece + "'");
    }
  }
  return items;
}

struct SolveArgs {
  std::string algo = "dp";
  std::string eps = "1/4";
  std::string input;
  std::string output;
  std::string report = "text";
};

int do_solve(const SolveArgs& a, std::ostream& out) {
  const Instance inst = parse_instance(read_file(a.input));
  const SolveReport report = dispatch(a.algo, inst, epsilon_from(a.eps));
  if (!a.output.empty()) write_file(a.output, report_header(report) + emit_schedule(report));
  if (a.report == "json-lines") {
    out << report_json(report).dump() << '\n';
  } else if (!a.output.empty()) {
    out << report_header(report) << "objective " << to_string(report.objective) << '\n';
  } else {
    out << report_header(report) << emit_schedule(report);
  }
  return kExitOk;
}

struct GenArgs {
  std::string family = "uniform_a";
  std::size_t n = 6;
  std::size_t q = 2;
  std::uint64_t seed = 1;
  GenOptions options;
  Int w = 10;
  Int gap = 1;
  std::string items;
  Int medium_base = 0;
  Int big_base = 0;
  std::string output;
};

int do_gen(GenArgs a, std::ostream& out) {
  std::string text;
  if (a.family == "tight") {
    text = "# tight pair w=" + std::to_string(a.w) + " gap=" + std::to_string(a.gap) + "\n" +
           emit_instance(gen_tight_pair(a.w, a.gap));
  } else if (a.family == "partition") {
    const std::vector<Int> items = parse_items(a.items);
    const PartitionReduction red = (a.medium_base > 0 || a.big_base > 0)
                                       ? gen_partition_reduction(items, a.medium_base, a.big_base)
                                       : gen_partition_reduction(items);
    text = "# partition reduction threshold " + to_string(red.threshold) + "\n" + emit_instance(red.instance);
  } else {
    a.options.family = parse_family(a.family);
    text = emit_instance(gen_random(a.seed, a.n, a.q, a.options));
  }
  if (a.output.empty()) {
    out << text;
  } else {
    write_file(a.output, text);
  }
  return kExitOk;
}

struct BenchArgs {
  std::string family = "uniform_a";
  std::size_t n = 6;
  std::size_t q = 2;
  std::size_t count = 20;
  std::uint64_t seed = 1;
  std::string algo;
  std::string eps = "1/4";
  std::string report = "text";
  GenOptions options;
};

struct BenchRow {
  std::size_t id = 0;
  std::uint64_t seed = 0;
  std::optional<SolveReport> result;
  Wide reference = 0;
  double ratio = 0;
  std::string error;
};

std::string default_algo(Family family) {
  switch (family) {
    case Family::UnitPWEqA: return "wgreedy";
    case Family::Hme: return "fptas-hme";
    default: return "spt";
  }
}

int do_bench(BenchArgs a, std::ostream& out) {
  a.options.family = parse_family(a.family);
  const std::string algo = a.algo.empty() ? default_algo(a.options.family) : a.algo;
  const Ratio eps = epsilon_from(a.eps);
  std::vector<BenchRow> rows(a.count);

#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < a.count; ++i) {
    BenchRow& row = rows[i];
    row.id = i + 1;
    row.seed = a.seed + i;
    try {
      const Instance inst = gen_random(row.seed, a.n, a.q, a.options);
      SolveReport r = dispatch(algo, inst, eps);
      if (!r.spt_lower_bound && inst.uniform_requirement().value_or(0) >= 1) {
        r.spt_lower_bound = spt_lower_bound(inst);
        r.supply_lower_bound = supply_lower_bound(inst);
      }
      row.reference = exact_reference(inst).objective;
      row.ratio = static_cast<double>(r.objective) / static_cast<double>(row.reference);
      row.result = std::move(r);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }

  double max_ratio = 0;
  double sum_ratio = 0;
  std::size_t solved = 0;
  if (a.report == "text")
    out << std::left << std::setw(6) << "id" << std::setw(22) << "seed" << std::setw(14) << "value" << std::setw(14)
        << "opt" << std::setw(12) << "ratio" << std::setw(14) << "spt_lb" << "supply_lb\n";
  for (const BenchRow& row : rows) {
    if (row.result) {
      ++solved;
      max_ratio = std::max(max_ratio, row.ratio);
      sum_ratio += row.ratio;
    }
    if (a.report == "json-lines") {
      json j{{"id", row.id}, {"seed", row.seed}};
      if (row.result) {
        j["value"] = to_string(row.result->objective);
        j["opt"] = to_string(row.reference);
        j["ratio"] = row.ratio;
        if (row.result->spt_lower_bound) j["spt_lower_bound"] = to_string(*row.result->spt_lower_bound);
        if (row.result->supply_lower_bound) j["supply_lower_bound"] = to_string(*row.result->supply_lower_bound);
      } else {
        j["error"] = row.error;
      }
      out << j.dump() << '\n';
      continue;
    }
    out << std::setw(6) << row.id << std::setw(22) << row.seed;
    if (!row.result) {
      out << "error: " << row.error << '\n';
      continue;
    }
    const auto& r = *row.result;
    std::ostringstream ratio;
    ratio << std::fixed << std::setprecision(6) << row.ratio;
    out << std::setw(14) << to_string(r.objective) << std::setw(14) << to_string(row.reference) << std::setw(12)
        << ratio.str() << std::setw(14) << (r.spt_lower_bound ? to_string(*r.spt_lower_bound) : "-")
        << (r.supply_lower_bound ? to_string(*r.supply_lower_bound) : "-") << '\n';
  }

  const double mean = solved > 0 ? sum_ratio / static_cast<double>(solved) : 0.0;
  if (a.report == "json-lines") {
    out << json{{"summary", true}, {"algorithm", algo}, {"count", a.count}, {"solved", solved},
                {"max_ratio", max_ratio}, {"mean_ratio", mean}}
               .dump()
        << '\n';
  } else {
    out << std::fixed << std::setprecision(6) << "summary algorithm=" << algo << " count=" << a.count
        << " solved=" << solved << " max_ratio=" << max_ratio << " mean_ratio=" << mean << '\n';
  }
  return solved == a.count ? kExitOk : kExitSolver;
}

int do_verify(const std::string& input, const std::string& schedule_path, std::ostream& out, std::ostream& err) {
  const Instance inst = parse_instance(read_file(input));
  const ScheduleFile file = parse_schedule(read_file(schedule_path), inst);
  const FeasibilityReport report =
      file.compact ? check_feasible(inst, *file.compact) : check_feasible(inst, *file.schedule);
  if (!report) {
    out << "infeasible: " << report.violation << '\n';
    return kExitSolver;
  }
  const Wide value = file.compact ? objective(inst, *file.compact) : objective(inst, *file.schedule);
  out << "feasible\nobjective " << to_string(value) << '\n';
  if (file.objective && *file.objective != value)
    err << "warning: file states objective " << to_string(*file.objective) << '\n';
  return kExitOk;
}

void add_gen_options(CLI::App* cmd, GenOptions& o) {
  cmd->add_option("--abar", o.abar, "common resource requirement");
  cmd->add_option("--classes", o.classes, "number of classes (hme)");
  cmd->add_option("--pmax", o.pmax, "upper bound for p, w and a");
  cmd->add_option("--surplus", o.surplus, "total supply minus total demand");
  cmd->add_option("--horizon", o.horizon, "latest supply time (0 = total processing time)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-machine scheduling with a non-renewable resource", "nrsched"};
  app.require_subcommand(1);

  const std::vector<std::string> algos{"spt", "wgreedy", "dp", "fptas", "fptas-hme", "oracle"};
  const std::vector<std::string> reports{"text", "json-lines"};
  const std::vector<std::string> families{"uniform_a", "unit_p_w_eq_a", "general", "hme"};

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  solve_cmd->add_option("--algo", solve.algo)->check(CLI::IsMember(algos));
  solve_cmd->add_option("--eps", solve.eps, "accuracy, e.g. 1/4 or 0.25");
  solve_cmd->add_option("--input", solve.input)->required();
  solve_cmd->add_option("--output", solve.output, "write the schedule here");
  solve_cmd->add_option("--report", solve.report)->check(CLI::IsMember(reports));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  std::vector<std::string> gen_families = families;
  gen_families.insert(gen_families.end(), {"tight", "partition"});
  gen_cmd->add_option("--family", gen.family)->check(CLI::IsMember(gen_families));
  gen_cmd->add_option("--n", gen.n, "jobs (total multiplicity for hme)");
  gen_cmd->add_option("--q", gen.q, "supply points");
  gen_cmd->add_option("--seed", gen.seed);
  add_gen_options(gen_cmd, gen.options);
  gen_cmd->add_option("--w", gen.w, "tight pair weight");
  gen_cmd->add_option("--gap", gen.gap, "tight pair weight gap");
  gen_cmd->add_option("--items", gen.items, "partition item sizes, comma separated");
  gen_cmd->add_option("--medium-base", gen.medium_base);
  gen_cmd->add_option("--big-base", gen.big_base);
  gen_cmd->add_option("--output", gen.output);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "compare an algorithm against the exact optimum");
  bench_cmd->add_option("--family", bench.family)->check(CLI::IsMember(families));
  bench_cmd->add_option("--n", bench.n);
  bench_cmd->add_option("--q", bench.q);
  bench_cmd->add_option("--count", bench.count);
  bench_cmd->add_option("--seed", bench.seed, "instance i uses seed + i - 1");
  bench_cmd->add_option("--algo", bench.algo)->check(CLI::IsMember(algos));
  bench_cmd->add_option("--eps", bench.eps);
  bench_cmd->add_option("--report", bench.report)->check(CLI::IsMember(reports));
  add_gen_options(bench_cmd, bench.options);

  std::string verify_input;
  std::string verify_schedule;
  auto* verify_cmd = app.add_subcommand("verify", "check a schedule file");
  verify_cmd->add_option("--input", verify_input)->required();
  verify_cmd->add_option("--schedule", verify_schedule)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return do_solve(solve, out);
    if (gen_cmd->parsed()) return do_gen(gen, out);
    if (bench_cmd->parsed()) return do_bench(bench, out);
    return do_verify(verify_input, verify_schedule, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace nrsched::cli
