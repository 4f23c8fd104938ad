#include "nrsched/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace nrsched {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.words.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.words.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Int to_int(const Line& line, std::size_t pos) {
  const std::string_view word = line.words[pos];
  Int value = 0;
  const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec == std::errc::result_out_of_range) throw ParseError(line.number, "integer out of range '" + std::string(word) + "'");
  if (ec != std::errc{} || end != word.data() + word.size())
    throw ParseError(line.number, "expected an integer, got '" + std::string(word) + "'");
  return value;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return at_ == lines_.size(); }

  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  // Next line, which must start with `keyword` and carry `values` integers.
  const Line& expect(std::string_view keyword, std::size_t values) {
    if (done()) throw ParseError(last_line(), "unexpected end of file, expected '" + std::string(keyword) + "'");
    const Line& line = lines_[at_++];
    if (line.words[0] != keyword)
      throw ParseError(line.number, "expected '" + std::string(keyword) + "', got '" + std::string(line.words[0]) + "'");
    if (line.words.size() != values + 1)
      throw ParseError(line.number, "'" + std::string(keyword) + "' takes " + std::to_string(values) + " values");
    return line;
  }

  const Line& next() { return lines_[at_++]; }

 private:
  std::vector<Line> lines_;
  std::size_t at_ = 0;
};

std::size_t count_of(const Line& line) {
  const Int n = to_int(line, 1);
  if (n < 1) throw ParseError(line.number, "count must be positive");
  if (n > 10'000'000) throw ParseError(line.number, "count too large");
  return static_cast<std::size_t>(n);
}

std::size_t index_of(const Line& line, std::size_t pos, std::size_t limit, const char* what) {
  const Int v = to_int(line, pos);
  if (v < 1 || static_cast<std::size_t>(v) > limit)
    throw ParseError(line.number, std::string(what) + " index " + std::to_string(v) + " out of range 1.." +
                                      std::to_string(limit));
  return static_cast<std::size_t>(v - 1);
}

Wide to_wide(const Line& line, std::size_t pos) {
  try {
    return parse_wide(line.words[pos]);
  } catch (const std::exception&) {
    throw ParseError(line.number, "malformed value '" + std::string(line.words[pos]) + "'");
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Cursor in(tokenize(text));
  if (in.done()) throw ParseError(1, "empty instance file");
  const Line& header = in.next();
  if (header.words.size() != 1 || (header.words[0] != "NORMAL" && header.words[0] != "HME"))
    throw ParseError(header.number, "first line must be NORMAL or HME");
  const bool hme = header.words[0] == "HME";

  std::vector<Job> jobs;
  std::vector<JobClass> classes;
  if (hme) {
    const std::size_t h = count_of(in.expect("classes", 1));
    for (std::size_t i = 0; i < h; ++i) {
      const Line& line = in.expect("class", 4);
      JobClass c{to_int(line, 1), to_int(line, 2), to_int(line, 3), to_int(line, 4)};
      if (c.s < 1) throw ParseError(line.number, "multiplicity must be >= 1");
      if (c.p < 1) throw ParseError(line.number, "processing time must be >= 1");
      if (c.w < 1) throw ParseError(line.number, "weight must be >= 1");
      if (c.a < 0) throw ParseError(line.number, "resource requirement must be >= 0");
      classes.push_back(c);
    }
  } else {
    const std::size_t n = count_of(in.expect("jobs", 1));
    for (std::size_t i = 0; i < n; ++i) {
      const Line& line = in.expect("job", 3);
      Job j{to_int(line, 1), to_int(line, 2), to_int(line, 3)};
      if (j.p < 1) throw ParseError(line.number, "processing time must be >= 1");
      if (j.w < 1) throw ParseError(line.number, "weight must be >= 1");
      if (j.a < 0) throw ParseError(line.number, "resource requirement must be >= 0");
      jobs.push_back(j);
    }
  }

  const std::size_t q = count_of(in.expect("supplies", 1));
  std::vector<Int> times;
  std::vector<Int> quantities;
  for (std::size_t l = 0; l < q; ++l) {
    const Line& line = in.expect("supply", 2);
    const Int u = to_int(line, 1);
    const Int b = to_int(line, 2);
    if (l == 0 && u != 0) throw ParseError(line.number, "first supply must be at time 0");
    if (l > 0 && u <= times.back()) throw ParseError(line.number, "supply times must have u strictly increasing");
    if (b < 1) throw ParseError(line.number, "supplied quantity must be >= 1");
    times.push_back(u);
    quantities.push_back(b);
  }
  if (!in.done()) {
    const Line& extra = in.next();
    throw ParseError(extra.number, "unexpected trailing line '" + std::string(extra.words[0]) + "'");
  }

  SupplyProfile supply(std::move(times), std::move(quantities));
  return hme ? Instance::hme(std::move(classes), std::move(supply)) : Instance::normal(std::move(jobs), std::move(supply));
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  if (inst.is_hme()) {
    out << "HME\nclasses " << inst.classes().size() << '\n';
    for (const JobClass& c : inst.classes()) out << "class " << c.s << ' ' << c.p << ' ' << c.w << ' ' << c.a << '\n';
  } else {
    out << "NORMAL\njobs " << inst.jobs().size() << '\n';
    for (const Job& j : inst.jobs()) out << "job " << j.p << ' ' << j.w << ' ' << j.a << '\n';
  }
  const SupplyProfile& supply = inst.supply();
  out << "supplies " << supply.periods() << '\n';
  for (std::size_t l = 0; l < supply.periods(); ++l)
    out << "supply " << supply.time(l) << ' ' << supply.quantities()[l] << '\n';
  return out.str();
}

ScheduleFile parse_schedule(std::string_view text, const Instance& inst) {
  ScheduleFile file;
  const std::vector<Line> lines = tokenize(text);
  std::vector<std::optional<Int>> starts;
  if (!inst.is_hme()) starts.assign(inst.jobs().size(), std::nullopt);
  const std::size_t q = inst.supply().periods();

  for (const Line& line : lines) {
    const std::string_view key = line.words[0];
    if (key == "objective") {
      if (line.words.size() != 2) throw ParseError(line.number, "'objective' takes 1 value");
      if (file.objective) throw ParseError(line.number, "duplicate objective line");
      file.objective = to_wide(line, 1);
    } else if (key == "start") {
      if (inst.is_hme()) throw ParseError(line.number, "'start' lines need a NORMAL instance");
      if (line.words.size() != 3) throw ParseError(line.number, "'start' takes 2 values");
      const std::size_t j = index_of(line, 1, starts.size(), "job");
      if (starts[j]) throw ParseError(line.number, "job " + std::to_string(j + 1) + " started twice");
      starts[j] = to_int(line, 2);
    } else if (key == "block") {
      if (!inst.is_hme()) throw ParseError(line.number, "'block' lines need an HME instance");
      if (line.words.size() != 5) throw ParseError(line.number, "'block' takes 4 values");
      if (!file.compact) file.compact.emplace();
      file.compact->blocks.push_back(Block{index_of(line, 1, q, "period"),
                                           index_of(line, 2, inst.classes().size(), "class"), to_int(line, 3),
                                           to_int(line, 4)});
    } else {
      throw ParseError(line.number, "unknown keyword '" + std::string(key) + "'");
    }
  }

  if (inst.is_hme()) {
    if (!file.compact) file.compact.emplace();
  } else {
    Schedule sched;
    for (std::size_t j = 0; j < starts.size(); ++j) {
      if (!starts[j]) throw ParseError(lines.empty() ? 0 : lines.back().number, "job " + std::to_string(j + 1) + " has no start");
      sched.start.push_back(*starts[j]);
    }
    file.schedule = std::move(sched);
  }
  return file;
}

std::string emit_schedule(const Schedule& sched, std::optional<Wide> objective) {
  std::ostringstream out;
  if (objective) out << "objective " << to_string(*objective) << '\n';
  for (std::size_t j = 0; j < sched.start.size(); ++j) out << "start " << j + 1 << ' ' << sched.start[j] << '\n';
  return out.str();
}

std::string emit_schedule(const CompactSchedule& sched, std::optional<Wide> objective) {
  std::ostringstream out;
  if (objective) out << "objective " << to_string(*objective) << '\n';
  for (const Block& b : sched.blocks)
    out << "block " << b.period + 1 << ' ' << b.cls + 1 << ' ' << b.start << ' ' << b.count << '\n';
  return out.str();
}

std::string emit_schedule(const SolveReport& report) {
  if (report.compact) return emit_schedule(*report.compact, report.objective);
  if (report.schedule) return emit_schedule(*report.schedule, report.objective);
  return "objective " + to_string(report.objective) + '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

}  // namespace nrsched
