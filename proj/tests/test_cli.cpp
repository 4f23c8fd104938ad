#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "test_support.hpp"
#include "nrsched/cli.hpp"
#include "nrsched/instgen.hpp"
#include "nrsched/io.hpp"

using namespace nrsched;
namespace fs = std::filesystem;

namespace {

struct Captured {
  int code = 0;
  std::string out;
  std::string err;
};

Captured run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("nrsched_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string put(const std::string& name, const std::string& text) const {
    write_file(path(name), text);
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SolveDpInstanceA) {
  const auto in = put("A.inst", emit_instance(fixtures::instance_a()));
  const Captured r = run({"solve", "--algo", "dp", "--input", in});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("objective 11\nstart 1 0\nstart 2 2\nstart 3 3\n"), std::string::npos);
}

TEST_F(CliTest, SolveWeightOrderTight) {
  const auto in = put("tight_w10.inst", emit_instance(gen_tight_pair(10, 1)));
  const Captured r = run({"solve", "--algo", "wgreedy", "--input", in});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("objective 218"), std::string::npos);
}

TEST_F(CliTest, SolveJsonLines) {
  const auto in = put("A.inst", emit_instance(fixtures::instance_a()));
  const Captured r = run({"solve", "--algo", "fptas", "--eps", "0.25", "--input", in, "--report", "json-lines"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"guarantee\":\"7/4\""), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

TEST_F(CliTest, SolveHmeWritesBlocks) {
  const auto in = put("C.inst", emit_instance(fixtures::instance_c()));
  const auto out = path("C.sched");
  for (const std::string algo : {"fptas-hme", "dp", "oracle", "spt"}) {
    const Captured r = run({"solve", "--algo", algo, "--input", in, "--output", out});
    ASSERT_EQ(r.code, 0) << algo << r.err;
    EXPECT_NE(read_file(out).find("block "), std::string::npos);
    EXPECT_EQ(run({"verify", "--input", in, "--schedule", out}).code, 0) << algo;
  }
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve", "--algo", "magic", "--input", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"solve", "--help"}).code, cli::kExitOk);

  EXPECT_EQ(run({"solve", "--input", path("missing.inst")}).code, cli::kExitInput);
  const auto bad = put("bad.inst", "NORMAL\njobs 1\njob 1 1 1\nsupplies 2\nsupply 0 1\nsupply 0 1\n");
  const Captured parse = run({"solve", "--input", bad});
  EXPECT_EQ(parse.code, cli::kExitInput);
  EXPECT_NE(parse.err.find("u strictly increasing"), std::string::npos);

  const auto a = put("A.inst", emit_instance(fixtures::instance_a()));
  EXPECT_EQ(run({"solve", "--algo", "fptas", "--eps", "3", "--input", a}).code, cli::kExitInput);
  EXPECT_EQ(run({"solve", "--algo", "wgreedy", "--input", a}).code, cli::kExitSolver);
  const auto over = put("over.inst", "NORMAL\njobs 1\njob 1 1 5\nsupplies 1\nsupply 0 1\n");
  EXPECT_EQ(run({"solve", "--algo", "oracle", "--input", over}).code, cli::kExitSolver);
}

TEST_F(CliTest, Verify) {
  const auto a = put("A.inst", emit_instance(fixtures::instance_a()));
  const auto good = put("good.sched", "objective 11\nstart 1 0\nstart 2 2\nstart 3 3\n");
  const Captured ok = run({"verify", "--input", a, "--schedule", good});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("objective 11"), std::string::npos);
  const auto infeasible = put("bad.sched", "start 1 0\nstart 2 1\nstart 3 3\n");
  EXPECT_EQ(run({"verify", "--input", a, "--schedule", infeasible}).code, cli::kExitSolver);
  const auto malformed = put("worse.sched", "start 1 0\n");
  EXPECT_EQ(run({"verify", "--input", a, "--schedule", malformed}).code, cli::kExitInput);
}

TEST_F(CliTest, GenFamilies) {
  const Captured g = run({"gen", "--family", "hme", "--n", "6", "--q", "3", "--classes", "2", "--seed", "4"});
  ASSERT_EQ(g.code, 0);
  GenOptions o;
  o.family = Family::Hme;
  EXPECT_EQ(parse_instance(g.out), gen_random(4, 6, 3, o));

  const Captured t = run({"gen", "--family", "tight", "--w", "10"});
  EXPECT_EQ(parse_instance(t.out), gen_tight_pair(10, 1));

  const Captured p = run({"gen", "--family", "partition", "--items", "1,2,3,2"});
  ASSERT_EQ(p.code, 0);
  EXPECT_TRUE(parse_instance(p.out).is_hme());
  EXPECT_NE(p.out.find("threshold"), std::string::npos);
  EXPECT_EQ(run({"gen", "--family", "partition", "--items", "1,2,x"}).code, cli::kExitInput);

  const auto out = path("g.inst");
  EXPECT_EQ(run({"gen", "--family", "general", "--output", out}).code, 0);
  EXPECT_NO_THROW(parse_instance(read_file(out)));
}

TEST_F(CliTest, Bench) {
  const Captured b = run({"bench", "--family", "unit_p_w_eq_a", "--n", "8", "--count", "50", "--seed", "7"});
  ASSERT_EQ(b.code, 0) << b.err;
  const auto pos = b.out.find("max_ratio=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_LE(std::stod(b.out.substr(pos + 10)), 3.0);
  // 50 rows, a header and a summary, in id order.
  EXPECT_EQ(std::count(b.out.begin(), b.out.end(), '\n'), 52);
  EXPECT_EQ(b.out.find("\n1 "), b.out.find('\n'));

  const Captured j = run({"bench", "--family", "hme", "--n", "5", "--q", "2", "--count", "5", "--report", "json-lines"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_NE(j.out.find("\"summary\":true"), std::string::npos);
}
