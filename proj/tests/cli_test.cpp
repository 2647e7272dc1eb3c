#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "mps_example.hpp"
#include "symalg/construct.hpp"
#include "symalg/io.hpp"
#include "symalg/predicates.hpp"
#include "test_util.hpp"

namespace symalg {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using testing::ints;

struct CliResult {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("symalg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path file(const std::string& name) const { return dir_ / name; }

  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

  CliResult run(const std::string& args) const {
    const fs::path out = file("stdout.txt");
    const std::string cmd = std::string(SYMALG_CLI_PATH) + " " + args + " > " + out.string() +
                            " 2> " + file("stderr.txt").string();
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
  }

  fs::path dir_;
};

TEST_F(Cli, ClassifyReportsWeights) {
  const auto path = write("m.csv", "1,2\n3,4\n");
  const CliResult r = run("classify " + path.string());
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("n"), 2);
  EXPECT_EQ(j["properties"]["A"]["status"], "holds");
  EXPECT_EQ(j["properties"]["A"]["w"], "5/2");
  EXPECT_EQ(j["properties"]["S"]["status"], "fails");
  EXPECT_TRUE(j["spaces"]["R"].get<bool>());
  EXPECT_FALSE(j["spaces"]["A"].get<bool>());
}

TEST_F(Cli, ClassifyPretty) {
  const auto path = write("m.csv", "1,1\n1,1\n");
  const CliResult r = run("classify --format pretty " + path.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(S)  holds  w = 1"), std::string::npos);
}

TEST_F(Cli, BlockGolden) {
  const auto path = write("m.csv", "1,2\n3,4\n");
  const CliResult r = run("block --format csv " + path.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5,-1\n-2,0\n");
}

TEST_F(Cli, DecomposeGolden) {
  const auto path = write("m.csv", "1,2\n3,4\n");
  const CliResult r = run("decompose --split ba " + path.string());
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(matrix_from_json(j.at("even")), testing::half() * ints({{5, 5}, {5, 5}}));
  EXPECT_EQ(matrix_from_json(j.at("odd")), testing::half() * ints({{-3, -1}, {1, 3}}));

  ASSERT_EQ(run("decompose --split sv --even " + file("e.json").string() + " --odd " +
                file("o.json").string() + " " + path.string())
                .code,
            0);
  const Matrix m = ints({{1, 2}, {3, 4}});
  EXPECT_EQ(read_matrix_file(file("e.json")) + read_matrix_file(file("o.json")), m);
}

TEST_F(Cli, ConstructClassifyClosure) {
  for (ConstructType t : kAllConstructTypes) {
    for (std::size_t n : {4, 5}) {
      if (construct_requires_even(t) && n % 2 != 0) continue;
      const std::string name(to_string(t));
      const auto out = file(name + ".json");
      ASSERT_EQ(run("construct --type " + name + " --n " + std::to_string(n) + " --seed 3 -o " +
                    out.string())
                    .code,
                0)
          << name;
      const CliResult c = run("classify " + out.string());
      ASSERT_EQ(c.code, 0) << name;
      const json j = json::parse(c.out);
      EXPECT_TRUE(j["spaces"][std::string(to_string(target_space(t)))].get<bool>())
          << name << " n=" << n;
    }
  }
}

TEST_F(Cli, ConstructIsDeterministic) {
  const CliResult a = run("construct --type nqs --n 6 --seed 11");
  const CliResult b = run("construct --type nqs --n 6 --seed 11");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const CliResult c = run("construct --type nqs --n 6 --seed 12");
  EXPECT_NE(a.out, c.out);
}

TEST_F(Cli, ConstructWithWeight) {
  for (const char* args : {"--type s --n 5 --w 3", "--type s --n 6 --w 1/2", "--type rv --n 4 --w 2"}) {
    const CliResult r = run(std::string("construct --format json ") + args);
    ASSERT_EQ(r.code, 0) << args;
    const Matrix m = parse_matrix(r.out);
    const Verdict v = check_entrywise(m, Property::S);
    if (std::string(args).find("rv") == std::string::npos) {
      ASSERT_TRUE(v.holds()) << args;
    }
  }
  const Matrix m = parse_matrix(run("construct --type s --n 6 --w 1/2").out);
  EXPECT_EQ(*check_entrywise(m, Property::S).weight, testing::half());
  EXPECT_EQ(run("construct --type a --n 4 --w 1").code, 2);
}

TEST_F(Cli, ConstructFromParams) {
  const auto params = write("p.json", R"({"type": "mps", "n": 6, "params": {
      "a": [2, -4, 2], "b": [-4, 8, -4],
      "Z": [[2, 0, -2], [-2, 0, 2], [2, 0, -2]]}})");
  const CliResult r = run("construct --params " + params.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_matrix(r.out), testing::mps6());

  const auto bad = write("bad.json", R"({"type": "mps", "n": 4, "params": {"a": [1, 1]}})");
  EXPECT_EQ(run("construct --params " + bad.string()).code, 3);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("construct --type p --n 5").code, 2);
  EXPECT_EQ(run("classify " + write("bad.csv", "1,2\n3\n").string()).code, 2);
  EXPECT_EQ(run("classify " + file("missing.csv").string()).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("decompose --split qp " + write("odd.csv", "1,2,3\n4,5,6\n7,8,9\n").string()).code,
            2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, DimAndVerify) {
  const CliResult d = run("dim --space V --n 4");
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(json::parse(d.out).at("nullity"), 6);
  EXPECT_EQ(run("dim --space S --n 20").code, 2);
  const CliResult v = run("verify --suite lemmas --n-max 4 --trials 5");
  ASSERT_EQ(v.code, 0);
  EXPECT_TRUE(json::parse(v.out).at("passed").get<bool>());
}

}  // namespace
}  // namespace symalg
