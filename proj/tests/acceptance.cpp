// Acceptance run: one PASS/FAIL line per criterion. Trial counts, orders and
// time limits are fixed here so the run is reproducible.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "mps_example.hpp"
#include "symalg/block.hpp"
#include "symalg/construct.hpp"
#include "symalg/decompose.hpp"
#include "symalg/io.hpp"
#include "symalg/predicates.hpp"
#include "symalg/verify.hpp"

using namespace symalg;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 20240601;

// Time limits in seconds.
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 30.0;
constexpr double kLimit3 = 120.0;

constexpr std::size_t kGradingTrials = 200;
constexpr std::size_t kRankTrials = 200;
constexpr std::size_t kTripleTrials = 100;
constexpr std::size_t kParasymmetryDraws = 100;
constexpr std::size_t kReversibleTrials = 200;
constexpr std::size_t kAgreementTrials = 1000;
constexpr std::size_t kRoundTrips = 1000;

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void time_limit(Outcome& o, double elapsed, double limit) {
  std::ostringstream s;
  s << elapsed << " s";
  if (elapsed >= limit) o.fail("took " + s.str());
  if (o.passed) o.detail = s.str();
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Matrix m = from_block(BlockForm(Scalar(2) * testing::mps6_half_block()));
  if (m != testing::mps6()) o.fail("from_block differs from the expected square");
  const SymmetryReport r = classify(m);
  for (Property p : {Property::S, Property::M, Property::P}) {
    if (!r[p].holds() || !r[p].weight || !r[p].weight->is_zero()) {
      o.fail(std::string(to_string(p)) + " missing or weighted");
    }
  }
  time_limit(o, seconds_since(t0), kLimit1);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t n = 2; n <= 8; ++n) {
    const DimensionProbe s = dimension_probe(Space::S, n);
    const DimensionProbe v = dimension_probe(Space::V, n);
    if (s.nullity != n * n - 2 * n + 2 || !s.passed()) o.fail("S at n=" + std::to_string(n));
    if (v.nullity != 2 * n - 2 || !v.passed()) o.fail("V at n=" + std::to_string(n));
    const std::pair<Space, Space> splits[] = {
        {Space::B, Space::A}, {Space::S, Space::V}, {Space::N, Space::M}, {Space::Q, Space::P}};
    for (const auto& [even, odd] : splits) {
      if (requires_even_order(even) && n % 2 != 0) continue;
      if (build_constraints(even, n).nullity() + build_constraints(odd, n).nullity() != n * n) {
        o.fail(std::string(to_string(even)) + "+" + std::string(to_string(odd)) +
               " at n=" + std::to_string(n));
      }
    }
  }
  time_limit(o, seconds_since(t0), kLimit2);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t products = 0;
  for (GradingPair g : kAllGradingPairs) {
    for (std::size_t n = 2; n <= 6; ++n) {
      if (grading_requires_even(g) && n % 2 != 0) continue;
      const GradingCheckResult r = grading_check(g, n, kGradingTrials, kSeed);
      for (const auto& [law, count] : r.laws) {
        products += count;
        if (count < kGradingTrials) o.fail(law + " ran too few trials");
      }
      if (!r.passed()) {
        o.fail(std::string(to_string(g)) + " n=" + std::to_string(n) + ": " + r.witnesses.front().law);
      }
    }
  }
  time_limit(o, seconds_since(t0), kLimit3);
  if (o.passed) o.detail = std::to_string(products) + " products, " + o.detail;
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (std::size_t n : {3, 5, 7}) {
    if (build_constraints(Space::M, n, Route::entrywise).nullity() != 0) {
      o.fail("nonzero nullity at n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto check = [&](RankFamily f, std::size_t n) {
    const RankBoundResult r = rank_bound_check(f, n, kRankTrials, kSeed);
    if (!r.passed()) {
      o.fail(std::string(to_string(f)) + " n=" + std::to_string(n) + " max rank " +
             std::to_string(r.max_rank));
    }
  };
  for (std::size_t n = 4; n <= 8; n += 2) {
    check(RankFamily::mps, n);
    check(RankFamily::mps_weighted, n);
  }
  for (std::size_t n = 2; n <= 9; ++n) {
    check(RankFamily::reversible, n);
    check(RankFamily::vertex_cross, n);
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (std::size_t n : {4, 6, 8}) {
    for (std::size_t t = 0; t < kTripleTrials; ++t) {
      Rng rng = make_rng(kSeed + n, t);
      Vector v[6];
      for (auto& x : v) x = random_mps_vector(n, rng);
      if (!mps_triple_product_check(v[0], v[1], v[2], v[3], v[4], v[5], n)) {
        o.fail("n=" + std::to_string(n) + " trial " + std::to_string(t));
      }
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    if (!rv_equals_av_check(n)) o.fail("RV != AV at n=" + std::to_string(n));
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    if (!reversible_implies_A_check(n, kReversibleTrials, kSeed).passed()) {
      o.fail("reversible without (A) at n=" + std::to_string(n));
    }
  }
  // Every other draw makes delta a multiple of gamma.
  std::size_t dependent = 0;
  for (std::size_t t = 0; t < kParasymmetryDraws; ++t) {
    const std::size_t n = 4 + 2 * (t % 3);
    Rng rng = make_rng(kSeed + 7, t);
    const Vector gamma = random_mps_vector(n, rng);
    const Vector delta = t % 2 == 0 ? random_scalar(rng) * gamma : random_mps_vector(n, rng);
    const ParasymmetryResult r = parasymmetry_check(gamma, delta, n);
    if (!r.passed()) o.fail("parasymmetry draw " + std::to_string(t));
    dependent += r.dependent;
  }
  if (o.passed) o.detail = std::to_string(dependent) + " of 100 draws dependent";
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (std::size_t n = 2; n <= 7; ++n) {
    const AgreementResult r = oracle_agreement_check(n, kAgreementTrials, kSeed);
    if (!r.passed()) o.fail("n=" + std::to_string(n) + ": " + (r.notes.empty() ? "" : r.notes.front()));
  }
  return o;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args, const fs::path& dir) {
  const fs::path out = dir / "stdout.txt";
  const std::string cmd = std::string(SYMALG_CLI_PATH) + " " + args + " > " + out.string() +
                          " 2> " + (dir / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

Outcome criterion9() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / "symalg_acceptance";
  fs::create_directories(dir);

  for (std::size_t t = 0; t < kRoundTrips; ++t) {
    Rng rng = make_rng(kSeed + 9, t);
    const Matrix m = random_matrix(1 + t % 8, 1 + t % 8, rng);
    for (OutputFormat f : {OutputFormat::json, OutputFormat::csv}) {
      if (parse_matrix(format_matrix(m, f)) != m) o.fail("round trip " + std::to_string(t));
    }
  }

  // Through the binary: write, block, read back.
  Rng rng = make_rng(kSeed + 9, kRoundTrips);
  const Matrix m = random_matrix(5, 5, rng);
  write_matrix_file(dir / "m.json", m);
  if (run_cli("block -o " + (dir / "c.json").string() + " " + (dir / "m.json").string(), dir).code != 0 ||
      read_matrix_file(dir / "c.json") != to_block(m).conjugate()) {
    o.fail("block through the CLI");
  }

  for (ConstructType t : kAllConstructTypes) {
    for (std::size_t n : {4, 5, 6}) {
      if (construct_requires_even(t) && n % 2 != 0) continue;
      const std::string name(to_string(t));
      const fs::path file = dir / (name + ".json");
      const CliRun c = run_cli("construct --type " + name + " --n " + std::to_string(n) +
                                   " --seed 5 -o " + file.string(),
                               dir);
      const CliRun k = run_cli("classify " + file.string(), dir);
      if (c.code != 0 || k.code != 0 ||
          !nlohmann::json::parse(k.out)["spaces"][std::string(to_string(target_space(t)))].get<bool>()) {
        o.fail("closure for " + name + " at n=" + std::to_string(n));
      }
    }
  }

  std::ofstream(dir / "bad.csv") << "1,2\n3\n";
  std::ofstream(dir / "bad.json") << R"({"type": "mps", "n": 4, "params": {"a": [1, 1]}})";
  const std::pair<std::string, int> codes[] = {
      {"--help", 0},
      {"classify " + (dir / "bad.csv").string(), 2},
      {"construct --type p --n 5", 2},
      {"construct --params " + (dir / "bad.json").string(), 3},
      {"nonsense", 2},
  };
  for (const auto& [args, expected] : codes) {
    if (run_cli(args, dir).code != expected) o.fail("exit code of '" + args + "'");
  }
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3,
                                                criterion4, criterion5, criterion6,
                                                criterion7, criterion8, criterion9};
  int failures = 0;
  for (std::size_t k = 0; k < std::size(criteria); ++k) {
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k + 1 << ": " << (o.passed ? "PASS" : "FAIL");
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
    failures += !o.passed;
  }
  return failures == 0 ? 0 : 1;
}
