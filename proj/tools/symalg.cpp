// symalg: classify, decompose, transform, construct and verify matrices with
// symmetry properties, in exact arithmetic over Q(sqrt 2).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symalg/block.hpp"
#include "symalg/construct.hpp"
#include "symalg/decompose.hpp"
#include "symalg/errors.hpp"
#include "symalg/io.hpp"
#include "symalg/predicates.hpp"
#include "symalg/verify.hpp"

using namespace symalg;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kInternal = 1, kInput = 2, kPrecondition = 3, kVerification = 4 };

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SYMALG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("SYMALG_SEED is not a number: ") + env);
    }
  }
  return 1;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::holds:
      return "holds";
    case Status::fails:
      return "fails";
    case Status::not_applicable:
      return "n/a";
  }
  return "?";
}

constexpr Space kReportSpaces[] = {Space::S,   Space::A,   Space::B,  Space::R,  Space::V,
                                   Space::M,   Space::N,   Space::P,  Space::Q,  Space::MPS,
                                   Space::NQS, Space::RV,  Space::AS, Space::BS, Space::RS};

json report_json(const SymmetryReport& r) {
  json props = json::object();
  for (Property p : kAllProperties) {
    const Verdict& v = r[p];
    json j{{"status", status_name(v.status)},
           {"route", v.route == Route::entrywise ? "entrywise" : "algebraic"}};
    if (v.weight) j[p == Property::N ? "lambda" : "w"] = v.weight->to_string();
    props[std::string(to_string(p))] = std::move(j);
  }
  json spaces = json::object();
  for (Space s : kReportSpaces) spaces[std::string(to_string(s))] = r.member(s);
  return {{"n", r.n}, {"properties", std::move(props)}, {"spaces", std::move(spaces)}};
}

std::string report_pretty(const SymmetryReport& r) {
  std::ostringstream out;
  out << "order " << r.n << "\n";
  for (Property p : kAllProperties) {
    const Verdict& v = r[p];
    out << "  (" << to_string(p) << ")  " << status_name(v.status);
    if (v.weight) out << (p == Property::N ? "  lambda = " : "  w = ") << v.weight->to_pretty();
    if (v.route == Route::algebraic) out << "  [algebraic]";
    out << "\n";
  }
  out << "member of:";
  bool any = false;
  for (Space s : kReportSpaces) {
    if (r.member(s)) {
      out << " " << to_string(s);
      any = true;
    }
  }
  out << (any ? "" : " none") << "\n";
  return out.str();
}

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string split;
  std::string even_path;
  std::string odd_path;
  std::string type;
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> weight;
  std::string params_path;
  std::string suite = "all";
  std::size_t n_max = 6;
  std::size_t trials = 200;
  std::string space;
  std::size_t cap = kDefaultDimensionCap;
};

int cmd_classify(const Options& o) {
  const SymmetryReport r = classify(read_matrix_file(o.input));
  const OutputFormat f = parse_output_format(o.format);
  emit(f == OutputFormat::pretty ? report_pretty(r) : report_json(r).dump(2) + "\n", o.output);
  return kOk;
}

int cmd_decompose(const Options& o) {
  const Matrix m = read_matrix_file(o.input);
  const GradedPair g = split(m, parse_split_kind(o.split));
  const OutputFormat f = parse_output_format(o.format);
  if (!o.even_path.empty() || !o.odd_path.empty()) {
    if (o.even_path.empty() || o.odd_path.empty()) {
      throw ParseError("--even and --odd must be given together");
    }
    write_matrix_file(o.even_path, g.even_part, f);
    write_matrix_file(o.odd_path, g.odd_part, f);
    return kOk;
  }
  if (f == OutputFormat::json) {
    json j{{"split", std::string(to_string(g.kind))},
           {"even", matrix_to_json(g.even_part)},
           {"odd", matrix_to_json(g.odd_part)}};
    if (g.weight) j["weight"] = g.weight->to_string();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "even\n" << format_matrix(g.even_part, f) << "odd\n" << format_matrix(g.odd_part, f);
  }
  return kOk;
}

int cmd_block(const Options& o) {
  const BlockForm b = to_block(read_matrix_file(o.input));
  emit(format_matrix(b.conjugate(), parse_output_format(o.format)), o.output);
  return kOk;
}

int cmd_construct(const Options& o) {
  ConstructionParams p;
  if (!o.params_path.empty()) {
    std::ifstream in(o.params_path);
    if (!in) throw ParseError("cannot read '" + o.params_path + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    p = params_from_json(j);
    if (!o.type.empty() && parse_construct_type(o.type) != p.type) {
      throw ParseError("--type disagrees with the parameter file");
    }
    if (o.n != 0 && o.n != p.n) throw ParseError("--n disagrees with the parameter file");
  } else {
    if (o.type.empty() || o.n == 0) throw ParseError("construct needs --type and --n, or --params");
    Rng rng = make_rng(o.seed.value_or(default_seed()), 0);
    p = random_params(parse_construct_type(o.type), o.n, rng);
  }
  if (o.weight) {
    const Scalar w = Scalar::parse(*o.weight);
    if (p.type == ConstructType::rv || (p.type == ConstructType::s && p.n % 2 == 1)) {
      p.fields["w"] = w;
    } else if (p.type == ConstructType::s) {
      // Even order: the weight is half that of Y, so shift Y by a multiple of E.
      auto it = p.fields.find("Y");
      const std::size_t nu = p.n / 2;
      Matrix y = it == p.fields.end() ? Matrix(nu) : std::get<Matrix>(it->second);
      const Verdict v = check_entrywise(y, Property::S);
      if (!v.holds()) throw PreconditionError("make_S: Y must lie in S_" + std::to_string(nu));
      y = y + (Scalar(2) * w - *v.weight) * ones_matrix(nu);
      p.fields["Y"] = std::move(y);
    } else {
      throw ParseError("--w applies to types s and rv only");
    }
  }
  emit(format_matrix(construct(p), parse_output_format(o.format)), o.output);
  return kOk;
}

int cmd_verify(const Options& o) {
  SuiteOptions s;
  s.n_max = o.n_max;
  s.trials = o.trials;
  s.seed = o.seed.value_or(default_seed());
  if (s.trials == 0) throw ParseError("--trials must be at least 1");
  const json report = run_suite(parse_suite(o.suite), s);
  emit(report.dump(2) + "\n", o.output);
  return report.at("passed").get<bool>() ? kOk : kVerification;
}

int cmd_dim(const Options& o) {
  const DimensionProbe p = dimension_probe(parse_space(o.space), o.n, o.cap);
  json j{{"space", std::string(to_string(p.space))},
         {"n", p.n},
         {"nullity", p.nullity},
         {"outputs_satisfy", p.outputs_satisfy},
         {"passed", p.passed()}};
  if (p.constructor_rank) j["constructor_rank"] = *p.constructor_rank;
  emit(j.dump(2) + "\n", o.output);
  return p.passed() ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact symmetry analysis of square matrices over Q(sqrt 2)"};
  app.require_subcommand(1);
  Options o;
  const auto formats = CLI::IsMember({"json", "csv", "pretty"});

  auto* classify_cmd = app.add_subcommand("classify", "Report the symmetry properties of a matrix");
  classify_cmd->add_option("input", o.input, "Matrix file (JSON or CSV)")->required();
  classify_cmd->add_option("--format", o.format, "json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));
  classify_cmd->add_option("-o,--output", o.output, "Write the report here");

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a matrix along a graded direct sum");
  decompose_cmd->add_option("input", o.input, "Matrix file")->required();
  decompose_cmd->add_option("--split", o.split, "ba, sv, nm or qp")
      ->required()
      ->check(CLI::IsMember({"ba", "sv", "nm", "qp"}, CLI::ignore_case));
  decompose_cmd->add_option("--even", o.even_path, "Output file for the even part");
  decompose_cmd->add_option("--odd", o.odd_path, "Output file for the odd part");
  decompose_cmd->add_option("--format", o.format, "Output format")->check(formats);

  auto* block_cmd = app.add_subcommand("block", "Print the block representation X M X");
  block_cmd->add_option("input", o.input, "Matrix file")->required();
  block_cmd->add_option("--format", o.format, "Output format")->check(formats);
  block_cmd->add_option("-o,--output", o.output, "Output file");

  auto* construct_cmd = app.add_subcommand("construct", "Build a member of a symmetry space");
  construct_cmd->add_option("--type", o.type, "a, b, s, v, n, m, r, p, q, mps, nqs or rv");
  construct_cmd->add_option("--n", o.n, "Order");
  construct_cmd->add_option("--seed", o.seed, "Random seed (default: SYMALG_SEED or 1)");
  construct_cmd->add_option("--w", o.weight, "Weight for types s and rv");
  construct_cmd->add_option("--params", o.params_path, "Explicit parameters (JSON)");
  construct_cmd->add_option("-o,--output", o.output, "Output file");
  construct_cmd->add_option("--format", o.format, "Output format")->check(formats);

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  verify_cmd->add_option("--suite", o.suite, "gradings, dimensions, ranks, lemmas or all")
      ->check(CLI::IsMember({"gradings", "dimensions", "ranks", "lemmas", "all"}));
  verify_cmd->add_option("--n-max", o.n_max, "Largest order")->check(CLI::Range(2, 12));
  verify_cmd->add_option("--trials", o.trials, "Random trials per check");
  verify_cmd->add_option("--seed", o.seed, "Random seed (default: SYMALG_SEED or 1)");
  verify_cmd->add_option("-o,--output", o.output, "Write the report here");

  auto* dim_cmd = app.add_subcommand("dim", "Dimension of a space against its constructor");
  dim_cmd->add_option("--space", o.space, "Space name (S, A, B, R, V, M, N, P, Q, MPS, ...)")
      ->required();
  dim_cmd->add_option("--n", o.n, "Order")->required();
  dim_cmd->add_option("--cap", o.cap, "Largest order allowed");
  dim_cmd->add_option("-o,--output", o.output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*decompose_cmd) return cmd_decompose(o);
    if (*block_cmd) return cmd_block(o);
    if (*construct_cmd) return cmd_construct(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*dim_cmd) return cmd_dim(o);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kVerification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
