#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "symalg/construct.hpp"
#include "symalg/matrix.hpp"
#include "symalg/predicates.hpp"

namespace symalg {

/// A space written as linear equations in the n^2 entries (row-major), with
/// its solution space computed by exact elimination. Serves as an oracle
/// that shares no code with the predicates.
class ConstraintSystem {
 public:
  /// One equation: sum of coefficient * entry over (row-major index, coefficient).
  using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

  ConstraintSystem(Space space, std::size_t n, Route route, std::vector<SparseRow> equations);

  Space space() const { return space_; }
  std::size_t n() const { return n_; }
  Route route() const { return route_; }
  std::size_t rank() const { return rows_.rank(); }
  std::size_t nullity() const { return n_ * n_ - rows_.rank(); }
  const RowSpace& rows() const { return rows_; }
  const std::vector<SparseRow>& equations() const { return equations_; }

  /// Solution space basis as n x n matrices.
  const std::vector<Matrix>& basis() const { return basis_; }
  /// Every equation holds at m.
  bool satisfied_by(const Matrix& m) const;
  /// Random combination of the basis with coefficients from random_scalar.
  Matrix random_member(Rng& rng) const;

 private:
  Space space_;
  std::size_t n_;
  Route route_;
  std::vector<SparseRow> equations_;
  RowSpace rows_;
  std::vector<Matrix> basis_;
};

/// Equations of a space. The entrywise route is available for every space
/// at every order; for M it is the literal cyclic definition with weight 0,
/// which at odd order has only the zero solution. The algebraic route
/// exists for M and N and is the default for them at odd order. Throws
/// DimensionError for even-only spaces at odd order.
ConstraintSystem build_constraints(Space space, std::size_t n,
                                   std::optional<Route> route = std::nullopt);

inline constexpr std::size_t kDefaultDimensionCap = 10;

struct DimensionProbe {
  Space space;
  std::size_t n = 0;
  std::size_t nullity = 0;
  /// Rank of the vectorized constructor outputs over a parameter basis;
  /// empty when the space has no constructor.
  std::optional<std::size_t> constructor_rank;
  /// Every constructor output satisfies the equations.
  bool outputs_satisfy = true;
  bool passed() const {
    return outputs_satisfy && (!constructor_rank || *constructor_rank == nullity);
  }
};

std::optional<ConstructType> constructor_for(Space space);

/// Throws DimensionError when n exceeds the cap.
DimensionProbe dimension_probe(Space space, std::size_t n,
                               std::size_t cap = kDefaultDimensionCap);

enum class GradingPair { BA, QP, SV, NM, RClosure, NQS_MPS, BS_RV };

inline constexpr std::array<GradingPair, 7> kAllGradingPairs = {
    GradingPair::BA, GradingPair::QP,      GradingPair::SV,   GradingPair::NM,
    GradingPair::RClosure, GradingPair::NQS_MPS, GradingPair::BS_RV};

std::string_view to_string(GradingPair p);
GradingPair parse_grading_pair(std::string_view name);
/// Even and odd spaces of the pair; RClosure has R for both.
std::pair<Space, Space> grading_spaces(GradingPair p);
bool grading_requires_even(GradingPair p);

struct GradingWitness {
  std::string law;
  std::size_t trial = 0;
  Matrix left, right, product;
};

struct GradingCheckResult {
  GradingPair pair;
  std::size_t n = 0;
  std::size_t trials = 0;
  /// Law name ("even*even in even" and so on) with its trial count.
  std::vector<std::pair<std::string, std::size_t>> laws;
  std::size_t failures = 0;
  std::vector<GradingWitness> witnesses;  // at most a few
  bool passed() const { return failures == 0; }
};

/// Draws members from the oracle bases, multiplies them and checks each
/// product law of the pair with the predicates.
GradingCheckResult grading_check(GradingPair pair, std::size_t n, std::size_t trials,
                                 std::uint64_t seed);

/// Admissible MPS vector: (g, -g) for even nu, (g, g) with g orthogonal to
/// 1_nu for odd nu.
Vector random_mps_vector(std::size_t n, Rng& rng);

/// M1 M2 M3 = n ((d2.g3) g1 ; (d1.g2) d3) in the vector parametrisation.
bool mps_triple_product_check(const Vector& g1, const Vector& d1, const Vector& g2,
                              const Vector& d2, const Vector& g3, const Vector& d3,
                              std::size_t n);

struct ParasymmetryResult {
  bool square_formula = false;  // M^2 = n g d^T + (d.g) sigma sigma^T
  bool symmetric_square = false;
  bool dependent = false;
  bool passed() const { return square_formula && symmetric_square == dependent; }
};

ParasymmetryResult parasymmetry_check(const Vector& gamma, const Vector& delta, std::size_t n);

enum class RankFamily {
  mps,            // weightless most perfect squares, bound 2 (attained)
  mps_weighted,   // plus w E_n, bound 3
  reversible,     // raw R and vertex cross, bound 2
  vertex_cross,   // V_n, bound 7
};

std::string_view to_string(RankFamily f);
std::size_t rank_bound(RankFamily f);

struct RankBoundResult {
  RankFamily family;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t bound = 0;
  std::size_t max_rank = 0;
  /// Only checked for the weightless MPS family.
  std::optional<bool> attained;
  bool passed() const { return max_rank <= bound && attained.value_or(true); }
};

RankBoundResult rank_bound_check(RankFamily family, std::size_t n, std::size_t trials,
                                 std::uint64_t seed);

struct ReversibleResult {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

/// Random raw R-and-vertex-cross members all have (A) with some weight.
ReversibleResult reversible_implies_A_check(std::size_t n, std::size_t trials,
                                            std::uint64_t seed);

/// RV_n = A_n and V_n: every make_RV output satisfies the AV equations and
/// every AV basis element lies in the span of make_RV outputs.
bool rv_equals_av_check(std::size_t n);

/// The proposed complement of R_n meets R_n only in 0 and the two
/// dimensions add up to n^2.
bool r_complement_check(std::size_t n);

struct AgreementResult {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t disagreements = 0;
  std::vector<std::string> notes;  // first few disagreements
  bool passed() const { return disagreements == 0; }
};

/// For every space at order n: oracle basis elements pass the predicate,
/// predicate-passing samples satisfy the oracle equations, and the two
/// predicate routes agree on random matrices and random members.
AgreementResult oracle_agreement_check(std::size_t n, std::size_t trials, std::uint64_t seed);

enum class Suite { gradings, dimensions, ranks, lemmas, all };

Suite parse_suite(std::string_view name);

struct SuiteOptions {
  std::size_t n_max = 6;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
};

/// {"suite": ..., "passed": bool, "checks": [{"name", "n", "passed", ...}]}.
nlohmann::json run_suite(Suite suite, const SuiteOptions& options);

}  // namespace symalg
