#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "symalg/matrix.hpp"
#include "symalg/predicates.hpp"

namespace symalg {

// Every constructor builds the block form C from its parameters and returns
// X_n C X_n. Shapes are checked first (DimensionError), then the parameter
// constraints (PreconditionError naming the constraint that failed).

/// Block form [[O, Psi], [Phi, O]]. Even n: both nu x nu. Odd n: Phi is
/// nu x (nu+1), Psi is (nu+1) x nu.
Matrix make_A(const Matrix& phi, const Matrix& psi, std::size_t n);

/// Block form diag(Upsilon, Omega). Odd n: Upsilon is (nu+1) x (nu+1).
Matrix make_B(const Matrix& upsilon, const Matrix& omega, std::size_t n);

/// Even n: Y in S_nu, V 1 = W 1 = 0, Z free; weight is half of Y's.
/// Odd n: Y, V, W, Z free and the weight is w.
struct SParams {
  Matrix Y, V, W, Z;
  Scalar w;
};
Matrix make_S(const SParams& p, std::size_t n);

/// Even n: Y in V_nu with a, b free. Odd n: v, x, y, z free.
struct VParams {
  Matrix Y;
  Vector a, b;
  Vector v, x, y, z;
};
Matrix make_V(const VParams& p, std::size_t n);

/// Even n: Y free, V^T sigma = W^T sigma = 0, Z in N_nu.
/// Odd n: Y, V, W, Z free; lambda is the eigenvalue of sigma.
struct NParams {
  Matrix Y, V, W, Z;
  Scalar lambda;
};
Matrix make_N(const NParams& p, std::size_t n);

/// Even n: a, b free and Z in M_nu. Odd n: v, x, y, z free.
struct MParams {
  Vector a, b;
  Matrix Z;
  Vector v, x, y, z;
};
Matrix make_M(const MParams& p, std::size_t n);

struct RParams {
  Scalar gamma;
  Vector x, z;
  Matrix Z;
};
Matrix make_R(const RParams& p, std::size_t n);

/// [[A, B], [-B, -A]], weightless (P) at order 2 nu.
Matrix make_P(const Matrix& a, const Matrix& b);
/// [[A, B], [B, A]].
Matrix make_Q(const Matrix& a, const Matrix& b);

/// Block form [[O, a sigma^T], [sigma b^T, Z]] at n = 2 nu, with a, b
/// orthogonal to 1_nu, J a = -s a, J b = -s b (s = nu_sign(nu)) and
/// Z in A_nu and M_nu.
Matrix make_MPS_block(const Vector& a, const Vector& b, const Matrix& z, std::size_t n);

/// gamma sigma^T + sigma delta^T. For even nu, gamma = (g, -g) and
/// delta = (d, -d); for odd nu, gamma = (g, g) and delta = (d, d) with
/// g, d orthogonal to 1_nu.
Matrix make_MPS_vectors(const Vector& gamma, const Vector& delta, std::size_t n);
/// (M sigma / n, M^T sigma / n); throws PreconditionError unless M is in MPS_n.
std::pair<Vector, Vector> extract_MPS_vectors(const Matrix& m);

/// Block form [[Y, V^T], [W, Z]] with Y in B and S, Z in B and N, and
/// V, W weightless in A with V 1 = W 1 = 0, V^T sigma = W^T sigma = 0.
Matrix make_NQS(const Matrix& y, const Matrix& z, const Matrix& v, const Matrix& w,
                std::size_t n);

/// Reversible square from a, b in K^nu; w = 0 gives a member of RV_n,
/// otherwise the result is that member plus w E_n.
Matrix make_RV(const Vector& a, const Vector& b, std::size_t n, const Scalar& w = Scalar());

// ------------------------------------------------------------ generic layer

enum class ConstructType { a, b, s, v, n, m, r, p, q, mps, nqs, rv };

inline constexpr std::array<ConstructType, 12> kAllConstructTypes = {
    ConstructType::a, ConstructType::b, ConstructType::s,   ConstructType::v,
    ConstructType::n, ConstructType::m, ConstructType::r,   ConstructType::p,
    ConstructType::q, ConstructType::mps, ConstructType::nqs, ConstructType::rv};

std::string_view to_string(ConstructType t);
/// Case-insensitive; throws ParseError.
ConstructType parse_construct_type(std::string_view name);
/// Space the constructor's outputs belong to.
Space target_space(ConstructType t);
bool construct_requires_even(ConstructType t);

using Field = std::variant<Scalar, Vector, Matrix>;

/// Named parameters for one constructor call. Missing fields are zero.
struct ConstructionParams {
  ConstructType type = ConstructType::a;
  std::size_t n = 0;
  std::map<std::string, Field, std::less<>> fields;
};

/// Builds the matrix the parameters describe. An "mps" parameter set with
/// "gamma" or "delta" uses the vector form, otherwise the block form.
Matrix construct(const ConstructionParams& p);

/// {"type": "s", "n": 5, "params": {"Y": [[...]], "w": "1/2", ...}}.
/// Scalars are strings or integers, vectors are arrays, matrices are arrays
/// of rows. Throws ParseError.
ConstructionParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const ConstructionParams& p);

using Rng = std::mt19937_64;

/// Independent stream for trial `stream` of a run seeded with `seed`.
Rng make_rng(std::uint64_t seed, std::uint64_t stream);

/// a + b sqrt2 with numerators in [-9, 9], small denominators and b = 0
/// three times out of four.
Scalar random_scalar(Rng& rng);
Vector random_vector(std::size_t size, Rng& rng);
Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Random admissible parameters. Constrained parameters come from recursive
/// construction at order nu (S, V, N, M) or from projecting random data
/// onto the constraint set.
ConstructionParams random_params(ConstructType t, std::size_t n, Rng& rng);
Matrix random_member(ConstructType t, std::size_t n, Rng& rng);

/// Parameter sets whose outputs span the constructor's image: each field
/// runs through a spanning set of its admissible values while the others
/// stay zero. The weight of rv is left at 0.
std::vector<ConstructionParams> spanning_params(ConstructType t, std::size_t n);
std::vector<Matrix> spanning_outputs(ConstructType t, std::size_t n);

}  // namespace symalg
