#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "symalg/matrix.hpp"

namespace symalg {

/// The nine basic symmetry properties.
enum class Property { S, A, B, R, V, M, N, P, Q };

inline constexpr std::array<Property, 9> kAllProperties = {
    Property::S, Property::A, Property::B, Property::R, Property::V,
    Property::M, Property::N, Property::P, Property::Q};

std::string_view to_string(Property p);

enum class Status { holds, fails, not_applicable };

/// Which definition produced a verdict. Odd-order M and N have no entrywise
/// form in the library's sense, so their entrywise check reports the
/// algebraic definition instead.
enum class Route { entrywise, algebraic };

struct Verdict {
  Status status = Status::fails;
  /// Weight w for S, A, M, P (S: rows sum to n*w; A, P: pairs sum to 2w;
  /// M: 2x2 blocks sum to 4w). Eigenvalue lambda of sigma for N.
  std::optional<Scalar> weight;
  Route route = Route::entrywise;

  bool holds() const { return status == Status::holds; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Property as defined entry by entry. P and Q require even order
/// (DimensionError otherwise); M and N at odd order fall back to the
/// algebraic definition of the spaces M_n, N_n.
Verdict check_entrywise(const Matrix& m, Property p);

/// Property through its matrix-algebra characterisation (J conjugation,
/// rank-one projectors onto 1_n or sigma_n, eigenvector conditions, and the
/// half-period shift for P and Q). Defined for every order except P, Q at
/// odd order (DimensionError).
Verdict check_algebraic(const Matrix& m, Property p);

/// The literal cyclic-index definition of (M) or (N) at any order, with no
/// fallback. At odd order (M) holds only for the zero matrix.
Verdict check_literal(const Matrix& m, Property p);

/// Vector subspaces of n x n matrices recognised by the library.
enum class Space {
  S,              // semimagic, any weight
  A,              // associated, weight 0
  B,              // balanced
  R,              // row/column reverse
  V,              // vertex cross sum with total sum 0
  M,              // weightless (M); algebraic definition at odd order
  N,              // (N); algebraic definition at odd order
  P,              // strong pandiagonal, weight 0 (even order)
  Q,              // quartered (even order)
  MPS,            // M & P & S (even order)
  NQS,            // N & Q & S (even order)
  RV,             // R & V
  AS,             // A & S
  BS,             // B & S
  RS,             // R & S
  AV,             // A & V
  VertexCross,    // raw (V) without the total-sum condition
  ArraySum,       // literal (M) with any weight, any order
  Reversible,     // R & raw (V), any weight
  RComplement,    // (1+u)^T M (1+v) = 0 for J u = -u, J v = -v
};

std::string_view to_string(Space s);
/// Case-insensitive name lookup; throws ParseError.
Space parse_space(std::string_view name);
bool requires_even_order(Space s);

/// Membership through the predicates (entrywise route where it exists).
/// Spaces that need even order report false at odd order.
bool is_member(const Matrix& m, Space s);

/// Complement of R_n proposed by the block picture: (1+u)^T M (1+v) = 0 for
/// all u, v with J u = -u, J v = -v.
bool r_complement_membership(const Matrix& m);

struct SymmetryReport {
  std::size_t n = 0;
  std::array<Verdict, 9> verdicts{};

  const Verdict& operator[](Property p) const { return verdicts[static_cast<std::size_t>(p)]; }
  bool member(Space s) const;

  // Space flags.
  bool in_S = false, in_A = false, in_B = false, in_R = false, in_V = false;
  bool in_M = false, in_N = false, in_P = false, in_Q = false;
  // Composite flags (even-order ones are false at odd order).
  bool mps = false, nqs = false, rv = false, as = false, bs = false, rs = false;
};

/// Full report. Both routes are evaluated for every property where both are
/// defined; a disagreement throws InconsistencyError.
SymmetryReport classify(const Matrix& m);

}  // namespace symalg
