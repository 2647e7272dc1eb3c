#pragma once

#include <optional>
#include <string_view>

#include "symalg/matrix.hpp"

namespace symalg {

/// The four Z2-graded direct sums: B+A, S+V, N+M and (even order) Q+P.
enum class SplitKind { BA, SV, NM, QP };

std::string_view to_string(SplitKind k);
/// Case-insensitive; throws ParseError.
SplitKind parse_split_kind(std::string_view name);

struct GradedPair {
  SplitKind kind;
  Matrix even_part;  // in B_n, S_n, N_n or Q_n
  Matrix odd_part;   // in A_n, V_n, M_n or P_n
  /// SV only: weight of the even part, 1^T M 1 / n^2.
  std::optional<Scalar> weight;
};

GradedPair split_BA(const Matrix& m);
GradedPair split_SV(const Matrix& m);
GradedPair split_NM(const Matrix& m);
/// Throws DimensionError for odd n.
GradedPair split_QP(const Matrix& m);

GradedPair split(const Matrix& m, SplitKind kind);

}  // namespace symalg
