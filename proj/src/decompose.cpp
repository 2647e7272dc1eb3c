#include "symalg/decompose.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "symalg/block.hpp"
#include "symalg/errors.hpp"

namespace symalg {

std::string_view to_string(SplitKind k) {
  switch (k) {
    case SplitKind::BA:
      return "ba";
    case SplitKind::SV:
      return "sv";
    case SplitKind::NM:
      return "nm";
    case SplitKind::QP:
      return "qp";
  }
  return "?";
}

SplitKind parse_split_kind(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (SplitKind k : {SplitKind::BA, SplitKind::SV, SplitKind::NM, SplitKind::QP}) {
    if (key == to_string(k)) return k;
  }
  throw ParseError("unknown split '" + std::string(name) + "'");
}

namespace {

const Scalar kHalf = Scalar(Rational(1, 2));

// Even part PMP + (I-P)M(I-P) and odd part PM(I-P) + (I-P)MP for the
// orthogonal projector P onto the line through y.
GradedPair projector_split(const Matrix& m, const Vector& y, SplitKind kind) {
  const std::size_t n = m.n();
  const Scalar s_inv = dot(y, y).inverse();
  Matrix p = s_inv * outer(y, y);
  Matrix q = identity_matrix(n) - p;
  const Matrix mp = m * p;
  const Matrix mq = m - mp;
  Matrix even = p * mp + q * mq;
  Matrix odd = p * mq + q * mp;
  return {kind, std::move(even), std::move(odd), std::nullopt};
}

}  // namespace

GradedPair split_BA(const Matrix& m) {
  const Matrix jmj = conjugate_J(m);
  return {SplitKind::BA, kHalf * (m + jmj), kHalf * (m - jmj), std::nullopt};
}

GradedPair split_SV(const Matrix& m) {
  const std::size_t n = m.n();
  GradedPair g = projector_split(m, ones_vector(n), SplitKind::SV);
  g.weight = m.total_sum() / Scalar(static_cast<long>(n * n));
  return g;
}

GradedPair split_NM(const Matrix& m) {
  return projector_split(m, sigma_vector(m.n()), SplitKind::NM);
}

GradedPair split_QP(const Matrix& m) {
  const std::size_t n = m.n();
  if (n % 2 != 0) throw DimensionError("Q/P split needs even order, got " + std::to_string(n));
  const std::size_t nu = n / 2;
  Matrix even(n), odd(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& shifted = m((i + nu) % n, (j + nu) % n);
      even(i, j) = kHalf * (m(i, j) + shifted);
      odd(i, j) = kHalf * (m(i, j) - shifted);
    }
  }
  return {SplitKind::QP, std::move(even), std::move(odd), std::nullopt};
}

GradedPair split(const Matrix& m, SplitKind kind) {
  switch (kind) {
    case SplitKind::BA:
      return split_BA(m);
    case SplitKind::SV:
      return split_SV(m);
    case SplitKind::NM:
      return split_NM(m);
    case SplitKind::QP:
      return split_QP(m);
  }
  throw ParseError("unknown split");
}

}  // namespace symalg
