#include "symalg/predicates.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "symalg/errors.hpp"

namespace symalg {

std::string_view to_string(Property p) {
  static constexpr std::array<std::string_view, 9> names = {"S", "A", "B", "R", "V",
                                                            "M", "N", "P", "Q"};
  return names[static_cast<std::size_t>(p)];
}

namespace {

Verdict holds_with(std::optional<Scalar> w, Route route = Route::entrywise) {
  return {Status::holds, std::move(w), route};
}

Verdict fails(Route route = Route::entrywise) { return {Status::fails, std::nullopt, route}; }

Verdict from_bool(bool ok, std::optional<Scalar> w = std::nullopt, Route route = Route::entrywise) {
  return ok ? holds_with(std::move(w), route) : fails(route);
}

void require_even(std::size_t n, Property p) {
  if (n % 2 != 0) {
    throw DimensionError("property " + std::string(to_string(p)) + " needs even order, got " +
                         std::to_string(n));
  }
}

int alt(std::size_t i) { return i % 2 == 0 ? 1 : -1; }

// ---------------------------------------------------------------- entrywise

Verdict entrywise_S(const Matrix& m) {
  const std::size_t n = m.n();
  auto row_sum = [&](std::size_t i) {
    Scalar s;
    for (std::size_t j = 0; j < n; ++j) s += m(i, j);
    return s;
  };
  auto col_sum = [&](std::size_t j) {
    Scalar s;
    for (std::size_t i = 0; i < n; ++i) s += m(i, j);
    return s;
  };
  const Scalar target = row_sum(0);
  for (std::size_t i = 0; i < n; ++i) {
    if (row_sum(i) != target || col_sum(i) != target) return fails();
  }
  return holds_with(target / Scalar(static_cast<long>(n)));
}

Verdict entrywise_A(const Matrix& m) {
  const std::size_t n = m.n();
  const Scalar twice = m(0, 0) + m(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) + m(n - 1 - i, n - 1 - j) != twice) return fails();
    }
  }
  return holds_with(twice / Scalar(2));
}

Verdict entrywise_B(const Matrix& m) {
  const std::size_t n = m.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != m(n - 1 - i, n - 1 - j)) return fails();
    }
  }
  return holds_with(std::nullopt);
}

// Mirror-pair sums are constant along each row and along each column.
Verdict entrywise_R(const Matrix& m) {
  const std::size_t n = m.n();
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar row_ref = m(i, 0) + m(i, n - 1);
    const Scalar col_ref = m(0, i) + m(n - 1, i);
    for (std::size_t k = 1; k < n; ++k) {
      if (m(i, k) + m(i, n - 1 - k) != row_ref) return fails();
      if (m(k, i) + m(n - 1 - k, i) != col_ref) return fails();
    }
  }
  return holds_with(std::nullopt);
}

// Adjacent 2x2 cross differences span all vertex-cross conditions.
Verdict entrywise_V(const Matrix& m) {
  const std::size_t n = m.n();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(j, k) + m(j + 1, k + 1) != m(j, k + 1) + m(j + 1, k)) return fails();
    }
  }
  return holds_with(std::nullopt);
}

Verdict literal_M(const Matrix& m) {
  const std::size_t n = m.n();
  auto quad = [&](std::size_t i, std::size_t j) {
    const std::size_t i1 = (i + 1) % n;
    const std::size_t j1 = (j + 1) % n;
    return m(i, j) + m(i, j1) + m(i1, j) + m(i1, j1);
  };
  const Scalar four_w = quad(0, 0);
  Scalar alternating;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (quad(i, j) != four_w) return fails();
      if (alt(i + j) > 0) {
        alternating += m(i, j);
      } else {
        alternating -= m(i, j);
      }
    }
  }
  if (!alternating.is_zero()) return fails();
  return holds_with(four_w / Scalar(4));
}

Verdict literal_N(const Matrix& m) {
  const std::size_t n = m.n();
  std::vector<Scalar> col(n), row(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (alt(i) > 0) {
        col[j] += m(i, j);
        row[j] += m(j, i);
      } else {
        col[j] -= m(i, j);
        row[j] -= m(j, i);
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t j1 = (j + 1) % n;
    if (!(col[j] + col[j1]).is_zero() || !(row[j] + row[j1]).is_zero()) return fails();
  }
  return holds_with(row[0]);
}

Verdict entrywise_P(const Matrix& m) {
  const std::size_t n = m.n();
  require_even(n, Property::P);
  const std::size_t nu = n / 2;
  const Scalar twice = m(0, 0) + m(nu, nu);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) + m((i + nu) % n, (j + nu) % n) != twice) return fails();
    }
  }
  return holds_with(twice / Scalar(2));
}

Verdict entrywise_Q(const Matrix& m) {
  const std::size_t n = m.n();
  require_even(n, Property::Q);
  const std::size_t nu = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != m((i + nu) % n, (j + nu) % n)) return fails();
    }
  }
  return holds_with(std::nullopt);
}

// ---------------------------------------------------------------- algebraic

// (I - P) M (I - P) with P = y y^T / (y^T y), expanded as rank-one updates.
Matrix compress(const Matrix& m, const Vector& y) {
  const Scalar s_inv = dot(y, y).inverse();
  const Vector my = m * y;
  const Vector ym = left_mul(y, m);
  const Scalar q = dot(y, my);
  Matrix c = m - s_inv * outer(y, ym) - s_inv * outer(my, y);
  return c + (q * s_inv * s_inv) * outer(y, y);
}

// Some lambda with M y = lambda y and M^T y = lambda y.
std::optional<Scalar> common_eigenvalue(const Matrix& m, const Vector& y) {
  const Vector my = m * y;
  const Vector mty = m.transpose() * y;
  const Scalar lambda = dot(y, my) / dot(y, y);
  if (my != lambda * y || mty != lambda * y) return std::nullopt;
  return lambda;
}

// Half-period cyclic shift: (K M K^T)(i, j) = M(i + nu, j + nu).
Matrix half_shift(std::size_t n) {
  Matrix k(n);
  for (std::size_t i = 0; i < n; ++i) k(i, (i + n / 2) % n) = 1;
  return k;
}

// Basis e_j - e_{j+1} of the complement of 1_n.
std::vector<Vector> difference_basis(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    Vector u(n);
    u[j] = 1;
    u[j + 1] = -1;
    out.push_back(std::move(u));
  }
  return out;
}

Verdict algebraic_S(const Matrix& m) {
  const std::size_t n = m.n();
  const auto lambda = common_eigenvalue(m, ones_vector(n));
  if (!lambda) return fails(Route::algebraic);
  return holds_with(*lambda / Scalar(static_cast<long>(n)), Route::algebraic);
}

Verdict algebraic_A(const Matrix& m) {
  const Matrix j = exchange_matrix(m.n());
  const Matrix sum = m + j * m * j;
  const Scalar c = sum(0, 0);
  if (sum != c * ones_matrix(m.n())) return fails(Route::algebraic);
  return holds_with(c / Scalar(2), Route::algebraic);
}

Verdict algebraic_B(const Matrix& m) {
  const Matrix j = exchange_matrix(m.n());
  return from_bool(m == j * m * j, std::nullopt, Route::algebraic);
}

Verdict algebraic_R(const Matrix& m) {
  const Matrix j = exchange_matrix(m.n());
  const Matrix mt = m.transpose();
  const Matrix rows = m + m * j;
  const Matrix cols = mt + mt * j;
  for (const auto& u : difference_basis(m.n())) {
    if (!(rows * u).is_zero() || !(cols * u).is_zero()) return fails(Route::algebraic);
  }
  return holds_with(std::nullopt, Route::algebraic);
}

Verdict algebraic_V(const Matrix& m) {
  return from_bool(compress(m, ones_vector(m.n())).is_zero(), std::nullopt, Route::algebraic);
}

Verdict algebraic_M(const Matrix& m) {
  const std::size_t n = m.n();
  const Vector sigma = sigma_vector(n);
  const Matrix c = compress(m, sigma);
  if (!bilinear(sigma, m, sigma).is_zero()) return fails(Route::algebraic);
  if (n % 2 == 1) return from_bool(c.is_zero(), Scalar(0), Route::algebraic);
  // Even order: the compression of w E_n is w E_n itself.
  const Scalar w = c(0, 0);
  return from_bool(c == w * ones_matrix(n), w, Route::algebraic);
}

Verdict algebraic_N(const Matrix& m) {
  const auto lambda = common_eigenvalue(m, sigma_vector(m.n()));
  if (!lambda) return fails(Route::algebraic);
  return holds_with(*lambda, Route::algebraic);
}

Verdict algebraic_P(const Matrix& m) {
  require_even(m.n(), Property::P);
  const Matrix k = half_shift(m.n());
  const Matrix sum = m + k * m * k.transpose();
  const Scalar c = sum(0, 0);
  if (sum != c * ones_matrix(m.n())) return fails(Route::algebraic);
  return holds_with(c / Scalar(2), Route::algebraic);
}

Verdict algebraic_Q(const Matrix& m) {
  require_even(m.n(), Property::Q);
  const Matrix k = half_shift(m.n());
  return from_bool(m == k * m * k.transpose(), std::nullopt, Route::algebraic);
}

}  // namespace

Verdict check_entrywise(const Matrix& m, Property p) {
  const std::size_t n = m.n();
  switch (p) {
    case Property::S:
      return entrywise_S(m);
    case Property::A:
      return entrywise_A(m);
    case Property::B:
      return entrywise_B(m);
    case Property::R:
      return entrywise_R(m);
    case Property::V:
      return entrywise_V(m);
    case Property::M:
      if (n % 2 == 1) return algebraic_M(m);
      {
        Verdict v = literal_M(m);
        return v;
      }
    case Property::N:
      if (n % 2 == 1) return algebraic_N(m);
      return literal_N(m);
    case Property::P:
      return entrywise_P(m);
    case Property::Q:
      return entrywise_Q(m);
  }
  return fails();
}

Verdict check_algebraic(const Matrix& m, Property p) {
  m.n();
  switch (p) {
    case Property::S:
      return algebraic_S(m);
    case Property::A:
      return algebraic_A(m);
    case Property::B:
      return algebraic_B(m);
    case Property::R:
      return algebraic_R(m);
    case Property::V:
      return algebraic_V(m);
    case Property::M:
      return algebraic_M(m);
    case Property::N:
      return algebraic_N(m);
    case Property::P:
      return algebraic_P(m);
    case Property::Q:
      return algebraic_Q(m);
  }
  return fails(Route::algebraic);
}

Verdict check_literal(const Matrix& m, Property p) {
  m.n();
  switch (p) {
    case Property::M:
      return literal_M(m);
    case Property::N:
      return literal_N(m);
    default:
      return check_entrywise(m, p);
  }
}

// ---------------------------------------------------------------- spaces

namespace {

struct SpaceName {
  Space space;
  std::string_view name;
};

constexpr std::array<SpaceName, 20> kSpaceNames = {{
    {Space::S, "S"},
    {Space::A, "A"},
    {Space::B, "B"},
    {Space::R, "R"},
    {Space::V, "V"},
    {Space::M, "M"},
    {Space::N, "N"},
    {Space::P, "P"},
    {Space::Q, "Q"},
    {Space::MPS, "MPS"},
    {Space::NQS, "NQS"},
    {Space::RV, "RV"},
    {Space::AS, "AS"},
    {Space::BS, "BS"},
    {Space::RS, "RS"},
    {Space::AV, "AV"},
    {Space::VertexCross, "VertexCross"},
    {Space::ArraySum, "ArraySum"},
    {Space::Reversible, "Reversible"},
    {Space::RComplement, "RComplement"},
}};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool weightless(const Verdict& v) { return v.holds() && v.weight && v.weight->is_zero(); }

}  // namespace

std::string_view to_string(Space s) {
  for (const auto& e : kSpaceNames) {
    if (e.space == s) return e.name;
  }
  return "?";
}

Space parse_space(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& e : kSpaceNames) {
    if (lower(e.name) == key) return e.space;
  }
  throw ParseError("unknown space '" + std::string(name) + "'");
}

bool requires_even_order(Space s) {
  return s == Space::P || s == Space::Q || s == Space::MPS || s == Space::NQS;
}

bool r_complement_membership(const Matrix& m) {
  const std::size_t n = m.n();
  std::vector<Vector> probes{ones_vector(n)};
  for (std::size_t i = 0; i < n / 2; ++i) {
    Vector u(n);
    u[i] = 1;
    u[n - 1 - i] = -1;
    probes.push_back(std::move(u));
  }
  // (1+u)^T M (1+v) = 0 for all antisymmetric u, v, split into its
  // homogeneous parts: 1^T M 1, u^T M 1, 1^T M v and u^T M v.
  for (std::size_t a = 0; a < probes.size(); ++a) {
    const Vector mv = m * probes[a];
    for (std::size_t b = 0; b < probes.size(); ++b) {
      if (!dot(probes[b], mv).is_zero()) return false;
    }
  }
  return true;
}

bool is_member(const Matrix& m, Space s) {
  const std::size_t n = m.n();
  const bool even = n % 2 == 0;
  if (requires_even_order(s) && !even) return false;
  auto in = [&](Space t) { return is_member(m, t); };
  switch (s) {
    case Space::S:
      return check_entrywise(m, Property::S).holds();
    case Space::A:
      return weightless(check_entrywise(m, Property::A));
    case Space::B:
      return check_entrywise(m, Property::B).holds();
    case Space::R:
      return check_entrywise(m, Property::R).holds();
    case Space::V:
      return check_entrywise(m, Property::V).holds() && m.total_sum().is_zero();
    case Space::M:
      return weightless(check_entrywise(m, Property::M));
    case Space::N:
      return check_entrywise(m, Property::N).holds();
    case Space::P:
      return weightless(check_entrywise(m, Property::P));
    case Space::Q:
      return check_entrywise(m, Property::Q).holds();
    case Space::MPS:
      return in(Space::M) && in(Space::P) && in(Space::S);
    case Space::NQS:
      return in(Space::N) && in(Space::Q) && in(Space::S);
    case Space::RV:
      return in(Space::R) && in(Space::V);
    case Space::AS:
      return in(Space::A) && in(Space::S);
    case Space::BS:
      return in(Space::B) && in(Space::S);
    case Space::RS:
      return in(Space::R) && in(Space::S);
    case Space::AV:
      return in(Space::A) && in(Space::V);
    case Space::VertexCross:
      return check_entrywise(m, Property::V).holds();
    case Space::ArraySum:
      return check_literal(m, Property::M).holds();
    case Space::Reversible:
      return in(Space::R) && in(Space::VertexCross);
    case Space::RComplement:
      return r_complement_membership(m);
  }
  return false;
}

bool SymmetryReport::member(Space s) const {
  switch (s) {
    case Space::S:
      return in_S;
    case Space::A:
      return in_A;
    case Space::B:
      return in_B;
    case Space::R:
      return in_R;
    case Space::V:
      return in_V;
    case Space::M:
      return in_M;
    case Space::N:
      return in_N;
    case Space::P:
      return in_P;
    case Space::Q:
      return in_Q;
    case Space::MPS:
      return mps;
    case Space::NQS:
      return nqs;
    case Space::RV:
      return rv;
    case Space::AS:
      return as;
    case Space::BS:
      return bs;
    case Space::RS:
      return rs;
    case Space::AV:
      return in_A && in_V;
    case Space::VertexCross:
      return (*this)[Property::V].holds();
    case Space::ArraySum:
    case Space::Reversible:
    case Space::RComplement:
      break;
  }
  throw ParseError("space " + std::string(to_string(s)) + " is not part of the report");
}

SymmetryReport classify(const Matrix& m) {
  SymmetryReport r;
  r.n = m.n();
  const bool even = r.n % 2 == 0;
  for (Property p : kAllProperties) {
    auto& slot = r.verdicts[static_cast<std::size_t>(p)];
    if (!even && (p == Property::P || p == Property::Q)) {
      slot = {Status::not_applicable, std::nullopt, Route::entrywise};
      continue;
    }
    const Verdict e = check_entrywise(m, p);
    const Verdict a = check_algebraic(m, p);
    if (e.status != a.status || e.weight != a.weight) {
      throw InconsistencyError("entrywise and algebraic checks disagree on property " +
                               std::string(to_string(p)));
    }
    slot = e;
  }
  r.in_S = r[Property::S].holds();
  r.in_A = weightless(r[Property::A]);
  r.in_B = r[Property::B].holds();
  r.in_R = r[Property::R].holds();
  r.in_V = r[Property::V].holds() && m.total_sum().is_zero();
  r.in_M = weightless(r[Property::M]);
  r.in_N = r[Property::N].holds();
  r.in_P = even && weightless(r[Property::P]);
  r.in_Q = even && r[Property::Q].holds();
  r.mps = r.in_M && r.in_P && r.in_S;
  r.nqs = r.in_N && r.in_Q && r.in_S;
  r.rv = r.in_R && r.in_V;
  r.as = r.in_A && r.in_S;
  r.bs = r.in_B && r.in_S;
  r.rs = r.in_R && r.in_S;
  return r;
}

}  // namespace symalg
