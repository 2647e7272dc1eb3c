#include "symalg/construct.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include <nlohmann/json.hpp>

#include "symalg/block.hpp"
#include "symalg/decompose.hpp"
#include "symalg/errors.hpp"
#include "symalg/io.hpp"

namespace symalg {

namespace {

const Scalar kRoot2 = Scalar::sqrt2();
const Scalar kHalf = Scalar(Rational(1, 2));

void need_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* where,
                const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DimensionError(std::string(where) + ": " + name + " must be " + std::to_string(rows) +
                         "x" + std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

void need_size(const Vector& v, std::size_t size, const char* where, const char* name) {
  if (v.size() != size) {
    throw DimensionError(std::string(where) + ": " + name + " must have length " +
                         std::to_string(size) + ", got " + std::to_string(v.size()));
  }
}

using NamedMatrices = std::initializer_list<std::pair<const Matrix*, const char*>>;
using NamedVectors = std::initializer_list<std::pair<const Vector*, const char*>>;

void need_square_blocks(NamedMatrices blocks, std::size_t nu, const char* where) {
  for (const auto& [m, name] : blocks) need_shape(*m, nu, nu, where, name);
}

void need_sizes(NamedVectors vectors, std::size_t nu, const char* where) {
  for (const auto& [v, name] : vectors) need_size(*v, nu, where, name);
}

void need(bool ok, const char* where, const std::string& what) {
  if (!ok) throw PreconditionError(std::string(where) + ": " + what);
}

void need_even(std::size_t n, const char* where) {
  if (n == 0 || n % 2 != 0) {
    throw DimensionError(std::string(where) + " needs positive even order, got " +
                         std::to_string(n));
  }
}

void need_positive(std::size_t n, const char* where) {
  if (n == 0) throw DimensionError(std::string(where) + " needs positive order");
}

Matrix from_odd(const Matrix& y, const Vector& v, const Matrix& vt, const Vector& y_row,
                const Scalar& alpha, const Vector& z_row, const Matrix& w, const Vector& x,
                const Matrix& z) {
  return from_block(BlockForm::odd(y, v, vt, y_row, alpha, z_row, w, x, z));
}

Matrix from_even(const Matrix& y, const Matrix& vt, const Matrix& w, const Matrix& z) {
  return from_block(BlockForm::even(y, vt, w, z));
}

Matrix scalar_matrix(const Scalar& s) { return Matrix{{s}}; }

// J_nu v = (-s) v, s the parity sign of nu.
bool is_antiparity(const Vector& v, std::size_t nu) {
  const int s = nu_sign(nu);
  for (std::size_t i = 0; i < nu; ++i) {
    if (v[nu - 1 - i] != Scalar(-s) * v[i]) return false;
  }
  return true;
}

Scalar sum(const Vector& v) { return dot(v, ones_vector(v.size())); }

}  // namespace

Matrix make_A(const Matrix& phi, const Matrix& psi, std::size_t n) {
  need_positive(n, "make_A");
  const std::size_t nu = n / 2;
  const std::size_t top = n - nu;
  need_shape(phi, nu, top, "make_A", "Phi");
  need_shape(psi, top, nu, "make_A", "Psi");
  Matrix c(n);
  c.set_block(0, top, psi);
  c.set_block(top, 0, phi);
  return from_block(BlockForm(std::move(c)));
}

Matrix make_B(const Matrix& upsilon, const Matrix& omega, std::size_t n) {
  need_positive(n, "make_B");
  const std::size_t nu = n / 2;
  const std::size_t top = n - nu;
  need_shape(upsilon, top, top, "make_B", "Upsilon");
  need_shape(omega, nu, nu, "make_B", "Omega");
  Matrix c(n);
  c.set_block(0, 0, upsilon);
  c.set_block(top, top, omega);
  return from_block(BlockForm(std::move(c)));
}

Matrix make_S(const SParams& p, std::size_t n) {
  need_positive(n, "make_S");
  if (n == 1) return scalar_matrix(p.w);
  const std::size_t nu = n / 2;
  need_square_blocks({{&p.Y, "Y"}, {&p.V, "V"}, {&p.W, "W"}, {&p.Z, "Z"}}, nu, "make_S");
  const Vector one = ones_vector(nu);
  if (n % 2 == 0) {
    need(is_member(p.Y, Space::S), "make_S", "Y must lie in S_" + std::to_string(nu));
    need((p.V * one).is_zero(), "make_S", "V 1 must be 0");
    need((p.W * one).is_zero(), "make_S", "W 1 must be 0");
    return from_even(p.Y, p.V.transpose(), p.W, p.Z);
  }
  const Matrix y = p.Y + (Scalar(2) * p.w) * ones_matrix(nu);
  const Vector v = kRoot2 * (p.w * one - p.Y * one);
  const Vector y_row = kRoot2 * (p.w * one - left_mul(one, p.Y));
  const Scalar alpha = p.w + Scalar(2) * bilinear(one, p.Y, one);
  const Vector z_row = -kRoot2 * (p.V * one);
  const Vector x = -kRoot2 * (p.W * one);
  return from_odd(y, v, p.V.transpose(), y_row, alpha, z_row, p.W, x, p.Z);
}

Matrix make_V(const VParams& p, std::size_t n) {
  need_positive(n, "make_V");
  const std::size_t nu = n / 2;
  if (nu == 0) throw DimensionError("make_V needs order at least 2");
  const Vector one = ones_vector(nu);
  if (n % 2 == 0) {
    need_shape(p.Y, nu, nu, "make_V", "Y");
    need_size(p.a, nu, "make_V", "a");
    need_size(p.b, nu, "make_V", "b");
    need(is_member(p.Y, Space::V), "make_V", "Y must lie in V_" + std::to_string(nu));
    return from_even(p.Y, outer(one, p.a), outer(p.b, one), Matrix(nu));
  }
  need_sizes({{&p.v, "v"}, {&p.x, "x"}, {&p.y, "y"}, {&p.z, "z"}}, nu, "make_V");
  const Scalar c = Scalar(static_cast<long>(2 * nu - 1)).inverse();
  const Scalar s = sum(p.v + p.y);
  const Matrix y =
      kRoot2 * (outer(p.v, one) + outer(one, p.y)) - (Scalar(2) * kRoot2 * c * s) * ones_matrix(nu);
  return from_odd(y, p.v, kRoot2 * outer(one, p.z), p.y, kRoot2 * c * s, p.z,
                  kRoot2 * outer(p.x, one), p.x, Matrix(nu));
}

Matrix make_N(const NParams& p, std::size_t n) {
  need_positive(n, "make_N");
  if (n == 1) return scalar_matrix(p.lambda);
  const std::size_t nu = n / 2;
  need_square_blocks({{&p.Y, "Y"}, {&p.V, "V"}, {&p.W, "W"}, {&p.Z, "Z"}}, nu, "make_N");
  const Vector sig = sigma_vector(nu);
  if (n % 2 == 0) {
    need(left_mul(sig, p.V).is_zero(), "make_N", "V^T sigma must be 0");
    need(left_mul(sig, p.W).is_zero(), "make_N", "W^T sigma must be 0");
    need(is_member(p.Z, Space::N), "make_N", "Z must lie in N_" + std::to_string(nu));
    return from_even(p.Y, p.V.transpose(), p.W, p.Z);
  }
  const Scalar s(nu_sign(nu));
  const Scalar lam = p.lambda / Scalar(static_cast<long>(n));
  const Matrix y = p.Y + (Scalar(2) * lam) * outer(sig, sig);
  const Vector v = (s * kRoot2) * (lam * sig - p.Y * sig);
  const Vector y_row = (s * kRoot2) * (lam * sig - left_mul(sig, p.Y));
  const Scalar alpha = lam + Scalar(2) * bilinear(sig, p.Y, sig);
  const Vector z_row = (-s * kRoot2) * (p.V * sig);
  const Vector x = (-s * kRoot2) * (p.W * sig);
  return from_odd(y, v, p.V.transpose(), y_row, alpha, z_row, p.W, x, p.Z);
}

Matrix make_M(const MParams& p, std::size_t n) {
  need_positive(n, "make_M");
  if (n == 1) return Matrix(1);
  const std::size_t nu = n / 2;
  const Vector sig = sigma_vector(nu);
  if (n % 2 == 0) {
    need_size(p.a, nu, "make_M", "a");
    need_size(p.b, nu, "make_M", "b");
    need_shape(p.Z, nu, nu, "make_M", "Z");
    need(is_member(p.Z, Space::M), "make_M", "Z must lie in M_" + std::to_string(nu));
    return from_even(Matrix(nu), outer(p.a, sig), outer(sig, p.b), p.Z);
  }
  need_sizes({{&p.v, "v"}, {&p.x, "x"}, {&p.y, "y"}, {&p.z, "z"}}, nu, "make_M");
  const Scalar s(nu_sign(nu));
  const Scalar c = Scalar(static_cast<long>(2 * nu - 1)).inverse();
  const Scalar t = dot(sig, p.v + p.y);
  const Matrix y = (s * kRoot2) * (outer(p.v, sig) + outer(sig, p.y)) -
                   (s * Scalar(2) * kRoot2 * c * t) * outer(sig, sig);
  return from_odd(y, p.v, (s * kRoot2) * outer(sig, p.z), p.y, s * kRoot2 * c * t, p.z,
                  (s * kRoot2) * outer(p.x, sig), p.x, Matrix(nu));
}

Matrix make_R(const RParams& p, std::size_t n) {
  need_positive(n, "make_R");
  if (n == 1) return scalar_matrix(p.gamma * Scalar::inv_sqrt2());
  const std::size_t nu = n / 2;
  need_size(p.x, nu, "make_R", "x");
  need_size(p.z, nu, "make_R", "z");
  need_shape(p.Z, nu, nu, "make_R", "Z");
  const Vector one = ones_vector(nu);
  if (n % 2 == 0) {
    return from_even(p.gamma * ones_matrix(nu), outer(one, p.z), outer(p.x, one), p.Z);
  }
  return from_odd((kRoot2 * p.gamma) * ones_matrix(nu), p.gamma * one, kRoot2 * outer(one, p.z),
                  p.gamma * one, p.gamma * Scalar::inv_sqrt2(), p.z, kRoot2 * outer(p.x, one),
                  p.x, p.Z);
}

Matrix make_P(const Matrix& a, const Matrix& b) {
  const std::size_t nu = a.rows();
  need_shape(a, nu, nu, "make_P", "A");
  need_shape(b, nu, nu, "make_P", "B");
  Matrix m(2 * nu);
  m.set_block(0, 0, a);
  m.set_block(0, nu, b);
  m.set_block(nu, 0, -b);
  m.set_block(nu, nu, -a);
  return m;
}

Matrix make_Q(const Matrix& a, const Matrix& b) {
  const std::size_t nu = a.rows();
  need_shape(a, nu, nu, "make_Q", "A");
  need_shape(b, nu, nu, "make_Q", "B");
  Matrix m(2 * nu);
  m.set_block(0, 0, a);
  m.set_block(0, nu, b);
  m.set_block(nu, 0, b);
  m.set_block(nu, nu, a);
  return m;
}

Matrix make_MPS_block(const Vector& a, const Vector& b, const Matrix& z, std::size_t n) {
  need_even(n, "make_MPS_block");
  const std::size_t nu = n / 2;
  need_size(a, nu, "make_MPS_block", "a");
  need_size(b, nu, "make_MPS_block", "b");
  need_shape(z, nu, nu, "make_MPS_block", "Z");
  const char* sign = nu_sign(nu) > 0 ? "J a = -a" : "J a = a";
  need(sum(a).is_zero(), "make_MPS_block", "a must be orthogonal to 1");
  need(sum(b).is_zero(), "make_MPS_block", "b must be orthogonal to 1");
  need(is_antiparity(a, nu), "make_MPS_block", std::string("a must satisfy ") + sign);
  need(is_antiparity(b, nu), "make_MPS_block",
       std::string("b must satisfy ") + (nu_sign(nu) > 0 ? "J b = -b" : "J b = b"));
  need(is_member(z, Space::A), "make_MPS_block", "Z must lie in A_" + std::to_string(nu));
  need(is_member(z, Space::M), "make_MPS_block", "Z must lie in M_" + std::to_string(nu));
  const Vector sig = sigma_vector(nu);
  return from_even(Matrix(nu), outer(a, sig), outer(sig, b), z);
}

namespace {

void check_mps_vector(const Vector& g, std::size_t nu, const char* name) {
  const bool nu_even = nu % 2 == 0;
  Scalar top_sum;
  for (std::size_t i = 0; i < nu; ++i) {
    const Scalar expect = nu_even ? -g[i] : g[i];
    need(g[i + nu] == expect, "make_MPS_vectors",
         std::string(name) + (nu_even ? " must have the form (g, -g)" : " must have the form (g, g)"));
    top_sum += g[i];
  }
  if (!nu_even) {
    need(top_sum.is_zero(), "make_MPS_vectors",
         std::string(name) + " = (g, g) needs g orthogonal to 1");
  }
}

}  // namespace

Matrix make_MPS_vectors(const Vector& gamma, const Vector& delta, std::size_t n) {
  need_even(n, "make_MPS_vectors");
  need_size(gamma, n, "make_MPS_vectors", "gamma");
  need_size(delta, n, "make_MPS_vectors", "delta");
  check_mps_vector(gamma, n / 2, "gamma");
  check_mps_vector(delta, n / 2, "delta");
  const Vector sig = sigma_vector(n);
  return outer(gamma, sig) + outer(sig, delta);
}

std::pair<Vector, Vector> extract_MPS_vectors(const Matrix& m) {
  const std::size_t n = m.n();
  need_even(n, "extract_MPS_vectors");
  need(is_member(m, Space::MPS), "extract_MPS_vectors", "matrix must lie in MPS_n");
  const Vector sig = sigma_vector(n);
  const Scalar inv_n = Scalar(static_cast<long>(n)).inverse();
  return {inv_n * (m * sig), inv_n * (m.transpose() * sig)};
}

Matrix make_NQS(const Matrix& y, const Matrix& z, const Matrix& v, const Matrix& w,
                std::size_t n) {
  need_even(n, "make_NQS");
  const std::size_t nu = n / 2;
  need_square_blocks({{&y, "Y"}, {&z, "Z"}, {&v, "V"}, {&w, "W"}}, nu, "make_NQS");
  const std::string order = std::to_string(nu);
  need(is_member(y, Space::BS), "make_NQS", "Y must lie in B_" + order + " and S_" + order);
  need(is_member(z, Space::B) && is_member(z, Space::N), "make_NQS",
       "Z must lie in B_" + order + " and N_" + order);
  const Vector one = ones_vector(nu);
  const Vector sig = sigma_vector(nu);
  for (const auto& [m, name] : NamedMatrices{{&v, "V"}, {&w, "W"}}) {
    need(is_member(*m, Space::A), "make_NQS", std::string(name) + " must lie in A_" + order);
    need((*m * one).is_zero(), "make_NQS", std::string(name) + " 1 must be 0");
    need(left_mul(sig, *m).is_zero(), "make_NQS", std::string(name) + "^T sigma must be 0");
  }
  return from_even(y, v.transpose(), w, z);
}

Matrix make_RV(const Vector& a, const Vector& b, std::size_t n, const Scalar& w) {
  need_positive(n, "make_RV");
  if (n == 1) return scalar_matrix(w);
  const std::size_t nu = n / 2;
  need_size(a, nu, "make_RV", "a");
  need_size(b, nu, "make_RV", "b");
  const Vector one = ones_vector(nu);
  const Matrix top = (Scalar(2) * w) * ones_matrix(nu);
  if (n % 2 == 0) return from_even(top, outer(one, a), outer(b, one), Matrix(nu));
  return from_odd(top, (kRoot2 * w) * one, kRoot2 * outer(one, a), (kRoot2 * w) * one, w, a,
                  kRoot2 * outer(b, one), b, Matrix(nu));
}

// ------------------------------------------------------------ generic layer

namespace {

struct TypeName {
  ConstructType type;
  std::string_view name;
  Space space;
};

constexpr std::array<TypeName, 12> kTypeNames = {{
    {ConstructType::a, "a", Space::A},
    {ConstructType::b, "b", Space::B},
    {ConstructType::s, "s", Space::S},
    {ConstructType::v, "v", Space::V},
    {ConstructType::n, "n", Space::N},
    {ConstructType::m, "m", Space::M},
    {ConstructType::r, "r", Space::R},
    {ConstructType::p, "p", Space::P},
    {ConstructType::q, "q", Space::Q},
    {ConstructType::mps, "mps", Space::MPS},
    {ConstructType::nqs, "nqs", Space::NQS},
    {ConstructType::rv, "rv", Space::RV},
}};

const TypeName& type_entry(ConstructType t) {
  for (const auto& e : kTypeNames) {
    if (e.type == t) return e;
  }
  throw ParseError("unknown construct type");
}

}  // namespace

std::string_view to_string(ConstructType t) { return type_entry(t).name; }

ConstructType parse_construct_type(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& e : kTypeNames) {
    if (e.name == key) return e.type;
  }
  throw ParseError("unknown construct type '" + std::string(name) + "'");
}

Space target_space(ConstructType t) { return type_entry(t).space; }

bool construct_requires_even(ConstructType t) { return requires_even_order(target_space(t)); }

namespace {

enum class Kind { scalar, vector, matrix };

// Admissible values of one parameter.
enum class Domain {
  free,
  S,               // S_k, recursive
  V,               // V_k, recursive
  N,               // N_k, recursive
  M,               // M_k, recursive
  row_sum_zero,    // X 1 = 0
  sigma_col_perp,  // X^T sigma = 0
  mps_vector,      // orthogonal to 1 with J a = -s a
  a_cap_m,         // A_k and M_k
  b_cap_s,         // B_k and S_k
  b_cap_n,         // B_k and N_k
  nqs_offdiag,     // A_k with X 1 = 0 and X^T sigma = 0
};

struct Slot {
  std::string name;
  Kind kind;
  std::size_t rows;
  std::size_t cols;
  Domain domain = Domain::free;
};

std::vector<Slot> layout(ConstructType t, std::size_t n) {
  const std::size_t nu = n / 2;
  const std::size_t top = n - nu;
  const bool even = n % 2 == 0;
  auto mat = [&](std::string name, Domain d = Domain::free) {
    return Slot{std::move(name), Kind::matrix, nu, nu, d};
  };
  auto vec = [&](std::string name, Domain d = Domain::free) {
    return Slot{std::move(name), Kind::vector, nu, 1, d};
  };
  auto sca = [](std::string name) { return Slot{std::move(name), Kind::scalar, 1, 1}; };
  switch (t) {
    case ConstructType::a:
      return {{"Phi", Kind::matrix, nu, top}, {"Psi", Kind::matrix, top, nu}};
    case ConstructType::b:
      return {{"Upsilon", Kind::matrix, top, top}, {"Omega", Kind::matrix, nu, nu}};
    case ConstructType::s:
      if (n == 1) return {sca("w")};
      if (even) {
        return {mat("Y", Domain::S), mat("V", Domain::row_sum_zero),
                mat("W", Domain::row_sum_zero), mat("Z")};
      }
      return {mat("Y"), mat("V"), mat("W"), mat("Z"), sca("w")};
    case ConstructType::v:
      if (even) return {mat("Y", Domain::V), vec("a"), vec("b")};
      return {vec("v"), vec("x"), vec("y"), vec("z")};
    case ConstructType::n:
      if (n == 1) return {sca("lambda")};
      if (even) {
        return {mat("Y"), mat("V", Domain::sigma_col_perp), mat("W", Domain::sigma_col_perp),
                mat("Z", Domain::N)};
      }
      return {mat("Y"), mat("V"), mat("W"), mat("Z"), sca("lambda")};
    case ConstructType::m:
      if (n == 1) return {};
      if (even) return {vec("a"), vec("b"), mat("Z", Domain::M)};
      return {vec("v"), vec("x"), vec("y"), vec("z")};
    case ConstructType::r:
      if (n == 1) return {sca("gamma")};
      return {sca("gamma"), vec("x"), vec("z"), mat("Z")};
    case ConstructType::p:
    case ConstructType::q:
      return {mat("A"), mat("B")};
    case ConstructType::mps:
      return {vec("a", Domain::mps_vector), vec("b", Domain::mps_vector),
              mat("Z", Domain::a_cap_m)};
    case ConstructType::nqs:
      return {mat("Y", Domain::b_cap_s), mat("Z", Domain::b_cap_n),
              mat("V", Domain::nqs_offdiag), mat("W", Domain::nqs_offdiag)};
    case ConstructType::rv:
      if (n == 1) return {};
      return {vec("a"), vec("b")};
  }
  return {};
}

void check_order(ConstructType t, std::size_t n) {
  if (n == 0) throw DimensionError("order must be positive");
  if (construct_requires_even(t) && n % 2 != 0) {
    throw DimensionError("type " + std::string(to_string(t)) + " needs even order, got " +
                         std::to_string(n));
  }
  if (t == ConstructType::v && n == 1) throw DimensionError("type v needs order at least 2");
}

const Field* find(const ConstructionParams& p, std::string_view name) {
  const auto it = p.fields.find(name);
  return it == p.fields.end() ? nullptr : &it->second;
}

Scalar get_scalar(const ConstructionParams& p, std::string_view name) {
  const Field* f = find(p, name);
  if (f == nullptr) return {};
  if (const auto* s = std::get_if<Scalar>(f)) return *s;
  throw ParseError("parameter '" + std::string(name) + "' must be a scalar");
}

Vector get_vector(const ConstructionParams& p, std::string_view name, std::size_t size) {
  const Field* f = find(p, name);
  if (f == nullptr) return Vector(size);
  if (const auto* v = std::get_if<Vector>(f)) return *v;
  throw ParseError("parameter '" + std::string(name) + "' must be a vector");
}

Matrix get_matrix(const ConstructionParams& p, std::string_view name, std::size_t rows,
                  std::size_t cols) {
  const Field* f = find(p, name);
  if (f == nullptr) return Matrix(rows, cols);
  if (const auto* m = std::get_if<Matrix>(f)) return *m;
  throw ParseError("parameter '" + std::string(name) + "' must be a matrix");
}

bool mps_vector_form(const ConstructionParams& p) {
  return find(p, "gamma") != nullptr || find(p, "delta") != nullptr;
}

}  // namespace

Matrix construct(const ConstructionParams& p) {
  const std::size_t n = p.n;
  check_order(p.type, n);
  const std::size_t nu = n / 2;
  const std::size_t top = n - nu;
  auto mat = [&](std::string_view name) { return get_matrix(p, name, nu, nu); };
  auto vec = [&](std::string_view name) { return get_vector(p, name, nu); };
  switch (p.type) {
    case ConstructType::a:
      return make_A(get_matrix(p, "Phi", nu, top), get_matrix(p, "Psi", top, nu), n);
    case ConstructType::b:
      return make_B(get_matrix(p, "Upsilon", top, top), mat("Omega"), n);
    case ConstructType::s:
      return make_S({mat("Y"), mat("V"), mat("W"), mat("Z"), get_scalar(p, "w")}, n);
    case ConstructType::v:
      return make_V({mat("Y"), vec("a"), vec("b"), vec("v"), vec("x"), vec("y"), vec("z")}, n);
    case ConstructType::n:
      return make_N({mat("Y"), mat("V"), mat("W"), mat("Z"), get_scalar(p, "lambda")}, n);
    case ConstructType::m:
      return make_M({vec("a"), vec("b"), mat("Z"), vec("v"), vec("x"), vec("y"), vec("z")}, n);
    case ConstructType::r:
      return make_R({get_scalar(p, "gamma"), vec("x"), vec("z"), mat("Z")}, n);
    case ConstructType::p:
      return make_P(mat("A"), mat("B"));
    case ConstructType::q:
      return make_Q(mat("A"), mat("B"));
    case ConstructType::mps:
      if (mps_vector_form(p)) {
        return make_MPS_vectors(get_vector(p, "gamma", n), get_vector(p, "delta", n), n);
      }
      return make_MPS_block(vec("a"), vec("b"), mat("Z"), n);
    case ConstructType::nqs:
      return make_NQS(mat("Y"), mat("Z"), mat("V"), mat("W"), n);
    case ConstructType::rv:
      return make_RV(vec("a"), vec("b"), n, get_scalar(p, "w"));
  }
  throw ParseError("unknown construct type");
}

// ------------------------------------------------------------ JSON

namespace {

nlohmann::json field_to_json(const Field& f) {
  if (const auto* s = std::get_if<Scalar>(&f)) return s->to_string();
  if (const auto* v = std::get_if<Vector>(&f)) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v->entries()) out.push_back(x.to_string());
    return out;
  }
  const auto& m = std::get<Matrix>(f);
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : m.row(i)) row.push_back(x.to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Field field_from_json(const nlohmann::json& j) {
  if (!j.is_array()) return scalar_from_json(j);
  if (!j.empty() && j.front().is_array()) return dense_from_json(j);
  return vector_from_json(j);
}

}  // namespace

ConstructionParams params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("parameter file must hold a JSON object");
  ConstructionParams p;
  if (!j.contains("type") || !j.at("type").is_string()) {
    throw ParseError("parameter file needs a \"type\" string");
  }
  p.type = parse_construct_type(j.at("type").get<std::string>());
  if (!j.contains("n") || !j.at("n").is_number_integer() || j.at("n").get<long>() <= 0) {
    throw ParseError("parameter file needs a positive integer \"n\"");
  }
  p.n = j.at("n").get<std::size_t>();
  if (j.contains("params")) {
    const auto& params = j.at("params");
    if (!params.is_object()) throw ParseError("\"params\" must be an object");
    for (const auto& [key, value] : params.items()) p.fields.emplace(key, field_from_json(value));
  }
  // Vector-valued fields of the MPS vector form are length n; a nu x nu
  // matrix with nu = 1 looks like a vector of rows, so the layout decides.
  for (const auto& slot : layout(p.type, p.n)) {
    auto it = p.fields.find(slot.name);
    if (it == p.fields.end()) continue;
    if (slot.kind == Kind::matrix && std::holds_alternative<Vector>(it->second)) {
      const auto& v = std::get<Vector>(it->second);
      if (v.size() != 0) {
        throw ParseError("parameter '" + slot.name + "' must be an array of rows");
      }
      it->second = Matrix(slot.rows, slot.cols);
    }
    if (slot.kind == Kind::vector && std::holds_alternative<Matrix>(it->second)) {
      throw ParseError("parameter '" + slot.name + "' must be a flat array");
    }
  }
  return p;
}

nlohmann::json params_to_json(const ConstructionParams& p) {
  nlohmann::json fields = nlohmann::json::object();
  for (const auto& [name, f] : p.fields) fields[name] = field_to_json(f);
  return {{"type", std::string(to_string(p.type))}, {"n", p.n}, {"params", std::move(fields)}};
}

// ------------------------------------------------------------ randomness

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Scalar random_scalar(Rng& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<int> coin(0, 3);
  const Rational a(num(rng), den(rng));
  if (coin(rng) != 0) return Scalar(a);
  return Scalar(a, Rational(num(rng), den(rng)));
}

Vector random_vector(std::size_t size, Rng& rng) {
  Vector v(size);
  for (std::size_t i = 0; i < size; ++i) v[i] = random_scalar(rng);
  return v;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng);
  }
  return m;
}

namespace {

Matrix project_A(const Matrix& m) { return split_BA(m).odd_part; }
Matrix project_B(const Matrix& m) { return split_BA(m).even_part; }

// Orthogonal projector onto the complement of y, applied on the left.
Matrix perp_left(const Vector& y, const Matrix& m) {
  return m - dot(y, y).inverse() * outer(y, left_mul(y, m));
}

Matrix project_matrix(Domain d, const Matrix& m) {
  const std::size_t k = m.rows();
  switch (d) {
    case Domain::row_sum_zero:
      return perp_left(ones_vector(k), m.transpose()).transpose();
    case Domain::sigma_col_perp:
      return perp_left(sigma_vector(k), m);
    case Domain::a_cap_m:
      return split_NM(project_A(m)).odd_part;
    case Domain::b_cap_s:
      return project_B(split_SV(m).even_part);
    case Domain::b_cap_n:
      return project_B(split_NM(m).even_part);
    case Domain::nqs_offdiag: {
      const Matrix a = perp_left(sigma_vector(k), project_A(m));
      return perp_left(ones_vector(k), a.transpose()).transpose();
    }
    default:
      return m;
  }
}

Vector project_vector(Domain d, const Vector& v) {
  if (d != Domain::mps_vector) return v;
  const std::size_t k = v.size();
  const Scalar s(nu_sign(k));
  Vector out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = kHalf * (v[i] - s * v[k - 1 - i]);
  const Scalar mean = sum(out) / Scalar(static_cast<long>(k));
  return out - mean * ones_vector(k);
}

std::optional<ConstructType> recursive_type(Domain d) {
  switch (d) {
    case Domain::S:
      return ConstructType::s;
    case Domain::V:
      return ConstructType::v;
    case Domain::N:
      return ConstructType::n;
    case Domain::M:
      return ConstructType::m;
    default:
      return std::nullopt;
  }
}

Field zero_field(const Slot& slot) {
  switch (slot.kind) {
    case Kind::scalar:
      return Scalar();
    case Kind::vector:
      return Vector(slot.rows);
    case Kind::matrix:
      break;
  }
  return Matrix(slot.rows, slot.cols);
}

Field draw(const Slot& slot, Rng& rng) {
  switch (slot.kind) {
    case Kind::scalar:
      return random_scalar(rng);
    case Kind::vector:
      return project_vector(slot.domain, random_vector(slot.rows, rng));
    case Kind::matrix:
      break;
  }
  if (const auto t = recursive_type(slot.domain)) {
    // V_1 = {0}; the other recursive spaces handle order 1 themselves.
    if (*t == ConstructType::v && slot.rows == 1) return Matrix(1);
    return random_member(*t, slot.rows, rng);
  }
  return project_matrix(slot.domain, random_matrix(slot.rows, slot.cols, rng));
}

std::vector<Field> spanning_values(const Slot& slot) {
  std::vector<Field> out;
  switch (slot.kind) {
    case Kind::scalar:
      out.emplace_back(Scalar(1));
      return out;
    case Kind::vector:
      for (std::size_t i = 0; i < slot.rows; ++i) {
        Vector e(slot.rows);
        e[i] = 1;
        out.emplace_back(project_vector(slot.domain, e));
      }
      return out;
    case Kind::matrix:
      break;
  }
  if (const auto t = recursive_type(slot.domain)) {
    if (*t == ConstructType::v && slot.rows == 1) return out;
    for (auto& m : spanning_outputs(*t, slot.rows)) out.emplace_back(std::move(m));
    return out;
  }
  for (std::size_t i = 0; i < slot.rows; ++i) {
    for (std::size_t j = 0; j < slot.cols; ++j) {
      Matrix e(slot.rows, slot.cols);
      e(i, j) = 1;
      out.emplace_back(project_matrix(slot.domain, e));
    }
  }
  return out;
}

}  // namespace

ConstructionParams random_params(ConstructType t, std::size_t n, Rng& rng) {
  check_order(t, n);
  ConstructionParams p{t, n, {}};
  for (const auto& slot : layout(t, n)) p.fields.emplace(slot.name, draw(slot, rng));
  return p;
}

Matrix random_member(ConstructType t, std::size_t n, Rng& rng) {
  return construct(random_params(t, n, rng));
}

std::vector<ConstructionParams> spanning_params(ConstructType t, std::size_t n) {
  check_order(t, n);
  const auto slots = layout(t, n);
  ConstructionParams zero{t, n, {}};
  for (const auto& slot : slots) zero.fields.emplace(slot.name, zero_field(slot));
  std::vector<ConstructionParams> out;
  for (const auto& slot : slots) {
    for (auto& value : spanning_values(slot)) {
      ConstructionParams p = zero;
      p.fields[slot.name] = std::move(value);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Matrix> spanning_outputs(ConstructType t, std::size_t n) {
  std::vector<Matrix> out;
  for (const auto& p : spanning_params(t, n)) out.push_back(construct(p));
  return out;
}

}  // namespace symalg
