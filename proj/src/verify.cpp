#include "symalg/verify.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "symalg/decompose.hpp"
#include "symalg/errors.hpp"
#include "symalg/io.hpp"

namespace symalg {

namespace {

// One linear equation in the entries of an n x n matrix, kept sparse.
struct Equation {
  std::vector<std::pair<std::size_t, Scalar>> terms;
};

class EquationSet {
 public:
  explicit EquationSet(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  std::size_t at(std::size_t i, std::size_t j) const { return (i % n_) * n_ + (j % n_); }

  void add(Equation e) {
    // Merge repeated coordinates so the stored equation is canonical.
    std::sort(e.terms.begin(), e.terms.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    Equation merged;
    for (auto& [k, c] : e.terms) {
      if (!merged.terms.empty() && merged.terms.back().first == k) {
        merged.terms.back().second += c;
      } else {
        merged.terms.emplace_back(k, std::move(c));
      }
    }
    std::erase_if(merged.terms, [](const auto& t) { return t.second.is_zero(); });
    if (!merged.terms.empty()) equations_.push_back(std::move(merged));
  }

  void append(const EquationSet& other) {
    equations_.insert(equations_.end(), other.equations_.begin(), other.equations_.end());
  }

  const std::vector<Equation>& equations() const { return equations_; }

 private:
  std::size_t n_;
  std::vector<Equation> equations_;
};

int alt(std::size_t i) { return i % 2 == 0 ? 1 : -1; }

// ------------------------------------------------------------ definitions

// All row and column sums equal the first row sum.
EquationSet eq_S(std::size_t n) {
  EquationSet out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (int col = 0; col < 2; ++col) {
      if (r == 0 && col == 0) continue;
      Equation e;
      for (std::size_t k = 0; k < n; ++k) {
        e.terms.emplace_back(col ? out.at(k, r) : out.at(r, k), Scalar(1));
        e.terms.emplace_back(out.at(0, k), Scalar(-1));
      }
      out.add(std::move(e));
    }
  }
  return out;
}

// M(i,j) + sign * M(mirror) = 0 for every entry.
EquationSet eq_mirror(std::size_t n, long sign) {
  EquationSet out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.add({{{out.at(i, j), Scalar(1)}, {out.at(n - 1 - i, n - 1 - j), Scalar(sign)}}});
    }
  }
  return out;
}

EquationSet eq_R(std::size_t n) {
  EquationSet out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 1; k < n; ++k) {
      out.add({{{out.at(i, k), Scalar(1)},
                {out.at(i, n - 1 - k), Scalar(1)},
                {out.at(i, 0), Scalar(-1)},
                {out.at(i, n - 1), Scalar(-1)}}});
      out.add({{{out.at(k, i), Scalar(1)},
                {out.at(n - 1 - k, i), Scalar(1)},
                {out.at(0, i), Scalar(-1)},
                {out.at(n - 1, i), Scalar(-1)}}});
    }
  }
  return out;
}

// Every rectangle: M(i,j) + M(k,l) = M(i,l) + M(k,j).
EquationSet eq_vertex_cross(std::size_t n) {
  EquationSet out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = j + 1; l < n; ++l) {
          out.add({{{out.at(i, j), Scalar(1)},
                    {out.at(k, l), Scalar(1)},
                    {out.at(i, l), Scalar(-1)},
                    {out.at(k, j), Scalar(-1)}}});
        }
      }
    }
  }
  return out;
}

Equation total_sum_equation(const EquationSet& s) {
  Equation e;
  for (std::size_t k = 0; k < s.n() * s.n(); ++k) e.terms.emplace_back(k, Scalar(1));
  return e;
}

Equation quad_sum(const EquationSet& s, std::size_t i, std::size_t j, long sign) {
  return {{{s.at(i, j), Scalar(sign)},
           {s.at(i, j + 1), Scalar(sign)},
           {s.at(i + 1, j), Scalar(sign)},
           {s.at(i + 1, j + 1), Scalar(sign)}}};
}

// Cyclic 2x2 sums all equal, alternating sum 0, optionally weight 0.
EquationSet eq_array_sum(std::size_t n, bool weightless) {
  EquationSet out(n);
  const Equation first = quad_sum(out, 0, 0, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == 0 && j == 0) continue;
      Equation e = quad_sum(out, i, j, 1);
      e.terms.insert(e.terms.end(), first.terms.begin(), first.terms.end());
      out.add(std::move(e));
    }
  }
  Equation alternating;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) alternating.terms.emplace_back(out.at(i, j), Scalar(alt(i + j)));
  }
  out.add(std::move(alternating));
  if (weightless) out.add(quad_sum(out, 0, 0, 1));
  return out;
}

// (I - P) M (I - P) = O and sigma^T M sigma = 0, P the projector onto sigma.
EquationSet eq_M_algebraic(std::size_t n) {
  EquationSet out(n);
  const Scalar inv_n = Scalar(static_cast<long>(n)).inverse();
  auto q = [&](std::size_t i, std::size_t k) {
    const Scalar p = Scalar(alt(i + k)) * inv_n;
    return i == k ? Scalar(1) - p : -p;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Equation e;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) e.terms.emplace_back(out.at(k, l), q(i, k) * q(l, j));
      }
      out.add(std::move(e));
    }
  }
  Equation e;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) e.terms.emplace_back(out.at(k, l), Scalar(alt(k + l)));
  }
  out.add(std::move(e));
  return out;
}

// Consecutive alternating column sums and row sums cancel, cyclically.
EquationSet eq_N_literal(std::size_t n) {
  EquationSet out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Equation col, row;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t jj : {j, (j + 1) % n}) {
        col.terms.emplace_back(out.at(i, jj), Scalar(alt(i)));
        row.terms.emplace_back(out.at(jj, i), Scalar(alt(i)));
      }
    }
    out.add(std::move(col));
    out.add(std::move(row));
  }
  return out;
}

// M sigma = lambda sigma and M^T sigma = lambda sigma with lambda = (M sigma)_0.
EquationSet eq_N_algebraic(std::size_t n) {
  EquationSet out(n);
  auto row_dot = [&](Equation& e, std::size_t r, long scale) {
    for (std::size_t k = 0; k < n; ++k) e.terms.emplace_back(out.at(r, k), Scalar(scale * alt(k)));
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      Equation e;
      row_dot(e, i, 1);
      row_dot(e, 0, -alt(i));
      out.add(std::move(e));
    }
    Equation e;
    for (std::size_t k = 0; k < n; ++k) e.terms.emplace_back(out.at(k, i), Scalar(alt(k)));
    row_dot(e, 0, -alt(i));
    out.add(std::move(e));
  }
  return out;
}

EquationSet eq_half_shift(std::size_t n, long sign) {
  EquationSet out(n);
  const std::size_t nu = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.add({{{out.at(i, j), Scalar(1)}, {out.at(i + nu, j + nu), Scalar(sign)}}});
    }
  }
  return out;
}

// (1 + u)^T M (1 + v) = 0 for J u = -u, J v = -v, split by homogeneity.
EquationSet eq_R_complement(std::size_t n) {
  EquationSet out(n);
  std::vector<Vector> probes{ones_vector(n)};
  for (std::size_t i = 0; i < n / 2; ++i) {
    Vector u(n);
    u[i] = 1;
    u[n - 1 - i] = -1;
    probes.push_back(std::move(u));
  }
  for (const auto& a : probes) {
    for (const auto& b : probes) {
      Equation e;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!a[i].is_zero() && !b[j].is_zero()) e.terms.emplace_back(out.at(i, j), a[i] * b[j]);
        }
      }
      out.add(std::move(e));
    }
  }
  return out;
}

Route default_route(Space s, std::size_t n) {
  if (n % 2 == 1 && (s == Space::M || s == Space::N)) return Route::algebraic;
  return Route::entrywise;
}

EquationSet equations(Space s, std::size_t n, Route route) {
  auto join = [n](std::initializer_list<EquationSet> parts) {
    EquationSet out(n);
    for (const auto& p : parts) out.append(p);
    return out;
  };
  auto def = [n](Space t) { return equations(t, n, default_route(t, n)); };
  switch (s) {
    case Space::S:
      return eq_S(n);
    case Space::A:
      return eq_mirror(n, 1);
    case Space::B:
      return eq_mirror(n, -1);
    case Space::R:
      return eq_R(n);
    case Space::VertexCross:
      return eq_vertex_cross(n);
    case Space::V: {
      EquationSet out = eq_vertex_cross(n);
      out.add(total_sum_equation(out));
      return out;
    }
    case Space::M:
      return route == Route::algebraic ? eq_M_algebraic(n) : eq_array_sum(n, true);
    case Space::ArraySum:
      return eq_array_sum(n, false);
    case Space::N:
      return route == Route::algebraic ? eq_N_algebraic(n) : eq_N_literal(n);
    case Space::P:
      return eq_half_shift(n, 1);
    case Space::Q:
      return eq_half_shift(n, -1);
    case Space::MPS:
      return join({def(Space::M), def(Space::P), def(Space::S)});
    case Space::NQS:
      return join({def(Space::N), def(Space::Q), def(Space::S)});
    case Space::RV:
      return join({def(Space::R), def(Space::V)});
    case Space::AS:
      return join({def(Space::A), def(Space::S)});
    case Space::BS:
      return join({def(Space::B), def(Space::S)});
    case Space::RS:
      return join({def(Space::R), def(Space::S)});
    case Space::AV:
      return join({def(Space::A), def(Space::V)});
    case Space::Reversible:
      return join({def(Space::R), def(Space::VertexCross)});
    case Space::RComplement:
      return eq_R_complement(n);
  }
  return EquationSet(n);
}

}  // namespace

ConstraintSystem::ConstraintSystem(Space space, std::size_t n, Route route,
                                   std::vector<SparseRow> equations)
    : space_(space), n_(n), route_(route), equations_(std::move(equations)), rows_(n * n) {
  for (const auto& e : equations_) {
    Vector v(n_ * n_);
    for (const auto& [k, c] : e) v[k] = c;
    rows_.add(v);
  }
  for (const auto& v : rows_.complement_basis()) {
    basis_.emplace_back(n_, std::vector<Scalar>(v.entries().begin(), v.entries().end()));
  }
}

bool ConstraintSystem::satisfied_by(const Matrix& m) const {
  if (!m.is_square() || m.rows() != n_) return false;
  const auto entries = m.entries();
  for (const auto& e : equations_) {
    Scalar s;
    for (const auto& [k, c] : e) s += c * entries[k];
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix ConstraintSystem::random_member(Rng& rng) const {
  Matrix out(n_);
  for (const auto& b : basis_) out = out + random_scalar(rng) * b;
  return out;
}

ConstraintSystem build_constraints(Space space, std::size_t n, std::optional<Route> route) {
  if (n == 0) throw DimensionError("order must be positive");
  if (requires_even_order(space) && n % 2 != 0) {
    throw DimensionError("space " + std::string(to_string(space)) + " needs even order, got " +
                         std::to_string(n));
  }
  const Route r = route.value_or(default_route(space, n));
  std::vector<ConstraintSystem::SparseRow> rows;
  const EquationSet eqs = equations(space, n, r);
  for (const auto& e : eqs.equations()) rows.push_back(e.terms);
  return ConstraintSystem(space, n, r, std::move(rows));
}

// ------------------------------------------------------------ dimensions

std::optional<ConstructType> constructor_for(Space space) {
  for (ConstructType t : kAllConstructTypes) {
    if (target_space(t) == space) return t;
  }
  return std::nullopt;
}

DimensionProbe dimension_probe(Space space, std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw DimensionError("dimension probe is capped at n = " + std::to_string(cap) + ", got " +
                         std::to_string(n));
  }
  const ConstraintSystem cs = build_constraints(space, n);
  DimensionProbe out{space, n, cs.nullity(), std::nullopt, true};
  const auto t = constructor_for(space);
  if (!t || (*t == ConstructType::v && n == 1)) return out;
  RowSpace span(n * n);
  for (const auto& m : spanning_outputs(*t, n)) {
    if (!cs.satisfied_by(m)) out.outputs_satisfy = false;
    span.add(m.vectorize());
  }
  out.constructor_rank = span.rank();
  return out;
}

// ------------------------------------------------------------ gradings

namespace {

struct PairInfo {
  GradingPair pair;
  std::string_view name;
  Space even;
  Space odd;
};

constexpr std::array<PairInfo, 7> kPairs = {{
    {GradingPair::BA, "BA", Space::B, Space::A},
    {GradingPair::QP, "QP", Space::Q, Space::P},
    {GradingPair::SV, "SV", Space::S, Space::V},
    {GradingPair::NM, "NM", Space::N, Space::M},
    {GradingPair::RClosure, "R-closure", Space::R, Space::R},
    {GradingPair::NQS_MPS, "NQS-MPS", Space::NQS, Space::MPS},
    {GradingPair::BS_RV, "BS-RV", Space::BS, Space::RV},
}};

const PairInfo& pair_info(GradingPair p) {
  for (const auto& e : kPairs) {
    if (e.pair == p) return e;
  }
  throw ParseError("unknown grading pair");
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t tag) {
  return seed ^ (tag * 0x9E3779B97F4A7C15ULL);
}

constexpr std::size_t kMaxWitnesses = 3;

}  // namespace

std::string_view to_string(GradingPair p) { return pair_info(p).name; }

GradingPair parse_grading_pair(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& e : kPairs) {
    if (lower(e.name) == key) return e.pair;
  }
  throw ParseError("unknown grading pair '" + std::string(name) + "'");
}

std::pair<Space, Space> grading_spaces(GradingPair p) {
  const auto& e = pair_info(p);
  return {e.even, e.odd};
}

bool grading_requires_even(GradingPair p) {
  const auto& e = pair_info(p);
  return requires_even_order(e.even) || requires_even_order(e.odd);
}

GradingCheckResult grading_check(GradingPair pair, std::size_t n, std::size_t trials,
                                 std::uint64_t seed) {
  const auto& info = pair_info(pair);
  const ConstraintSystem even = build_constraints(info.even, n);
  const ConstraintSystem odd = build_constraints(info.odd, n);
  const std::string e(to_string(info.even));
  const std::string o(to_string(info.odd));

  struct Law {
    std::string name;
    bool left_odd, right_odd;
    Space target;
  };
  std::vector<Law> laws;
  if (pair == GradingPair::RClosure) {
    laws.push_back({e + "*" + e + " in " + e, false, false, info.even});
  } else {
    laws.push_back({e + "*" + e + " in " + e, false, false, info.even});
    laws.push_back({o + "*" + o + " in " + e, true, true, info.even});
    laws.push_back({e + "*" + o + " in " + o, false, true, info.odd});
    laws.push_back({o + "*" + e + " in " + o, true, false, info.odd});
  }

  GradingCheckResult out{pair, n, trials, {}, 0, {}};
  const std::uint64_t tag = (static_cast<std::uint64_t>(pair) << 8) | n;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = make_rng(mix(seed, tag), t);
    const Matrix x = even.random_member(rng);
    const Matrix h = odd.random_member(rng);
    for (const auto& law : laws) {
      const Matrix& l = law.left_odd ? h : x;
      const Matrix& r = law.right_odd ? h : x;
      const Matrix prod = l * r;
      if (!is_member(prod, law.target)) {
        ++out.failures;
        if (out.witnesses.size() < kMaxWitnesses) out.witnesses.push_back({law.name, t, l, r, prod});
      }
    }
  }
  for (const auto& law : laws) out.laws.emplace_back(law.name, trials);
  return out;
}

// ------------------------------------------------------------ MPS identities

Vector random_mps_vector(std::size_t n, Rng& rng) {
  if (n == 0 || n % 2 != 0) throw DimensionError("MPS vectors need positive even order");
  const std::size_t nu = n / 2;
  Vector g = random_vector(nu, rng);
  const bool nu_even = nu % 2 == 0;
  if (!nu_even) {
    Scalar mean;
    for (std::size_t i = 0; i < nu; ++i) mean += g[i];
    mean /= Scalar(static_cast<long>(nu));
    for (std::size_t i = 0; i < nu; ++i) g[i] -= mean;
  }
  Vector out(n);
  for (std::size_t i = 0; i < nu; ++i) {
    out[i] = g[i];
    out[i + nu] = nu_even ? -g[i] : g[i];
  }
  return out;
}

bool mps_triple_product_check(const Vector& g1, const Vector& d1, const Vector& g2,
                              const Vector& d2, const Vector& g3, const Vector& d3,
                              std::size_t n) {
  const Matrix lhs = make_MPS_vectors(g1, d1, n) * make_MPS_vectors(g2, d2, n) *
                     make_MPS_vectors(g3, d3, n);
  const Scalar nn(static_cast<long>(n));
  const Matrix rhs = make_MPS_vectors((nn * dot(d2, g3)) * g1, (nn * dot(d1, g2)) * d3, n);
  return lhs == rhs;
}

ParasymmetryResult parasymmetry_check(const Vector& gamma, const Vector& delta, std::size_t n) {
  const Matrix m = make_MPS_vectors(gamma, delta, n);
  const Matrix sq = m * m;
  const Vector sig = sigma_vector(n);
  const Matrix formula =
      Scalar(static_cast<long>(n)) * outer(gamma, delta) + dot(delta, gamma) * outer(sig, sig);
  const std::vector<Vector> pair{gamma, delta};
  ParasymmetryResult out;
  out.square_formula = sq == formula;
  out.symmetric_square = sq == sq.transpose();
  out.dependent = rank(stack_rows(pair)) <= 1;
  return out;
}

// ------------------------------------------------------------ ranks

std::string_view to_string(RankFamily f) {
  switch (f) {
    case RankFamily::mps:
      return "mps";
    case RankFamily::mps_weighted:
      return "mps_weighted";
    case RankFamily::reversible:
      return "reversible";
    case RankFamily::vertex_cross:
      return "vertex_cross";
  }
  return "?";
}

std::size_t rank_bound(RankFamily f) {
  switch (f) {
    case RankFamily::mps:
    case RankFamily::reversible:
      return 2;
    case RankFamily::mps_weighted:
      return 3;
    case RankFamily::vertex_cross:
      return 7;
  }
  return 0;
}

RankBoundResult rank_bound_check(RankFamily family, std::size_t n, std::size_t trials,
                                 std::uint64_t seed) {
  Space space = Space::V;
  if (family == RankFamily::mps || family == RankFamily::mps_weighted) space = Space::MPS;
  if (family == RankFamily::reversible) space = Space::Reversible;
  const ConstraintSystem cs = build_constraints(space, n);
  RankBoundResult out{family, n, trials, rank_bound(family), 0, std::nullopt};
  // MPS_2 is {0}; from n = 4 on the bound is reachable.
  const bool check_attainment = family == RankFamily::mps && n >= 4;
  bool attained = false;
  const std::uint64_t tag = (static_cast<std::uint64_t>(family) << 8) | n;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = make_rng(mix(seed, tag + 0x1000), t);
    Matrix m = cs.random_member(rng);
    if (family == RankFamily::mps_weighted) m = m + random_scalar(rng) * ones_matrix(n);
    const std::size_t r = rank(m);
    out.max_rank = std::max(out.max_rank, r);
    if (r == out.bound) attained = true;
  }
  if (check_attainment) out.attained = attained;
  return out;
}

ReversibleResult reversible_implies_A_check(std::size_t n, std::size_t trials,
                                            std::uint64_t seed) {
  const ConstraintSystem cs = build_constraints(Space::Reversible, n);
  ReversibleResult out{n, trials, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = make_rng(mix(seed, 0x2000 + n), t);
    if (!check_entrywise(cs.random_member(rng), Property::A).holds()) ++out.failures;
  }
  return out;
}

bool rv_equals_av_check(std::size_t n) {
  const ConstraintSystem av = build_constraints(Space::AV, n);
  RowSpace span(n * n);
  for (const auto& m : spanning_outputs(ConstructType::rv, n)) {
    if (!av.satisfied_by(m)) return false;
    span.add(m.vectorize());
  }
  for (const auto& b : av.basis()) {
    if (!span.contains(b.vectorize())) return false;
  }
  return span.rank() == av.nullity();
}

bool r_complement_check(std::size_t n) {
  const ConstraintSystem r = build_constraints(Space::R, n);
  const ConstraintSystem c = build_constraints(Space::RComplement, n);
  if (r.nullity() + c.nullity() != n * n) return false;
  RowSpace both = r.rows();
  for (const auto& row : c.rows().basis()) both.add(row);
  return both.rank() == n * n;
}

// ------------------------------------------------------------ agreement

namespace {

constexpr std::array<Space, 20> kAllSpaces = {
    Space::S,   Space::A,   Space::B,  Space::R,  Space::V,  Space::M,          Space::N,
    Space::P,   Space::Q,   Space::MPS, Space::NQS, Space::RV, Space::AS,       Space::BS,
    Space::RS,  Space::AV,  Space::VertexCross, Space::ArraySum, Space::Reversible,
    Space::RComplement};

bool oracle_applies(Space s, std::size_t n) { return !(requires_even_order(s) && n % 2 != 0); }

}  // namespace

AgreementResult oracle_agreement_check(std::size_t n, std::size_t trials, std::uint64_t seed) {
  AgreementResult out{n, trials, 0, {}};
  auto note = [&](std::string msg) {
    ++out.disagreements;
    if (out.notes.size() < 5) out.notes.push_back(std::move(msg));
  };
  std::vector<ConstraintSystem> systems;
  for (Space s : kAllSpaces) {
    if (!oracle_applies(s, n)) continue;
    systems.push_back(build_constraints(s, n));
    for (const auto& b : systems.back().basis()) {
      if (!is_member(b, s)) {
        note("oracle basis element of " + std::string(to_string(s)) + " fails the predicate");
        break;
      }
    }
  }
  std::vector<ConstructType> types;
  for (ConstructType t : kAllConstructTypes) {
    if (construct_requires_even(t) && n % 2 != 0) continue;
    types.push_back(t);
  }
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = make_rng(mix(seed, 0x3000 + n), t);
    Matrix m;
    switch (t % 4) {
      case 0:
        m = random_matrix(n, n, rng);
        break;
      case 1:
        m = random_member(types[(t / 4) % types.size()], n, rng);
        break;
      case 2:
        m = systems[(t / 4) % systems.size()].random_member(rng);
        break;
      default: {
        const SplitKind kinds[] = {SplitKind::BA, SplitKind::SV, SplitKind::NM, SplitKind::QP};
        const SplitKind k = kinds[(t / 4) % (n % 2 == 0 ? 4 : 3)];
        const GradedPair g = split(random_matrix(n, n, rng), k);
        m = (t / 16) % 2 == 0 ? g.even_part : g.odd_part;
      }
    }
    try {
      classify(m);
    } catch (const InconsistencyError& e) {
      note(std::string("trial ") + std::to_string(t) + ": " + e.what());
    }
    for (const auto& cs : systems) {
      if (cs.satisfied_by(m) != is_member(m, cs.space())) {
        note("trial " + std::to_string(t) + ": oracle and predicate disagree on " +
             std::string(to_string(cs.space())));
      }
    }
  }
  return out;
}

// ------------------------------------------------------------ suites

Suite parse_suite(std::string_view name) {
  const std::string key = lower(name);
  if (key == "gradings") return Suite::gradings;
  if (key == "dimensions") return Suite::dimensions;
  if (key == "ranks") return Suite::ranks;
  if (key == "lemmas") return Suite::lemmas;
  if (key == "all") return Suite::all;
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

namespace {

using nlohmann::json;

json check(std::string name, std::size_t n, bool passed, json details = json::object()) {
  json j{{"name", std::move(name)}, {"n", n}, {"passed", passed}};
  if (!details.empty()) j["details"] = std::move(details);
  return j;
}

void gradings(json& checks, const SuiteOptions& o) {
  for (GradingPair p : kAllGradingPairs) {
    for (std::size_t n = 2; n <= o.n_max; ++n) {
      if (grading_requires_even(p) && n % 2 != 0) continue;
      const auto r = grading_check(p, n, o.trials, o.seed);
      json d{{"trials", r.trials}, {"failures", r.failures}};
      json laws = json::array();
      for (const auto& [law, count] : r.laws) laws.push_back(law);
      d["laws"] = std::move(laws);
      if (!r.witnesses.empty()) {
        const auto& w = r.witnesses.front();
        d["witness"] = {{"law", w.law},
                        {"trial", w.trial},
                        {"left", matrix_to_json(w.left)},
                        {"right", matrix_to_json(w.right)},
                        {"product", matrix_to_json(w.product)}};
      }
      checks.push_back(check("grading " + std::string(to_string(p)), n, r.passed(), std::move(d)));
    }
  }
}

void dimensions(json& checks, const SuiteOptions& o) {
  const std::size_t top = std::min(o.n_max, kDefaultDimensionCap);
  for (std::size_t n = 2; n <= top; ++n) {
    for (ConstructType t : kAllConstructTypes) {
      const Space s = target_space(t);
      if (requires_even_order(s) && n % 2 != 0) continue;
      const auto p = dimension_probe(s, n);
      json d{{"nullity", p.nullity}, {"outputs_satisfy", p.outputs_satisfy}};
      if (p.constructor_rank) d["constructor_rank"] = *p.constructor_rank;
      checks.push_back(check("dimension " + std::string(to_string(s)), n, p.passed(), std::move(d)));
    }
    const std::size_t dim_s = build_constraints(Space::S, n).nullity();
    const std::size_t dim_v = build_constraints(Space::V, n).nullity();
    checks.push_back(check("dim S = n^2-2n+2", n, dim_s == n * n - 2 * n + 2, {{"dim", dim_s}}));
    checks.push_back(check("dim V = 2n-2", n, dim_v == 2 * n - 2, {{"dim", dim_v}}));
    for (auto [e, od] : {std::pair{Space::B, Space::A}, {Space::S, Space::V}, {Space::N, Space::M},
                         {Space::Q, Space::P}}) {
      if (requires_even_order(e) && n % 2 != 0) continue;
      const std::size_t a = build_constraints(e, n).nullity();
      const std::size_t b = build_constraints(od, n).nullity();
      checks.push_back(check("dim " + std::string(to_string(e)) + " + dim " +
                                 std::string(to_string(od)) + " = n^2",
                             n, a + b == n * n, {{"even", a}, {"odd", b}}));
    }
    const auto agree = oracle_agreement_check(n, o.trials, o.seed);
    checks.push_back(check("oracle agreement", n, agree.passed(),
                           {{"trials", agree.trials},
                            {"disagreements", agree.disagreements},
                            {"notes", agree.notes}}));
  }
}

void ranks(json& checks, const SuiteOptions& o) {
  for (std::size_t n = 2; n <= o.n_max; ++n) {
    for (RankFamily f : {RankFamily::mps, RankFamily::mps_weighted, RankFamily::reversible,
                         RankFamily::vertex_cross}) {
      const bool needs_even = f == RankFamily::mps || f == RankFamily::mps_weighted;
      if (needs_even && n % 2 != 0) continue;
      const auto r = rank_bound_check(f, n, o.trials, o.seed);
      json d{{"bound", r.bound}, {"max_rank", r.max_rank}, {"trials", r.trials}};
      if (r.attained) d["attained"] = *r.attained;
      checks.push_back(check("rank " + std::string(to_string(f)), n, r.passed(), std::move(d)));
    }
  }
}

void lemmas(json& checks, const SuiteOptions& o) {
  for (std::size_t n = 3; n <= o.n_max; n += 2) {
    const std::size_t weightless = build_constraints(Space::M, n, Route::entrywise).nullity();
    const std::size_t any_weight = build_constraints(Space::ArraySum, n).nullity();
    checks.push_back(check("odd-order (M) forces zero", n, weightless == 0 && any_weight == 0,
                           {{"nullity", weightless}, {"nullity_any_weight", any_weight}}));
  }
  for (std::size_t n = 4; n <= o.n_max; n += 2) {
    std::size_t triple_fail = 0;
    std::size_t para_fail = 0;
    for (std::size_t t = 0; t < o.trials; ++t) {
      Rng rng = make_rng(mix(o.seed, 0x4000 + n), t);
      std::vector<Vector> v;
      for (int k = 0; k < 6; ++k) v.push_back(random_mps_vector(n, rng));
      if (!mps_triple_product_check(v[0], v[1], v[2], v[3], v[4], v[5], n)) ++triple_fail;
      // Every other draw makes delta a multiple of gamma.
      const Vector delta = t % 2 == 0 ? random_scalar(rng) * v[0] : v[1];
      if (!parasymmetry_check(v[0], delta, n).passed()) ++para_fail;
    }
    checks.push_back(check("MPS triple product", n, triple_fail == 0,
                           {{"trials", o.trials}, {"failures", triple_fail}}));
    checks.push_back(check("parasymmetry iff dependent", n, para_fail == 0,
                           {{"trials", o.trials}, {"failures", para_fail}}));
  }
  for (std::size_t n = 2; n <= o.n_max; ++n) {
    checks.push_back(check("RV = AV", n, rv_equals_av_check(n)));
    const auto rev = reversible_implies_A_check(n, o.trials, o.seed);
    checks.push_back(check("reversible implies (A)", n, rev.passed(),
                           {{"trials", rev.trials}, {"failures", rev.failures}}));
    checks.push_back(check("R complement", n, r_complement_check(n)));
  }
}

}  // namespace

json run_suite(Suite suite, const SuiteOptions& options) {
  json checks = json::array();
  const bool all = suite == Suite::all;
  if (all || suite == Suite::gradings) gradings(checks, options);
  if (all || suite == Suite::dimensions) dimensions(checks, options);
  if (all || suite == Suite::ranks) ranks(checks, options);
  if (all || suite == Suite::lemmas) lemmas(checks, options);
  bool passed = true;
  for (const auto& c : checks) passed = passed && c.at("passed").get<bool>();
  static constexpr const char* names[] = {"gradings", "dimensions", "ranks", "lemmas", "all"};
  return {{"suite", names[static_cast<int>(suite)]},
          {"n_max", options.n_max},
          {"trials", options.trials},
          {"seed", options.seed},
          {"passed", passed},
          {"checks", std::move(checks)}};
}

}  // namespace symalg
