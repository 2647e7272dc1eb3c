#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "mps_example.hpp"
#include "symalg/construct.hpp"
#include "symalg/errors.hpp"
#include "symalg/predicates.hpp"
#include "test_util.hpp"

namespace symalg {
namespace {

using testing::half;
using testing::ints;
using testing::ivec;

TEST(Construct, TwoByTwoExamples) {
  EXPECT_EQ(make_A(ints({{1}}), ints({{1}}), 2), ints({{1, 0}, {0, -1}}));
  EXPECT_EQ(make_S(SParams{ints({{3}}), Matrix(1), Matrix(1), ints({{5}}), Scalar()}, 2),
            ints({{4, -1}, {-1, 4}}));
  EXPECT_EQ(make_M(MParams{ivec({1}), ivec({0}), Matrix(1), {}, {}, {}, {}}, 2),
            half() * ints({{1, -1}, {1, -1}}));
  EXPECT_EQ(make_R(RParams{Scalar(1), ivec({0}), ivec({0}), Matrix(1)}, 2), half() * ones_matrix(2));
  EXPECT_EQ(make_RV(ivec({3}), ivec({5}), 2), half() * ints({{8, 2}, {-2, -8}}));
}

TEST(Construct, OnesMatrixFromBlocks) {
  for (std::size_t nu = 1; nu <= 4; ++nu) {
    EXPECT_EQ(make_B(Scalar(2) * ones_matrix(nu), Matrix(nu), 2 * nu), ones_matrix(2 * nu));
  }
  for (std::size_t n = 3; n <= 7; n += 2) {
    const std::size_t nu = n / 2;
    EXPECT_EQ(make_S(SParams{Matrix(nu), Matrix(nu), Matrix(nu), Matrix(nu), Scalar(1)}, n),
              ones_matrix(n));
  }
}

TEST(Construct, SmallestOrder) {
  EXPECT_EQ(make_S(SParams{Matrix(0), Matrix(0), Matrix(0), Matrix(0), Scalar(7)}, 1), ints({{7}}));
  EXPECT_EQ(make_M(MParams{Vector(0), Vector(0), Matrix(0), Vector(0), Vector(0), Vector(0), Vector(0)}, 1),
            Matrix(1));
  EXPECT_EQ(make_RV(Vector(0), Vector(0), 1, Scalar(3)), ints({{3}}));
}

TEST(Construct, MostPerfectVectorForm) {
  const Matrix m = make_MPS_vectors(ivec({1, 0, -1, 0}), Vector(4), 4);
  EXPECT_EQ(m, ints({{1, -1, 1, -1}, {0, 0, 0, 0}, {-1, 1, -1, 1}, {0, 0, 0, 0}}));
  EXPECT_TRUE(is_member(m, Space::MPS));
}

TEST(Construct, MostPerfectExample) {
  const Vector a = ivec({1, -2, 1});
  const Vector b = ivec({-2, 4, -2});
  const Matrix z = ints({{1, 0, -1}, {-1, 0, 1}, {1, 0, -1}});
  const Matrix m = make_MPS_block(Scalar(2) * a, Scalar(2) * b, Scalar(2) * z, 6);
  EXPECT_EQ(m, testing::mps6());
  EXPECT_TRUE(is_member(m, Space::MPS));
  const auto [gamma, delta] = extract_MPS_vectors(m);
  EXPECT_EQ(make_MPS_vectors(gamma, delta, 6), m);
}

TEST(Construct, MostPerfectRoundTrip) {
  for (std::size_t n = 4; n <= 10; n += 2) {
    for (int t = 0; t < 20; ++t) {
      Rng rng = make_rng(61, n * 100 + t);
      const Matrix m = random_member(ConstructType::mps, n, rng);
      const auto [gamma, delta] = extract_MPS_vectors(m);
      EXPECT_EQ(make_MPS_vectors(gamma, delta, n), m) << n;
    }
  }
  EXPECT_THROW(extract_MPS_vectors(ones_matrix(4)), PreconditionError);
}

TEST(Construct, ShapeAndPreconditionErrors) {
  EXPECT_THROW(make_A(Matrix(2), Matrix(3), 4), DimensionError);
  EXPECT_THROW(make_P(Matrix(2), Matrix(3)), DimensionError);
  EXPECT_THROW(make_MPS_block(Vector(1), Vector(1), Matrix(1), 3), DimensionError);
  // Y must be semimagic at even order.
  EXPECT_THROW(make_S(SParams{ints({{1, 2}, {3, 4}}), Matrix(2), Matrix(2), Matrix(2), Scalar()}, 4),
               PreconditionError);
  // V 1 = 0 is required.
  EXPECT_THROW(make_S(SParams{Matrix(2), ints({{1, 0}, {0, 0}}), Matrix(2), Matrix(2), Scalar()}, 4),
               PreconditionError);
  // a must be orthogonal to 1.
  EXPECT_THROW(make_MPS_block(ivec({1, 1}), Vector(2), Matrix(2), 4), PreconditionError);
  EXPECT_THROW(make_MPS_vectors(ivec({1, 0, 0, 1}), Vector(4), 4), PreconditionError);
  EXPECT_THROW(make_V(VParams{}, 1), DimensionError);
}

TEST(Construct, EverySampleLandsInItsSpace) {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (ConstructType t : kAllConstructTypes) {
      if (construct_requires_even(t) && n % 2 != 0) continue;
      for (int k = 0; k < 500; ++k) {
        Rng rng = make_rng(62, n * 10000 + k);
        const Matrix m = random_member(t, n, rng);
        ASSERT_TRUE(is_member(m, target_space(t))) << to_string(t) << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(Construct, EvenOnlyTypesRejectOddOrder) {
  Rng rng = make_rng(63, 0);
  for (ConstructType t : {ConstructType::p, ConstructType::q, ConstructType::mps, ConstructType::nqs}) {
    EXPECT_THROW(random_member(t, 5, rng), DimensionError) << to_string(t);
  }
}

TEST(Construct, TypeNames) {
  for (ConstructType t : kAllConstructTypes) EXPECT_EQ(parse_construct_type(to_string(t)), t);
  EXPECT_EQ(parse_construct_type("MPS"), ConstructType::mps);
  EXPECT_THROW(parse_construct_type("x"), ParseError);
}

TEST(Construct, ParamsJsonRoundTrip) {
  for (ConstructType t : kAllConstructTypes) {
    for (std::size_t n : {4, 5}) {
      if (construct_requires_even(t) && n % 2 != 0) continue;
      Rng rng = make_rng(64, n);
      const ConstructionParams p = random_params(t, n, rng);
      const ConstructionParams q = params_from_json(params_to_json(p));
      EXPECT_EQ(q.type, p.type);
      EXPECT_EQ(q.n, p.n);
      EXPECT_EQ(construct(q), construct(p)) << to_string(t);
    }
  }
}

TEST(Construct, ParamsJsonErrors) {
  using nlohmann::json;
  EXPECT_THROW(params_from_json(json{{"type", "zz"}, {"n", 2}}), ParseError);
  EXPECT_THROW(params_from_json(json{{"type", "s"}}), ParseError);
  EXPECT_THROW(params_from_json(json::parse(R"({"type": "s", "n": 3, "params": {"w": 1.5}})")),
               ParseError);
  // Missing fields are zero.
  EXPECT_EQ(construct(params_from_json(json{{"type", "a"}, {"n", 4}})), Matrix(4));
}

TEST(Construct, SpanningOutputsAreMembers) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (ConstructType t : kAllConstructTypes) {
      if (construct_requires_even(t) && n % 2 != 0) continue;
      for (const Matrix& m : spanning_outputs(t, n)) {
        EXPECT_TRUE(is_member(m, target_space(t))) << to_string(t) << " n=" << n;
      }
    }
  }
}

TEST(Construct, SeededDrawsRepeat) {
  Rng a = make_rng(5, 3);
  Rng b = make_rng(5, 3);
  EXPECT_EQ(random_member(ConstructType::s, 6, a), random_member(ConstructType::s, 6, b));
}

}  // namespace
}  // namespace symalg
