#include <gtest/gtest.h>

#include "mps_example.hpp"
#include "symalg/construct.hpp"
#include "symalg/decompose.hpp"
#include "symalg/errors.hpp"
#include "symalg/predicates.hpp"
#include "test_util.hpp"

namespace symalg {
namespace {

using testing::ints;

TEST(Predicates, OnesMatrixHasEveryPropertyWithWeightOne) {
  for (std::size_t n = 2; n <= 8; n += 2) {
    const SymmetryReport r = classify(ones_matrix(n));
    for (Property p : {Property::S, Property::A, Property::M, Property::P}) {
      ASSERT_TRUE(r[p].holds()) << to_string(p);
      EXPECT_EQ(*r[p].weight, Scalar(1)) << to_string(p);
    }
    for (Property p : {Property::B, Property::R, Property::V, Property::Q}) {
      EXPECT_TRUE(r[p].holds()) << to_string(p);
    }
    // N holds with lambda = 0 at even order.
    ASSERT_TRUE(r[Property::N].holds());
    EXPECT_EQ(*r[Property::N].weight, Scalar(0));
  }
}

TEST(Predicates, SmallGeneralMatrix) {
  const SymmetryReport r = classify(ints({{1, 2}, {3, 4}}));
  EXPECT_FALSE(r[Property::S].holds());
  EXPECT_FALSE(r.mps || r.nqs || r.rv || r.as || r.bs || r.rs);
}

TEST(Predicates, MostPerfectExample) {
  const SymmetryReport r = classify(testing::mps6());
  for (Property p : {Property::S, Property::M, Property::P}) {
    ASSERT_TRUE(r[p].holds()) << to_string(p);
    EXPECT_EQ(*r[p].weight, Scalar(0));
  }
  EXPECT_TRUE(r.mps);
}

TEST(Predicates, WeightsAreReported) {
  const Matrix m = ints({{2, 0}, {0, 2}});
  EXPECT_EQ(*check_entrywise(m, Property::S).weight, Scalar(1));
  EXPECT_FALSE(check_entrywise(m, Property::A).holds());
  const Matrix a = ints({{2, 1}, {3, 2}});
  EXPECT_EQ(*check_entrywise(a, Property::A).weight, Scalar(2));
  EXPECT_EQ(*check_algebraic(a, Property::A).weight, Scalar(2));
}

TEST(Predicates, OddOrderMAndN) {
  // Literal (M) at odd order only holds for zero; E_3 fails the alternating sum.
  EXPECT_FALSE(check_literal(ones_matrix(3), Property::M).holds());
  EXPECT_TRUE(check_literal(zero_matrix(5), Property::M).holds());
  // The entrywise check falls back to the algebraic definition.
  const Verdict v = check_entrywise(zero_matrix(3), Property::M);
  EXPECT_EQ(v.route, Route::algebraic);
  EXPECT_TRUE(v.holds());
  // sigma sigma^T has sigma as eigenvector with eigenvalue n.
  const Vector s = sigma_vector(5);
  const Verdict n = check_entrywise(outer(s, s), Property::N);
  ASSERT_TRUE(n.holds());
  EXPECT_EQ(*n.weight, Scalar(5));
}

TEST(Predicates, PAndQNeedEvenOrder) {
  EXPECT_THROW(check_entrywise(ones_matrix(3), Property::P), DimensionError);
  EXPECT_THROW(check_algebraic(ones_matrix(3), Property::Q), DimensionError);
  const SymmetryReport r = classify(ones_matrix(3));
  EXPECT_EQ(r[Property::P].status, Status::not_applicable);
  EXPECT_FALSE(r.in_Q);
  EXPECT_FALSE(is_member(ones_matrix(3), Space::MPS));
}

TEST(Predicates, NonSquareInputIsRejected) {
  EXPECT_THROW(classify(Matrix(2, 3)), DimensionError);
}

TEST(Predicates, SpaceNames) {
  for (const char* name : {"S", "mps", "Nqs", "VertexCross", "rcomplement"}) {
    EXPECT_NO_THROW(parse_space(name)) << name;
  }
  EXPECT_EQ(parse_space("rv"), Space::RV);
  EXPECT_EQ(to_string(Space::ArraySum), "ArraySum");
  EXPECT_THROW(parse_space("T"), ParseError);
}

TEST(Predicates, RComplement) {
  EXPECT_TRUE(r_complement_membership(zero_matrix(4)));
  EXPECT_FALSE(r_complement_membership(ones_matrix(4)));
  EXPECT_FALSE(r_complement_membership(ones_matrix(3)));
}

TEST(Predicates, DualRoutesAgreeOnRandomMatrices) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int t = 0; t < 200; ++t) {
      Rng rng = make_rng(31, n * 1000 + t);
      Matrix m = random_matrix(n, n, rng);
      // Push some draws into the spaces so both outcomes are exercised.
      const SplitKind kinds[] = {SplitKind::BA, SplitKind::SV, SplitKind::NM, SplitKind::QP};
      const SplitKind k = kinds[t % (n % 2 == 0 ? 4 : 3)];
      if (t % 3 == 1) m = split(m, k).even_part;
      if (t % 3 == 2) m = split(m, k).odd_part;
      EXPECT_NO_THROW(classify(m)) << "n=" << n << " t=" << t;
    }
  }
}

TEST(Predicates, DualRoutesAgreeOnConstructedMembers) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (ConstructType t : kAllConstructTypes) {
      if (construct_requires_even(t) && n % 2 != 0) continue;
      for (int k = 0; k < 20; ++k) {
        Rng rng = make_rng(32, n * 1000 + k);
        const Matrix m = random_member(t, n, rng);
        SymmetryReport r;
        ASSERT_NO_THROW(r = classify(m)) << to_string(t) << " n=" << n;
        EXPECT_TRUE(r.member(target_space(t))) << to_string(t) << " n=" << n;
      }
    }
  }
}

TEST(Predicates, SplitPartsLandInTheirSpaces) {
  for (std::size_t n = 2; n <= 7; ++n) {
    Rng rng = make_rng(33, n);
    const Matrix m = random_matrix(n, n, rng);
    const GradedPair ba = split_BA(m);
    EXPECT_TRUE(is_member(ba.even_part, Space::B));
    EXPECT_TRUE(is_member(ba.odd_part, Space::A));
    const GradedPair sv = split_SV(m);
    EXPECT_TRUE(is_member(sv.even_part, Space::S));
    EXPECT_TRUE(is_member(sv.odd_part, Space::V));
    const GradedPair nm = split_NM(m);
    EXPECT_TRUE(is_member(nm.even_part, Space::N));
    EXPECT_TRUE(is_member(nm.odd_part, Space::M));
    if (n % 2 == 0) {
      const GradedPair qp = split_QP(m);
      EXPECT_TRUE(is_member(qp.even_part, Space::Q));
      EXPECT_TRUE(is_member(qp.odd_part, Space::P));
    }
  }
}

}  // namespace
}  // namespace symalg
