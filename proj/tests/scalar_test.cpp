#include <gtest/gtest.h>

#include "symalg/construct.hpp"
#include "symalg/errors.hpp"
#include "symalg/scalar.hpp"
#include "test_util.hpp"

namespace symalg {
namespace {

using testing::S;

TEST(Scalar, SqrtTwoSquaresToTwo) {
  EXPECT_EQ(Scalar::sqrt2() * Scalar::sqrt2(), Scalar(2));
  EXPECT_EQ(Scalar::inv_sqrt2() * Scalar::sqrt2(), Scalar(1));
}

TEST(Scalar, DivisionUsesConjugate) {
  const Scalar x = S("1+1*sqrt2");
  EXPECT_EQ(x.norm(), Rational(-1));
  EXPECT_EQ(x.inverse(), S("-1+1*sqrt2"));
  EXPECT_EQ(S("3/2") / S("1/2*sqrt2"), S("3/2*sqrt2"));
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar().inverse(), DivisionByZero);
  EXPECT_THROW(Scalar(1) / Scalar(), DivisionByZero);
}

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(Scalar(Rational(2, 4)), S("1/2"));
  EXPECT_EQ(S("-6/4"), S("-3/2"));
  EXPECT_EQ(S("0/5+0*sqrt2").to_string(), "0");
}

TEST(Scalar, Printing) {
  EXPECT_EQ(S("3").to_string(), "3");
  EXPECT_EQ(S("-1/2+3/4*sqrt2").to_string(), "-1/2+3/4*sqrt2");
  EXPECT_EQ(S("-1/2+3/4*sqrt2").to_pretty(), "-1/2 + 3/4√2");
  EXPECT_EQ(S("1-sqrt2").to_pretty(), "1 - 1√2");
  EXPECT_EQ(Scalar::sqrt2().to_pretty(), "1√2");
}

TEST(Scalar, ParsingShorthands) {
  EXPECT_EQ(S("sqrt2"), Scalar::sqrt2());
  EXPECT_EQ(S("-sqrt2"), -Scalar::sqrt2());
  EXPECT_EQ(S("2√2"), Scalar(0, 2));
  EXPECT_EQ(S("1/2 + 3/4√2"), Scalar(Rational(1, 2), Rational(3, 4)));
  EXPECT_EQ(S(" 7 "), Scalar(7));
}

TEST(Scalar, ParsingRejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1.5", "1/-2", "2*sqrt3", "1+", "--1"}) {
    EXPECT_THROW(Scalar::parse(bad), ParseError) << bad;
  }
}

TEST(Scalar, ArithDispatch) {
  const Scalar x = S("1/3+sqrt2");
  const Scalar y = S("-2+1/5*sqrt2");
  EXPECT_EQ(scalar_arith(x, y, ArithKind::add), x + y);
  EXPECT_EQ(scalar_arith(x, y, ArithKind::sub), x - y);
  EXPECT_EQ(scalar_arith(x, y, ArithKind::mul), x * y);
  EXPECT_EQ(scalar_arith(x, y, ArithKind::div) * y, x);
}

TEST(Scalar, FieldLawsOnRandomElements) {
  Rng rng = make_rng(11, 0);
  for (int i = 0; i < 500; ++i) {
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    const Scalar c = random_scalar(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_EQ((a * a.conjugate()).rational_part(), a.norm());
    EXPECT_TRUE((a * a.conjugate()).is_rational());
  }
}

TEST(Scalar, PrintParseRoundTrip) {
  Rng rng = make_rng(12, 0);
  for (int i = 0; i < 1000; ++i) {
    const Scalar a = random_scalar(rng) * random_scalar(rng) + random_scalar(rng);
    EXPECT_EQ(Scalar::parse(a.to_string()), a);
    EXPECT_EQ(Scalar::parse(a.to_pretty()), a);
  }
}

TEST(Scalar, ToDouble) {
  EXPECT_NEAR(S("1/2+sqrt2").to_double(), 0.5 + 1.4142135623730951, 1e-12);
}

}  // namespace
}  // namespace symalg
