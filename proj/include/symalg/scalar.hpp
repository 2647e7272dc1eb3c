#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace symalg {

using Rational = mpq_class;

/// Exact element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// Both coefficients are kept canonical (lowest terms, positive
/// denominator), so equality is plain coefficient equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& a) : a_(a) { a_.canonicalize(); }  // NOLINT
  Scalar(const Rational& a, const Rational& b);

  static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }
  /// 1/sqrt(2) = sqrt(2)/2
  static Scalar inv_sqrt2() { return Scalar(Rational(0), Rational(1, 2)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// a - b*sqrt(2)
  Scalar conjugate() const;
  /// Field norm a^2 - 2b^2; zero only for the zero scalar.
  Rational norm() const;
  /// Throws DivisionByZero for zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Machine format: "p/q" (or "p") when rational, else "p/q+r/s*sqrt2".
  std::string to_string() const;
  /// Display format: "p/q" when rational, else "p/q + r/s√2".
  std::string to_pretty() const;

  /// Accepts the machine format plus the shorthands "r/s*sqrt2", "sqrt2",
  /// "-sqrt2" and the display form with "√2". Throws ParseError.
  static Scalar parse(std::string_view text);

  /// Approximate value, for display and sorting only.
  double to_double() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

enum class ArithKind { add, sub, mul, div };

/// Dispatching form of the four field operations.
Scalar scalar_arith(const Scalar& x, const Scalar& y, ArithKind kind);

/// Parses "p" or "p/q" with q > 0. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace symalg
