#include "symalg/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "symalg/errors.hpp"

namespace symalg {

Scalar::Scalar(const Rational& a, const Rational& b) : a_(a), b_(b) {
  a_.canonicalize();
  b_.canonicalize();
}

Scalar Scalar::conjugate() const { return Scalar(a_, -b_); }

Rational Scalar::norm() const {
  Rational r = a_ * a_ - 2 * b_ * b_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Rational d = norm();
  return Scalar(a_ / d, -b_ / d);
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  a_ += rhs.a_;
  if (sgn(rhs.b_) != 0) b_ += rhs.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  a_ -= rhs.a_;
  if (sgn(rhs.b_) != 0) b_ -= rhs.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  const bool lhs_rat = sgn(b_) == 0;
  const bool rhs_rat = sgn(rhs.b_) == 0;
  if (lhs_rat && rhs_rat) {
    a_ *= rhs.a_;
  } else if (rhs_rat) {
    a_ *= rhs.a_;
    b_ *= rhs.a_;
  } else if (lhs_rat) {
    b_ = a_ * rhs.b_;
    a_ *= rhs.a_;
  } else {
    // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r
    Rational a = a_ * rhs.a_ + 2 * b_ * rhs.b_;
    Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = std::move(a);
    b_ = std::move(b);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  if (sgn(rhs.b_) == 0) {
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    return *this;
  }
  return *this *= rhs.inverse();
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  const std::size_t slash = s.find('/', pos);
  const std::string num = s.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto all_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class p(num, 10);
  mpz_class q(den, 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? mpz_class(-p) : p, q);
  r.canonicalize();
  return r;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty scalar");

  std::string body;
  bool has_root = false;
  for (std::string_view suffix : {std::string_view("*sqrt2"), std::string_view("sqrt2"),
                                  std::string_view("*√2"), std::string_view("√2")}) {
    if (ends_with(s, suffix)) {
      body = s.substr(0, s.size() - suffix.size());
      has_root = true;
      break;
    }
  }
  if (!has_root) return Scalar(parse_rational(s));

  // body is "<a><sign><b>" or "<sign?><b>", where <b> may be empty.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  std::string a_text = split == std::string::npos ? "" : body.substr(0, split);
  std::string b_text = split == std::string::npos ? body : body.substr(split);
  Rational a = a_text.empty() ? Rational(0) : parse_rational(a_text);
  Rational b;
  if (b_text.empty() || b_text == "+") {
    b = 1;
  } else if (b_text == "-") {
    b = -1;
  } else {
    b = parse_rational(b_text);
  }
  return Scalar(a, b);
}

std::string Scalar::to_string() const {
  if (is_rational()) return a_.get_str();
  std::string out = a_.get_str();
  if (sgn(b_) >= 0) out += "+";
  out += b_.get_str();
  out += "*sqrt2";
  return out;
}

std::string Scalar::to_pretty() const {
  if (is_rational()) return a_.get_str();
  std::string out;
  if (sgn(a_) != 0) {
    out = a_.get_str();
    out += sgn(b_) >= 0 ? " + " : " - ";
    out += Rational(abs(b_)).get_str();
  } else {
    out = b_.get_str();
  }
  out += "√2";
  return out;
}

double Scalar::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(2.0); }

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

Scalar scalar_arith(const Scalar& x, const Scalar& y, ArithKind kind) {
  switch (kind) {
    case ArithKind::add:
      return x + y;
    case ArithKind::sub:
      return x - y;
    case ArithKind::mul:
      return x * y;
    case ArithKind::div:
      return x / y;
  }
  return {};
}

}  // namespace symalg
