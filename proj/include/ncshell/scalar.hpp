#pragma once

// Exact numbers in Q(sqrt 5).
//
// A Scalar is a + b*sqrt(5) with a, b arbitrary-precision rationals kept in
// lowest terms with positive denominators. The field tag is derived from the
// value: a scalar is RATIONAL exactly when its surd part is zero, so equal
// values always carry equal tags.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncshell/errors.hpp"

namespace ncshell {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Field { Rational, Quad5 };

class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : rational_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v) : rational_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational rational, Rational surd = Rational(0))
      : rational_(std::move(rational)), surd_(std::move(surd)) {}

  static Scalar fraction(long long p, long long q) {
    if (q == 0) throw ArithmeticError("zero denominator");
    return Scalar(make_rational(Integer(p), Integer(q)));
  }

  // sqrt(5)
  static Scalar root5() { return Scalar(Rational(0), Rational(1)); }

  // The golden ratio (1 + sqrt 5) / 2.
  static Scalar golden() {
    return Scalar(Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(2)));
  }

  const Rational& rational_part() const { return rational_; }
  const Rational& surd_part() const { return surd_; }
  Field field() const { return surd_ == 0 ? Field::Rational : Field::Quad5; }

  bool is_zero() const { return rational_ == 0 && surd_ == 0; }
  bool is_integer() const {
    return surd_ == 0 && boost::multiprecision::denominator(rational_) == 1;
  }

  // Exact sign of a + b*sqrt(5): case analysis on the signs of a and b,
  // then a^2 against 5 b^2 when they disagree.
  int sign() const {
    const int sa = rational_.sign();
    const int sb = surd_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const Rational a2 = rational_ * rational_;
    const Rational b2 = surd_ * surd_ * 5;
    // a > 0 > b: sign is sign(a^2 - 5b^2); a < 0 < b: the opposite.
    const int cmp = a2 > b2 ? 1 : (a2 < b2 ? -1 : 0);
    return sa > 0 ? cmp : -cmp;
  }

  Scalar conjugate() const { return Scalar(rational_, -surd_); }

  // a^2 - 5 b^2, rational.
  Rational norm() const { return rational_ * rational_ - surd_ * surd_ * 5; }

  Scalar operator-() const { return Scalar(-rational_, -surd_); }

  Scalar& operator+=(const Scalar& o) {
    rational_ += o.rational_;
    if (o.surd_ != 0) surd_ += o.surd_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    rational_ -= o.rational_;
    if (o.surd_ != 0) surd_ -= o.surd_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (surd_ == 0 && o.surd_ == 0) {
      rational_ *= o.rational_;
      return *this;
    }
    Rational a = rational_ * o.rational_ + surd_ * o.surd_ * 5;
    Rational b = rational_ * o.surd_ + surd_ * o.rational_;
    rational_ = std::move(a);
    surd_ = std::move(b);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    if (o.surd_ == 0) {
      rational_ /= o.rational_;
      if (surd_ != 0) surd_ /= o.rational_;
      return *this;
    }
    const Rational n = o.norm();
    *this *= o.conjugate();
    rational_ /= n;
    surd_ /= n;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rational_ == b.rational_ && a.surd_ == b.surd_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const {
    return static_cast<double>(rational_) + static_cast<double>(surd_) * 2.23606797749978969640;
  }

  // "p/q" when rational, "(p1/q1)+(p2/q2)*r5" otherwise.
  std::string str() const {
    if (surd_ == 0) return fraction_text(rational_);
    return "(" + fraction_text(rational_) + ")+(" + fraction_text(surd_) + ")*r5";
  }

  static Scalar parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    if (text.front() != '(') return Scalar(parse_fraction(text));
    // (p1/q1)+(p2/q2)*r5
    const auto close = text.find(')');
    if (close == std::string_view::npos || text.substr(close, 3) != ")+(" ||
        text.size() < close + 7 || text.substr(text.size() - 4) != ")*r5") {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    const auto first = text.substr(1, close - 1);
    const auto second = text.substr(close + 3, text.size() - 4 - (close + 3));
    Scalar out(parse_fraction(first), parse_fraction(second));
    return out;
  }

 private:
  static std::string fraction_text(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
  }

  static Integer parse_integer(std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) throw ParseError("malformed integer '" + std::string(s) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') {
        throw ParseError("malformed integer '" + std::string(s) + "'");
      }
    }
    return Integer(std::string(s));
  }

  static Rational parse_fraction(std::string_view s) {
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    const Integer p = parse_integer(s.substr(0, slash));
    const Integer q = parse_integer(s.substr(slash + 1));
    if (q == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return make_rational(p, q);
  }

  // Boost 1.74 rejects a negative denominator instead of moving the sign.
  static Rational make_rational(Integer p, Integer q) {
    if (q < 0) {
      p = -p;
      q = -q;
    }
    return Rational(p, q);
  }

  Rational rational_{0};
  Rational surd_{0};
};

enum class Cmp { LT, EQ, GT };

inline Cmp compare(const Scalar& a, const Scalar& b) {
  const auto o = a <=> b;
  if (o < 0) return Cmp::LT;
  if (o > 0) return Cmp::GT;
  return Cmp::EQ;
}

}  // namespace ncshell
