#pragma once

// Exact scalars: rationals and elements a + b*sqrt(d) of one real quadratic
// field. Every sign used in a verdict comes from exact_sign, never a double.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cytforge/error.hpp"

namespace cytforge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Integer& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return x.sign(); }

inline std::string to_text(const Integer& x) { return x.str(); }

inline std::string to_text(const Rational& r) {
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

namespace detail {

struct SquareFreeSplit {
  Integer root;      // n = root^2 * radicand
  Integer radicand;  // square-free, >= 1
};

// Trial division; the radicands met here come from small integer data.
inline SquareFreeSplit split_square_free(const Integer& n) {
  if (n <= 0) throw Error(ErrorCode::InvalidRadicand, "square-free split needs n > 0");
  SquareFreeSplit out{1, 1};
  Integer m = n;
  constexpr std::uint64_t kCap = 2'000'000;
  for (std::uint64_t p = 2; p <= kCap; p += (p == 2 ? 1 : 2)) {
    Integer pp = Integer(p) * p;
    if (pp > m) break;
    while (m % pp == 0) {
      m /= pp;
      out.root *= p;
    }
    if (m % p == 0) {
      m /= p;
      out.radicand *= p;
    }
  }
  // m has no prime factor <= kCap left. Below kCap^3 it has at most two
  // prime factors, so it is either a perfect square or square-free.
  Integer r = boost::multiprecision::sqrt(m);
  if (r * r == m) {
    out.root *= r;
  } else if (m < Integer(kCap) * kCap * kCap) {
    out.radicand *= m;
  } else {
    throw Error(ErrorCode::InvalidRadicand, "cannot certify square-free part of " + n.str());
  }
  return out;
}

inline bool is_square_free(const Integer& d) {
  if (d < 2) return false;
  return split_square_free(d).root == 1;
}

}  // namespace detail

/// Exact real number a + b*sqrt(d). Rational values carry b = 0 and d = 0.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}
  Scalar(long v) : a_(v) {}
  Scalar(long long v) : a_(v) {}
  Scalar(const Integer& v) : a_(v) {}
  Scalar(Rational r) : a_(std::move(r)) {}

  /// d must be square-free and >= 2.
  Scalar(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (!detail::is_square_free(d_))
      throw Error(ErrorCode::InvalidRadicand, "radicand " + d_.str() + " is not square-free >= 2");
    canonicalize();
  }

  /// Exact square root of a non-negative rational, reduced over its square-free part.
  static Scalar sqrt_of(const Rational& r) {
    if (r < 0) throw Error(ErrorCode::NoRealRoots, "square root of negative rational");
    if (r == 0) return Scalar();
    const Integer& p = boost::multiprecision::numerator(r);
    const Integer& q = boost::multiprecision::denominator(r);
    // sqrt(p/q) = sqrt(p*q)/q
    auto split = detail::split_square_free(p * q);
    Rational coeff(split.root, q);
    if (split.radicand == 1) return Scalar(coeff);
    Scalar s;
    s.b_ = coeff;
    s.d_ = split.radicand;
    return s;
  }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  /// 0 for rational values.
  const Integer& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return is_rational() && cytforge::is_integer(a_); }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  std::optional<Rational> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return a_;
  }

  int sign() const {
    int sa = sign_of(a_);
    int sb = sign_of(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with b^2 d
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
  }

  Scalar conjugate() const {
    Scalar s = *this;
    s.b_ = -s.b_;
    return s;
  }

  /// Field norm a^2 - b^2 d.
  Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

  Scalar operator-() const {
    Scalar s = *this;
    s.a_ = -s.a_;
    s.b_ = -s.b_;
    return s;
  }

  Scalar& operator+=(const Scalar& y) {
    if (d_ == 0 && y.d_ == 0) {
      a_ += y.a_;
      return *this;
    }
    Integer d = common_radicand(*this, y);
    a_ += y.a_;
    b_ += y.b_;
    d_ = d;
    canonicalize();
    return *this;
  }
  Scalar& operator-=(const Scalar& y) { return *this += -y; }

  Scalar& operator*=(const Scalar& y) {
    if (d_ == 0 && y.d_ == 0) {
      a_ *= y.a_;
      return *this;
    }
    Integer d = common_radicand(*this, y);
    Rational a = a_ * y.a_;
    Rational b = a_ * y.b_ + b_ * y.a_;
    if (d != 0) a += b_ * y.b_ * Rational(d);
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    canonicalize();
    return *this;
  }

  Scalar& operator/=(const Scalar& y) {
    if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero scalar");
    common_radicand(*this, y);
    Rational n = y.norm();
    Scalar inv = y.conjugate();
    inv.a_ /= n;
    inv.b_ /= n;
    return *this *= inv;
  }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

  /// Throws MixedField when the two surds live in different fields.
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Canonical text: "p/q" or "p/q+r/s*sqrt(d)" (denominator 1 elided).
  std::string str() const {
    if (is_rational()) return to_text(a_);
    std::string out = to_text(a_);
    out += (b_ > 0) ? "+" : "-";
    Rational mag = b_ > 0 ? b_ : Rational(-b_);
    out += to_text(mag) + "*sqrt(" + d_.str() + ")";
    return out;
  }

  /// Human-readable approximation only; never used in a verdict.
  double approx() const {
    double a = a_.convert_to<double>();
    if (is_rational()) return a;
    return a + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
  }

  static Scalar parse(std::string_view text);

 private:
  static Integer common_radicand(const Scalar& x, const Scalar& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw Error(ErrorCode::MixedField,
                "sqrt(" + x.d_.str() + ") and sqrt(" + y.d_.str() + ") in one expression");
  }

  void canonicalize() {
    if (b_ == 0) d_ = 0;
  }

  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

inline int exact_sign(const Scalar& x) { return x.sign(); }

namespace detail {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  Scalar parse_all() {
    Scalar v = parse_expr();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                "scalar '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_with_sqrt() const { return s_.substr(pos_, 5) == "sqrt("; }

  Integer parse_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Rational parse_unsigned_rational() {
    Integer num = parse_digits();
    if (eat('/')) {
      Integer den = parse_digits();
      if (den == 0) fail("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  Scalar parse_sqrt() {
    pos_ += 5;
    Integer d = parse_digits();
    if (!eat(')')) fail("expected ')'");
    return Scalar::sqrt_of(Rational(d));
  }

  // term := rational | rational '*' sqrt(d) | sqrt(d)
  Scalar parse_term() {
    if (starts_with_sqrt()) return parse_sqrt();
    Rational r = parse_unsigned_rational();
    if (eat('*')) {
      if (!starts_with_sqrt()) fail("expected sqrt( after '*'");
      return Scalar(r) * parse_sqrt();
    }
    return Scalar(r);
  }

  Scalar parse_expr() {
    if (s_.empty()) fail("empty");
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Scalar v = parse_term();
    if (neg) v = -v;
    while (pos_ < s_.size()) {
      bool minus;
      if (eat('+')) minus = false;
      else if (eat('-')) minus = true;
      else break;
      Scalar t = parse_term();
      v = minus ? v - t : v + t;
    }
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) { return detail::ScalarParser(text).parse_all(); }

/// Real roots of A x^2 + B x + C, ascending. A = 0 gives the linear root.
inline std::vector<Scalar> solve_quadratic(const Rational& A, const Rational& B, const Rational& C) {
  if (A == 0 && B == 0 && C == 0)
    throw Error(ErrorCode::DegenerateAllZero, "all coefficients zero");
  if (A == 0) {
    if (B == 0) return {};
    return {Scalar(Rational(-C / B))};
  }
  Rational disc = B * B - 4 * A * C;
  if (disc < 0) throw Error(ErrorCode::NoRealRoots, "discriminant " + to_text(disc) + " < 0");
  Scalar two_a(Rational(2 * A));
  Scalar minus_b(Rational(-B));
  if (disc == 0) return {minus_b / two_a};
  Scalar root = Scalar::sqrt_of(disc);
  std::vector<Scalar> out{(minus_b - root) / two_a, (minus_b + root) / two_a};
  if (out[1] < out[0]) std::swap(out[0], out[1]);
  return out;
}

}  // namespace cytforge
