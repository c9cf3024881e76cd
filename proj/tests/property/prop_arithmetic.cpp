#include <gtest/gtest.h>

#include <mpfr.h>

#include "support/property.hpp"

using namespace cytforge;

namespace {

constexpr std::size_t kCases = 2000;

std::string fail(const std::string& what, const Scalar& x, const Scalar& y) {
  return what + " for " + x.str() + " and " + y.str();
}

// Encloses a + b sqrt(d) in [lo, hi] with 200-bit directed rounding.
class Interval {
 public:
  Interval() {
    mpfr_inits2(200, lo_, hi_, t_, u_, static_cast<mpfr_ptr>(nullptr));
  }
  ~Interval() { mpfr_clears(lo_, hi_, t_, u_, static_cast<mpfr_ptr>(nullptr)); }
  Interval(const Interval&) = delete;
  Interval& operator=(const Interval&) = delete;

  // -1, 0, +1 when the enclosure decides the sign, 2 when it straddles zero
  int sign(const Scalar& x) {
    enclose(x.rational_part(), lo_, MPFR_RNDD);
    enclose(x.rational_part(), hi_, MPFR_RNDU);
    if (!x.is_rational()) {
      surd(x, t_, MPFR_RNDD, MPFR_RNDU);
      mpfr_add(lo_, lo_, t_, MPFR_RNDD);
      surd(x, t_, MPFR_RNDU, MPFR_RNDD);
      mpfr_add(hi_, hi_, t_, MPFR_RNDU);
    }
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
    return 2;
  }

 private:
  void enclose(const Rational& q, mpfr_t out, mpfr_rnd_t rnd) {
    mpfr_set_str(t_, boost::multiprecision::numerator(q).str().c_str(), 10, rnd);
    // dividing by a positive denominator: rounding in the same direction
    mpfr_set_str(u_, boost::multiprecision::denominator(q).str().c_str(), 10, MPFR_RNDN);
    mpfr_div(out, t_, u_, rnd);
  }

  // b sqrt(d) rounded so that the result lies on the side of `outer`;
  // when b < 0 the roles of the two rounding directions swap
  void surd(const Scalar& x, mpfr_t out, mpfr_rnd_t outer, mpfr_rnd_t inner) {
    mpfr_t b, s;
    mpfr_inits2(200, b, s, static_cast<mpfr_ptr>(nullptr));
    const Rational& q = x.surd_coefficient();
    const bool neg = q < 0;
    mpfr_rnd_t dir = neg ? inner : outer;
    mpfr_set_str(s, x.radicand().str().c_str(), 10, MPFR_RNDN);
    mpfr_sqrt(s, s, dir);
    Rational mag = neg ? Rational(-q) : q;
    mpfr_set_str(b, boost::multiprecision::numerator(mag).str().c_str(), 10, MPFR_RNDN);
    mpfr_mul(out, b, s, dir);
    mpfr_set_str(b, boost::multiprecision::denominator(mag).str().c_str(), 10, MPFR_RNDN);
    mpfr_div(out, out, b, dir);
    if (neg) mpfr_neg(out, out, MPFR_RNDN);
    mpfr_clears(b, s, static_cast<mpfr_ptr>(nullptr));
  }

  mpfr_t lo_, hi_, t_, u_;
};

// a rational within about 10^-digits of -b sqrt(d): large cancellations
Scalar near_cancellation(prop::Gen& g, const Integer& d) {
  Rational b = g.nonzero_rational(200, 30);
  const int digits = static_cast<int>(g.integer(3, 25));
  Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
  // floor(b^2 d scale^2) then integer square root gives |b| sqrt(d) scale truncated
  Rational sq = b * b * Rational(d) * Rational(scale * scale);
  Integer n = boost::multiprecision::numerator(sq) / boost::multiprecision::denominator(sq);
  Integer r = boost::multiprecision::sqrt(n) + g.integer(-1, 1);
  Rational a(r, scale);
  if (b > 0) a = -a;
  return Scalar(a, b, d);
}

}  // namespace

TEST(FieldAxioms, QuadraticField) {
  auto out = prop::check(kCases, 11, [](prop::Gen& g) -> std::string {
    Integer d = g.radicand();
    Scalar x = g.scalar_in(d), y = g.scalar_in(d), z = g.scalar_in(d);
    if (x + y != y + x) return fail("addition not commutative", x, y);
    if (x * y != y * x) return fail("multiplication not commutative", x, y);
    if ((x + y) + z != x + (y + z)) return fail("addition not associative", x, y);
    if ((x * y) * z != x * (y * z)) return fail("multiplication not associative", x, y);
    if (x * (y + z) != x * y + x * z) return fail("not distributive", x, y);
    if (x - x != Scalar(0)) return fail("x - x != 0", x, x);
    if (x + Scalar(0) != x || x * Scalar(1) != x) return fail("identity", x, x);
    if (!y.is_zero()) {
      if ((x / y) * y != x) return fail("(x/y)*y != x", x, y);
      if (y * (Scalar(1) / y) != Scalar(1)) return fail("inverse", y, y);
    }
    if ((x * x.conjugate()).str() != Scalar(x.norm()).str()) return fail("norm", x, x);
    if (Scalar::parse(x.str()) != x) return fail("text round trip", x, x);
    return {};
  });
  EXPECT_TRUE(out.ok) << out.message;
  EXPECT_GE(out.cases, 1000u);
}

TEST(FieldAxioms, OrderIsCompatible) {
  auto out = prop::check(kCases, 12, [](prop::Gen& g) -> std::string {
    Integer d = g.radicand();
    Scalar x = g.scalar_in(d), y = g.scalar_in(d), z = g.scalar_in(d);
    if (exact_sign(x * y) != exact_sign(x) * exact_sign(y)) return fail("sign not multiplicative", x, y);
    if (x < y && !(x + z < y + z)) return fail("order not translation invariant", x, y);
    if (exact_sign(-x) != -exact_sign(x)) return fail("sign of negation", x, x);
    return {};
  });
  EXPECT_TRUE(out.ok) << out.message;
}

TEST(ExactSign, AgreesWithIntervalOracle) {
  Interval iv;
  std::size_t decided = 0;
  auto out = prop::check(kCases, 13, [&](prop::Gen& g) -> std::string {
    Integer d = g.radicand();
    Scalar x = g.coin() ? near_cancellation(g, d) : g.scalar_in(d, 1000, 97);
    int s = exact_sign(x);
    int o = iv.sign(x);
    if (o == 2) {
      // the enclosure contains zero; only the exact zero is allowed here
      return x.is_zero() ? std::string() : "200-bit enclosure too wide for " + x.str();
    }
    ++decided;
    if (s != o) return "exact_sign " + std::to_string(s) + " vs oracle " + std::to_string(o) + " for " + x.str();
    return {};
  });
  EXPECT_TRUE(out.ok) << out.message;
  EXPECT_GE(decided, 1000u);
}

TEST(ExactSign, ZeroOnlyForZero) {
  auto out = prop::check(kCases, 14, [](prop::Gen& g) -> std::string {
    Integer d = g.radicand();
    Scalar x = g.scalar_in(d);
    if ((exact_sign(x) == 0) != x.is_zero()) return "zero test disagrees for " + x.str();
    if (exact_sign(x - x) != 0) return "x - x not zero for " + x.str();
    return {};
  });
  EXPECT_TRUE(out.ok) << out.message;
}

TEST(SolveQuadratic, RootsSubstitute) {
  auto out = prop::check(kCases, 15, [](prop::Gen& g) -> std::string {
    Rational a = g.nonzero_rational(20, 5), b = g.rational(40, 5), c = g.rational(40, 5);
    Rational disc = b * b - 4 * a * c;
    if (disc < 0) {
      try {
        solve_quadratic(a, b, c);
        return "no NoRealRoots for discriminant " + to_text(disc);
      } catch (const Error& e) {
        return e.code() == ErrorCode::NoRealRoots ? std::string() : std::string("wrong error code");
      }
    }
    auto roots = solve_quadratic(a, b, c);
    const std::size_t want = disc > 0 ? 2 : 1;
    if (roots.size() != want) return "root count for disc " + to_text(disc);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const Scalar& n = roots[i];
      if (!(Scalar(a) * n * n + Scalar(b) * n + Scalar(c)).is_zero()) return "root " + n.str() + " does not vanish";
      if (i > 0 && !(roots[i - 1] < n)) return "roots not increasing";
    }
    return {};
  });
  EXPECT_TRUE(out.ok) << out.message;
}
