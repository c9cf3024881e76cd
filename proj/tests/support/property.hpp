#pragma once

// Minimal property harness: seeded generators plus a runner that reports
// the case index and seed of the first counterexample.

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cytforge/arithmetic.hpp"
#include "cytforge/surface.hpp"

namespace prop {

using cytforge::CohClass;
using cytforge::Integer;
using cytforge::Rational;
using cytforge::Scalar;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long long integer(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long long num = 50, long long den = 12) {
    long long q = integer(1, den);
    return Rational(integer(-num, num), q);
  }

  Rational nonzero_rational(long long num = 50, long long den = 12) {
    for (;;) {
      Rational r = rational(num, den);
      if (r != 0) return r;
    }
  }

  /// Square-free radicands used by the field generators.
  Integer radicand() {
    static const long long choices[] = {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 21, 30, 114, 161};
    return Integer(choices[integer(0, 13)]);
  }

  Scalar scalar_in(const Integer& d, long long num = 50, long long den = 12) {
    Rational a = rational(num, den), b = coin() ? rational(num, den) : Rational(0);
    if (b == 0) return Scalar(a);
    return Scalar(a, b, d);
  }

  std::vector<long long> int_vector(std::size_t n, long long bound) {
    std::vector<long long> v(n);
    for (auto& x : v) x = integer(-bound, bound);
    return v;
  }

  CohClass int_class(std::size_t n, long long bound) { return CohClass::from_integers(int_vector(n, bound)); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct Outcome {
  bool ok = true;
  std::size_t cases = 0;
  std::string message;
};

/// Runs prop(gen) for `cases` independent seeds derived from `seed`.
/// prop returns an empty string on success, otherwise a description.
inline Outcome check(std::size_t cases, std::uint64_t seed, const std::function<std::string(Gen&)>& property) {
  Outcome out;
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t s = seed * 0x9e3779b97f4a7c15ULL + i;
    Gen g(s);
    std::string why;
    try {
      why = property(g);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    ++out.cases;
    if (!why.empty()) {
      std::ostringstream os;
      os << "case " << i << " (seed " << s << "): " << why;
      out.ok = false;
      out.message = os.str();
      return out;
    }
  }
  return out;
}

}  // namespace prop
