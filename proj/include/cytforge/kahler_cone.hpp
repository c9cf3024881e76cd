#pragma once

// Kahler-cone membership by the Nakai-Moishezon/Buchdahl conditions:
// Q(F,F) > 0, Q(F,D) > 0 for every irreducible negative curve D, and
// Q(F,A) > 0 for one ample class A.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "cytforge/surface.hpp"

namespace cytforge {

inline constexpr int kExceptionalDegreeBound = 6;

/// All integral D = aH - sum b_i E_i on the k-point blow-up with
/// Q(D,D) = -1, Q(D,-K) = 1 and 0 <= a <= max_degree, sorted.
inline std::vector<CohClass> enumerate_exceptional_classes(int k, int max_degree) {
  std::vector<std::vector<long long>> found;
  std::vector<long long> b(static_cast<std::size_t>(k));
  for (long long a = 0; a <= max_degree; ++a) {
    const long long squares = a * a + 1;  // sum b_i^2
    const long long linear = 3 * a - 1;   // sum b_i
    // depth-first over b_1..b_k with Cauchy-Schwarz and parity pruning
    auto rec = [&](auto&& self, std::size_t i, long long sq_left, long long lin_left) -> void {
      const auto remaining = static_cast<long long>(b.size() - i);
      if (remaining == 0) {
        if (sq_left == 0 && lin_left == 0) {
          std::vector<long long> d{a};
          for (auto x : b) d.push_back(-x);
          found.push_back(std::move(d));
        }
        return;
      }
      if (sq_left < 0 || lin_left * lin_left > remaining * sq_left) return;
      if (((sq_left - lin_left) % 2 + 2) % 2 != 0) return;
      long long lim = 0;
      while ((lim + 1) * (lim + 1) <= sq_left) ++lim;
      for (long long v = -lim; v <= lim; ++v) {
        b[i] = v;
        self(self, i + 1, sq_left - v * v, lin_left - v);
      }
      b[i] = 0;
    };
    rec(rec, 0, squares, linear);
  }
  std::sort(found.begin(), found.end());
  std::vector<CohClass> out;
  out.reserve(found.size());
  for (const auto& d : found) out.push_back(CohClass::from_integers(d));
  return out;
}

namespace detail {

inline const std::vector<CohClass>& cached_exceptional_classes(int k, int degree) {
  static std::shared_mutex mu;
  static std::map<std::pair<int, int>, std::vector<CohClass>> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find({k, degree});
    if (it != cache.end()) return it->second;
  }
  auto classes = enumerate_exceptional_classes(k, degree);
  std::unique_lock lock(mu);
  return cache.try_emplace({k, degree}, std::move(classes)).first->second;
}

}  // namespace detail

/// Irreducible curves of negative self-intersection, per the model's regime.
inline std::vector<CohClass> negative_curves(const SurfaceModel& m) {
  const std::size_t n = m.rank();
  switch (m.curve_regime) {
    case CurveRegime::None: return {};
    case CurveRegime::Explicit: return m.explicit_curves;
    case CurveRegime::Missing:
      throw Error(ErrorCode::MissingCurveData, "model '" + m.name + "' has no negative-curve list");
    case CurveRegime::DelPezzoEnumerated:
      return detail::cached_exceptional_classes(m.points, kExceptionalDegreeBound);
    case CurveRegime::OnCubic: {
      std::vector<CohClass> out;
      for (std::size_t i = 1; i < n; ++i) out.push_back(CohClass::unit(n, i));
      for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          CohClass c = CohClass::unit(n, 0);
          c[i] = -1;
          c[j] = -1;
          out.push_back(std::move(c));
        }
      if (m.points >= 10) out.push_back(m.c1);  // proper transform of the cubic, ~ -K
      return out;
    }
  }
  return {};
}

struct CurveCheck {
  CohClass curve;
  Scalar value;
  int sign = 0;
};

struct ConeCertificate {
  Scalar self_intersection;
  int self_sign = 0;
  std::vector<CurveCheck> curve_checks;
  CurveCheck ample_check;
  std::string ample_source;
  /// r with F = r * (-K), recorded when -K is ample and r > 0.
  std::optional<Scalar> anticanonical_multiple;
  bool verdict = false;
};

inline ConeCertificate is_kahler(const SurfaceModel& m, const CohClass& F,
                                 const std::optional<CohClass>& ample_override = std::nullopt) {
  if (F.size() != m.rank()) throw Error(ErrorCode::RankMismatch, "class length does not match rank");
  ConeCertificate cert;
  cert.self_intersection = m.intersect(F, F);
  cert.self_sign = exact_sign(cert.self_intersection);
  bool ok = cert.self_sign > 0;

  auto check = [&](const CohClass& c) {
    CurveCheck cc{c, m.intersect(F, c), 0};
    cc.sign = exact_sign(cc.value);
    ok = ok && cc.sign > 0;
    cert.curve_checks.push_back(std::move(cc));
  };
  for (const auto& c : negative_curves(m)) check(c);
  for (const auto& c : m.nef_generators) check(c);

  std::optional<CohClass> witness = ample_override ? ample_override : m.ample_witness;
  if (!witness) throw Error(ErrorCode::MissingAmpleWitness, "model '" + m.name + "' has no ample witness");
  if (witness->size() != m.rank()) throw Error(ErrorCode::RankMismatch, "ample witness length");
  cert.ample_source = ample_override ? "user" : m.ample_source;
  cert.ample_check = CurveCheck{*witness, m.intersect(F, *witness), 0};
  cert.ample_check.sign = exact_sign(cert.ample_check.value);
  ok = ok && cert.ample_check.sign > 0;

  if (m.anticanonical_ample) {
    if (auto r = proportionality(m.c1, F); r && r->sign() > 0) cert.anticanonical_multiple = *r;
  }
  cert.verdict = ok;
  return cert;
}

}  // namespace cytforge
