#pragma once

// Cohomological CYT condition for principal torus bundles over surfaces.
//
// With [rho_X] identified with c1(X), the bundle with curvature classes
// (w_1, ..., w_2k) over a Kahler class F is CYT when the defect
//     c1(X) - sum_l Lambda(w_l) w_l,   Lambda(w) = 2 Q(w,F) / Q(F,F),
// vanishes. Lambda scales like 1/s under F -> s F, so the condition fixes the
// scale of F along a ray.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cytforge/kahler_cone.hpp"
#include "cytforge/surface.hpp"

namespace cytforge {

/// Complex dimension of every built-in base.
inline constexpr int kBaseComplexDimension = 2;

template <PairingLattice M>
struct BundleSpec {
  std::shared_ptr<const M> base;
  std::vector<CohClass> curvatures;

  const M& model() const { return *base; }
  std::size_t fiber_rank() const { return curvatures.size(); }
};

/// Validates: even fiber rank, integral classes of the model's rank.
template <PairingLattice M>
BundleSpec<M> make_bundle(std::shared_ptr<const M> base, std::vector<CohClass> curvatures) {
  if (!base) throw Error(ErrorCode::InvalidBundle, "bundle without base model");
  if (curvatures.empty() || curvatures.size() % 2 != 0)
    throw Error(ErrorCode::InvalidBundle, "torus fiber must have even positive rank, got " +
                                              std::to_string(curvatures.size()));
  for (const auto& w : curvatures) {
    if (w.size() != base->rank()) throw Error(ErrorCode::RankMismatch, "curvature class length");
    if (!w.is_integral()) throw Error(ErrorCode::InvalidBundle, "curvature class " + w.str() + " is not integral");
  }
  return BundleSpec<M>{std::move(base), std::move(curvatures)};
}

template <PairingLattice M>
BundleSpec<M> make_bundle(M base, std::vector<CohClass> curvatures) {
  return make_bundle(std::make_shared<const M>(std::move(base)), std::move(curvatures));
}

template <PairingLattice M>
Scalar lambda_trace(const M& m, const CohClass& w, const CohClass& F) {
  Scalar ff = m.intersect(F, F);
  if (ff.is_zero()) throw Error(ErrorCode::NullClass, "Q(F,F) = 0 for F = " + F.str());
  return Scalar(kBaseComplexDimension) * m.intersect(w, F) / ff;
}

/// n * (w . F^{n-1}) / F^n from externally supplied top intersections.
inline Scalar lambda_trace_general(int complex_dimension, const Scalar& w_dot_F_pow, const Scalar& F_pow_n) {
  if (F_pow_n.is_zero()) throw Error(ErrorCode::NullClass, "F^n = 0");
  return Scalar(complex_dimension) * w_dot_F_pow / F_pow_n;
}

namespace detail {

template <PairingLattice M>
CohClass trace_sum(const BundleSpec<M>& b, const CohClass& F, std::vector<Scalar>* lambdas = nullptr) {
  CohClass sum = CohClass::zero(b.model().rank());
  for (const auto& w : b.curvatures) {
    Scalar l = lambda_trace(b.model(), w, F);
    if (lambdas) lambdas->push_back(l);
    if (!l.is_zero()) sum += l * w;
  }
  return sum;
}

}  // namespace detail

inline CohClass cyt_defect(const BundleSpec<SurfaceModel>& b, const CohClass& F) {
  return b.model().c1 - detail::trace_sum(b, F);
}

/// Unique s > 0 with cyt_defect(b, s * ray) = 0. If c1 = 0 and the trace sum
/// vanishes every scale works and 1 is returned.
inline std::optional<Scalar> solve_scale(const BundleSpec<SurfaceModel>& b, const CohClass& ray) {
  const SurfaceModel& m = b.model();
  if (ray.size() != m.rank()) throw Error(ErrorCode::RankMismatch, "ray length");
  if (exact_sign(m.intersect(ray, ray)) <= 0)
    throw Error(ErrorCode::NotPositiveRay, "Q(ray,ray) <= 0 for ray " + ray.str());
  // defect(s ray) = c1 - (1/s) S with S the trace sum along the ray
  CohClass S = detail::trace_sum(b, ray);
  if (m.c1.is_zero()) {
    if (S.is_zero()) return Scalar(1);
    return std::nullopt;
  }
  auto r = proportionality(m.c1, S);
  if (!r || !r->is_rational() || r->sign() <= 0) return std::nullopt;
  return r;
}

struct CytCertificate {
  std::vector<Scalar> lambdas;
  CohClass defect;
  bool defect_zero = false;
  bool integral = false;
  ConeCertificate cone;
  /// When the defect is nonzero but vanishes at s * F for some s != 1.
  std::optional<Scalar> scale_along_F;
  bool verdict = false;
};

inline CytCertificate verify_cyt(const BundleSpec<SurfaceModel>& b, const CohClass& F,
                                 const std::optional<CohClass>& ample_override = std::nullopt) {
  const SurfaceModel& m = b.model();
  CytCertificate cert;
  cert.integral = true;
  for (const auto& w : b.curvatures) cert.integral = cert.integral && w.is_integral();
  CohClass sum = detail::trace_sum(b, F, &cert.lambdas);
  cert.defect = m.c1 - sum;
  cert.defect_zero = cert.defect.is_zero();
  cert.cone = is_kahler(m, F, ample_override);
  if (!cert.defect_zero && cert.cone.self_sign > 0) {
    if (auto s = solve_scale(b, F); s && *s != Scalar(1)) cert.scale_along_F = s;
  }
  cert.verdict = cert.defect_zero && cert.cone.verdict && cert.integral;
  return cert;
}

/// rho^t = c1 + ((t-1)/2) sum Lambda(w) w  =  constant_class + t * linear_class.
struct RicciPolynomial {
  CohClass constant_class;
  CohClass linear_class;

  CohClass evaluate(const Scalar& t) const { return constant_class + t * linear_class; }
  bool is_identically_zero() const { return constant_class.is_zero() && linear_class.is_zero(); }
};

inline RicciPolynomial canonical_ricci_class(const BundleSpec<SurfaceModel>& b, const CohClass& F) {
  CohClass half_sum = detail::trace_sum(b, F) / Scalar(2);
  return RicciPolynomial{b.model().c1 - half_sum, half_sum};
}

/// c1(X) in the Z-span of the curvature classes, i.e. c1(M) = 0.
inline bool c1_bundle_triviality(const BundleSpec<SurfaceModel>& b) {
  const SurfaceModel& m = b.model();
  IntMatrix cols = coefficient_matrix(b.curvatures).transpose();
  return solve_integer_linear(cols, m.c1.to_integers()).has_value();
}

/// Lambda(w_l) = 0 for all l. On functional models only the declared
/// pairings Q(F, w_l) are consulted.
template <PairingLattice M>
bool balanced_check(const BundleSpec<M>& b, const CohClass& F) {
  const M& m = b.model();
  if (auto ff = m.try_intersect(F, F); ff && ff->is_zero())
    throw Error(ErrorCode::NullClass, "Q(F,F) = 0 for F = " + F.str());
  for (const auto& w : b.curvatures)
    if (!m.intersect(w, F).is_zero()) return false;
  return true;
}

/// Kahler-Einstein route: w_1 a positive rational multiple of F, the other
/// classes primitive, and c1 a positive rational multiple of F.
inline bool primitive_route_check(const BundleSpec<SurfaceModel>& b, const CohClass& F) {
  const SurfaceModel& m = b.model();
  if (m.intersect(F, F).is_zero()) throw Error(ErrorCode::NullClass, "Q(F,F) = 0");
  auto positive_rational_multiple = [&](const CohClass& x) {
    auto r = proportionality(F, x);
    return r && r->is_rational() && r->sign() > 0;
  };
  if (!positive_rational_multiple(b.curvatures.front())) return false;
  for (std::size_t l = 1; l < b.curvatures.size(); ++l)
    if (!lambda_trace(m, b.curvatures[l], F).is_zero()) return false;
  return positive_rational_multiple(m.c1);
}

// ---------------------------------------------------------------------------
// symmetric ansatz on the k-point blow-up along a cubic, k >= 9

struct AnsatzSolution {
  int k = 0;
  Scalar n;
  Scalar n_1to4;
  Scalar n_rest;
  CohClass F;
  CohClass omega1;
  CohClass omega2;
  ConeCertificate cone;
};

/// w1 = 4H - 2(E1+..+E4) - (E5+..+Ek), w2 = -H + E1+..+E4.
inline std::pair<CohClass, CohClass> ansatz_curvatures(int k) {
  const auto n = static_cast<std::size_t>(k) + 1;
  CohClass w1 = CohClass::zero(n), w2 = CohClass::zero(n);
  w1[0] = 4;
  w2[0] = -1;
  for (std::size_t i = 1; i < n; ++i) {
    w1[i] = i <= 4 ? -2 : -1;
    w2[i] = i <= 4 ? 1 : 0;
  }
  return {w1, w2};
}

/// F = nH - n_1to4 (E1+..+E4) - n_rest (E5+..+Ek) with Q(F,F) = 4 and
/// Q(w1,F) = Q(w2,F) = 2. The quadratic in n is
/// (3k-28) n^2 + (112-4k) n - (20k+64) = 0; the smallest root with n > 3 and
/// F in the Kahler cone is returned.
inline std::optional<AnsatzSolution> solve_symmetric_ansatz(int k) {
  if (k < 9) return std::nullopt;
  SurfaceModel m = blowup_cp2(k, Position::OnCubic);
  auto [w1, w2] = ansatz_curvatures(k);
  auto roots = solve_quadratic(Rational(3 * k - 28), Rational(112 - 4 * k), Rational(-(20 * k + 64)));
  for (const auto& n : roots) {
    if (exact_sign(n - Scalar(3)) <= 0) continue;
    AnsatzSolution sol;
    sol.k = k;
    sol.n = n;
    sol.n_1to4 = (n + Scalar(2)) / Scalar(4);
    sol.n_rest = (Scalar(2) * n - Scalar(6)) / Scalar(k - 4);
    sol.F = CohClass::zero(m.rank());
    sol.F[0] = n;
    for (std::size_t i = 1; i < m.rank(); ++i) sol.F[i] = -(i <= 4 ? sol.n_1to4 : sol.n_rest);
    if (m.intersect(sol.F, sol.F) != Scalar(4) || m.intersect(w1, sol.F) != Scalar(2) ||
        m.intersect(w2, sol.F) != Scalar(2))
      continue;
    sol.cone = is_kahler(m, sol.F);
    if (!sol.cone.verdict) continue;
    sol.omega1 = w1;
    sol.omega2 = w2;
    return sol;
  }
  return std::nullopt;
}

}  // namespace cytforge
