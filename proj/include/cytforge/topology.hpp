#pragma once

// Topology of the total space M of a principal T^2-bundle over a simply
// connected surface: Leray tables, Betti numbers, pairing witnesses, spin.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cytforge/cyt.hpp"

namespace cytforge {

/// Integral alpha, beta with Q(w1,alpha) = +-1, Q(w2,alpha) = 0,
/// Q(w1,beta) = 0, Q(w2,beta) = +-1.
struct PairingWitnesses {
  CohClass alpha;
  CohClass beta;
};

namespace detail {

inline void require_two_integral(const BundleSpec<SurfaceModel>& b) {
  if (b.curvatures.size() != 2)
    throw Error(ErrorCode::WrongFiberRank, "need exactly two curvature classes, got " +
                                               std::to_string(b.curvatures.size()));
  for (const auto& w : b.curvatures)
    if (!w.is_integral()) throw Error(ErrorCode::InvalidBundle, "curvature class not integral");
}

/// Row i is Q(w_i, -) in coordinates: (w_i^T G).
inline IntMatrix pairing_matrix(const BundleSpec<SurfaceModel>& b) {
  const SurfaceModel& m = b.model();
  IntMatrix P(b.curvatures.size(), m.rank());
  for (std::size_t i = 0; i < b.curvatures.size(); ++i) {
    IntVector w = b.curvatures[i].to_integers();
    for (std::size_t j = 0; j < m.rank(); ++j)
      for (std::size_t l = 0; l < m.rank(); ++l) P(i, j) += w[l] * m.gram(l, j);
  }
  return P;
}

inline Integer norm2(const IntVector& v) {
  Integer s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

// Greedy size reduction of x against a kernel basis: repeatedly add the
// nearest-integer multiple of a kernel vector while the Euclidean norm drops.
inline IntVector size_reduce(IntVector x, const std::vector<IntVector>& kernel) {
  for (bool improved = true; improved;) {
    improved = false;
    for (const auto& k : kernel) {
      Integer kk = norm2(k);
      if (kk == 0) continue;
      Integer dot = 0;
      for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * k[i];
      // nearest integer to dot / kk
      Integer q = (2 * dot + kk) / (2 * kk);
      if (2 * dot + kk < 0 && (2 * dot + kk) % (2 * kk) != 0) q -= 1;
      if (q == 0) continue;
      IntVector y = x;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] -= q * k[i];
      if (norm2(y) < norm2(x)) {
        x = std::move(y);
        improved = true;
      }
    }
  }
  return x;
}

}  // namespace detail

inline std::optional<PairingWitnesses> find_alpha_beta(const BundleSpec<SurfaceModel>& b) {
  detail::require_two_integral(b);
  IntMatrix P = detail::pairing_matrix(b);
  auto kernel = integer_kernel(P);
  auto solve_for = [&](std::size_t slot) -> std::optional<IntVector> {
    for (int s : {1, -1}) {
      IntVector t(2);
      t[slot] = s;
      if (auto x = solve_integer_linear(P, t)) return detail::size_reduce(*x, kernel);
    }
    return std::nullopt;
  };
  auto a = solve_for(0);
  if (!a) return std::nullopt;
  auto bt = solve_for(1);
  if (!bt) return std::nullopt;
  return PairingWitnesses{CohClass::from_integers(*a), CohClass::from_integers(*bt)};
}

/// Pairings (Q(w1,a), Q(w2,a), Q(w1,b), Q(w2,b)).
inline std::array<Scalar, 4> witness_pairings(const BundleSpec<SurfaceModel>& b, const PairingWitnesses& w) {
  const SurfaceModel& m = b.model();
  const CohClass& w1 = b.curvatures.at(0);
  const CohClass& w2 = b.curvatures.at(1);
  return {m.intersect(w1, w.alpha), m.intersect(w2, w.alpha), m.intersect(w1, w.beta), m.intersect(w2, w.beta)};
}

inline bool check_alpha_beta(const BundleSpec<SurfaceModel>& b, const PairingWitnesses& w) {
  detail::require_two_integral(b);
  if (!w.alpha.is_integral() || !w.beta.is_integral()) return false;
  auto p = witness_pairings(b, w);
  auto unit = [](const Scalar& s) { return s == Scalar(1) || s == Scalar(-1); };
  return unit(p[0]) && p[1].is_zero() && p[2].is_zero() && unit(p[3]);
}

/// Ranks of E2 and E3 = E_infinity, indexed [q][p] with q = 0..2, p = 0..4.
struct SpectralTables {
  using Grid = std::array<std::array<long long, 5>, 3>;
  Grid e2{};
  Grid e3{};
  std::array<long long, 7> betti{};
  long long euler_characteristic = 0;
};

namespace detail {

inline long long rank_of(const IntMatrix& A) { return static_cast<long long>(integer_rank(A)); }

// Assumes the hypotheses were checked by the caller.
inline SpectralTables spectral_tables_unchecked(const BundleSpec<SurfaceModel>& b) {
  const SurfaceModel& m = b.model();
  const std::size_t n = m.rank();
  const IntVector w1 = b.curvatures[0].to_integers();
  const IntVector w2 = b.curvatures[1].to_integers();
  const IntMatrix P = detail::pairing_matrix(b);

  // d(0,1): H^0 x H^1 -> H^2 x H^0, theta_i -> w_i
  IntMatrix d01(n, 2);
  // d(0,2): H^0 x H^2 -> H^2 x H^1, theta1 theta2 -> w1 theta2 - w2 theta1
  IntMatrix d02(2 * n, 1);
  // d(2,1): H^2 x H^1 -> H^4 x H^0, x theta_i -> Q(x, w_i)
  IntMatrix d21(1, 2 * n);
  // d(2,2): H^2 x H^2 -> H^4 x H^1, x theta1 theta2 -> Q(x,w1) theta2 - Q(x,w2) theta1
  IntMatrix d22(2, n);
  for (std::size_t j = 0; j < n; ++j) {
    d01(j, 0) = w1[j];
    d01(j, 1) = w2[j];
    d02(j, 0) = -w2[j];
    d02(n + j, 0) = w1[j];
    d21(0, j) = P(0, j);
    d21(0, n + j) = P(1, j);
    d22(0, j) = -P(1, j);
    d22(1, j) = P(0, j);
  }
  const long long r01 = detail::rank_of(d01), r02 = detail::rank_of(d02);
  const long long r21 = detail::rank_of(d21), r22 = detail::rank_of(d22);
  const auto bb = static_cast<long long>(n);

  SpectralTables t;
  const std::array<long long, 3> fiber{1, 2, 1};
  const std::array<long long, 5> base{1, 0, bb, 0, 1};
  for (int q = 0; q < 3; ++q)
    for (int p = 0; p < 5; ++p) t.e2[q][p] = base[p] * fiber[q];
  t.e3 = t.e2;
  t.e3[1][0] -= r01;
  t.e3[0][2] -= r01;
  t.e3[2][0] -= r02;
  t.e3[1][2] -= r02 + r21;
  t.e3[0][4] -= r21;
  t.e3[2][2] -= r22;
  t.e3[1][4] -= r22;
  // d3 would go from p to p+3, between a zero column and a nonzero one
  for (int q = 0; q < 3; ++q)
    for (int p = 0; p < 5; ++p) t.betti[static_cast<std::size_t>(p + q)] += t.e3[q][p];
  for (std::size_t i = 0; i < t.betti.size(); ++i)
    t.euler_characteristic += (i % 2 == 0 ? 1 : -1) * t.betti[i];
  return t;
}

}  // namespace detail

/// The d2 differentials are cup product with the curvature classes.
inline SpectralTables spectral_tables(const BundleSpec<SurfaceModel>& b) {
  detail::require_two_integral(b);
  if (!find_alpha_beta(b))
    throw Error(ErrorCode::HypothesesNotMet, "no pairing witnesses alpha, beta");
  if (!basis_extension_check(b.model(), b.curvatures))
    throw Error(ErrorCode::HypothesesNotMet, "curvature classes do not extend to a basis of H^2(X,Z)");
  return detail::spectral_tables_unchecked(b);
}

struct TopologyCertificate {
  bool basis_extension = false;
  std::optional<PairingWitnesses> witnesses;
  IntVector pairing_snf;
  bool simply_connected_surrogate = false;
  bool spin_integral = false;
  bool spin_mod2 = false;
  std::optional<SpectralTables> tables;
  std::string diffeo_label = "unclassified";

  bool classified() const { return diffeo_label != "unclassified"; }
};

inline std::string connected_sum_label(long long m) {
  if (m == 0) return "S³×S³";
  return std::to_string(m) + "(S²×S⁴) # " + std::to_string(m + 1) + "(S³×S³)";
}

inline TopologyCertificate topology_certificate(const BundleSpec<SurfaceModel>& b) {
  const SurfaceModel& m = b.model();
  if (!m.simply_connected)
    throw Error(ErrorCode::NotSimplyConnected, "base '" + m.name + "' is not flagged simply connected");
  detail::require_two_integral(b);
  TopologyCertificate c;
  c.basis_extension = basis_extension_check(m, b.curvatures);
  c.witnesses = find_alpha_beta(b);
  SmithForm f = snf(detail::pairing_matrix(b));
  c.pairing_snf = f.invariant_factors();
  c.simply_connected_surrogate = c.pairing_snf == IntVector{1, 1};
  c.spin_integral = c1_bundle_triviality(b);
  c.spin_mod2 = mod2_membership(m, m.c1, b.curvatures);
  if (c.basis_extension && c.witnesses) c.tables = detail::spectral_tables_unchecked(b);
  if (c.tables && c.simply_connected_surrogate && c.spin_mod2)
    c.diffeo_label = connected_sum_label(c.tables->betti[2]);
  return c;
}

}  // namespace cytforge
