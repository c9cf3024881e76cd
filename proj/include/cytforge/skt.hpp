#pragma once

// Strong-KT condition at the level of cohomology: the sum of the
// self-intersections of the curvature classes must vanish. Only a necessary
// condition; no Hermitian metric is built here.

#include <string>
#include <vector>

#include "cytforge/cyt.hpp"

namespace cytforge {

inline constexpr const char* kSktScopeNote =
    "necessary cohomological condition only; Hermitian metric construction not certified";

/// w = trace_coefficient * F + primitive with Q(primitive, F) = 0.
struct HodgeEntry {
  Scalar trace_coefficient;
  CohClass primitive;
  Scalar primitive_square;
};

struct SktReport {
  std::vector<Scalar> per_class_squares;
  Scalar total;
  bool verdict = false;
  std::vector<HodgeEntry> hodge;
  /// Every class primitive and one nonzero, so total < 0 is forced.
  bool primitive_obstruction = false;
  std::string note = kSktScopeNote;
};

template <PairingLattice M>
SktReport verify_skt(const BundleSpec<M>& b) {
  SktReport r;
  for (const auto& w : b.curvatures) {
    Scalar q = b.model().intersect(w, w);
    r.total += q;
    r.per_class_squares.push_back(std::move(q));
  }
  r.verdict = r.total.is_zero();
  return r;
}

inline HodgeEntry hodge_decompose(const SurfaceModel& m, const CohClass& w, const CohClass& F) {
  Scalar ff = m.intersect(F, F);
  if (ff.is_zero()) throw Error(ErrorCode::NullClass, "Q(F,F) = 0");
  HodgeEntry e;
  e.trace_coefficient = m.intersect(w, F) / ff;
  e.primitive = w - e.trace_coefficient * F;
  e.primitive_square = m.intersect(e.primitive, e.primitive);
  return e;
}

inline SktReport hodge_obstruction(const BundleSpec<SurfaceModel>& b, const CohClass& F,
                                   const std::optional<CohClass>& ample_override = std::nullopt) {
  const SurfaceModel& m = b.model();
  if (!is_kahler(m, F, ample_override).verdict)
    throw Error(ErrorCode::NotKahler, "F = " + format_class(m, F) + " is not in the Kahler cone");
  SktReport r = verify_skt(b);
  bool all_primitive = true, some_nonzero = false;
  for (const auto& w : b.curvatures) {
    HodgeEntry e = hodge_decompose(m, w, F);
    all_primitive = all_primitive && e.trace_coefficient.is_zero();
    some_nonzero = some_nonzero || !w.is_zero();
    r.hodge.push_back(std::move(e));
  }
  r.primitive_obstruction = all_primitive && some_nonzero;
  return r;
}

}  // namespace cytforge
