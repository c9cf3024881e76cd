#pragma once

// Bounded exhaustive search over integral curvature pairs (w1, w2).
//
// Candidates are screened with 64-bit integer tests that are necessary
// conditions for each filter; survivors are decided by the exact engines.
// For the CYT filter every route needs c1 = l1 w1 + l2 w2, so once w1 is
// fixed (and not parallel to c1) w2 lies in the rational plane spanned by c1
// and w1 and is parametrized by two of its coordinates.

#include <algorithm>
#include <atomic>
#include <exception>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "cytforge/catalog.hpp"
#include "cytforge/cyt.hpp"
#include "cytforge/skt.hpp"
#include "cytforge/topology.hpp"

namespace cytforge {

enum class Filter { Cyt, Skt, Topology, Spin, Balanced };

inline std::string_view to_string(Filter f) {
  switch (f) {
    case Filter::Cyt: return "cyt";
    case Filter::Skt: return "skt";
    case Filter::Topology: return "topology";
    case Filter::Spin: return "spin";
    case Filter::Balanced: return "balanced";
  }
  return "?";
}

inline std::optional<Filter> parse_filter(std::string_view s) {
  for (Filter f : {Filter::Cyt, Filter::Skt, Filter::Topology, Filter::Spin, Filter::Balanced})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

inline constexpr int kLargeRankBound = 6;
inline constexpr double kMaxCandidates = 5e8;

/// Thread cap from CYT_FORGE_THREADS, if set to a positive integer.
inline std::optional<unsigned> thread_cap_from_env() {
  const char* v = std::getenv("CYT_FORGE_THREADS");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n <= 0) return std::nullopt;
  return static_cast<unsigned>(n);
}

struct SearchQuery {
  std::shared_ptr<const SurfaceModel> model;
  int coeff_bound = 1;
  std::set<Filter> filters;
  std::optional<CohClass> ray;
  std::optional<std::size_t> limit;
  unsigned threads = 0;  // 0: hardware concurrency
  std::function<void(std::size_t done, std::size_t total)> progress;

  bool has(Filter f) const { return filters.count(f) != 0; }
};

struct SearchResult {
  std::vector<CatalogRecord> records;
  int bound = 0;
  std::size_t candidates = 0;  // pairs that reached the integer screen
  std::size_t exact_checks = 0;
  bool truncated = false;      // limit reached
  unsigned threads_used = 1;
};

namespace detail {

using LL = long long;
using Vec = std::vector<LL>;

inline LL gcd_all(const Vec& v) {
  LL g = 0;
  for (LL x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

inline bool parallel(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

inline bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](LL x) { return x == 0; });
}

/// gcd of the 2x2 minors of the 2 x n matrix with rows a, b.
inline LL minor_gcd(const Vec& a, const Vec& b) {
  LL g = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      LL d = a[i] * b[j] - a[j] * b[i];
      g = std::gcd(g, d < 0 ? -d : d);
      if (g == 1) return 1;
    }
  return g;
}

class Screen {
 public:
  explicit Screen(const SearchQuery& q) : q_(q), m_(*q.model), n_(m_.rank()), B_(q.coeff_bound) {
    G_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) G_[i * n_ + j] = m_.gram(i, j).convert_to<LL>();
    c1_ = to_ll(m_.c1);
    c1_zero_ = is_zero_vec(c1_);

    // exact routes, in order: user ray, -K ray, ansatz
    if (q.ray) {
      if (exact_sign(m_.intersect(*q.ray, *q.ray)) <= 0)
        throw Error(ErrorCode::NotPositiveRay, "search ray has Q(ray,ray) <= 0");
      routes_.push_back({"ray", *q.ray, integer_direction(*q.ray)});
    }
    if (!c1_zero_ && exact_sign(m_.intersect(m_.c1, m_.c1)) > 0) routes_.push_back({"anticanonical", m_.c1, c1_});
    if (m_.kind == ModelKind::BlowupOnCubic && m_.points >= 9) {
      auto [a1, a2] = ansatz_curvatures(m_.points);
      ansatz_ = std::make_pair(to_ll(a1), to_ll(a2));
    }
  }

  std::size_t rank() const { return n_; }
  int bound() const { return B_; }

  LL Q(const Vec& x, const Vec& y) const {
    LL s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) s += G_[i * n_ + j] * x[i] * y[j];
    }
    return s;
  }

  Vec pair_row(const Vec& w) const {
    Vec r(n_, 0);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i) r[j] += w[i] * G_[i * n_ + j];
    return r;
  }

  bool in_box(const Vec& v) const {
    return std::all_of(v.begin(), v.end(), [&](LL x) { return x >= -B_ && x <= B_; });
  }

  /// Per-w1 screen.
  bool first_ok(const Vec& w1) const {
    if (q_.has(Filter::Topology) && gcd_all(w1) != 1) return false;
    return true;
  }

  /// Whether w2 candidates for this w1 must come from the full box.
  bool needs_full_box(const Vec& w1) const { return c1_zero_ || is_zero_vec(w1) || parallel(w1, c1_); }

  /// Integral w2 in the box with w2 in span_Q(c1, w1), w1 not parallel to c1.
  std::vector<Vec> plane_candidates(const Vec& w1) const {
    std::size_t pi = 0, pj = 1;
    LL best = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        LL d = c1_[i] * w1[j] - c1_[j] * w1[i];
        if ((d < 0 ? -d : d) > best) {
          best = d < 0 ? -d : d;
          pi = i;
          pj = j;
        }
      }
    const LL det = c1_[pi] * w1[pj] - c1_[pj] * w1[pi];
    std::vector<Vec> out;
    Vec w2(n_);
    for (LL u = -B_; u <= B_; ++u)
      for (LL v = -B_; v <= B_; ++v) {
        // w2 = x c1 + y w1 with (x, y) = (X, Y) / det
        const LL X = u * w1[pj] - v * w1[pi];
        const LL Y = c1_[pi] * v - c1_[pj] * u;
        bool ok = true;
        for (std::size_t l = 0; l < n_ && ok; ++l) {
          const LL num = X * c1_[l] + Y * w1[l];
          if (num % det != 0) ok = false;
          else {
            w2[l] = num / det;
            ok = w2[l] >= -B_ && w2[l] <= B_;
          }
        }
        if (ok) out.push_back(w2);
      }
    return out;
  }

  /// Necessary integer conditions for the pair.
  bool pair_ok(const Vec& w1, const Vec& w2) const {
    if (q_.has(Filter::Skt) && Q(w1, w1) + Q(w2, w2) != 0) return false;
    if (q_.has(Filter::Topology)) {
      if (gcd_all(w2) != 1 || minor_gcd(w1, w2) != 1) return false;
      if (minor_gcd(pair_row(w1), pair_row(w2)) != 1) return false;
    }
    if (q_.has(Filter::Spin) && !spin_mod2(w1, w2)) return false;
    if (q_.has(Filter::Cyt) && !cyt_possible(w1, w2)) return false;
    return true;
  }

  const std::vector<std::tuple<std::string, CohClass, std::optional<Vec>>>& routes() const { return routes_; }
  const std::optional<std::pair<Vec, Vec>>& ansatz() const { return ansatz_; }

 private:
  static std::optional<Vec> integer_direction(const CohClass& r) {
    Integer den = 1;
    for (const auto& c : r.coefficients()) {
      auto q = c.as_rational();
      if (!q) return std::nullopt;
      den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(*q));
    }
    Vec out;
    for (const auto& c : r.coefficients()) {
      Rational v = *c.as_rational() * den;
      out.push_back(boost::multiprecision::numerator(v).convert_to<LL>());
    }
    return out;
  }

  bool spin_mod2(const Vec& w1, const Vec& w2) const {
    for (int s1 = 0; s1 < 2; ++s1)
      for (int s2 = 0; s2 < 2; ++s2) {
        bool match = true;
        for (std::size_t i = 0; i < n_ && match; ++i) match = ((c1_[i] - s1 * w1[i] - s2 * w2[i]) % 2) == 0;
        if (match) return true;
      }
    return false;
  }

  bool cyt_possible(const Vec& w1, const Vec& w2) const {
    if (ansatz_ && w1 == ansatz_->first && w2 == ansatz_->second) return true;
    if (c1_zero_) return true;
    for (const auto& [name, ray, dir] : routes_) {
      if (!dir) return true;  // surd ray: exact check only
      // sum Q(w_i, r) w_i must be a positive multiple of c1
      const LL a = Q(w1, *dir), b = Q(w2, *dir);
      Vec T(n_);
      LL dot = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        T[i] = a * w1[i] + b * w2[i];
        dot += T[i] * c1_[i];
      }
      if (dot > 0 && parallel(T, c1_)) return true;
    }
    return false;
  }

  const SearchQuery& q_;
  const SurfaceModel& m_;
  std::size_t n_;
  int B_;
  Vec G_;
  Vec c1_;
  bool c1_zero_ = false;
  std::vector<std::tuple<std::string, CohClass, std::optional<Vec>>> routes_;
  std::optional<std::pair<Vec, Vec>> ansatz_;
};

/// All integer vectors of the box with first coordinate fixed, in lexicographic order.
inline std::vector<Vec> box_slice(std::size_t n, int B, LL first) {
  std::vector<Vec> out;
  Vec v(n, -B);
  v[0] = first;
  if (n == 1) return {v};
  for (;;) {
    out.push_back(v);
    std::size_t i = n - 1;
    while (i >= 1 && v[i] == B) v[i--] = -B;
    if (i == 0) break;
    ++v[i];
  }
  return out;
}

struct Evaluation {
  bool pass = false;
  CatalogRecord record;
};

/// Exact evaluation of one pair; every flag is computed so the record can be
/// re-verified from its stored classes.
inline Evaluation evaluate_pair(const SearchQuery& q, const Screen& screen, const Vec& w1v, const Vec& w2v) {
  const SurfaceModel& m = *q.model;
  auto bundle = make_bundle(q.model, {CohClass::from_integers(w1v), CohClass::from_integers(w2v)});
  Evaluation ev;
  CatalogRecord& r = ev.record;
  r.model = m.name;
  r.omega1 = bundle.curvatures[0];
  r.omega2 = bundle.curvatures[1];

  for (const auto& [name, ray, dir] : screen.routes()) {
    auto s = solve_scale(bundle, ray);
    if (!s) continue;
    CohClass F = *s * ray;
    if (verify_cyt(bundle, F).verdict) {
      r.F = F;
      r.route = name;
      break;
    }
  }
  if (!r.F && screen.ansatz() && w1v == screen.ansatz()->first && w2v == screen.ansatz()->second) {
    if (auto sol = solve_symmetric_ansatz(m.points)) {
      r.F = sol->F;
      r.route = "ansatz";
    }
  }
  r.flags.cyt = r.F.has_value();
  r.flags.skt = verify_skt(bundle).verdict;
  if (m.simply_connected) {
    TopologyCertificate topo = topology_certificate(bundle);
    r.flags.topology = topo.classified();
    r.flags.spin = topo.spin_mod2;
    r.flags.spin_integral = topo.spin_integral;
    r.diffeo_label = topo.diffeo_label;
  } else {
    r.flags.spin = mod2_membership(m, m.c1, bundle.curvatures);
    r.flags.spin_integral = c1_bundle_triviality(bundle);
  }
  std::optional<CohClass> balance_at = r.F;
  if (!balance_at && !screen.routes().empty()) balance_at = std::get<1>(screen.routes().front());
  if (balance_at) r.flags.balanced = balanced_check(bundle, *balance_at);
  r.key = canonical_form(m, w1v, w2v);
  seal(r);

  ev.pass = (!q.has(Filter::Cyt) || r.flags.cyt) && (!q.has(Filter::Skt) || r.flags.skt) &&
            (!q.has(Filter::Topology) || r.flags.topology) && (!q.has(Filter::Spin) || r.flags.spin) &&
            (!q.has(Filter::Balanced) || r.flags.balanced.value_or(false));
  return ev;
}

struct Partial {
  std::vector<CatalogRecord> records;
  std::size_t candidates = 0;
  std::size_t exact_checks = 0;
};

inline double pow_box(int B, std::size_t n) {
  double x = 1;
  for (std::size_t i = 0; i < n; ++i) x *= 2.0 * B + 1;
  return x;
}

}  // namespace detail

/// Rough work estimate used by the BoundTooLarge guard.
inline double search_cost_estimate(const SearchQuery& q) {
  const std::size_t n = q.model->rank();
  const double box = detail::pow_box(q.coeff_bound, n);
  if (q.has(Filter::Cyt)) return box * (2.0 * q.coeff_bound + 1) * (2.0 * q.coeff_bound + 1);
  return box * box;
}

inline SearchResult search(const SearchQuery& q) {
  if (!q.model) throw Error(ErrorCode::InvalidModel, "search without model");
  if (q.coeff_bound < 1) throw Error(ErrorCode::BoundTooLarge, "coefficient bound must be positive");
  const std::size_t n = q.model->rank();
  if (n > 6 && q.coeff_bound > kLargeRankBound)
    throw Error(ErrorCode::BoundTooLarge, "bound " + std::to_string(q.coeff_bound) + " > 6 on a rank " +
                                              std::to_string(n) + " model");
  double cost = search_cost_estimate(q);
  // the SKT screen pairs only classes of opposite square
  std::map<long long, std::vector<detail::Vec>> buckets;
  const bool use_buckets = !q.has(Filter::Cyt) && q.has(Filter::Skt);
  detail::Screen screen(q);
  if (use_buckets && detail::pow_box(q.coeff_bound, n) <= 4e6) {
    double pairs = 0;
    for (long long a = -q.coeff_bound; a <= q.coeff_bound; ++a)
      for (auto& v : detail::box_slice(n, q.coeff_bound, a)) buckets[screen.Q(v, v)].push_back(std::move(v));
    for (const auto& [sq, vs] : buckets)
      if (auto it = buckets.find(-sq); it != buckets.end())
        pairs += static_cast<double>(vs.size()) * static_cast<double>(it->second.size());
    cost = pairs;
  }
  if (cost > kMaxCandidates)
    throw Error(ErrorCode::BoundTooLarge, "about " + std::to_string(static_cast<long long>(cost)) +
                                              " candidate pairs exceed the search budget");

  const int B = q.coeff_bound;
  const std::size_t parts = static_cast<std::size_t>(2 * B + 1);
  std::vector<detail::Partial> partials(parts);

  auto run_part = [&](std::size_t p) {
    detail::Partial& out = partials[p];
    const long long lead = -B + static_cast<long long>(p);
    std::vector<detail::Vec> full_box;
    auto get_full_box = [&]() -> const std::vector<detail::Vec>& {
      if (full_box.empty())
        for (long long a = -B; a <= B; ++a)
          for (auto& v : detail::box_slice(n, B, a)) full_box.push_back(std::move(v));
      return full_box;
    };
    for (const auto& w1 : detail::box_slice(n, B, lead)) {
      if (!screen.first_ok(w1)) continue;
      std::vector<detail::Vec> cands;
      if (q.has(Filter::Cyt) && !screen.needs_full_box(w1)) {
        cands = screen.plane_candidates(w1);
        std::sort(cands.begin(), cands.end());
      } else if (use_buckets) {
        if (auto it = buckets.find(-screen.Q(w1, w1)); it != buckets.end()) cands = it->second;
      } else {
        cands = get_full_box();
      }
      out.candidates += cands.size();
      for (const auto& w2 : cands) {
        if (!screen.pair_ok(w1, w2)) continue;
        ++out.exact_checks;
        auto ev = detail::evaluate_pair(q, screen, w1, w2);
        if (ev.pass) out.records.push_back(std::move(ev.record));
      }
    }
  };

  unsigned threads = q.threads ? q.threads : std::max(1u, std::thread::hardware_concurrency());
  if (auto cap = thread_cap_from_env()) threads = std::min(threads, *cap);
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, parts));

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mu;
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&]() {
    for (std::size_t p; (p = next.fetch_add(1)) < parts;) {
      try {
        run_part(p);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
      std::size_t d = ++done;
      if (q.progress) {
        std::lock_guard lock(progress_mu);
        q.progress(d, parts);
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // partitions are disjoint ranges of the leading coefficient, so
  // concatenation in partition order is the lexicographic merge
  SearchResult res;
  res.bound = B;
  res.threads_used = std::max(1u, threads);
  for (auto& part : partials) {
    res.candidates += part.candidates;
    res.exact_checks += part.exact_checks;
    for (auto& r : part.records) res.records.push_back(std::move(r));
  }
  if (q.limit && res.records.size() > *q.limit) {
    res.records.resize(*q.limit);
    res.truncated = true;
  }
  return res;
}

}  // namespace cytforge
