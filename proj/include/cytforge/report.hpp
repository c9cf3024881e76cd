#pragma once

// Certificates: structured (JSON) and text renderings of engine results.

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cytforge/catalog.hpp"
#include "cytforge/cyt.hpp"
#include "cytforge/model_io.hpp"
#include "cytforge/skt.hpp"
#include "cytforge/topology.hpp"

namespace cytforge {

inline constexpr const char* kToolVersion = "1.0.0";

struct Certificate {
  std::vector<std::string> command;
  std::string tool_version = kToolVersion;
  std::string model_name;
  std::string model_digest;
  ordered_json inputs = ordered_json::object();
  ordered_json results = ordered_json::object();
  bool verdict = false;
  std::string normalization_note;
  std::string timestamp;  // not part of the digest

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

namespace detail {

inline ordered_json certificate_body(const Certificate& c) {
  ordered_json j;
  j["command"] = c.command;
  j["tool_version"] = c.tool_version;
  j["model"] = {{"name", c.model_name}, {"digest", c.model_digest}};
  j["inputs"] = c.inputs;
  j["results"] = c.results;
  j["verdict"] = c.verdict ? "pass" : "fail";
  j["normalization_note"] = c.normalization_note;
  return j;
}

}  // namespace detail

inline std::string certificate_digest(const Certificate& c) {
  return hex64(fnv1a64(detail::certificate_body(c).dump()));
}

inline std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

inline ordered_json to_json(const Certificate& c) {
  ordered_json j = detail::certificate_body(c);
  j["digest"] = certificate_digest(c);
  j["timestamp"] = c.timestamp;
  return j;
}

inline Certificate certificate_from_json(const ordered_json& j) {
  try {
    Certificate c;
    c.command = j.at("command").get<std::vector<std::string>>();
    c.tool_version = j.at("tool_version").get<std::string>();
    c.model_name = j.at("model").at("name").get<std::string>();
    c.model_digest = j.at("model").at("digest").get<std::string>();
    c.inputs = j.at("inputs");
    c.results = j.at("results");
    c.verdict = j.at("verdict").get<std::string>() == "pass";
    c.normalization_note = j.at("normalization_note").get<std::string>();
    c.timestamp = j.value("timestamp", std::string());
    if (j.contains("digest") && j.at("digest").get<std::string>() != certificate_digest(c))
      throw Error(ErrorCode::CorruptRecord, "certificate digest mismatch");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("certificate: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// sub-certificates

inline ordered_json scalar_json(const Scalar& s) { return s.str(); }

template <PairingLattice M>
ordered_json class_report(const M& m, const CohClass& x) {
  ordered_json j;
  j["text"] = format_class(m, x);
  j["coefficients"] = detail::class_json(x);
  return j;
}

inline ordered_json scalars_json(const std::vector<Scalar>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& s : v) a.push_back(s.str());
  return a;
}

inline ordered_json int_vector_json(const IntVector& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline ordered_json cone_json(const SurfaceModel& m, const ConeCertificate& c) {
  ordered_json j;
  j["self_intersection"] = c.self_intersection.str();
  ordered_json checks = ordered_json::array();
  for (const auto& cc : c.curve_checks)
    checks.push_back({{"curve", format_class(m, cc.curve)}, {"value", cc.value.str()}, {"sign", cc.sign}});
  j["curve_checks"] = checks;
  j["curve_count"] = c.curve_checks.size();
  j["ample_check"] = {{"witness", format_class(m, c.ample_check.curve)},
                      {"value", c.ample_check.value.str()},
                      {"source", c.ample_source}};
  if (c.anticanonical_multiple) j["anticanonical_multiple"] = c.anticanonical_multiple->str();
  j["kahler"] = c.verdict;
  return j;
}

/// Cone certificate with only the minimal curve value listed (large curve sets).
inline ordered_json cone_summary_json(const SurfaceModel& m, const ConeCertificate& c) {
  ordered_json j = cone_json(m, c);
  if (c.curve_checks.size() > 12) {
    const CurveCheck* least = &c.curve_checks.front();
    for (const auto& cc : c.curve_checks)
      if (cc.value < least->value) least = &cc;
    j["curve_checks"] = ordered_json::array();
    j["min_curve_check"] = {{"curve", format_class(m, least->curve)}, {"value", least->value.str()}};
    j["all_curve_signs_positive"] =
        std::all_of(c.curve_checks.begin(), c.curve_checks.end(), [](const CurveCheck& x) { return x.sign > 0; });
  }
  return j;
}

inline ordered_json cyt_json(const SurfaceModel& m, const CytCertificate& c) {
  ordered_json j;
  j["lambdas"] = scalars_json(c.lambdas);
  j["defect"] = class_report(m, c.defect);
  j["defect_zero"] = c.defect_zero;
  j["integral"] = c.integral;
  j["cone"] = cone_summary_json(m, c.cone);
  if (c.scale_along_F) j["defect_vanishes_at_scale"] = c.scale_along_F->str();
  j["cyt"] = c.verdict;
  return j;
}

template <PairingLattice M>
ordered_json skt_json(const M& m, const SktReport& r) {
  ordered_json j;
  j["per_class_squares"] = scalars_json(r.per_class_squares);
  j["total"] = r.total.str();
  j["strong"] = r.verdict;
  if (!r.hodge.empty()) {
    ordered_json h = ordered_json::array();
    for (const auto& e : r.hodge)
      h.push_back({{"trace_coefficient", e.trace_coefficient.str()},
                   {"primitive", class_report(m, e.primitive)},
                   {"primitive_square", e.primitive_square.str()}});
    j["hodge_decomposition"] = h;
    j["primitive_obstruction"] = r.primitive_obstruction;
  }
  j["note"] = r.note;
  return j;
}

inline ordered_json grid_json(const SpectralTables::Grid& g) {
  ordered_json a = ordered_json::array();
  for (const auto& row : g) a.push_back(row);
  return a;
}

inline ordered_json spectral_json(const SpectralTables& t) {
  ordered_json j;
  j["e2"] = grid_json(t.e2);
  j["e3"] = grid_json(t.e3);
  j["betti"] = t.betti;
  j["euler_characteristic"] = t.euler_characteristic;
  return j;
}

inline ordered_json topology_json(const BundleSpec<SurfaceModel>& b, const TopologyCertificate& c) {
  const SurfaceModel& m = b.model();
  ordered_json j;
  j["basis_extension"] = c.basis_extension;
  if (c.witnesses) {
    auto p = witness_pairings(b, *c.witnesses);
    j["alpha"] = format_class(m, c.witnesses->alpha);
    j["beta"] = format_class(m, c.witnesses->beta);
    j["pairings"] = {p[0].str(), p[1].str(), p[2].str(), p[3].str()};
  } else {
    j["alpha"] = nullptr;
    j["beta"] = nullptr;
  }
  j["pairing_snf"] = int_vector_json(c.pairing_snf);
  j["simply_connected_surrogate"] = c.simply_connected_surrogate;
  j["simply_connected_note"] = "surrogate: pairing map H2(X) -> Z^2 surjective";
  j["spin_integral"] = c.spin_integral;
  j["spin_mod2"] = c.spin_mod2;
  j["torsion_free"] = c.tables ? ordered_json("taken from the verified hypotheses") : ordered_json(nullptr);
  if (c.tables) j["spectral"] = spectral_json(*c.tables);
  j["diffeo_label"] = c.diffeo_label;
  return j;
}

inline ordered_json witness_check_json(const BundleSpec<SurfaceModel>& b, const PairingWitnesses& w) {
  auto p = witness_pairings(b, w);
  ordered_json j;
  j["alpha"] = format_class(b.model(), w.alpha);
  j["beta"] = format_class(b.model(), w.beta);
  j["pairings"] = {p[0].str(), p[1].str(), p[2].str(), p[3].str()};
  j["valid"] = check_alpha_beta(b, w);
  return j;
}

inline ordered_json ansatz_json(const SurfaceModel& m, const AnsatzSolution& s) {
  ordered_json j;
  j["k"] = s.k;
  j["n"] = s.n.str();
  j["n_1to4"] = s.n_1to4.str();
  j["n_rest"] = s.n_rest.str();
  j["F"] = class_report(m, s.F);
  j["omega1"] = format_class(m, s.omega1);
  j["omega2"] = format_class(m, s.omega2);
  j["QFF"] = m.intersect(s.F, s.F).str();
  j["Qw1F"] = m.intersect(s.omega1, s.F).str();
  j["Qw2F"] = m.intersect(s.omega2, s.F).str();
  j["QF_antiK"] = m.intersect(s.F, m.c1).str();
  j["cone"] = cone_summary_json(m, s.cone);
  return j;
}

inline ordered_json record_json(const SurfaceModel& m, const CatalogRecord& r) {
  ordered_json j;
  j["omega1"] = format_class(m, r.omega1);
  j["omega2"] = format_class(m, r.omega2);
  j["F"] = r.F ? ordered_json(format_class(m, *r.F)) : ordered_json(nullptr);
  j["route"] = r.route;
  j["diffeo_label"] = r.diffeo_label;
  j["key"] = r.key;
  j["digest"] = r.digest;
  return j;
}

// ---------------------------------------------------------------------------
// text rendering

namespace detail {

inline bool looks_like_surd(const std::string& s) { return s.find("sqrt(") != std::string::npos; }

inline std::string approx_suffix(const std::string& s) {
  if (!looks_like_surd(s)) return "";
  try {
    std::ostringstream os;
    os << std::setprecision(12) << Scalar::parse(s).approx();
    return "  [approx " + os.str() + "]";
  } catch (const Error&) {
    return "";
  }
}

inline std::string leaf_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>() + approx_suffix(v.get<std::string>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "none";
  return v.dump();
}

inline bool is_flat_array(const ordered_json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (e.is_object() || (e.is_array() && !e.empty() && (e.front().is_array() || e.front().is_object())))
      return false;
  return true;
}

inline std::string flat_array_text(const ordered_json& v) {
  std::string s = "[";
  bool first = true;
  for (const auto& e : v) {
    if (!first) s += ", ";
    first = false;
    s += e.is_array() ? flat_array_text(e) : (e.is_string() ? e.get<std::string>() : leaf_text(e));
  }
  return s + "]";
}

inline void render(std::ostream& os, const std::string& key, const ordered_json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (v.is_object() && v.size() == 2 && v.contains("text") && v.contains("coefficients")) {
    os << pad << key << ": " << v["text"].get<std::string>();
    bool surd = false;
    for (const auto& c : v["coefficients"]) surd = surd || looks_like_surd(c.get<std::string>());
    if (surd) {
      os << "\n" << pad << "  coefficients: " << flat_array_text(v["coefficients"]) << "\n" << pad << "  approx: [";
      bool first = true;
      for (const auto& c : v["coefficients"]) {
        std::ostringstream a;
        a << std::setprecision(10) << Scalar::parse(c.get<std::string>()).approx();
        os << (first ? "" : ", ") << a.str();
        first = false;
      }
      os << "] (approximate)";
    }
    os << "\n";
    return;
  }
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) render(os, it.key(), it.value(), depth + 1);
    return;
  }
  if (v.is_array()) {
    if (is_flat_array(v)) {
      os << pad << key << ": " << flat_array_text(v);
      bool surd = false;
      for (const auto& e : v) surd = surd || (e.is_string() && looks_like_surd(e.get<std::string>()));
      if (surd) os << "  [contains surds; see structured output for approximations]";
      os << "\n";
      return;
    }
    os << pad << key << ":\n";
    std::size_t i = 0;
    for (const auto& e : v) render(os, "- [" + std::to_string(i++) + "]", e, depth + 1);
    return;
  }
  os << pad << key << ": " << leaf_text(v) << "\n";
}

}  // namespace detail

inline std::string render_text(const Certificate& c) {
  std::ostringstream os;
  os << "cytforge " << c.tool_version << "\n";
  os << "command: ";
  for (std::size_t i = 0; i < c.command.size(); ++i) os << (i ? " " : "") << c.command[i];
  os << "\n";
  os << "model: " << c.model_name << " (digest " << c.model_digest << ")\n";
  if (!c.inputs.empty()) detail::render(os, "inputs", c.inputs, 0);
  if (!c.results.empty()) detail::render(os, "results", c.results, 0);
  if (!c.normalization_note.empty()) os << "normalization note: " << c.normalization_note << "\n";
  os << "verdict: " << (c.verdict ? "PASS" : "FAIL") << "\n";
  os << "digest: " << certificate_digest(c) << "\n";
  if (!c.timestamp.empty()) os << "timestamp: " << c.timestamp << "\n";
  return os.str();
}

}  // namespace cytforge
