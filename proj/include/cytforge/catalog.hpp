#pragma once

// Catalog records and their line-delimited JSON file format.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cytforge/surface.hpp"

namespace cytforge {

using ordered_json = nlohmann::ordered_json;

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 0xf];
  return out;
}

struct RecordFlags {
  bool cyt = false;
  bool skt = false;
  bool topology = false;
  bool spin = false;
  bool spin_integral = false;
  std::optional<bool> balanced;

  friend bool operator==(const RecordFlags&, const RecordFlags&) = default;
};

struct CatalogRecord {
  std::string model;
  CohClass omega1;
  CohClass omega2;
  std::optional<CohClass> F;
  std::string route;  // "ray", "anticanonical", "ansatz" or "" when no F was solved
  RecordFlags flags;
  std::string diffeo_label = "unclassified";
  std::string key;
  std::string digest;

  friend bool operator==(const CatalogRecord& a, const CatalogRecord& b) {
    return a.model == b.model && a.omega1 == b.omega1 && a.omega2 == b.omega2 && a.F == b.F && a.route == b.route &&
           a.flags == b.flags && a.diffeo_label == b.diffeo_label && a.key == b.key && a.digest == b.digest;
  }
};

// ---------------------------------------------------------------------------
// canonical form under permutations of E1..Ek and the pair swap

namespace detail {

inline std::string int_vector_text(const std::vector<long long>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

inline std::vector<long long> to_ll(const CohClass& x) {
  std::vector<long long> v;
  for (const auto& c : x.to_integers()) v.push_back(c.convert_to<long long>());
  return v;
}

inline bool is_blowup(const SurfaceModel& m) {
  return m.kind == ModelKind::BlowupGeneral || m.kind == ModelKind::BlowupOnCubic;
}

}  // namespace detail

inline std::string canonical_form(const SurfaceModel& m, const std::vector<long long>& w1,
                                  const std::vector<long long>& w2) {
  const bool permute = detail::is_blowup(m);
  auto representative = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> x = a, y = b;
    if (permute && a.size() > 2) {
      std::vector<std::pair<long long, long long>> cols;
      for (std::size_t i = 1; i < a.size(); ++i) cols.emplace_back(a[i], b[i]);
      std::sort(cols.begin(), cols.end());
      for (std::size_t i = 1; i < a.size(); ++i) {
        x[i] = cols[i - 1].first;
        y[i] = cols[i - 1].second;
      }
    }
    return std::make_pair(x, y);
  };
  auto p = representative(w1, w2);
  auto q = representative(w2, w1);
  const auto& best = std::min(p, q);
  return detail::int_vector_text(best.first) + ";" + detail::int_vector_text(best.second);
}

inline std::string canonical_form(const SurfaceModel& m, const CohClass& w1, const CohClass& w2) {
  return canonical_form(m, detail::to_ll(w1), detail::to_ll(w2));
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline ordered_json class_json(const CohClass& x) {
  ordered_json a = ordered_json::array();
  for (const auto& c : x.coefficients()) a.push_back(c.str());
  return a;
}

inline CohClass class_from_json(const ordered_json& j) {
  if (!j.is_array()) throw Error(ErrorCode::CorruptRecord, "class must be an array of scalar strings");
  std::vector<Scalar> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorCode::CorruptRecord, "scalar must be a string");
    c.push_back(Scalar::parse(e.get<std::string>()));
  }
  return CohClass(std::move(c));
}

inline ordered_json record_body(const CatalogRecord& r) {
  ordered_json j;
  j["model"] = r.model;
  j["omega1"] = class_json(r.omega1);
  j["omega2"] = class_json(r.omega2);
  j["F"] = r.F ? class_json(*r.F) : ordered_json(nullptr);
  j["route"] = r.route;
  ordered_json f;
  f["cyt"] = r.flags.cyt;
  f["skt"] = r.flags.skt;
  f["topology"] = r.flags.topology;
  f["spin"] = r.flags.spin;
  f["spin_integral"] = r.flags.spin_integral;
  f["balanced"] = r.flags.balanced ? ordered_json(*r.flags.balanced) : ordered_json(nullptr);
  j["flags"] = f;
  j["diffeo_label"] = r.diffeo_label;
  j["key"] = r.key;
  return j;
}

}  // namespace detail

/// Digest of the record body (everything except the digest itself).
inline std::string record_digest(const CatalogRecord& r) { return hex64(fnv1a64(detail::record_body(r).dump())); }

inline CatalogRecord& seal(CatalogRecord& r) {
  r.digest = record_digest(r);
  return r;
}

inline ordered_json to_json(const CatalogRecord& r) {
  ordered_json j = detail::record_body(r);
  j["digest"] = r.digest.empty() ? record_digest(r) : r.digest;
  return j;
}

inline std::string to_line(const CatalogRecord& r) { return to_json(r).dump(); }

inline CatalogRecord record_from_json(const ordered_json& j) {
  try {
    CatalogRecord r;
    r.model = j.at("model").get<std::string>();
    r.omega1 = detail::class_from_json(j.at("omega1"));
    r.omega2 = detail::class_from_json(j.at("omega2"));
    if (!j.at("F").is_null()) r.F = detail::class_from_json(j.at("F"));
    r.route = j.at("route").get<std::string>();
    const auto& f = j.at("flags");
    r.flags.cyt = f.at("cyt").get<bool>();
    r.flags.skt = f.at("skt").get<bool>();
    r.flags.topology = f.at("topology").get<bool>();
    r.flags.spin = f.at("spin").get<bool>();
    r.flags.spin_integral = f.at("spin_integral").get<bool>();
    if (!f.at("balanced").is_null()) r.flags.balanced = f.at("balanced").get<bool>();
    r.diffeo_label = j.at("diffeo_label").get<std::string>();
    r.key = j.at("key").get<std::string>();
    r.digest = j.at("digest").get<std::string>();
    if (r.digest != record_digest(r)) throw Error(ErrorCode::CorruptRecord, "digest mismatch");
    return r;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CorruptRecord) throw;
    throw Error(ErrorCode::CorruptRecord, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::CorruptRecord, e.what());
  }
}

inline CatalogRecord parse_line(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::CorruptRecord, e.what());
  }
  return record_from_json(j);
}

struct CorruptLine {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct CatalogLoad {
  std::vector<CatalogRecord> records;
  std::vector<CorruptLine> errors;
};

inline CatalogLoad read_catalog(std::istream& in) {
  CatalogLoad out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    if (line.empty()) continue;
    try {
      out.records.push_back(parse_line(line));
    } catch (const Error& e) {
      out.errors.push_back({no, e.what()});
    }
  }
  return out;
}

inline CatalogLoad read_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  return read_catalog(in);
}

/// Appends records; with dedupe, a key already in the file or earlier in
/// the batch is skipped. Returns the number of lines written.
inline std::size_t append_catalog(const std::string& path, const std::vector<CatalogRecord>& records,
                                  bool dedupe = true) {
  std::set<std::string> seen;
  if (dedupe)
    for (const auto& r : read_catalog(path).records) seen.insert(r.model + "|" + r.key);
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorCode::IoError, "cannot open catalog '" + path + "' for append");
  std::size_t written = 0;
  for (const auto& r : records) {
    if (dedupe && !seen.insert(r.model + "|" + r.key).second) continue;
    out << to_line(r) << '\n';
    ++written;
  }
  return written;
}

/// First record per (model, key), order preserved.
inline std::vector<CatalogRecord> deduplicate(const std::vector<CatalogRecord>& records) {
  std::set<std::string> seen;
  std::vector<CatalogRecord> out;
  for (const auto& r : records)
    if (seen.insert(r.model + "|" + r.key).second) out.push_back(r);
  return out;
}

}  // namespace cytforge
