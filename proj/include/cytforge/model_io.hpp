#pragma once

// Model selection by built-in name or JSON file, and model digests.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cytforge/catalog.hpp"
#include "cytforge/surface.hpp"

namespace cytforge {

using AnyModel = std::variant<SurfaceModel, PairingFunctionalModel>;

namespace detail {

inline std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline CohClass class_from_model_json(const SurfaceModel& partial, const ordered_json& j) {
  if (j.is_string()) return parse_class(partial, j.get<std::string>());
  if (!j.is_array()) throw Error(ErrorCode::InvalidModel, "class must be an array or an expression string");
  std::vector<Scalar> c;
  for (const auto& e : j) {
    if (e.is_number_integer()) c.emplace_back(e.get<long long>());
    else if (e.is_string()) c.push_back(Scalar::parse(e.get<std::string>()));
    else throw Error(ErrorCode::InvalidModel, "class entries must be integers or scalar strings");
  }
  return CohClass(std::move(c));
}

inline Scalar scalar_from_json(const ordered_json& e) {
  if (e.is_number_integer()) return Scalar(e.get<long long>());
  if (e.is_string()) return Scalar::parse(e.get<std::string>());
  throw Error(ErrorCode::InvalidModel, "pairing value must be an integer or scalar string");
}

}  // namespace detail

/// projective_plane | cp2 | quadric | blowup_cp2(k) | blowup_cp2(k,general|on_cubic) | kummer
inline std::optional<AnyModel> builtin_model(std::string_view name) {
  std::string s = detail::lower(std::string(name));
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s == "projective_plane" || s == "cp2") return AnyModel(projective_plane());
  if (s == "quadric") return AnyModel(quadric());
  if (s == "kummer") return AnyModel(kummer_model());
  static const std::regex blowup(R"(blowup_cp2\((\d+)(?:,(general|on_cubic))?\))");
  std::smatch mt;
  if (std::regex_match(s, mt, blowup)) {
    int k = std::stoi(mt[1].str());
    Position pos = k <= 8 ? Position::General : Position::OnCubic;
    if (mt[2].matched) pos = mt[2].str() == "general" ? Position::General : Position::OnCubic;
    return AnyModel(blowup_cp2(k, pos));
  }
  return std::nullopt;
}

inline AnyModel model_from_json(const ordered_json& j) {
  try {
    const std::string name = j.value("name", std::string("custom"));
    if (j.contains("pairings")) {
      auto labels = j.at("basis").get<std::vector<std::string>>();
      PairingFunctionalModel m(name, labels);
      for (const auto& p : j.at("pairings")) m.declare(p.at(0).get<std::string>(), p.at(1).get<std::string>(), detail::scalar_from_json(p.at(2)));
      return m;
    }
    SurfaceModel partial;
    partial.basis = j.at("basis").get<std::vector<std::string>>();
    const auto& g = j.at("gram");
    IntMatrix gram(partial.basis.size(), partial.basis.size());
    if (g.size() != partial.basis.size()) throw Error(ErrorCode::RankMismatch, "gram row count");
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].size() != partial.basis.size()) throw Error(ErrorCode::RankMismatch, "gram column count");
      for (std::size_t k = 0; k < g[i].size(); ++k) gram(i, k) = g[i][k].get<long long>();
    }
    partial.gram = gram;
    partial.c1 = CohClass::zero(partial.basis.size());
    CohClass c1 = detail::class_from_model_json(partial, j.at("c1"));
    partial.c1 = c1;
    std::optional<std::vector<CohClass>> curves;
    if (j.contains("curves")) {
      curves.emplace();
      for (const auto& c : j.at("curves")) curves->push_back(detail::class_from_model_json(partial, c));
    }
    std::optional<CohClass> ample;
    if (j.contains("ample_witness")) ample = detail::class_from_model_json(partial, j.at("ample_witness"));
    SurfaceModel m = custom_model(name, partial.basis, gram, c1, curves, ample);
    m.simply_connected = j.value("simply_connected", true);
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidModel, std::string("model file: ") + e.what());
  }
}

/// A built-in name, or the path of a JSON model file.
inline AnyModel load_model(const std::string& spec) {
  if (auto m = builtin_model(spec)) return *m;
  if (std::filesystem::exists(spec)) {
    std::ifstream in(spec);
    ordered_json j;
    try {
      j = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, "model file '" + spec + "': " + e.what());
    }
    return model_from_json(j);
  }
  throw Error(ErrorCode::InvalidModel, "unknown model '" + spec + "' (not a built-in name or readable file)");
}

inline ordered_json model_json(const SurfaceModel& m) {
  ordered_json j;
  j["name"] = m.name;
  j["basis"] = m.basis;
  ordered_json g = ordered_json::array();
  for (std::size_t i = 0; i < m.rank(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t k = 0; k < m.rank(); ++k) row.push_back(m.gram(i, k).str());
    g.push_back(row);
  }
  j["gram"] = g;
  j["c1"] = detail::class_json(m.c1);
  j["ample_witness"] = m.ample_witness ? detail::class_json(*m.ample_witness) : ordered_json(nullptr);
  ordered_json curves = ordered_json::array();
  if (m.curve_regime == CurveRegime::Explicit)
    for (const auto& c : m.explicit_curves) curves.push_back(detail::class_json(c));
  j["curves"] = curves;
  j["curve_regime"] = static_cast<int>(m.curve_regime);
  j["simply_connected"] = m.simply_connected;
  return j;
}

inline ordered_json model_json(const PairingFunctionalModel& m) {
  ordered_json j;
  j["name"] = m.name_ref();
  j["basis"] = m.basis();
  ordered_json p = ordered_json::array();
  for (std::size_t a = 0; a < m.rank(); ++a)
    for (std::size_t b = a; b < m.rank(); ++b)
      if (auto v = m.pairing(a, b)) p.push_back(ordered_json::array({m.basis()[a], m.basis()[b], v->str()}));
  j["pairings"] = p;
  return j;
}

inline std::string model_digest(const AnyModel& m) {
  return std::visit([](const auto& x) { return hex64(fnv1a64(model_json(x).dump())); }, m);
}

}  // namespace cytforge
