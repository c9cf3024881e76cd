#pragma once

// Based integral lattices H^2(X, Z) with their intersection form.

#include <algorithm>
#include <array>
#include <cctype>
#include <concepts>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cytforge/arithmetic.hpp"
#include "cytforge/lattice.hpp"

namespace cytforge {

/// Coefficient vector of a cohomology class in a model's basis.
class CohClass {
 public:
  CohClass() = default;
  explicit CohClass(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {}
  CohClass(std::initializer_list<long long> ints) {
    for (auto v : ints) c_.emplace_back(v);
  }

  static CohClass zero(std::size_t n) { return CohClass(std::vector<Scalar>(n)); }
  static CohClass unit(std::size_t n, std::size_t i) {
    CohClass x = zero(n);
    x.c_.at(i) = 1;
    return x;
  }
  static CohClass from_integers(const IntVector& v) {
    std::vector<Scalar> c;
    c.reserve(v.size());
    for (const auto& x : v) c.emplace_back(x);
    return CohClass(std::move(c));
  }
  template <std::integral T>
  static CohClass from_integers(const std::vector<T>& v) {
    std::vector<Scalar> c;
    c.reserve(v.size());
    for (auto x : v) c.emplace_back(static_cast<long long>(x));
    return CohClass(std::move(c));
  }

  std::size_t size() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& coefficients() const { return c_; }

  bool is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_integer(); });
  }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  IntVector to_integers() const {
    IntVector out;
    out.reserve(c_.size());
    for (const auto& s : c_) {
      if (!s.is_integer()) throw Error(ErrorCode::InvalidBundle, "class " + str() + " is not integral");
      out.push_back(boost::multiprecision::numerator(s.rational_part()));
    }
    return out;
  }

  CohClass operator-() const {
    CohClass x = *this;
    for (auto& s : x.c_) s = -s;
    return x;
  }
  CohClass& operator+=(const CohClass& y) {
    check_size(y);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += y.c_[i];
    return *this;
  }
  CohClass& operator-=(const CohClass& y) {
    check_size(y);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= y.c_[i];
    return *this;
  }
  friend CohClass operator+(CohClass x, const CohClass& y) { return x += y; }
  friend CohClass operator-(CohClass x, const CohClass& y) { return x -= y; }
  friend CohClass operator*(const Scalar& s, CohClass x) {
    for (auto& c : x.c_) c *= s;
    return x;
  }
  friend CohClass operator/(CohClass x, const Scalar& s) {
    for (auto& c : x.c_) c /= s;
    return x;
  }
  friend bool operator==(const CohClass&, const CohClass&) = default;

  /// Vector syntax "[a,b,...]" with exact scalar text.
  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ",";
      out += c_[i].str();
    }
    return out + "]";
  }

 private:
  void check_size(const CohClass& y) const {
    if (y.size() != size())
      throw Error(ErrorCode::RankMismatch,
                  "class lengths " + std::to_string(size()) + " and " + std::to_string(y.size()));
  }
  std::vector<Scalar> c_;
};

/// If y = r * x for a Scalar r (x nonzero), returns r.
inline std::optional<Scalar> proportionality(const CohClass& x, const CohClass& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::RankMismatch, "proportionality lengths");
  std::optional<Scalar> r;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) {
      if (!y[i].is_zero()) return std::nullopt;
      continue;
    }
    Scalar q = y[i] / x[i];
    if (!r) r = q;
    else if (*r != q) return std::nullopt;
  }
  return r;
}

enum class ModelKind { ProjectivePlane, Quadric, BlowupGeneral, BlowupOnCubic, Custom };

/// How the negative-curve list of a model is obtained.
enum class CurveRegime {
  None,                // no negative curves (CP^2, quadric)
  DelPezzoEnumerated,  // all (-1)-classes, enumerated on demand
  OnCubic,             // E_l, H - E_i - E_j, and -K when k >= 10
  Explicit,            // listed in the model data
  Missing,             // custom model without a list
};

enum class Position { General, OnCubic };

struct SurfaceModel {
  std::string name;
  std::vector<std::string> basis;
  IntMatrix gram;
  CohClass c1;
  ModelKind kind = ModelKind::Custom;
  int points = 0;  // k for blow-ups of CP^2
  CurveRegime curve_regime = CurveRegime::Missing;
  std::vector<CohClass> explicit_curves;
  /// Extra positivity checks of the Kahler test (the two rulings of the quadric).
  std::vector<CohClass> nef_generators;
  std::optional<CohClass> ample_witness;
  std::string ample_source;
  bool simply_connected = true;
  int volume_class_sign = 1;
  /// -K is ample (used to record the anticanonical route of a cone check).
  bool anticanonical_ample = false;

  std::size_t rank() const { return basis.size(); }

  std::optional<std::size_t> label_index(std::string_view label) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == label) return i;
    return std::nullopt;
  }

  Scalar intersect(const CohClass& x, const CohClass& y) const {
    if (x.size() != rank() || y.size() != rank())
      throw Error(ErrorCode::RankMismatch, "class length does not match rank " + std::to_string(rank()));
    auto rational = [](const CohClass& c) {
      return std::all_of(c.coefficients().begin(), c.coefficients().end(),
                         [](const Scalar& s) { return s.is_rational(); });
    };
    if (rational(x) && rational(y)) {
      // integer accumulation over the common denominators
      auto scaled = [](const CohClass& c, Integer& den) {
        den = 1;
        for (const auto& s : c.coefficients())
          den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(s.rational_part()));
        IntVector v(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
          const Rational& r = c[i].rational_part();
          v[i] = boost::multiprecision::numerator(r) * (den / boost::multiprecision::denominator(r));
        }
        return v;
      };
      Integer dx, dy;
      IntVector X = scaled(x, dx), Y = scaled(y, dy);
      Integer acc = 0, row;
      for (std::size_t i = 0; i < rank(); ++i) {
        if (X[i] == 0) continue;
        row = 0;
        for (std::size_t j = 0; j < rank(); ++j) {
          const Integer& g = gram(i, j);
          if (g != 0 && Y[j] != 0) row += g * Y[j];
        }
        if (row != 0) acc += X[i] * row;
      }
      if (dx == 1 && dy == 1) return Scalar(acc);
      return Scalar(Rational(acc, dx * dy));
    }
    Scalar total;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < rank(); ++j) {
        const Integer& g = gram(i, j);
        if (g == 0 || y[j].is_zero()) continue;
        total += Scalar(g) * x[i] * y[j];
      }
    }
    return total;
  }

  std::optional<Scalar> try_intersect(const CohClass& x, const CohClass& y) const { return intersect(x, y); }

  CohClass canonical_class() const { return -c1; }
};

/// Lattice presented only by declared pairings of named generators.
class PairingFunctionalModel {
 public:
  PairingFunctionalModel(std::string name, std::vector<std::string> labels)
      : name_(std::move(name)), labels_(std::move(labels)) {}

  const std::string& name_ref() const { return name_; }
  const std::vector<std::string>& basis() const { return labels_; }
  std::size_t rank() const { return labels_.size(); }

  std::optional<std::size_t> label_index(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  void declare(std::size_t i, std::size_t j, Scalar value) {
    if (i >= rank() || j >= rank()) throw Error(ErrorCode::RankMismatch, "pairing index");
    table_[key(i, j)] = std::move(value);
  }
  void declare(std::string_view a, std::string_view b, Scalar value) {
    auto i = label_index(a), j = label_index(b);
    if (!i || !j) throw Error(ErrorCode::InvalidModel, "unknown generator in pairing declaration");
    declare(*i, *j, std::move(value));
  }

  std::optional<Scalar> pairing(std::size_t i, std::size_t j) const {
    auto it = table_.find(key(i, j));
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<Scalar> try_intersect(const CohClass& x, const CohClass& y) const {
    check(x);
    check(y);
    Scalar total;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < rank(); ++j) {
        if (y[j].is_zero()) continue;
        auto p = pairing(i, j);
        if (!p) return std::nullopt;
        total += *p * x[i] * y[j];
      }
    }
    return total;
  }

  Scalar intersect(const CohClass& x, const CohClass& y) const {
    auto v = try_intersect(x, y);
    if (!v) throw Error(ErrorCode::UndeclaredPairing, "pairing of " + x.str() + " and " + y.str() + " is not declared");
    return *v;
  }

 private:
  static std::pair<std::size_t, std::size_t> key(std::size_t i, std::size_t j) {
    return i <= j ? std::pair{i, j} : std::pair{j, i};
  }
  void check(const CohClass& x) const {
    if (x.size() != rank()) throw Error(ErrorCode::RankMismatch, "class length does not match generator count");
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> table_;
};

template <class M>
concept PairingLattice = requires(const M& m, const CohClass& x) {
  { m.rank() } -> std::convertible_to<std::size_t>;
  { m.intersect(x, x) } -> std::same_as<Scalar>;
  { m.try_intersect(x, x) } -> std::same_as<std::optional<Scalar>>;
  { m.label_index(std::string_view{}) } -> std::same_as<std::optional<std::size_t>>;
};

template <PairingLattice M>
Scalar intersect(const M& m, const CohClass& x, const CohClass& y) {
  return m.intersect(x, y);
}

inline const std::vector<std::string>& basis_labels(const SurfaceModel& m) { return m.basis; }
inline const std::vector<std::string>& basis_labels(const PairingFunctionalModel& m) { return m.basis(); }
inline const std::string& model_name(const SurfaceModel& m) { return m.name; }
inline const std::string& model_name(const PairingFunctionalModel& m) { return m.name_ref(); }

// ---------------------------------------------------------------------------
// built-in models

inline SurfaceModel projective_plane() {
  SurfaceModel m;
  m.name = "projective_plane";
  m.basis = {"H"};
  m.gram = IntMatrix::identity(1);
  m.c1 = CohClass{3};
  m.kind = ModelKind::ProjectivePlane;
  m.curve_regime = CurveRegime::None;
  m.ample_witness = CohClass{1};
  m.ample_source = "hyperplane class H";
  m.anticanonical_ample = true;
  return m;
}

inline SurfaceModel quadric() {
  SurfaceModel m;
  m.name = "quadric";
  m.basis = {"C", "D"};
  m.gram = IntMatrix::from_rows({{0, 1}, {1, 0}});
  m.c1 = CohClass{2, 2};
  m.kind = ModelKind::Quadric;
  m.curve_regime = CurveRegime::None;
  m.nef_generators = {CohClass{1, 0}, CohClass{0, 1}};
  m.ample_witness = CohClass{1, 1};
  m.ample_source = "C+D (Segre embedding)";
  m.anticanonical_ample = true;
  return m;
}

/// Blow-up of CP^2 in k points; basis (H, E1, ..., Ek), Q = diag(1, -1, ..., -1).
inline SurfaceModel blowup_cp2(int k, Position position) {
  if (k < 1) throw Error(ErrorCode::InvalidModel, "blow-up needs k >= 1");
  if (position == Position::General && k >= 9)
    throw Error(ErrorCode::InvalidPosition, "general position is modeled only for k <= 8");
  if (position == Position::OnCubic && k < 2)
    throw Error(ErrorCode::InvalidPosition, "on_cubic needs k >= 2");
  SurfaceModel m;
  const auto n = static_cast<std::size_t>(k) + 1;
  m.basis.push_back("H");
  for (int i = 1; i <= k; ++i) m.basis.push_back("E" + std::to_string(i));
  m.gram = IntMatrix(n, n);
  m.gram(0, 0) = 1;
  for (std::size_t i = 1; i < n; ++i) m.gram(i, i) = -1;
  m.c1 = CohClass::zero(n);
  m.c1[0] = 3;
  for (std::size_t i = 1; i < n; ++i) m.c1[i] = -1;
  m.points = k;
  if (position == Position::General) {
    m.name = "blowup_cp2(" + std::to_string(k) + ",general)";
    m.kind = ModelKind::BlowupGeneral;
    m.curve_regime = CurveRegime::DelPezzoEnumerated;
    m.anticanonical_ample = true;
  } else {
    m.name = "blowup_cp2(" + std::to_string(k) + ",on_cubic)";
    m.kind = ModelKind::BlowupOnCubic;
    m.curve_regime = CurveRegime::OnCubic;
  }
  CohClass w = CohClass::zero(n);
  w[0] = k + 1;
  for (std::size_t i = 1; i < n; ++i) w[i] = -1;
  m.ample_witness = w;
  m.ample_source = "default (k+1)H-E1-...-Ek";
  return m;
}

inline SurfaceModel custom_model(std::string name, std::vector<std::string> basis, IntMatrix gram, CohClass c1,
                                 std::optional<std::vector<CohClass>> curves,
                                 std::optional<CohClass> ample_witness) {
  if (gram.rows() != basis.size() || gram.cols() != basis.size())
    throw Error(ErrorCode::RankMismatch, "gram shape does not match basis");
  if (!gram.is_symmetric()) throw Error(ErrorCode::NonSymmetricGram, "gram matrix of '" + name + "' is not symmetric");
  if (c1.size() != basis.size()) throw Error(ErrorCode::RankMismatch, "c1 length");
  if (!c1.is_integral()) throw Error(ErrorCode::InvalidModel, "c1 must be integral");
  SurfaceModel m;
  m.name = std::move(name);
  m.basis = std::move(basis);
  m.gram = std::move(gram);
  m.c1 = std::move(c1);
  m.kind = ModelKind::Custom;
  if (curves) {
    for (const auto& c : *curves)
      if (c.size() != m.rank() || !c.is_integral()) throw Error(ErrorCode::InvalidModel, "curve class " + c.str());
    m.curve_regime = CurveRegime::Explicit;
    m.explicit_curves = std::move(*curves);
  }
  if (ample_witness) {
    if (ample_witness->size() != m.rank()) throw Error(ErrorCode::RankMismatch, "ample witness length");
    m.ample_witness = std::move(ample_witness);
    m.ample_source = "model data";
  }
  return m;
}

struct ModelSpec {
  enum class Kind { ProjectivePlane, Quadric, Blowup, Custom } kind = Kind::ProjectivePlane;
  int k = 0;
  Position position = Position::General;
  // custom
  std::string name;
  std::vector<std::string> basis;
  IntMatrix gram;
  CohClass c1;
  std::optional<std::vector<CohClass>> curves;
  std::optional<CohClass> ample_witness;
};

inline SurfaceModel make_model(const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelSpec::Kind::ProjectivePlane: return projective_plane();
    case ModelSpec::Kind::Quadric: return quadric();
    case ModelSpec::Kind::Blowup: return blowup_cp2(spec.k, spec.position);
    case ModelSpec::Kind::Custom:
      return custom_model(spec.name, spec.basis, spec.gram, spec.c1, spec.curves, spec.ample_witness);
  }
  throw Error(ErrorCode::InvalidModel, "unknown model kind");
}

/// Kummer sublattice: C1..C4 with Q(Ci, Cj) = -2 delta_ij and declared Q(Ci, F) = +-1.
inline PairingFunctionalModel kummer_model(std::array<int, 4> f_signs = {1, 1, 1, 1}) {
  PairingFunctionalModel m("kummer", {"C1", "C2", "C3", "C4", "F"});
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m.declare(i, j, i == j ? Scalar(-2) : Scalar(0));
    if (f_signs[i] != 1 && f_signs[i] != -1) throw Error(ErrorCode::InvalidModel, "Q(Ci,F) must be +-1");
    m.declare(i, 4, Scalar(f_signs[i]));
  }
  return m;
}

// ---------------------------------------------------------------------------
// lattice services

inline IntMatrix coefficient_matrix(const std::vector<CohClass>& classes) {
  std::vector<IntVector> rows;
  for (const auto& c : classes) rows.push_back(c.to_integers());
  return IntMatrix::from_rows(rows);
}

/// True iff the integral classes extend to a Z-basis: independent, with all
/// invariant factors of their coefficient matrix equal to 1.
inline bool basis_extension_check(const SurfaceModel& m, const std::vector<CohClass>& classes) {
  if (classes.empty()) return true;
  for (const auto& c : classes)
    if (c.size() != m.rank()) throw Error(ErrorCode::RankMismatch, "class length");
  SmithForm f = snf(coefficient_matrix(classes));
  if (f.rank != classes.size()) return false;
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.S(i, i) != 1) return false;
  return true;
}

/// Largest r with x / r integral.
inline Integer divisibility_index(const SurfaceModel& m, const CohClass& x) {
  if (x.size() != m.rank()) throw Error(ErrorCode::RankMismatch, "class length");
  IntVector v = x.to_integers();
  Integer g = gcd_of(v);
  if (g == 0) throw Error(ErrorCode::ZeroClass, "divisibility index of the zero class");
  return g;
}

inline bool mod2_membership(const SurfaceModel& m, const CohClass& target, const std::vector<CohClass>& span) {
  if (target.size() != m.rank()) throw Error(ErrorCode::RankMismatch, "class length");
  std::vector<IntVector> vs;
  for (const auto& s : span) vs.push_back(s.to_integers());
  return mod2_in_span(target.to_integers(), vs);
}

// ---------------------------------------------------------------------------
// class expressions: "3H-E1-E2", "1/2(C+D)", "2(-K)", "[3,-1,-1]"

namespace detail {

template <PairingLattice M>
class ClassParser {
 public:
  ClassParser(const M& m, std::string_view s, std::optional<CohClass> canonical)
      : m_(m), s_(s), canonical_(std::move(canonical)) {}

  CohClass parse_all() {
    skip_ws();
    CohClass v = (peek() == '[') ? parse_vector() : parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                "class '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  CohClass parse_vector() {
    ++pos_;
    std::vector<Scalar> coeffs;
    for (;;) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']') ++pos_;
      std::string item(s_.substr(start, pos_ - start));
      item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                 item.end());
      coeffs.push_back(Scalar::parse(item));
      if (eat(',')) continue;
      if (eat(']')) break;
      fail("expected ',' or ']'");
    }
    if (coeffs.size() != m_.rank())
      fail("vector has " + std::to_string(coeffs.size()) + " entries, model rank is " + std::to_string(m_.rank()));
    return CohClass(std::move(coeffs));
  }

  CohClass parse_sum() {
    CohClass total = CohClass::zero(m_.rank());
    skip_ws();
    bool first = true;
    while (pos_ < s_.size() && peek() != ')') {
      Scalar sign(1);
      if (eat('+')) {
      } else if (eat('-')) {
        sign = -1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      total += sign * parse_term();
      first = false;
      skip_ws();
    }
    if (first) fail("empty class expression");
    return total;
  }

  // term := [rational ['*']] (label | '(' sum ')') | '0'
  CohClass parse_term() {
    skip_ws();
    std::optional<Rational> coeff;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = digits();
      Rational r(num);
      if (peek() == '/') {
        ++pos_;
        Integer den = digits();
        if (den == 0) fail("zero denominator");
        r = Rational(num, den);
      }
      coeff = r;
      eat('*');
      skip_ws();
      if (pos_ == s_.size() || peek() == '+' || peek() == '-' || peek() == ')') {
        if (*coeff == 0) return CohClass::zero(m_.rank());
        fail("bare coefficient without a class");
      }
    }
    CohClass x;
    if (eat('(')) {
      x = parse_sum();
      if (!eat(')')) fail("expected ')'");
    } else {
      x = label();
    }
    if (coeff) x = Scalar(*coeff) * x;
    return x;
  }

  Integer digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  CohClass label() {
    skip_ws();
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a basis label");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    std::string_view name = s_.substr(start, pos_ - start);
    if (auto i = m_.label_index(name)) return CohClass::unit(m_.rank(), *i);
    if (name == "K" && canonical_) return *canonical_;
    pos_ = start;
    fail("unknown label '" + std::string(name) + "'");
  }

  const M& m_;
  std::string_view s_;
  std::optional<CohClass> canonical_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses either syntax. "K" denotes the canonical class on surface models.
inline CohClass parse_class(const SurfaceModel& m, std::string_view text) {
  return detail::ClassParser<SurfaceModel>(m, text, m.canonical_class()).parse_all();
}

inline CohClass parse_class(const PairingFunctionalModel& m, std::string_view text) {
  return detail::ClassParser<PairingFunctionalModel>(m, text, std::nullopt).parse_all();
}

/// Renders in label syntax, e.g. "3H-E1-E2"; irrational or fractional
/// coefficients are parenthesized: "(1/2)C+(1/2)D".
inline std::string format_class(const std::vector<std::string>& labels, const CohClass& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Scalar& c = x[i];
    if (c.is_zero()) continue;
    const std::string& lab = i < labels.size() ? labels[i] : ("e" + std::to_string(i));
    if (c.is_integer()) {
      bool neg = c.sign() < 0;
      Scalar mag = neg ? -c : c;
      if (neg) out += "-";
      else if (!out.empty()) out += "+";
      if (mag != Scalar(1)) out += mag.str();
      out += lab;
    } else {
      if (!out.empty()) out += "+";
      out += "(" + c.str() + ")" + lab;
    }
  }
  return out.empty() ? "0" : out;
}

template <PairingLattice M>
std::string format_class(const M& m, const CohClass& x) {
  return format_class(basis_labels(m), x);
}

}  // namespace cytforge
