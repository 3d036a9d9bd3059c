#pragma once

#include <optional>
#include <string>
#include <variant>

#include "euclid/classify.hpp"
#include "euclid/errors.hpp"
#include "euclid/rational.hpp"
#include "euclid/series.hpp"
#include "euclid/tower.hpp"

namespace euclid {

enum class FieldTag { Rat, Constructible, NonArch };

const char* field_tag_name(FieldTag tag);  // "rational" / "constructible" / "nonarch"
std::optional<FieldTag> field_tag_from_name(const std::string& name);

enum class Ordering { LT, EQ, GT };

inline Ordering ordering_from_sign(int s) {
  return s < 0 ? Ordering::LT : (s == 0 ? Ordering::EQ : Ordering::GT);
}
const char* ordering_name(Ordering o);

// --- scalar concept used by the templated geometry core ---

inline int compare3(const Rational& a, const Rational& b) { return a < b ? -1 : (a == b ? 0 : 1); }
inline int compare3(const TowerReal& a, const TowerReal& b) { return TowerReal::compare(a, b); }
inline int compare3(const SeriesValue& a, const SeriesValue& b) { return SeriesValue::compare(a, b); }

// Square root inside the field. nullopt only for Rational (the non-Euclidean
// backend); NegativeRadicand on negative input everywhere.
inline std::optional<Rational> try_field_sqrt(const Rational& x) { return try_rational_sqrt(x); }
inline std::optional<TowerReal> try_field_sqrt(const TowerReal& x) { return TowerReal::sqrt_of(x); }
inline std::optional<SeriesValue> try_field_sqrt(const SeriesValue& x) { return SeriesValue::sqrt_of(x); }

inline std::string scalar_str(const Rational& x) { return rational_str(x); }
inline std::string scalar_str(const TowerReal& x) { return x.str(); }
inline std::string scalar_str(const SeriesValue& x) { return x.str(); }

// Equality certified as far as the representation can prove it. Exact
// backends decide outright; for series, a difference that vanishes on the
// whole known prefix counts as certified, and `note` records the order. A
// nonzero known term still refutes equality exactly.
inline bool certified_equal(const Rational& x, const Rational& y, std::string* = nullptr) {
  return x == y;
}
inline bool certified_equal(const TowerReal& x, const TowerReal& y, std::string* = nullptr) {
  return x == y;
}
inline bool certified_equal(const SeriesValue& x, const SeriesValue& y,
                            std::string* note = nullptr) {
  SeriesValue d = x - y;
  if (!d.terms().empty()) return false;
  if (!d.exact() && note) *note = "certified below eps^" + rational_str(*d.trunc_order());
  return true;
}

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr FieldTag tag = FieldTag::Rat;
  static Rational from_rational(const Rational& r) { return r; }
  static bool has_eps() { return false; }
  static Rational eps() {
    raise(ErrorCode::UnsupportedScalar, "eps is only available over the nonarch backend");
  }
};

template <>
struct ScalarTraits<TowerReal> {
  static constexpr FieldTag tag = FieldTag::Constructible;
  static TowerReal from_rational(const Rational& r) { return TowerReal(r); }
  static bool has_eps() { return false; }
  static TowerReal eps() {
    raise(ErrorCode::UnsupportedScalar, "eps is only available over the nonarch backend");
  }
};

template <>
struct ScalarTraits<SeriesValue> {
  static constexpr FieldTag tag = FieldTag::NonArch;
  static SeriesValue from_rational(const Rational& r) { return SeriesValue(r); }
  static bool has_eps() { return true; }
  static SeriesValue eps() { return SeriesValue::eps(); }
};

// The largest factor of x that can be divided out without losing exactness:
// x itself for the exact backends, the leading monomial for a multi-term
// series (1/x would need a truncated geometric expansion there).
inline Rational exact_unit_factor(const Rational& x) { return x; }
inline TowerReal exact_unit_factor(const TowerReal& x) { return x; }
inline SeriesValue exact_unit_factor(const SeriesValue& x) {
  if (x.terms().size() == 1 && x.exact()) return x;
  if (x.terms().empty()) raise(ErrorCode::PrecisionExhausted, "no leading term to normalize by");
  return SeriesValue::monomial(x.terms().front().coef, x.terms().front().exp);
}

// Least natural n with n*a > b for positive a, b; nullopt exactly when b/a is
// infinite (decided by classification, not by bounded search). Exponential
// probing then binary search, all on exact comparisons.
template <class S>
std::optional<Integer> archimedean_witness(const S& a, const S& b) {
  if (sign_of(a) <= 0 || sign_of(b) <= 0)
    raise(ErrorCode::InternalError, "archimedean_witness needs positive operands");
  if (classify_value(b / a) == MagnitudeClass::Infinite) return std::nullopt;
  S na = a;
  Integer n = 1;
  while (compare3(na, b) <= 0) {
    na = na + na;
    n *= 2;
  }
  if (n == 1) return n;
  Integer lo = n / 2, hi = n;  // lo*a <= b < hi*a
  while (lo + 1 < hi) {
    Integer mid = (lo + hi) / 2;
    S ma = a * ScalarTraits<S>::from_rational(Rational(mid));
    if (compare3(ma, b) <= 0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

// --- runtime-tagged value: the boundary type the CLI and reports use ---

enum class ArithOp { Add, Sub, Mul, Div };

class FieldValue {
 public:
  FieldValue() : v_(Rational(0)) {}
  explicit FieldValue(Rational r) : v_(std::move(r)) {}
  explicit FieldValue(TowerReal t) : v_(std::move(t)) {}
  explicit FieldValue(SeriesValue s) : v_(std::move(s)) {}

  static FieldValue lift(FieldTag tag, const Rational& r);

  FieldTag tag() const { return static_cast<FieldTag>(v_.index()); }
  const Rational& as_rational() const { return std::get<Rational>(v_); }
  const TowerReal& as_tower() const { return std::get<TowerReal>(v_); }
  const SeriesValue& as_series() const { return std::get<SeriesValue>(v_); }

  std::string str() const;

 private:
  std::variant<Rational, TowerReal, SeriesValue> v_;  // index order matches FieldTag
};

FieldValue field_arith(ArithOp op, const FieldValue& x, const FieldValue& y);
Ordering field_compare(const FieldValue& x, const FieldValue& y);
FieldValue field_sqrt(const FieldValue& x);  // NoSqrtInField over Rat when absent
MagnitudeClass field_classify(const FieldValue& x);
std::optional<Integer> field_archimedean_witness(const FieldValue& a, const FieldValue& b);

}  // namespace euclid
