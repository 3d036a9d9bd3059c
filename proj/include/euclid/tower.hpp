#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "euclid/rational.hpp"

namespace euclid {

namespace detail {

struct TowerLevel;
using TowerPtr = std::shared_ptr<const TowerLevel>;

struct RatBox {
  Rational lo, hi;
};

// One quadratic adjunction K -> K(sqrt(d)). Structurally immutable; the
// cached enclosure of sqrt(d) only ever tightens, under the mutex, so shared
// values stay safe across threads.
struct TowerLevel {
  TowerPtr base;              // nullptr when the base field is Q
  std::vector<Rational> gen;  // d as coordinates over `base`, size 2^(depth-1)
  int depth = 1;
  mutable std::mutex mu;
  mutable RatBox root_box;  // root_box.lo <= sqrt(d) <= root_box.hi
};

inline int depth_of(const TowerPtr& t) { return t ? t->depth : 0; }

}  // namespace detail

// An element of an iterated real quadratic extension of Q — the
// constructible-number backend. Coordinates run over the 2^k products of the
// adjoined square roots (binary order: bit i set <=> sqrt(d_{i+1}) divides the
// basis element); the representation is trimmed to the shortest tower prefix
// carrying the value, so plain rationals stay tower-free and values produced
// on one adjunction chain remain directly compatible.
//
// Zero and equality are exact coordinate tests (the basis is linearly
// independent because every generator is a proven non-square one level down).
// Sign is decided by interval evaluation with exact rational endpoints,
// bisecting the cached sqrt enclosures until zero is excluded; the value is
// proved nonzero first, so the loop terminates.
class TowerReal {
 public:
  TowerReal() : coords_{Rational(0)} {}
  TowerReal(int n) : coords_{Rational(n)} {}
  TowerReal(const Rational& r) : coords_{r} {}
  TowerReal(detail::TowerPtr tower, std::vector<Rational> coords);

  // Exact square root: result * result == x. Reuses a root already present in
  // x's tower when one exists, otherwise adjoins a new level. NegativeRadicand
  // if x < 0.
  static TowerReal sqrt_of(const TowerReal& x);

  bool is_zero() const;
  int sign() const;
  bool is_rational() const { return !tower_; }
  const Rational& as_rational() const { return coords_[0]; }
  int depth() const { return detail::depth_of(tower_); }
  const detail::TowerPtr& tower() const { return tower_; }
  const std::vector<Rational>& coords() const { return coords_; }

  TowerReal operator-() const;
  friend TowerReal operator+(const TowerReal& a, const TowerReal& b);
  friend TowerReal operator-(const TowerReal& a, const TowerReal& b);
  friend TowerReal operator*(const TowerReal& a, const TowerReal& b);
  friend TowerReal operator/(const TowerReal& a, const TowerReal& b);  // DivisionByZero

  friend bool operator==(const TowerReal& a, const TowerReal& b);
  friend bool operator!=(const TowerReal& a, const TowerReal& b) { return !(a == b); }

  // sign(a - b) as -1/0/+1.
  static int compare(const TowerReal& a, const TowerReal& b);

  // Rational m with |x - m| <= tol, tol > 0. Display/rendering only.
  Rational approx_within(const Rational& tol) const;

  // Deterministic exact expression string, e.g. "1/2 + (3/2)*sqrt(2)",
  // nested generators rendered recursively: "sqrt(1 + sqrt(2))".
  std::string str() const;

 private:
  detail::TowerPtr tower_;  // nullptr = plain rational
  std::vector<Rational> coords_;
};

inline int sign_of(const TowerReal& x) { return x.sign(); }
inline bool is_zero(const TowerReal& x) { return x.is_zero(); }

}  // namespace euclid
