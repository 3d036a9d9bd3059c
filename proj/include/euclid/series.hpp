#pragma once

#include <optional>
#include <string>
#include <vector>

#include "euclid/classify.hpp"
#include "euclid/rational.hpp"
#include "euclid/tower.hpp"

namespace euclid {

// Truncation window for the expansion-based series operations (division,
// square root): they keep relative exponents below this many. Process-wide;
// the CLI sets it from --truncation before any computation starts.
unsigned series_window();
void set_series_window(unsigned w);

// The non-Archimedean backend: finite formal series in a positive
// infinitesimal eps, with rational exponents (dyadic denominators arise from
// sqrt) and constructible coefficients, ordered by the leading term.
//
// A value is either Exact or Truncated(order): every stored term has exponent
// below `order` and is correct; nothing is known from `order` upward. Sums
// and products propagate the tightest provable order; division and square
// root expand geometric/binomial series up to the window. Equality is only
// ever reported between Exact values — a zero known prefix with a truncated
// operand raises PrecisionExhausted instead of answering EQ.
class SeriesValue {
 public:
  struct Term {
    Rational exp;
    TowerReal coef;
  };

  SeriesValue() = default;  // exact zero
  explicit SeriesValue(const Rational& r);
  explicit SeriesValue(const TowerReal& c);
  static SeriesValue eps();
  static SeriesValue monomial(TowerReal coef, Rational exp);
  static SeriesValue make(std::vector<Term> terms, std::optional<Rational> order);

  const std::vector<Term>& terms() const { return terms_; }
  bool exact() const { return !order_.has_value(); }
  const std::optional<Rational>& trunc_order() const { return order_; }

  bool is_exact_zero() const { return terms_.empty() && exact(); }
  // Smallest exponent that could carry a nonzero coefficient.
  Rational lead_bound() const;

  SeriesValue operator-() const;
  friend SeriesValue operator+(const SeriesValue& a, const SeriesValue& b);
  friend SeriesValue operator-(const SeriesValue& a, const SeriesValue& b);
  friend SeriesValue operator*(const SeriesValue& a, const SeriesValue& b);
  friend SeriesValue operator/(const SeriesValue& a, const SeriesValue& b);

  static SeriesValue sqrt_of(const SeriesValue& x);

  // sign(a - b); PrecisionExhausted when the difference has an empty known
  // prefix but either side is truncated.
  static int compare(const SeriesValue& a, const SeriesValue& b);

  // Structural identity (terms, coefficients, status) — test helper, not the
  // field-level equality.
  bool identical_to(const SeriesValue& o) const;

  std::string str() const;

 private:
  std::vector<Term> terms_;
  std::optional<Rational> order_;
};

int sign_of(const SeriesValue& x);   // PrecisionExhausted if undecidable
bool is_zero(const SeriesValue& x);  // PrecisionExhausted if undecidable
MagnitudeClass classify_value(const SeriesValue& x);

}  // namespace euclid
