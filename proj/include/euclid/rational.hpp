#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "euclid/errors.hpp"

namespace euclid {

// Expression templates are switched off so that arithmetic returns plain
// values: the geometry core is generic over the scalar type and deduces S
// from operator results.
using Integer =
    boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

// Exact rational scalar, always in canonical form (positive denominator,
// coprime). boost::multiprecision maintains the invariants.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) raise(ErrorCode::DivisionByZero, "rational with zero denominator");
  return Rational(num, den);
}

inline int sign_of(const Rational& x) { return x.sign(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

// Floor of sqrt for nonnegative integers (boost's sqrt is exactly that).
inline Integer isqrt_floor(const Integer& n) { return boost::multiprecision::sqrt(n); }

// Exact square root in Q: succeeds iff numerator and denominator are both
// perfect squares. The only backend where sqrt can be missing.
std::optional<Rational> try_rational_sqrt(const Rational& x);

// True iff x = (p/q)^2 for some rational p/q.
inline bool is_rational_square(const Rational& x) { return try_rational_sqrt(x).has_value(); }

// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& x);

// Decimal expansion with `digits` significant digits, round-half-away,
// computed by exact long division. Used only at the SVG/JSON display boundary.
std::string rational_decimal(const Rational& x, int digits);

}  // namespace euclid
