#include "euclid/rational.hpp"

#include <sstream>

namespace euclid {

std::optional<Rational> try_rational_sqrt(const Rational& x) {
  if (x.sign() < 0) raise(ErrorCode::NegativeRadicand, "sqrt of negative rational");
  if (x.is_zero()) return Rational(0);
  Integer num = numerator(x), den = denominator(x);
  Integer sn = isqrt_floor(num);
  if (sn * sn != num) return std::nullopt;
  Integer sd = isqrt_floor(den);
  if (sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

std::string rational_str(const Rational& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << "/" << denominator(x);
  return os.str();
}

std::string rational_decimal(const Rational& x, int digits) {
  if (x.is_zero()) return "0";
  const bool neg = x.sign() < 0;
  Integer num = boost::multiprecision::abs(numerator(x));
  Integer den = denominator(x);

  // Scale into [10^(digits-1), 10^digits) and remember the decimal exponent.
  Integer lo = 1;
  for (int i = 1; i < digits; ++i) lo *= 10;
  Integer hi = lo * 10;
  int exp10 = 0;  // value = mantissa * 10^exp10, mantissa has `digits` digits
  while (num / den < lo) {
    num *= 10;
    --exp10;
  }
  while (num / den >= hi) {
    den *= 10;
    ++exp10;
  }
  Integer mant = num / den;
  Integer rem = num - mant * den;
  if (2 * rem >= den) {
    ++mant;
    if (mant == hi) {  // rounding carried into one more digit
      mant /= 10;
      ++exp10;
    }
  }

  std::string m = mant.str();   // exactly `digits` characters
  int point = digits + exp10;   // digits before the decimal point
  std::string out;
  if (point <= 0) {
    out = "0.";
    out.append(static_cast<size_t>(-point), '0');
    out += m;
  } else if (point >= static_cast<int>(m.size())) {
    out = m;
    out.append(static_cast<size_t>(point - static_cast<int>(m.size())), '0');
  } else {
    out = m.substr(0, static_cast<size_t>(point)) + "." + m.substr(static_cast<size_t>(point));
  }
  if (out.find('.') != std::string::npos) {
    size_t last = out.find_last_not_of('0');
    if (out[last] == '.') --last;
    out.erase(last + 1);
  }
  return neg ? "-" + out : out;
}

}  // namespace euclid
