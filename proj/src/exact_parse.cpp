#include "euclid/exact_parse.hpp"

namespace euclid {

namespace {

// Power with rational exponent. Integer exponents work everywhere via
// repeated multiplication; fractional exponents only on series monomials
// (that is all the emitted strings ever contain).
template <class S>
S pow_value(const S& base, const Rational& e);

template <class S>
S pow_integer(const S& base, Integer n) {
  const bool invert = n < 0;
  if (invert) n = -n;
  S acc = ScalarTraits<S>::from_rational(Rational(1));
  S b = base;
  while (n > 0) {
    if ((n & 1) != 0) acc = acc * b;
    b = b * b;
    n >>= 1;
  }
  if (invert) {
    if (is_zero(acc)) raise(ErrorCode::DivisionByZero, "zero to a negative power");
    return ScalarTraits<S>::from_rational(Rational(1)) / acc;
  }
  return acc;
}

template <class S>
S pow_value(const S& base, const Rational& e) {
  if (denominator(e) == 1) return pow_integer(base, numerator(e));
  if constexpr (std::is_same_v<S, SeriesValue>) {
    if (base.terms().size() == 1 && base.exact()) {
      const auto& t = base.terms()[0];
      if (t.coef == TowerReal(1)) return SeriesValue::monomial(TowerReal(1), t.exp * e);
    }
  }
  raise(ErrorCode::SyntaxError, "fractional power of a non-monomial value");
}

template <class S>
class ExactParser {
 public:
  explicit ExactParser(const std::string& text) : text_(text) {}

  S parse() {
    S v = expr();
    skip_ws();
    if (pos_ != text_.size()) raise(ErrorCode::SyntaxError, "trailing input in exact value");
    return v;
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat_word(const char* w) {
    skip_ws();
    size_t len = std::string(w).size();
    if (text_.compare(pos_, len, w) == 0) {
      pos_ += len;
      return true;
    }
    return false;
  }

  S expr() {
    S v = term();
    for (;;) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  S term() {
    S v = factor();
    for (;;) {
      if (eat('*'))
        v = v * factor();
      else if (eat('/')) {
        S d = factor();
        if (is_zero(d)) raise(ErrorCode::DivisionByZero, "division by zero in exact value");
        v = v / d;
      } else
        return v;
    }
  }

  S factor() {
    if (eat('-')) return -factor();
    S base = primary();
    if (eat('^')) return pow_value(base, exponent());
    return base;
  }

  Rational exponent() {
    if (eat('(')) {
      // rational exponent, possibly signed or a fraction
      bool neg = eat('-');
      Rational num = number();
      Rational r = num;
      if (eat('/')) r = num / number();
      if (!eat(')')) raise(ErrorCode::SyntaxError, "expected ')' after exponent");
      return neg ? -r : r;
    }
    bool neg = eat('-');
    Rational r = number();
    return neg ? -r : r;
  }

  Rational number() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) raise(ErrorCode::SyntaxError, "expected a number in exact value");
    return Rational(text_.substr(start, pos_ - start));
  }

  S primary() {
    char c = peek();
    if (c == '(') {
      eat('(');
      S v = expr();
      if (!eat(')')) raise(ErrorCode::SyntaxError, "expected ')'");
      return v;
    }
    if (isdigit(static_cast<unsigned char>(c)))
      return ScalarTraits<S>::from_rational(number());
    if (eat_word("sqrt")) {
      if (!eat('(')) raise(ErrorCode::SyntaxError, "expected '(' after sqrt");
      S v = expr();
      if (!eat(')')) raise(ErrorCode::SyntaxError, "expected ')'");
      auto r = try_field_sqrt(v);
      if (!r) raise(ErrorCode::NoSqrtInField, "no square root for parsed value");
      return *r;
    }
    if (eat_word("eps")) return ScalarTraits<S>::eps();
    if (eat_word("O")) {
      if constexpr (std::is_same_v<S, SeriesValue>) {
        if (!eat('(')) raise(ErrorCode::SyntaxError, "expected '(' after O");
        S inner = expr();
        if (!eat(')')) raise(ErrorCode::SyntaxError, "expected ')'");
        if (inner.terms().size() != 1)
          raise(ErrorCode::SyntaxError, "O(...) needs a monomial order");
        return SeriesValue::make({}, inner.terms()[0].exp);
      }
      raise(ErrorCode::SyntaxError, "O(...) is only meaningful for series values");
    }
    raise(ErrorCode::SyntaxError, "unexpected input in exact value");
  }
};

}  // namespace

template <class S>
S parse_exact(const std::string& text) {
  return ExactParser<S>(text).parse();
}

template Rational parse_exact<Rational>(const std::string&);
template TowerReal parse_exact<TowerReal>(const std::string&);
template SeriesValue parse_exact<SeriesValue>(const std::string&);

}  // namespace euclid
