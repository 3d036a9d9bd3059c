#include "euclid/series.hpp"

#include <doctest.h>

#include <random>

#include "euclid/errors.hpp"

using namespace euclid;

namespace {

SeriesValue sv(long n, long d = 1) { return SeriesValue(Rational(n, d)); }
SeriesValue eps() { return SeriesValue::eps(); }

// All known coefficients of `v` below `below` are zero.
bool prefix_zero_below(const SeriesValue& v, const Rational& below) {
  for (const auto& t : v.terms())
    if (t.exp < below && !t.coef.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("monomial products are exact") {
  SeriesValue e2 = eps() * eps();
  CHECK(e2.exact());
  REQUIRE(e2.terms().size() == 1);
  CHECK(e2.terms()[0].exp == Rational(2));
  CHECK(e2.terms()[0].coef == TowerReal(1));
}

TEST_CASE("inverse of eps is exact and infinite") {
  SeriesValue inv = sv(1) / eps();
  CHECK(inv.exact());
  REQUIRE(inv.terms().size() == 1);
  CHECK(inv.terms()[0].exp == Rational(-1));
  CHECK(classify_value(inv) == MagnitudeClass::Infinite);
}

TEST_CASE("classification by leading exponent") {
  CHECK(classify_value(SeriesValue()) == MagnitudeClass::Zero);
  CHECK(classify_value(eps()) == MagnitudeClass::Infinitesimal);
  CHECK(classify_value(sv(3) + eps()) == MagnitudeClass::LimitedAppreciable);
  CHECK(classify_value(sv(1) / eps()) == MagnitudeClass::Infinite);
  CHECK(classify_value(eps() * eps()) == MagnitudeClass::Infinitesimal);
}

TEST_CASE("ordering: eps sits between 0 and every 1/n") {
  CHECK(SeriesValue::compare(eps(), SeriesValue()) == 1);
  CHECK(SeriesValue::compare(eps(), sv(1, 1000000)) == -1);
  CHECK(SeriesValue::compare(eps(), eps() * eps()) == 1);
  CHECK(SeriesValue::compare(sv(1) + eps(), sv(1)) == 1);  // CN5 shape
}

TEST_CASE("geometric division against multiplication oracle") {
  SeriesValue d = sv(1) - eps();
  SeriesValue q = sv(1) / d;
  CHECK_FALSE(q.exact());
  // Oracle: d * q - 1 must vanish on the whole known prefix.
  SeriesValue resid = d * q - sv(1);
  REQUIRE(resid.trunc_order().has_value());
  CHECK(prefix_zero_below(resid, *resid.trunc_order()));
  // First coefficients are the geometric series.
  REQUIRE(q.terms().size() >= 3);
  CHECK(q.terms()[0].coef == TowerReal(1));
  CHECK(q.terms()[1].coef == TowerReal(1));
  CHECK(q.terms()[2].coef == TowerReal(1));
}

TEST_CASE("sqrt of eps^2 (1+eps) squares back") {
  SeriesValue x = (eps() * eps()) * (sv(1) + eps());
  SeriesValue r = SeriesValue::sqrt_of(x);
  CHECK_FALSE(r.exact());
  // leading factor eps, then the binomial tail 1 + eps/2 - eps^2/8 ...
  REQUIRE(r.terms().size() >= 3);
  CHECK(r.terms()[0].exp == Rational(1));
  CHECK(r.terms()[0].coef == TowerReal(1));
  CHECK(r.terms()[1].coef == TowerReal(Rational(1, 2)));
  CHECK(r.terms()[2].coef == TowerReal(Rational(-1, 8)));
  SeriesValue resid = r * r - x;
  REQUIRE(resid.trunc_order().has_value());
  CHECK(prefix_zero_below(resid, *resid.trunc_order()));
}

TEST_CASE("sqrt of an exact monomial is exact") {
  SeriesValue x = sv(3, 4) * eps() * eps();
  SeriesValue r = SeriesValue::sqrt_of(x);
  CHECK(r.exact());
  REQUIRE(r.terms().size() == 1);
  CHECK(r.terms()[0].exp == Rational(1));
  CHECK(r.terms()[0].coef * r.terms()[0].coef == TowerReal(Rational(3, 4)));
  // half-integer exponents stay dyadic
  SeriesValue re = SeriesValue::sqrt_of(eps());
  CHECK(re.terms()[0].exp == Rational(1, 2));
}

TEST_CASE("truncated equality raises instead of lying") {
  SeriesValue q = sv(1) / (sv(1) - eps());
  CHECK_THROWS_AS((void)SeriesValue::compare(q, q), Error);  // prefix-zero difference, truncated
  CHECK_THROWS_AS((void)is_zero(q - q), Error);
  CHECK(SeriesValue::compare(q, sv(2)) == -1);  // decidable despite truncation
}

TEST_CASE("division by empty-prefix series exhausts precision") {
  SeriesValue q = sv(1) / (sv(1) - eps());
  SeriesValue unknown = q - q;  // zero prefix, truncated
  CHECK_THROWS_AS(sv(1) / unknown, Error);
  CHECK_THROWS_AS((void)classify_value(unknown), Error);
}

TEST_CASE("division by zero") { CHECK_THROWS_AS(eps() / SeriesValue(), Error); }

TEST_CASE("omega closure laws on random values") {
  std::mt19937_64 rng(11);
  auto coef = [&]() { return Rational(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 3) + 1); };
  auto infinitesimal = [&]() {
    SeriesValue v = SeriesValue::monomial(TowerReal(coef()), Rational(1)) +
                    SeriesValue::monomial(TowerReal(coef()), Rational(2));
    return v;
  };
  auto limited = [&]() {
    return sv(static_cast<long>(rng() % 9) + 1) + infinitesimal();
  };
  for (int i = 0; i < 80; ++i) {
    SeriesValue x = infinitesimal(), y = infinitesimal(), z = limited();
    auto cls = [](const SeriesValue& v) { return classify_value(v); };
    auto in_omega = [&](const SeriesValue& v) {
      MagnitudeClass c = cls(v);
      return c == MagnitudeClass::Zero || c == MagnitudeClass::Infinitesimal;
    };
    CHECK(in_omega(x + y));
    CHECK(in_omega(x * y));
    CHECK(in_omega(x * z));
    if (!x.terms().empty()) {
      CHECK(cls(x) == MagnitudeClass::Infinitesimal);
      CHECK(cls(sv(1) / x) == MagnitudeClass::Infinite);
    }
  }
}

TEST_CASE("field laws on random exact series") {
  std::mt19937_64 rng(23);
  auto coef = [&]() { return Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1); };
  auto gen = [&]() {
    SeriesValue v;
    for (long e = -1; e <= 2; ++e)
      if (rng() % 2) v = v + SeriesValue::monomial(TowerReal(coef()), Rational(e));
    return v;
  };
  for (int i = 0; i < 60; ++i) {
    SeriesValue a = gen(), b = gen(), c = gen();
    CHECK((a + b).identical_to(b + a));
    CHECK(((a + b) + c).identical_to(a + (b + c)));
    CHECK((a * (b + c)).identical_to(a * b + a * c));
    CHECK(((a * b) * c).identical_to(a * (b * c)));
    // order compatibility on exact values
    if (!a.is_exact_zero() && !b.is_exact_zero() && SeriesValue::compare(a, b) == -1) {
      CHECK(SeriesValue::compare(a + c, b + c) == -1);
      if (!c.is_exact_zero() && sign_of(c) > 0) CHECK(SeriesValue::compare(a * c, b * c) == -1);
    }
  }
}

TEST_CASE("series rendering") {
  CHECK(SeriesValue().str() == "0");
  CHECK(eps().str() == "eps");
  CHECK((sv(3) + sv(2) * eps()).str() == "3 + 2*eps");
  CHECK((sv(1) / eps()).str() == "eps^-1");
  CHECK(SeriesValue::sqrt_of(eps()).str() == "eps^(1/2)");
  SeriesValue q = sv(1) / (sv(1) - eps());
  CHECK(q.str().find("O(eps^16)") != std::string::npos);
}

TEST_CASE("truncation window is honored") {
  set_series_window(6);
  SeriesValue q = sv(1) / (sv(1) - eps());
  CHECK(*q.trunc_order() == Rational(6));
  CHECK(q.terms().size() == 6);
  set_series_window(16);
  q = sv(1) / (sv(1) - eps());
  CHECK(*q.trunc_order() == Rational(16));
}
