#include "euclid/series.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <sstream>

#include "euclid/errors.hpp"

namespace euclid {

namespace {

std::atomic<unsigned> g_window{16};

using Term = SeriesValue::Term;
using Order = std::optional<Rational>;  // nullopt = exact (order infinity)

Order min_order(const Order& a, const Order& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

Order add_order(const Order& o, const Rational& shift) {
  if (!o) return std::nullopt;
  return *o + shift;
}

SeriesValue from_map(std::map<Rational, TowerReal>&& acc, Order order) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [exp, coef] : acc) {
    if (coef.is_zero()) continue;
    if (order && exp >= *order) break;
    terms.push_back({exp, std::move(coef)});
  }
  return SeriesValue::make(std::move(terms), std::move(order));
}

SeriesValue truncate_at(const SeriesValue& v, const Rational& cap) {
  std::vector<Term> terms;
  for (const Term& t : v.terms()) {
    if (t.exp >= cap) break;
    terms.push_back(t);
  }
  Order order = min_order(v.trunc_order(), cap);
  return SeriesValue::make(std::move(terms), std::move(order));
}

// Sum_{j>=0} c_j u^j where c_0 = 1 and c_j = c_{j-1} * step(j), with u a
// positive-lead series already truncated at `cap`. Backs 1/(1+u) and
// (1+u)^(1/2); terminates because each factor of u raises the lead.
SeriesValue power_sum(const SeriesValue& u, const Rational& cap,
                      const std::function<Rational(int, const Rational&)>& step) {
  SeriesValue sum(Rational(1));
  SeriesValue term(Rational(1));
  Rational coef(1);
  for (int j = 1;; ++j) {
    term = term * u;
    coef = step(j, coef);
    if (term.terms().empty() || term.terms().front().exp >= cap) break;
    sum = sum + SeriesValue(TowerReal(coef)) * term;
  }
  return truncate_at(sum, cap);
}

}  // namespace

unsigned series_window() { return g_window.load(); }

void set_series_window(unsigned w) {
  if (w < 4) raise(ErrorCode::InternalError, "truncation window must be >= 4");
  g_window.store(w);
}

SeriesValue::SeriesValue(const Rational& r) {
  if (!r.is_zero()) terms_.push_back({Rational(0), TowerReal(r)});
}

SeriesValue::SeriesValue(const TowerReal& c) {
  if (!c.is_zero()) terms_.push_back({Rational(0), c});
}

SeriesValue SeriesValue::eps() { return monomial(TowerReal(1), Rational(1)); }

SeriesValue SeriesValue::monomial(TowerReal coef, Rational exp) {
  SeriesValue v;
  if (!coef.is_zero()) v.terms_.push_back({std::move(exp), std::move(coef)});
  return v;
}

SeriesValue SeriesValue::make(std::vector<Term> terms, std::optional<Rational> order) {
  SeriesValue v;
  v.terms_ = std::move(terms);
  v.order_ = std::move(order);
  return v;
}

Rational SeriesValue::lead_bound() const {
  if (!terms_.empty()) return terms_.front().exp;
  if (order_) return *order_;
  raise(ErrorCode::InternalError, "lead of exact zero");
}

SeriesValue SeriesValue::operator-() const {
  SeriesValue v;
  v.order_ = order_;
  v.terms_.reserve(terms_.size());
  for (const Term& t : terms_) v.terms_.push_back({t.exp, -t.coef});
  return v;
}

SeriesValue operator+(const SeriesValue& a, const SeriesValue& b) {
  std::map<Rational, TowerReal> acc;
  for (const SeriesValue* v : {&a, &b})
    for (const Term& t : v->terms_) {
      auto it = acc.emplace(t.exp, TowerReal(0)).first;
      it->second = it->second + t.coef;
    }
  return from_map(std::move(acc), min_order(a.order_, b.order_));
}

SeriesValue operator-(const SeriesValue& a, const SeriesValue& b) { return a + (-b); }

SeriesValue operator*(const SeriesValue& a, const SeriesValue& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return SeriesValue();
  Order order = min_order(add_order(a.order_, b.lead_bound()), add_order(b.order_, a.lead_bound()));
  std::map<Rational, TowerReal> acc;
  for (const Term& ta : a.terms_)
    for (const Term& tb : b.terms_) {
      Rational e = ta.exp + tb.exp;
      if (order && e >= *order) continue;
      auto it = acc.emplace(e, TowerReal(0)).first;
      it->second = it->second + ta.coef * tb.coef;
    }
  return from_map(std::move(acc), std::move(order));
}

SeriesValue operator/(const SeriesValue& a, const SeriesValue& b) {
  if (b.is_exact_zero()) raise(ErrorCode::DivisionByZero, "series division by zero");
  if (b.terms_.empty())
    raise(ErrorCode::PrecisionExhausted, "division by a series with empty known prefix");
  const Rational q = b.terms_.front().exp;
  const TowerReal& c = b.terms_.front().coef;
  SeriesValue inv_lead = SeriesValue::monomial(TowerReal(1) / c, -q);
  SeriesValue u = b * inv_lead - SeriesValue(Rational(1));  // positive-lead tail
  if (u.terms_.empty() && !u.order_) return a * inv_lead;   // exact monomial divisor
  Rational cap = Rational(static_cast<long>(series_window()));
  if (u.order_) cap = std::min(cap, *u.order_);
  SeriesValue geom = power_sum(truncate_at(u, cap), cap,
                               [](int, const Rational& prev) { return -prev; });
  return a * inv_lead * geom;
}

SeriesValue SeriesValue::sqrt_of(const SeriesValue& x) {
  if (x.is_exact_zero()) return SeriesValue();
  if (x.terms_.empty())
    raise(ErrorCode::PrecisionExhausted, "sqrt of a series with empty known prefix");
  const Rational q = x.terms_.front().exp;
  const TowerReal& c = x.terms_.front().coef;
  if (c.sign() < 0) raise(ErrorCode::NegativeRadicand, "sqrt of negative series value");
  SeriesValue root_lead = monomial(TowerReal::sqrt_of(c), q / 2);
  SeriesValue u = x * monomial(TowerReal(1) / c, -q) - SeriesValue(Rational(1));
  if (u.terms_.empty() && !u.order_) return root_lead;  // exact monomial radicand
  Rational cap = Rational(static_cast<long>(series_window()));
  if (u.order_) cap = std::min(cap, *u.order_);
  // (1+u)^(1/2): c_j = c_{j-1} * (3/2 - j)/j
  SeriesValue binom = power_sum(truncate_at(u, cap), cap, [](int j, const Rational& prev) {
    return prev * (Rational(3, 2) - j) / j;
  });
  return root_lead * binom;
}

int SeriesValue::compare(const SeriesValue& a, const SeriesValue& b) {
  SeriesValue d = a - b;
  if (d.terms_.empty()) {
    if (d.exact()) return 0;
    raise(ErrorCode::PrecisionExhausted,
          "comparison undecided: difference is zero on the known prefix");
  }
  return d.terms_.front().coef.sign();
}

bool SeriesValue::identical_to(const SeriesValue& o) const {
  if (order_ != o.order_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || !(terms_[i].coef == o.terms_[i].coef)) return false;
  return true;
}

std::string SeriesValue::str() const {
  std::ostringstream os;
  bool first = true;
  auto exp_str = [](const Rational& q) -> std::string {
    if (denominator(q) == 1) return rational_str(q);
    return "(" + rational_str(q) + ")";
  };
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string coef = t.coef.str();
    bool composite = coef.find(' ') != std::string::npos;
    if (t.exp.is_zero()) {
      os << (composite ? "(" + coef + ")" : coef);
      continue;
    }
    if (coef != "1") os << (composite ? "(" + coef + ")" : coef) << "*";
    os << "eps";
    if (t.exp != 1) os << "^" << exp_str(t.exp);
  }
  if (order_) {
    if (!first) os << " + ";
    os << "O(eps^" << exp_str(*order_) << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int sign_of(const SeriesValue& x) {
  if (x.terms().empty()) {
    if (x.exact()) return 0;
    raise(ErrorCode::PrecisionExhausted, "sign undecided on empty known prefix");
  }
  return x.terms().front().coef.sign();
}

bool is_zero(const SeriesValue& x) {
  if (!x.terms().empty()) return false;
  if (x.exact()) return true;
  raise(ErrorCode::PrecisionExhausted, "zero test undecided on empty known prefix");
}

MagnitudeClass classify_value(const SeriesValue& x) {
  if (x.terms().empty()) {
    if (x.exact()) return MagnitudeClass::Zero;
    raise(ErrorCode::PrecisionExhausted, "classification undecided on empty known prefix");
  }
  const int s = x.terms().front().exp.sign();
  if (s > 0) return MagnitudeClass::Infinitesimal;
  if (s == 0) return MagnitudeClass::LimitedAppreciable;
  return MagnitudeClass::Infinite;
}

}  // namespace euclid
