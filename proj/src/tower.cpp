#include "euclid/tower.hpp"

#include <algorithm>
#include <cassert>

#include "euclid/errors.hpp"

namespace euclid {
namespace {

using detail::RatBox;
using detail::TowerLevel;
using detail::TowerPtr;
using detail::depth_of;
using Coords = std::vector<Rational>;
using Span = std::span<const Rational>;

bool all_zero(Span c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& r) { return r.is_zero(); });
}

Coords add(Span a, Span b) {
  Coords out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Coords sub(Span a, Span b) {
  Coords out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Coords neg(Span a) {
  Coords out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Coords concat(Span lo, Span hi) {
  Coords out(lo.begin(), lo.end());
  out.insert(out.end(), hi.begin(), hi.end());
  return out;
}

Coords zeros(size_t n) { return Coords(n, Rational(0)); }

Coords scal(Span a, const Rational& r) {
  Coords out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * r;
  return out;
}

// Zero-pad a value from a prefix tower into a deeper one. Valid because the
// prefix basis is the leading block of the extended basis.
Coords lift(Span c, int to_depth) {
  Coords out(c.begin(), c.end());
  out.resize(size_t{1} << to_depth, Rational(0));
  return out;
}

// (lo + hi*sqrt(d))(lo' + hi'*sqrt(d)) with recursion over the halves.
Coords mul(const TowerPtr& t, Span a, Span b) {
  if (!t) return {a[0] * b[0]};
  const size_t h = a.size() / 2;
  Span alo = a.first(h), ahi = a.subspan(h);
  Span blo = b.first(h), bhi = b.subspan(h);
  const TowerPtr& base = t->base;
  Coords cross = mul(base, mul(base, ahi, bhi), t->gen);
  Coords lo = add(mul(base, alo, blo), cross);
  Coords hi = add(mul(base, alo, bhi), mul(base, ahi, blo));
  return concat(lo, hi);
}

// 1/(lo + hi*sqrt(d)) = (lo - hi*sqrt(d)) / (lo^2 - hi^2 d). The denominator
// is a nonzero base element: it can only vanish if d were a square one level
// down, which the adjunction invariant rules out.
Coords inverse(const TowerPtr& t, Span a) {
  if (!t) {
    if (a[0].is_zero()) raise(ErrorCode::InternalError, "tower inverse of zero");
    return {1 / a[0]};
  }
  const size_t h = a.size() / 2;
  Span lo = a.first(h), hi = a.subspan(h);
  const TowerPtr& base = t->base;
  Coords denom = sub(mul(base, lo, lo), mul(base, mul(base, hi, hi), t->gen));
  if (all_zero(denom)) raise(ErrorCode::InternalError, "conjugate norm vanished");
  Coords dinv = inverse(base, denom);
  return concat(mul(base, lo, dinv), neg(mul(base, hi, dinv)));
}

// --- interval machinery for sign determination ---

RatBox box_add(const RatBox& a, const RatBox& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RatBox box_mul(const RatBox& a, const RatBox& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RatBox eval_box(const TowerPtr& t, Span c) {
  if (!t) return {c[0], c[0]};
  const size_t h = c.size() / 2;
  RatBox lo = eval_box(t->base, c.first(h));
  RatBox hi = eval_box(t->base, c.subspan(h));
  RatBox root;
  {
    std::lock_guard<std::mutex> g(t->mu);
    root = t->root_box;
  }
  return box_add(lo, box_mul(hi, root));
}

int sign_rec(const TowerPtr& t, Span c);

// One bisection step on every enclosure in the chain. The midpoint test
// m^2 <= d is an exact sign query one level down.
void refine_once(const TowerPtr& t) {
  if (!t) return;
  refine_once(t->base);
  RatBox cur;
  {
    std::lock_guard<std::mutex> g(t->mu);
    cur = t->root_box;
  }
  Rational m = (cur.lo + cur.hi) / 2;
  Coords msq = zeros(t->gen.size());
  msq[0] = m * m;
  int s = sign_rec(t->base, sub(t->gen, msq));
  {
    std::lock_guard<std::mutex> g(t->mu);
    if (s >= 0)
      t->root_box.lo = std::max(t->root_box.lo, m);
    else
      t->root_box.hi = std::min(t->root_box.hi, m);
  }
}

int sign_rec(const TowerPtr& t, Span c) {
  if (all_zero(c)) return 0;
  if (!t) return c[0].sign();
  for (;;) {
    RatBox box = eval_box(t, c);
    if (box.lo.sign() > 0) return 1;
    if (box.hi.sign() < 0) return -1;
    refine_once(t);
  }
}

// --- exact square detection inside a fixed tower ---
//
// sqrt(p + h*sqrt(d)) = a + b*sqrt(d) forces a^2 + b^2 d = p and 2ab = h,
// so a^2 = (p +- n)/2 where n = sqrt(p^2 - h^2 d) must exist one level down.
// The h = 0 case splits into sqrt(p) in the base or sqrt(p/d)*sqrt(d).
std::optional<Coords> try_sqrt_in(const TowerPtr& t, Span c) {
  if (all_zero(c)) return zeros(c.size());
  if (!t) {
    if (c[0].sign() < 0) return std::nullopt;
    if (auto r = try_rational_sqrt(c[0])) return Coords{*r};
    return std::nullopt;
  }
  const size_t half = c.size() / 2;
  Span p = c.first(half), h = c.subspan(half);
  const TowerPtr& base = t->base;
  if (all_zero(h)) {
    if (auto r = try_sqrt_in(base, p)) return concat(*r, zeros(half));
    Coords pd = mul(base, p, inverse(base, t->gen));
    if (auto r2 = try_sqrt_in(base, pd)) return concat(zeros(half), *r2);
    return std::nullopt;
  }
  Coords nsq = sub(mul(base, p, p), mul(base, mul(base, h, h), t->gen));
  auto n = try_sqrt_in(base, nsq);
  if (!n) return std::nullopt;
  const Rational half_r(1, 2);
  for (const Coords& asq : {scal(add(p, *n), half_r), scal(sub(p, *n), half_r)}) {
    if (sign_rec(base, asq) <= 0) continue;
    auto a = try_sqrt_in(base, asq);
    if (!a) continue;
    Coords b = mul(base, h, inverse(base, scal(*a, Rational(2))));
    Coords root = concat(*a, b);
    if (!all_zero(sub(mul(t, root, root), c))) continue;
    if (sign_rec(t, root) < 0) root = neg(root);
    return root;
  }
  return std::nullopt;
}

// Find-or-adjoin sqrt of a nonzero, nonnegative element x of tower t.
struct SqrtResult {
  TowerPtr tower;
  Coords root;
};

SqrtResult sqrt_in(const TowerPtr& t, const Coords& x) {
  if (auto r = try_sqrt_in(t, x)) return {t, std::move(*r)};
  auto lvl = std::make_shared<TowerLevel>();
  lvl->base = t;
  lvl->gen = x;
  lvl->depth = depth_of(t) + 1;
  RatBox db = eval_box(t, x);
  lvl->root_box = {Rational(0), std::max(Rational(1), db.hi)};
  Coords root = zeros(x.size() * 2);
  root[x.size()] = 1;
  return {lvl, std::move(root)};
}

bool in_chain(const TowerPtr& longer, const TowerPtr& shorter) {
  if (!shorter) return true;
  for (const TowerLevel* t = longer.get(); t; t = t->base.get())
    if (t == shorter.get()) return true;
  return false;
}

// Re-express a value living on an unrelated tower over (an extension of) `t`
// by re-adjoining its generators in order; shared radicals are found by the
// square test rather than duplicated.
std::pair<TowerPtr, TowerReal> rebuild(TowerPtr t, const TowerPtr& ty, Span c) {
  if (!ty) return {std::move(t), TowerReal(c[0])};
  const size_t half = c.size() / 2;
  auto [t1, g] = rebuild(std::move(t), ty->base, Span(ty->gen));
  SqrtResult s = sqrt_in(t1, lift(g.coords(), depth_of(t1)));
  TowerReal root(s.tower, s.root);
  auto [t2, vlo] = rebuild(s.tower, ty->base, c.first(half));
  auto [t3, vhi] = rebuild(std::move(t2), ty->base, c.subspan(half));
  return {std::move(t3), vlo + vhi * root};
}

struct Aligned {
  TowerPtr tower;
  Coords a, b;
};

Aligned align(const TowerReal& x, const TowerReal& y) {
  if (in_chain(x.tower(), y.tower()))
    return {x.tower(), x.coords(), lift(y.coords(), x.depth())};
  if (in_chain(y.tower(), x.tower()))
    return {y.tower(), lift(x.coords(), y.depth()), y.coords()};
  auto [t, y2] = rebuild(x.tower(), y.tower(), Span(y.coords()));
  const int d = depth_of(t);
  return {t, lift(x.coords(), d), lift(y2.coords(), d)};
}

std::string render(const TowerPtr& t, Span c) {
  if (!t) return rational_str(c[0]);
  const size_t half = c.size() / 2;
  Span lo = c.first(half), hi = c.subspan(half);
  if (all_zero(hi)) return render(t->base, lo);
  std::string g = "sqrt(" + render(t->base, t->gen) + ")";
  std::string coef = render(t->base, hi);
  std::string term = (coef == "1") ? g : "(" + coef + ")*" + g;
  if (all_zero(lo)) return term;
  return render(t->base, lo) + " + " + term;
}

}  // namespace

TowerReal::TowerReal(detail::TowerPtr tower, std::vector<Rational> coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
  assert(coords_.size() == (size_t{1} << depth_of(tower_)));
  while (tower_ && all_zero(Span(coords_).subspan(coords_.size() / 2))) {
    coords_.resize(coords_.size() / 2);
    tower_ = tower_->base;
  }
}

bool TowerReal::is_zero() const { return !tower_ && coords_[0].is_zero(); }

int TowerReal::sign() const { return sign_rec(tower_, coords_); }

TowerReal TowerReal::operator-() const { return TowerReal(tower_, neg(coords_)); }

TowerReal operator+(const TowerReal& a, const TowerReal& b) {
  Aligned al = align(a, b);
  return TowerReal(al.tower, add(al.a, al.b));
}

TowerReal operator-(const TowerReal& a, const TowerReal& b) {
  Aligned al = align(a, b);
  return TowerReal(al.tower, sub(al.a, al.b));
}

TowerReal operator*(const TowerReal& a, const TowerReal& b) {
  Aligned al = align(a, b);
  return TowerReal(al.tower, mul(al.tower, al.a, al.b));
}

TowerReal operator/(const TowerReal& a, const TowerReal& b) {
  if (b.is_zero()) raise(ErrorCode::DivisionByZero, "tower division by zero");
  Aligned al = align(a, b);
  return TowerReal(al.tower, mul(al.tower, al.a, inverse(al.tower, al.b)));
}

bool operator==(const TowerReal& a, const TowerReal& b) {
  if (a.tower_.get() == b.tower_.get()) {
    return a.coords_ == b.coords_;  // canonical representation
  }
  return (a - b).is_zero();
}

int TowerReal::compare(const TowerReal& a, const TowerReal& b) { return (a - b).sign(); }

TowerReal TowerReal::sqrt_of(const TowerReal& x) {
  const int s = x.sign();
  if (s < 0) raise(ErrorCode::NegativeRadicand, "sqrt of negative constructible value");
  if (s == 0) return TowerReal();
  SqrtResult r = sqrt_in(x.tower_, x.coords_);
  return TowerReal(r.tower, r.root);
}

Rational TowerReal::approx_within(const Rational& tol) const {
  if (!tower_) return coords_[0];
  for (;;) {
    RatBox box = eval_box(tower_, coords_);
    if (box.hi - box.lo <= tol) return (box.lo + box.hi) / 2;
    refine_once(tower_);
  }
}

std::string TowerReal::str() const { return render(tower_, coords_); }

}  // namespace euclid
