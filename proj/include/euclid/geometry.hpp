#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "euclid/errors.hpp"
#include "euclid/field.hpp"

namespace euclid {

// Exact analytic plane geometry over any scalar backend S (Rational,
// TowerReal, SeriesValue). Everything here is a pure function of exact
// values; nothing ever rounds.

template <class S>
struct Point {
  S x, y;
};

template <class S>
bool points_equal(const Point<S>& p, const Point<S>& q) {
  return is_zero(p.x - q.x) && is_zero(p.y - q.y);
}

template <class S>
struct Segment {
  Point<S> a, b;
};

// ax + by + c = 0, scaled so the first nonzero of (a, b) is 1. Over the
// series backend coefficients may be infinite-valued (the subplane keeps such
// lines as traces).
template <class S>
struct Line {
  S a, b, c;
};

template <class S>
struct Circle {
  Point<S> center;
  S radius_sq;
};

// Exact (dot, cross) representative of an angle, up to positive scaling.
// "Two right angles" is the (negative, 0) class.
template <class S>
struct AnglePair {
  S c, s;
};

template <class S>
struct Triangle {
  Point<S> p, q, r;
};

template <class S>
using Figure = std::variant<Segment<S>, AnglePair<S>, Triangle<S>>;

// A plane to interpret geometry in: the full Cartesian plane over the tagged
// field, or the limited subplane L x L of the series field.
struct PlaneModel {
  FieldTag tag = FieldTag::Constructible;
  bool limited = false;
  std::string name() const {
    return std::string(field_tag_name(tag)) + (limited ? "-subplane" : "-full");
  }
};

inline PlaneModel make_model(FieldTag tag, bool limited) {
  if (limited && tag != FieldTag::NonArch)
    raise(ErrorCode::UnsupportedScalar, "the limited subplane requires the nonarch backend");
  return PlaneModel{tag, limited};
}

// --- small vector helpers ---

template <class S>
S dot(const S& ux, const S& uy, const S& wx, const S& wy) {
  return ux * wx + uy * wy;
}

template <class S>
S cross(const S& ux, const S& uy, const S& wx, const S& wy) {
  return ux * wy - uy * wx;
}

template <class S>
S dist_sq(const Point<S>& p, const Point<S>& q) {
  S dx = q.x - p.x, dy = q.y - p.y;
  return dx * dx + dy * dy;
}

// Sign of the cross product of (b-a) and (p-a): which side of the oriented
// line a->b the point p lies on.
template <class S>
int side_of(const Point<S>& a, const Point<S>& b, const Point<S>& p) {
  return sign_of(cross(b.x - a.x, b.y - a.y, p.x - a.x, p.y - a.y));
}

template <class S>
bool collinear(const Point<S>& a, const Point<S>& b, const Point<S>& c) {
  return side_of(a, b, c) == 0;
}

template <class S>
S doubled_signed_area(const Triangle<S>& t) {
  return cross(t.q.x - t.p.x, t.q.y - t.p.y, t.r.x - t.p.x, t.r.y - t.p.y);
}

template <class S>
Triangle<S> make_triangle(Point<S> p, Point<S> q, Point<S> r) {
  Triangle<S> t{std::move(p), std::move(q), std::move(r)};
  if (is_zero(doubled_signed_area(t))) raise(ErrorCode::Degenerate, "collinear triangle vertices");
  return t;
}

// --- membership in a model ---

template <class S>
bool in_model(const Point<S>& p, const PlaneModel& m) {
  if (!m.limited) return true;
  return is_limited(classify_value(p.x)) && is_limited(classify_value(p.y));
}

template <class S>
bool circle_in_model(const Circle<S>& c, const PlaneModel& m) {
  if (!m.limited) return true;
  return in_model(c.center, m) && is_limited(classify_value(c.radius_sq));
}

// --- lines ---

// Canonical scaling divides by the first nonzero of (a, b) when that stays
// exact; a multi-term series coefficient is normalized by its leading
// monomial instead, so coefficients never pick up truncation. All relation
// tests are scale-invariant, so verdicts do not depend on the residual unit.
template <class S>
Line<S> make_line(S a, S b, S c) {
  if (!is_zero(a)) {
    S inv = ScalarTraits<S>::from_rational(Rational(1)) / exact_unit_factor(a);
    return {a * inv, b * inv, c * inv};
  }
  if (is_zero(b)) raise(ErrorCode::Degenerate, "line with zero normal");
  S inv = ScalarTraits<S>::from_rational(Rational(1)) / exact_unit_factor(b);
  return {std::move(a), b * inv, c * inv};
}

template <class S>
Line<S> line_through(const Point<S>& p, const Point<S>& q) {
  if (points_equal(p, q)) raise(ErrorCode::CoincidentPoints, "line through coincident points");
  S dx = q.x - p.x, dy = q.y - p.y;
  // (x - px) dy - (y - py) dx = 0
  return make_line(dy, -dx, dx * p.y - dy * p.x);
}

template <class S>
bool on_line(const Line<S>& l, const Point<S>& p) {
  return is_zero(l.a * p.x + l.b * p.y + l.c);
}

// Direction vector of the line, fixed by the canonical coefficients.
template <class S>
Point<S> line_direction(const Line<S>& l) {
  return Point<S>{-l.b, l.a};
}

template <class S>
struct LinesMeet {
  Point<S> at;
};
struct LinesParallel {};
struct LinesIdentical {};
template <class S>
using LineRelation = std::variant<LinesMeet<S>, LinesParallel, LinesIdentical>;

template <class S>
LineRelation<S> line_relation(const Line<S>& l1, const Line<S>& l2) {
  S det = l1.a * l2.b - l2.a * l1.b;
  if (is_zero(det)) {
    if (is_zero(l1.a * l2.c - l2.a * l1.c) && is_zero(l1.b * l2.c - l2.b * l1.c))
      return LinesIdentical{};
    return LinesParallel{};
  }
  S x = (l1.b * l2.c - l2.b * l1.c) / det;
  S y = (l2.a * l1.c - l1.a * l2.c) / det;
  return LinesMeet<S>{Point<S>{std::move(x), std::move(y)}};
}

template <class S>
std::optional<Point<S>> intersect_lines(const Line<S>& l1, const Line<S>& l2) {
  auto rel = line_relation(l1, l2);
  if (auto* m = std::get_if<LinesMeet<S>>(&rel)) return m->at;
  return std::nullopt;
}

// Model-relative meeting: in the limited subplane the full-plane intersection
// only counts when both coordinates are limited.
template <class S>
std::optional<Point<S>> meets_in_model(const Line<S>& l1, const Line<S>& l2,
                                       const PlaneModel& m) {
  auto p = intersect_lines(l1, l2);
  if (!p) return std::nullopt;
  if (!in_model(*p, m)) return std::nullopt;
  return p;
}

// --- circles ---

enum class HitKind { None, One, Two, NoSqrtInField };

template <class S>
struct ParamHits {
  HitKind kind = HitKind::None;
  // (parameter, point) along the carrier, ascending parameter; 0, 1 or 2.
  std::vector<std::pair<S, Point<S>>> hits;
  std::optional<S> discriminant;  // set when kind == NoSqrtInField
};

// Intersect a circle with the parametric line origin + t * dir. The quadratic
// is solved exactly; a positive non-square discriminant over Q reports
// NoSqrtInField instead of inventing a point.
template <class S>
ParamHits<S> intersect_circle_param(const Circle<S>& c, const Point<S>& origin,
                                    const Point<S>& dir) {
  S ox = origin.x - c.center.x, oy = origin.y - c.center.y;
  S A = dot(dir.x, dir.y, dir.x, dir.y);
  if (is_zero(A)) raise(ErrorCode::Degenerate, "zero direction vector");
  S B = (dot(dir.x, dir.y, ox, oy)) * ScalarTraits<S>::from_rational(Rational(2));
  S C = dot(ox, oy, ox, oy) - c.radius_sq;
  S disc = B * B - A * C * ScalarTraits<S>::from_rational(Rational(4));
  ParamHits<S> out;
  int ds = sign_of(disc);
  auto at = [&](const S& t) {
    return std::pair<S, Point<S>>(t, Point<S>{origin.x + t * dir.x, origin.y + t * dir.y});
  };
  S two_a = A * ScalarTraits<S>::from_rational(Rational(2));
  if (ds < 0) {
    out.kind = HitKind::None;
  } else if (ds == 0) {
    out.kind = HitKind::One;
    out.hits.push_back(at((-B) / two_a));
  } else {
    auto root = try_field_sqrt(disc);
    if (!root) {
      out.kind = HitKind::NoSqrtInField;
      out.discriminant = std::move(disc);
      return out;
    }
    out.kind = HitKind::Two;
    out.hits.push_back(at(((-B) - *root) / two_a));
    out.hits.push_back(at(((-B) + *root) / two_a));
  }
  return out;
}

template <class S>
struct CircleHits {
  HitKind kind = HitKind::None;
  std::vector<Point<S>> points;
  std::optional<S> discriminant;
};

// Lexicographic (x, then y) order for deterministic reporting.
template <class S>
bool point_less(const Point<S>& p, const Point<S>& q) {
  int cx = compare3(p.x, q.x);
  if (cx != 0) return cx < 0;
  return compare3(p.y, q.y) < 0;
}

template <class S>
CircleHits<S> intersect_circle_line(const Circle<S>& c, const Line<S>& l) {
  // Base point: x = 0 slice when b != 0, else y = 0 slice.
  Point<S> origin = is_zero(l.b)
                        ? Point<S>{(-l.c) / l.a, ScalarTraits<S>::from_rational(Rational(0))}
                        : Point<S>{ScalarTraits<S>::from_rational(Rational(0)), (-l.c) / l.b};
  ParamHits<S> ph = intersect_circle_param(c, origin, line_direction(l));
  CircleHits<S> out;
  out.kind = ph.kind;
  out.discriminant = std::move(ph.discriminant);
  for (auto& [t, p] : ph.hits) out.points.push_back(std::move(p));
  if (out.points.size() == 2 && !point_less(out.points[0], out.points[1]))
    std::swap(out.points[0], out.points[1]);
  return out;
}

template <class S>
CircleHits<S> intersect_circles(const Circle<S>& c1, const Circle<S>& c2) {
  if (points_equal(c1.center, c2.center))
    raise(ErrorCode::CoincidentCenters, "circle-circle intersection needs distinct centers");
  const S two = ScalarTraits<S>::from_rational(Rational(2));
  S a = (c2.center.x - c1.center.x) * two;
  S b = (c2.center.y - c1.center.y) * two;
  S c = (c1.center.x * c1.center.x + c1.center.y * c1.center.y - c1.radius_sq) -
        (c2.center.x * c2.center.x + c2.center.y * c2.center.y - c2.radius_sq);
  return intersect_circle_line(c1, make_line(std::move(a), std::move(b), std::move(c)));
}

// --- angles ---

template <class S>
AnglePair<S> angle_at(const Point<S>& v, const Point<S>& p, const Point<S>& q) {
  if (points_equal(p, v) || points_equal(q, v))
    raise(ErrorCode::CoincidentPoints, "angle with a ray of zero length");
  S ux = p.x - v.x, uy = p.y - v.y;
  S wx = q.x - v.x, wy = q.y - v.y;
  return {dot(ux, uy, wx, wy), cross(ux, uy, wx, wy)};
}

// Same angle class ignoring orientation: flips the cross part nonnegative.
template <class S>
AnglePair<S> unsigned_angle(AnglePair<S> a) {
  if (sign_of(a.s) < 0) a.s = -a.s;
  return a;
}

template <class S>
bool angle_equal(const AnglePair<S>& a1, const AnglePair<S>& a2) {
  if (sign_of(a1.c) != sign_of(a2.c) || sign_of(a1.s) != sign_of(a2.s)) return false;
  return is_zero(a1.c * a2.s - a2.c * a1.s);
}

template <class S>
AnglePair<S> angle_add(const AnglePair<S>& a1, const AnglePair<S>& a2) {
  return {a1.c * a2.c - a1.s * a2.s, a1.s * a2.c + a1.c * a2.s};
}

// Interior angles composed in vertex order; exact class test for pi.
template <class S>
bool angle_sum_is_two_right(const Triangle<S>& t) {
  Triangle<S> o = t;
  int orient = sign_of(doubled_signed_area(o));
  if (orient == 0) raise(ErrorCode::Degenerate, "collinear triangle vertices");
  if (orient < 0) std::swap(o.q, o.r);
  AnglePair<S> ap = angle_at(o.p, o.q, o.r);
  AnglePair<S> aq = angle_at(o.q, o.r, o.p);
  AnglePair<S> ar = angle_at(o.r, o.p, o.q);
  AnglePair<S> sum = angle_add(angle_add(ap, aq), ar);
  return is_zero(sum.s) && sign_of(sum.c) < 0;
}

// --- the greater-than relation, made explicit per kind ---

// Total order on angle classes in [0, pi]: by quadrant band, then by the
// exact cotangent comparison (cot is strictly decreasing on (0, pi)).
template <class S>
Ordering compare_angles(const AnglePair<S>& x, const AnglePair<S>& y) {
  AnglePair<S> a = unsigned_angle(x), b = unsigned_angle(y);
  auto band = [](const AnglePair<S>& v) {
    int ss = sign_of(v.s);
    if (ss > 0) return 1;
    int cs = sign_of(v.c);
    if (cs > 0) return 0;  // zero angle
    if (cs < 0) return 2;  // two right angles
    raise(ErrorCode::Degenerate, "null angle pair");
  };
  int ba = band(a), bb = band(b);
  if (ba != bb) return ba < bb ? Ordering::LT : Ordering::GT;
  if (ba != 1) return Ordering::EQ;
  return ordering_from_sign(sign_of(b.c * a.s - a.c * b.s));
}

template <class S>
Ordering compare_segments(const Segment<S>& x, const Segment<S>& y) {
  return ordering_from_sign(compare3(dist_sq(x.a, x.b), dist_sq(y.a, y.b)));
}

template <class S>
S doubled_abs_area(const Triangle<S>& t) {
  S a = doubled_signed_area(t);
  return sign_of(a) < 0 ? -a : a;
}

template <class S>
Ordering compare_triangles(const Triangle<S>& x, const Triangle<S>& y) {
  return ordering_from_sign(compare3(doubled_abs_area(x), doubled_abs_area(y)));
}

template <class S>
Ordering compare_figures(const Figure<S>& x, const Figure<S>& y) {
  if (x.index() != y.index())
    raise(ErrorCode::KindMismatch, "figures of different kinds are incomparable");
  if (auto* s = std::get_if<Segment<S>>(&x)) return compare_segments(*s, std::get<Segment<S>>(y));
  if (auto* a = std::get_if<AnglePair<S>>(&x)) return compare_angles(*a, std::get<AnglePair<S>>(y));
  return compare_triangles(std::get<Triangle<S>>(x), std::get<Triangle<S>>(y));
}

// --- congruence ---

// SSS as a coordinate predicate: some vertex correspondence matches all three
// squared side lengths. When it holds, the corresponding (unsigned) angles
// are checked too — a mismatch would mean broken arithmetic, not geometry.
template <class S>
bool triangles_congruent_sss(const Triangle<S>& t1, const Triangle<S>& t2) {
  const Point<S>* v1[3] = {&t1.p, &t1.q, &t1.r};
  const Point<S>* v2[3] = {&t2.p, &t2.q, &t2.r};
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (auto& pm : perms) {
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      int j = (i + 1) % 3;
      ok = compare3(dist_sq(*v1[i], *v1[j]), dist_sq(*v2[pm[i]], *v2[pm[j]])) == 0;
    }
    if (!ok) continue;
    for (int i = 0; i < 3; ++i) {
      int j = (i + 1) % 3, k = (i + 2) % 3;
      AnglePair<S> a1 = unsigned_angle(angle_at(*v1[i], *v1[j], *v1[k]));
      AnglePair<S> a2 = unsigned_angle(angle_at(*v2[pm[i]], *v2[pm[j]], *v2[pm[k]]));
      if (!angle_equal(a1, a2))
        raise(ErrorCode::InternalError, "SSS matched sides but angles diverged");
    }
    return true;
  }
  return false;
}

}  // namespace euclid
