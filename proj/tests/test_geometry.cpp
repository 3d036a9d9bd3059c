#include "euclid/geometry.hpp"

#include <doctest.h>

#include "testutil.hpp"

using namespace euclid;
using euclid::testutil::Rng;

namespace {

Point<Rational> rp(long x, long y) { return {Rational(x), Rational(y)}; }

template <class S>
Point<S> pt(long x, long y) {
  return {ScalarTraits<S>::from_rational(Rational(x)), ScalarTraits<S>::from_rational(Rational(y))};
}

template <class S>
S on_circle_residual(const Circle<S>& c, const Point<S>& p) {
  return dist_sq(c.center, p) - c.radius_sq;
}

const SeriesValue kEps = SeriesValue::eps();

}  // namespace

TEST_CASE("line_through canonical forms") {
  auto l = line_through(rp(0, 0), rp(1, 0));
  CHECK(is_zero(l.a));
  CHECK(l.b == Rational(1));
  CHECK(is_zero(l.c));

  auto h = line_through(pt<SeriesValue>(0, 1), pt<SeriesValue>(1, 1));
  CHECK(is_zero(h.a));
  CHECK(is_zero(h.b - SeriesValue(Rational(1))));
  CHECK(is_zero(h.c + SeriesValue(Rational(1))));

  // y = eps x carries an infinite-valued coefficient in canonical form
  Point<SeriesValue> o = pt<SeriesValue>(0, 0);
  Point<SeriesValue> p{SeriesValue(Rational(1)), kEps};
  auto e = line_through(o, p);
  CHECK(is_zero(e.a - SeriesValue(Rational(1))));
  CHECK(classify_value(e.b) == MagnitudeClass::Infinite);

  CHECK_THROWS_AS(line_through(rp(1, 1), rp(1, 1)), Error);
}

TEST_CASE("incidence: constructed lines contain their points") {
  Rng rng(101);
  for (int i = 0; i < 50; ++i) {
    auto p = rng.point<Rational>(), q = rng.point<Rational>();
    if (points_equal(p, q)) continue;
    auto l = line_through(p, q);
    CHECK(on_line(l, p));
    CHECK(on_line(l, q));
  }
}

TEST_CASE("line intersections") {
  auto l0 = line_through(rp(0, 0), rp(1, 0));   // y = 0
  auto l1 = line_through(rp(0, 1), rp(1, 1));   // y = 1
  CHECK_FALSE(intersect_lines(l0, l1).has_value());
  CHECK(std::holds_alternative<LinesParallel>(line_relation(l0, l1)));
  CHECK(std::holds_alternative<LinesIdentical>(
      line_relation(l0, line_through(rp(5, 0), rp(7, 0)))));

  auto d1 = line_through(rp(0, 0), rp(1, 1));    // y = x
  auto d2 = line_through(rp(0, 2), rp(2, 0));    // y = -x + 2
  auto m = intersect_lines(d1, d2);
  REQUIRE(m.has_value());
  CHECK(points_equal(*m, rp(1, 1)));
  CHECK(on_line(d1, *m));
  CHECK(on_line(d2, *m));
}

TEST_CASE("y = eps x meets y = 1 at (1/eps, 1)") {
  Point<SeriesValue> o = pt<SeriesValue>(0, 0);
  Point<SeriesValue> p{SeriesValue(Rational(1)), kEps};
  auto slanted = line_through(o, p);
  auto horizontal = line_through(pt<SeriesValue>(0, 1), pt<SeriesValue>(1, 1));
  auto m = intersect_lines(slanted, horizontal);
  REQUIRE(m.has_value());
  SeriesValue inv_eps = SeriesValue(Rational(1)) / kEps;
  CHECK(is_zero(m->x - inv_eps));
  CHECK(is_zero(m->y - SeriesValue(Rational(1))));
}

TEST_CASE("circle-circle: the I.1 configuration across backends") {
  // rational backend: positive non-square discriminant -> NoSqrtInField
  Circle<Rational> r1{rp(0, 0), Rational(1)}, r2{rp(0, 1), Rational(1)};
  auto rres = intersect_circles(r1, r2);
  CHECK(rres.kind == HitKind::NoSqrtInField);
  REQUIRE(rres.discriminant.has_value());
  CHECK(sign_of(*rres.discriminant) > 0);
  CHECK_FALSE(is_rational_square(*rres.discriminant));

  // constructible backend: exactly (+-sqrt(3)/2, 1/2)
  Circle<TowerReal> c1{pt<TowerReal>(0, 0), TowerReal(1)}, c2{pt<TowerReal>(0, 1), TowerReal(1)};
  auto cres = intersect_circles(c1, c2);
  REQUIRE(cres.kind == HitKind::Two);
  TowerReal half_root3 = TowerReal::sqrt_of(TowerReal(3)) / TowerReal(2);
  CHECK(cres.points[0].x == -half_root3);
  CHECK(cres.points[0].y == TowerReal(Rational(1, 2)));
  CHECK(cres.points[1].x == half_root3);
  for (const auto& p : cres.points) {
    CHECK(is_zero(on_circle_residual(c1, p)));
    CHECK(is_zero(on_circle_residual(c2, p)));
  }

  // disjoint circles
  Circle<Rational> far1{rp(0, 0), Rational(1)}, far2{rp(4, 0), Rational(1)};
  CHECK(intersect_circles(far1, far2).kind == HitKind::None);
  CHECK_THROWS_AS(intersect_circles(r1, Circle<Rational>{rp(0, 0), Rational(4)}), Error);
}

TEST_CASE("circle-line: two, tangent, and no-root cases") {
  Circle<Rational> unit{rp(0, 0), Rational(1)};
  auto two = intersect_circle_line(unit, line_through(rp(0, 0), rp(1, 0)));
  REQUIRE(two.kind == HitKind::Two);
  CHECK(points_equal(two.points[0], rp(-1, 0)));
  CHECK(points_equal(two.points[1], rp(1, 0)));

  auto one = intersect_circle_line(unit, line_through(rp(0, 1), rp(1, 1)));
  REQUIRE(one.kind == HitKind::One);
  CHECK(points_equal(one.points[0], rp(0, 1)));

  Circle<Rational> r2{rp(0, 0), Rational(2)};
  auto none_in_q = intersect_circle_line(r2, line_through(rp(0, 0), rp(1, 0)));
  CHECK(none_in_q.kind == HitKind::NoSqrtInField);  // x^2 = 2
}

TEST_CASE("rational circle hits: NoSqrtInField exactly on non-square discriminants") {
  Rng rng(202);
  for (int i = 0; i < 60; ++i) {
    auto a = rng.point<Rational>(), b = rng.point<Rational>();
    if (points_equal(a, b)) continue;
    Circle<Rational> ca{a, rng.positive_rational()}, cb{b, rng.positive_rational()};
    auto res = intersect_circles(ca, cb);
    if (res.kind == HitKind::NoSqrtInField) {
      CHECK(sign_of(*res.discriminant) > 0);
      CHECK_FALSE(is_rational_square(*res.discriminant));
    } else {
      for (const auto& p : res.points) {
        CHECK(is_zero(on_circle_residual(ca, p)));
        CHECK(is_zero(on_circle_residual(cb, p)));
      }
    }
  }
}

TEST_CASE("angle pairs from the paper's examples") {
  auto right = angle_at(rp(0, 0), rp(1, 0), rp(0, 1));
  CHECK(right.c == Rational(0));
  CHECK(right.s == Rational(1));

  Point<SeriesValue> v = pt<SeriesValue>(0, 0);
  auto tilted = angle_at(v, pt<SeriesValue>(1, 0), Point<SeriesValue>{SeriesValue(Rational(1)), kEps});
  CHECK(is_zero(tilted.c - SeriesValue(Rational(1))));
  CHECK(is_zero(tilted.s - kEps));

  auto straight = angle_at(rp(0, 0), rp(1, 0), rp(-1, 0));
  CHECK(straight.c == Rational(-1));
  CHECK(straight.s == Rational(0));
}

TEST_CASE("angle equality is scale-invariant and quadrant-aware") {
  AnglePair<Rational> r1{Rational(0), Rational(1)}, r5{Rational(0), Rational(5)};
  CHECK(angle_equal(r1, r5));
  AnglePair<SeriesValue> inf{SeriesValue(Rational(1)), kEps};
  AnglePair<SeriesValue> right{SeriesValue(Rational(0)), SeriesValue(Rational(1))};
  CHECK_FALSE(angle_equal(inf, right));

  // isosceles: base angles of A=(0,2), B=(-1,0), C=(1,0)
  auto ab = angle_at(rp(-1, 0), rp(0, 2), rp(1, 0));
  auto ac = angle_at(rp(1, 0), rp(0, 2), rp(-1, 0));
  CHECK(angle_equal(unsigned_angle(ab), unsigned_angle(ac)));

  Rng rng(7);
  for (int i = 0; i < 40; ++i) {
    auto v = rng.point<Rational>(), p = rng.point<Rational>(), q = rng.point<Rational>();
    if (points_equal(p, v) || points_equal(q, v)) continue;
    auto a = angle_at(v, p, q);
    Rational k = rng.positive_rational();
    CHECK(angle_equal(a, AnglePair<Rational>{a.c * k, a.s * k}));
  }
}

TEST_CASE("angle addition laws") {
  AnglePair<Rational> right{Rational(0), Rational(1)};
  auto two_right = angle_add(right, right);
  CHECK(two_right.c == Rational(-1));
  CHECK(two_right.s == Rational(0));

  AnglePair<Rational> half{Rational(1), Rational(1)};  // 45 degrees
  auto sum = angle_add(half, half);
  CHECK(sum.c == Rational(0));
  CHECK(sum.s == Rational(2));
  CHECK(angle_equal(sum, right));

  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    AnglePair<Rational> a{rng.rational(), rng.positive_rational()};
    AnglePair<Rational> b{rng.rational(), rng.positive_rational()};
    AnglePair<Rational> c{rng.rational(), rng.positive_rational()};
    CHECK(angle_equal(angle_add(a, b), angle_add(b, a)));
    CHECK(angle_equal(angle_add(angle_add(a, b), c), angle_add(a, angle_add(b, c))));
    // inverse angles cancel to the zero class
    auto z = angle_add(a, AnglePair<Rational>{a.c, -a.s});
    CHECK(sign_of(z.c) > 0);
    CHECK(is_zero(z.s));
  }
}

TEST_CASE("triangle angle sums are exactly two right angles in every backend") {
  CHECK(angle_sum_is_two_right(Triangle<Rational>{rp(0, 0), rp(1, 0), rp(0, 1)}));
  // step-by-step composition for the right triangle: (0,1), then (1,1) twice
  auto s1 = angle_add(angle_at(rp(0, 0), rp(1, 0), rp(0, 1)), angle_at(rp(1, 0), rp(0, 1), rp(0, 0)));
  CHECK(s1.c == Rational(-1));
  CHECK(s1.s == Rational(1));
  auto s2 = angle_add(s1, angle_at(rp(0, 1), rp(0, 0), rp(1, 0)));
  CHECK(s2.c == Rational(-2));
  CHECK(s2.s == Rational(0));
  // degenerate-looking but valid over the series field
  Triangle<SeriesValue> tiny{pt<SeriesValue>(0, 0), pt<SeriesValue>(1, 0),
                             Point<SeriesValue>{kEps, kEps}};
  CHECK(angle_sum_is_two_right(tiny));

  Rng rr(31);
  for (int i = 0; i < 30; ++i) CHECK(angle_sum_is_two_right(rr.triangle<Rational>()));
  Rng rc(32);
  for (int i = 0; i < 20; ++i) CHECK(angle_sum_is_two_right(rc.triangle<TowerReal>()));
  Rng rs(33);
  for (int i = 0; i < 20; ++i) {
    // limited coordinates with infinitesimal parts: triangles of the subplane
    Triangle<SeriesValue> t{Point<SeriesValue>{rs.limited_series(), rs.limited_series()},
                            Point<SeriesValue>{rs.limited_series(), rs.limited_series()},
                            Point<SeriesValue>{rs.limited_series(), rs.limited_series()}};
    if (is_zero(doubled_signed_area(t))) continue;
    CHECK(angle_sum_is_two_right(t));
  }
}

TEST_CASE("meets_in_model: the subplane breaks the parallel postulate") {
  PlaneModel full = make_model(FieldTag::NonArch, false);
  PlaneModel sub = make_model(FieldTag::NonArch, true);
  Point<SeriesValue> o = pt<SeriesValue>(0, 0);
  auto slanted = line_through(o, Point<SeriesValue>{SeriesValue(Rational(1)), kEps});
  auto horizontal = line_through(pt<SeriesValue>(0, 1), pt<SeriesValue>(1, 1));

  CHECK_FALSE(meets_in_model(slanted, horizontal, sub).has_value());
  auto m = meets_in_model(slanted, horizontal, full);
  REQUIRE(m.has_value());
  CHECK(is_zero(m->x - SeriesValue(Rational(1)) / kEps));

  // the perpendicular with infinite slope still meets y = eps x at the origin
  SeriesValue neg_inv_eps = SeriesValue(Rational(-1)) / kEps;
  auto perp = line_through(o, Point<SeriesValue>{SeriesValue(Rational(1)), neg_inv_eps});
  auto at_origin = meets_in_model(slanted, perp, sub);
  REQUIRE(at_origin.has_value());
  CHECK(points_equal(*at_origin, o));

  CHECK_THROWS_AS(make_model(FieldTag::Rat, true), Error);
}

TEST_CASE("model monotonicity: subplane meets imply full-plane meets") {
  Rng rng(44);
  PlaneModel full = make_model(FieldTag::NonArch, false);
  PlaneModel sub = make_model(FieldTag::NonArch, true);
  for (int i = 0; i < 40; ++i) {
    auto p1 = rng.point<SeriesValue>(), q1 = rng.point<SeriesValue>();
    auto p2 = rng.point<SeriesValue>(), q2 = rng.point<SeriesValue>();
    if (points_equal(p1, q1) || points_equal(p2, q2)) continue;
    auto l1 = line_through(p1, q1), l2 = line_through(p2, q2);
    auto in_sub = meets_in_model(l1, l2, sub);
    if (in_sub) {
      auto in_full = meets_in_model(l1, l2, full);
      REQUIRE(in_full.has_value());
      CHECK(points_equal(*in_sub, *in_full));
    }
  }
}

TEST_CASE("figure comparison") {
  Figure<Rational> s1 = Segment<Rational>{rp(0, 0), rp(0, 1)};
  Figure<Rational> s2 = Segment<Rational>{rp(0, 0), rp(0, 2)};
  CHECK(compare_figures(s1, s2) == Ordering::LT);

  Figure<Rational> t1 = Triangle<Rational>{rp(0, 0), rp(1, 0), rp(0, 1)};
  Figure<Rational> t2 = Triangle<Rational>{rp(0, 0), rp(2, 0), rp(0, 1)};
  CHECK(compare_figures(t1, t2) == Ordering::LT);
  CHECK(compare_figures(t2, t2) == Ordering::EQ);

  Figure<SeriesValue> tiny = AnglePair<SeriesValue>{SeriesValue(Rational(1)), kEps};
  Figure<SeriesValue> right = AnglePair<SeriesValue>{SeriesValue(Rational(0)), SeriesValue(Rational(1))};
  CHECK(compare_figures(tiny, right) == Ordering::LT);
  CHECK_THROWS_AS(compare_figures(s1, t1), Error);

  // zero and pi classes sit at the ends
  AnglePair<Rational> zero{Rational(3), Rational(0)}, pi{Rational(-2), Rational(0)};
  AnglePair<Rational> mid{Rational(-1), Rational(2)};
  CHECK(compare_angles(zero, mid) == Ordering::LT);
  CHECK(compare_angles(mid, pi) == Ordering::LT);
  CHECK(compare_angles(pi, pi) == Ordering::EQ);
}

TEST_CASE("SSS congruence predicate") {
  Triangle<Rational> t{rp(0, 0), rp(4, 0), rp(1, 3)};
  CHECK(triangles_congruent_sss(t, t));
  Triangle<Rational> shifted{rp(5, 7), rp(9, 7), rp(6, 10)};
  CHECK(triangles_congruent_sss(t, shifted));
  Triangle<Rational> mirrored{rp(0, 0), rp(-4, 0), rp(-1, 3)};
  CHECK(triangles_congruent_sss(t, mirrored));
  Triangle<Rational> permuted{rp(6, 10), rp(5, 7), rp(9, 7)};
  CHECK(triangles_congruent_sss(t, permuted));

  Triangle<Rational> small{rp(0, 0), rp(1, 0), rp(0, 1)};
  Triangle<Rational> scaled{rp(0, 0), rp(2, 0), rp(0, 2)};
  CHECK_FALSE(triangles_congruent_sss(small, scaled));
}
