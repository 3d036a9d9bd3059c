#include "euclid/props.hpp"

#include <future>
#include <random>

#include "euclid/corpus.hpp"

namespace euclid {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::ImpossibleFigure: return "impossible-figure";
    case Verdict::ConstructionImpossible: return "construction-impossible";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

void putw(PropositionReport& r, std::string name, std::string value) {
  r.witnesses.push_back({std::move(name), std::move(value)});
}

template <class S>
std::string point_str(const Point<S>& p) {
  return "(" + scalar_str(p.x) + ", " + scalar_str(p.y) + ")";
}

template <class S>
std::string pair_str(const AnglePair<S>& a) {
  return "(" + scalar_str(a.c) + ", " + scalar_str(a.s) + ")";
}

template <class S>
std::string line_str(const Line<S>& l) {
  return "[" + scalar_str(l.a) + "]x + [" + scalar_str(l.b) + "]y + [" + scalar_str(l.c) + "] = 0";
}

template <class S>
AnglePair<S> vec_angle(const Point<S>& u, const Point<S>& w) {
  return {dot(u.x, u.y, w.x, w.y), cross(u.x, u.y, w.x, w.y)};
}

template <class S>
Point<S> pt_sub(const Point<S>& a, const Point<S>& b) {
  return {a.x - b.x, a.y - b.y};
}

template <class S>
Point<S> pt_neg(const Point<S>& a) {
  return {-a.x, -a.y};
}

template <class S>
void add_point_obj(PropositionReport& r, const std::string& id, const Point<S>& p) {
  r.objects.push_back({id, "point", {{"x", scalar_str(p.x)}, {"y", scalar_str(p.y)}}});
}

template <class S>
void add_line_obj(PropositionReport& r, const std::string& id, const Line<S>& l) {
  r.objects.push_back(
      {id, "line", {{"a", scalar_str(l.a)}, {"b", scalar_str(l.b)}, {"c", scalar_str(l.c)}}});
}

template <class S>
void add_circle_obj(PropositionReport& r, const std::string& id, const Circle<S>& c) {
  r.objects.push_back({id,
                       "circle",
                       {{"cx", scalar_str(c.center.x)},
                        {"cy", scalar_str(c.center.y)},
                        {"r_sq", scalar_str(c.radius_sq)}}});
}


}  // namespace

template <class S>
PropositionReport check_I7_uniqueness(const Point<S>& a, const Point<S>& b, const S& a_sq,
                                      const S& b_sq, const PlaneModel& model) {
  PropositionReport r;
  r.id = "I.7";
  r.model = model.name();
  putw(r, "A", point_str(a));
  putw(r, "B", point_str(b));
  putw(r, "a_sq", scalar_str(a_sq));
  putw(r, "b_sq", scalar_str(b_sq));
  add_point_obj(r, "A", a);
  add_point_obj(r, "B", b);
  add_circle_obj(r, "circle(A)", Circle<S>{a, a_sq});
  add_circle_obj(r, "circle(B)", Circle<S>{b, b_sq});
  CircleHits<S> hits = intersect_circles(Circle<S>{a, a_sq}, Circle<S>{b, b_sq});
  if (hits.kind == HitKind::None) {
    r.verdict = Verdict::NotApplicable;
    putw(r, "note", "the circles do not meet; no candidate point exists");
    return r;
  }
  if (hits.kind == HitKind::NoSqrtInField) {
    r.verdict = Verdict::ImpossibleFigure;
    putw(r, "same_side_count", "0");
    putw(r, "note", "the candidate points do not exist in this field (discriminant " +
                        scalar_str(*hits.discriminant) + " has no root)");
    return r;
  }
  int count = 0;
  int idx = 0;
  for (const Point<S>& p : hits.points) {
    int side = side_of(a, b, p);
    putw(r, "candidate " + point_str(p), std::string("side ") + std::to_string(side));
    add_point_obj(r, side > 0 ? "C" : "C'", p);
    (void)idx;
    ++idx;
    if (side > 0) ++count;
  }
  putw(r, "same_side_count", std::to_string(count));
  r.verdict = count <= 1 ? Verdict::ImpossibleFigure : Verdict::Fails;
  return r;
}

template <class S>
PropositionReport check_I27(const PlaneModel& model, const S& slope) {
  PropositionReport r;
  r.id = "I.27";
  r.model = model.name();
  const S zero = ScalarTraits<S>::from_rational(Rational(0));
  const S one = ScalarTraits<S>::from_rational(Rational(1));
  Point<S> e{zero, zero}, f{zero, one};
  Point<S> on1{one, slope};  // E + (1, m)
  // point reflection through the midpoint of EF transports the angle to the
  // alternate position exactly
  Point<S> on2{zero - on1.x, one - on1.y};
  Line<S> l1 = line_through(e, on1);
  Line<S> l2 = line_through(f, on2);
  putw(r, "l1", line_str(l1));
  putw(r, "l2", line_str(l2));
  add_point_obj(r, "E", e);
  add_point_obj(r, "F", f);
  add_line_obj(r, "l1", l1);
  add_line_obj(r, "l2", l2);
  add_line_obj(r, "t", line_through(e, f));

  AnglePair<S> alt1 = angle_at(e, f, on1);
  AnglePair<S> alt2 = angle_at(f, e, on2);
  putw(r, "alternate angle at E", pair_str(alt1));
  putw(r, "alternate angle at F", pair_str(alt2));
  if (!angle_equal(alt1, alt2)) {
    r.verdict = Verdict::Fails;
    putw(r, "note", "construction failed to produce equal alternate angles");
    return r;
  }
  S det = l1.a * l2.b - l2.a * l1.b;
  putw(r, "slope determinant", scalar_str(det));
  auto meet = intersect_lines(l1, l2);
  if (!is_zero(det) || meet.has_value()) {
    r.verdict = Verdict::Fails;
    if (meet) putw(r, "unexpected meeting point", point_str(*meet));
    return r;
  }
  r.verdict = Verdict::ImpossibleFigure;
  putw(r, "note", "exactly equal slopes: the meeting point G of the reductio cannot exist");
  return r;
}

template <class S>
PropositionReport check_I29(const PlaneModel& model, const Line<S>& l1, const Line<S>& l2,
                            const Line<S>& t) {
  PropositionReport r;
  r.id = "I.29";
  r.model = model.name();
  putw(r, "l1", line_str(l1));
  putw(r, "l2", line_str(l2));
  putw(r, "t", line_str(t));
  auto p1 = meets_in_model(t, l1, model);
  auto p2 = meets_in_model(t, l2, model);
  if (!p1 || !p2) raise(ErrorCode::TransversalMisses, "the transversal misses a line in the model");
  if (points_equal(*p1, *p2))
    raise(ErrorCode::TransversalMisses, "transversal crossings coincide");
  putw(r, "crossing with l1", point_str(*p1));
  putw(r, "crossing with l2", point_str(*p2));
  add_line_obj(r, "l1", l1);
  add_line_obj(r, "l2", l2);
  add_line_obj(r, "t", t);
  add_point_obj(r, "P1", *p1);
  add_point_obj(r, "P2", *p2);

  auto meet = meets_in_model(l1, l2, model);
  if (meet) {
    r.verdict = Verdict::NotApplicable;
    putw(r, "note", "the lines are not parallel in this model; they meet");
    putw(r, "meeting point", point_str(*meet));
    add_point_obj(r, "A", *meet);
    return r;
  }
  putw(r, "model-parallel", "yes");

  Point<S> u = pt_sub(*p2, *p1);
  AnglePair<S> a1 = unsigned_angle(vec_angle(u, line_direction(l1)));
  AnglePair<S> a2 = unsigned_angle(vec_angle(pt_neg(u), pt_neg(line_direction(l2))));
  putw(r, "alternate angle at l1", pair_str(a1));
  putw(r, "alternate angle at l2", pair_str(a2));
  r.verdict = angle_equal(a1, a2) ? Verdict::Holds : Verdict::Fails;
  return r;
}

template <class S>
PropositionReport parallels_through_point(const PlaneModel& model, const Point<S>& p,
                                          const Line<S>& l, const std::vector<S>& slopes) {
  PropositionReport r;
  r.id = "Parallels";
  r.model = model.name();
  if (on_line(l, p)) raise(ErrorCode::Degenerate, "the point lies on the line");
  putw(r, "P", point_str(p));
  putw(r, "l", line_str(l));
  add_point_obj(r, "P", p);
  add_line_obj(r, "l", l);
  int missing = 0;
  for (const S& m : slopes) {
    // y - py = m (x - px)
    Line<S> through = make_line(m, ScalarTraits<S>::from_rational(Rational(-1)), p.y - m * p.x);
    auto meet = meets_in_model(through, l, model);
    putw(r, "slope " + scalar_str(m),
         meet ? "meets l at " + point_str(*meet) : "misses l in this model");
    add_line_obj(r, "slope " + scalar_str(m), through);
    if (!meet) ++missing;
  }
  putw(r, "multiplicity", std::to_string(missing));
  if (missing == 0) {
    r.verdict = Verdict::NotApplicable;
    putw(r, "note", "no parallel among the sampled slopes");
  } else {
    r.verdict = missing == 1 ? Verdict::Holds : Verdict::Fails;
  }
  return r;
}

template <class S>
PropositionReport postulate5_check(const PlaneModel& model, const Line<S>& l1, const Line<S>& l2,
                                   const Line<S>& t) {
  PropositionReport r;
  r.id = "Post.5";
  r.model = model.name();
  putw(r, "l1", line_str(l1));
  putw(r, "l2", line_str(l2));
  putw(r, "t", line_str(t));
  add_line_obj(r, "l1", l1);
  add_line_obj(r, "l2", l2);
  add_line_obj(r, "t", t);
  auto p1 = meets_in_model(t, l1, model);
  auto p2 = meets_in_model(t, l2, model);
  if (!p1 || !p2) raise(ErrorCode::TransversalMisses, "the transversal misses a line in the model");
  if (points_equal(*p1, *p2))
    raise(ErrorCode::TransversalMisses, "transversal crossings coincide");

  Point<S> dt = line_direction(t);
  Point<S> u1 = pt_sub(*p2, *p1), u2 = pt_sub(*p1, *p2);

  // interior angles with both line directions taken on one side of t
  auto side_sum = [&](int side) {
    auto oriented = [&](const Line<S>& l) {
      Point<S> w = line_direction(l);
      int s = sign_of(cross(dt.x, dt.y, w.x, w.y));
      if (s == 0) raise(ErrorCode::TransversalMisses, "a line is parallel to the transversal");
      return (s == side) ? w : pt_neg(w);
    };
    AnglePair<S> i1 = unsigned_angle(vec_angle(u1, oriented(l1)));
    AnglePair<S> i2 = unsigned_angle(vec_angle(u2, oriented(l2)));
    return angle_add(i1, i2);
  };

  for (int side : {+1, -1}) {
    AnglePair<S> sum = side_sum(side);
    if (sign_of(sum.s) <= 0) continue;  // not strictly below two right angles
    putw(r, std::string("premise side ") + (side > 0 ? "+" : "-"),
         "interior angles compose to " + pair_str(sum) + ", strictly below two right angles");
    auto meet = meets_in_model(l1, l2, model);
    if (!meet) {
      r.verdict = Verdict::Fails;
      putw(r, "note", "premise satisfied but the lines never meet in this model");
      return r;
    }
    int meet_side = sign_of(cross(dt.x, dt.y, meet->x - p1->x, meet->y - p1->y));
    putw(r, "meeting point", point_str(*meet));
    putw(r, "meeting side", std::to_string(meet_side));
    r.verdict = (meet_side == side) ? Verdict::Holds : Verdict::Fails;
    return r;
  }
  r.verdict = Verdict::Holds;
  putw(r, "note", "premise empty: no side has interior angles below two right angles");
  return r;
}

template <class S>
PropositionReport check_I32(const PlaneModel& model, const Triangle<S>& tri) {
  PropositionReport r;
  r.id = "I.32";
  r.model = model.name();
  Triangle<S> t = tri;
  if (sign_of(doubled_signed_area(t)) < 0) std::swap(t.q, t.r);
  putw(r, "A", point_str(t.p));
  putw(r, "B", point_str(t.q));
  putw(r, "C", point_str(t.r));
  add_point_obj(r, "A", t.p);
  add_point_obj(r, "B", t.q);
  add_point_obj(r, "C", t.r);
  r.objects.push_back({"AB", "segment", {{"ax", scalar_str(t.p.x)}, {"ay", scalar_str(t.p.y)},
                                         {"bx", scalar_str(t.q.x)}, {"by", scalar_str(t.q.y)}}});
  r.objects.push_back({"BC", "segment", {{"ax", scalar_str(t.q.x)}, {"ay", scalar_str(t.q.y)},
                                         {"bx", scalar_str(t.r.x)}, {"by", scalar_str(t.r.y)}}});
  r.objects.push_back({"CA", "segment", {{"ax", scalar_str(t.r.x)}, {"ay", scalar_str(t.r.y)},
                                         {"bx", scalar_str(t.p.x)}, {"by", scalar_str(t.p.y)}}});
  // D extends BC beyond C; E makes CE parallel to BA
  Point<S> d{t.r.x + (t.r.x - t.q.x), t.r.y + (t.r.y - t.q.y)};
  Point<S> e{t.r.x + (t.p.x - t.q.x), t.r.y + (t.p.y - t.q.y)};
  AnglePair<S> alpha = unsigned_angle(angle_at(t.p, t.q, t.r));
  AnglePair<S> beta = unsigned_angle(angle_at(t.q, t.r, t.p));
  AnglePair<S> exterior = unsigned_angle(angle_at(t.r, t.p, d));
  AnglePair<S> remote_sum = angle_add(alpha, beta);
  putw(r, "alpha", pair_str(alpha));
  putw(r, "beta", pair_str(beta));
  putw(r, "exterior at C", pair_str(exterior));
  putw(r, "alpha + beta", pair_str(remote_sum));
  bool exterior_ok = angle_equal(exterior, unsigned_angle(remote_sum));
  // the parallel CE splits the exterior angle into alpha and beta
  bool split_alpha = angle_equal(unsigned_angle(angle_at(t.r, t.p, e)), alpha);
  bool split_beta = angle_equal(unsigned_angle(angle_at(t.r, e, d)), beta);
  bool sum_pi = angle_sum_is_two_right(t);
  putw(r, "exterior = alpha + beta", exterior_ok ? "yes" : "no");
  putw(r, "angle ACE = alpha", split_alpha ? "yes" : "no");
  putw(r, "angle ECD = beta", split_beta ? "yes" : "no");
  putw(r, "interior angles compose to two right angles", sum_pi ? "yes" : "no");
  r.verdict = (exterior_ok && split_alpha && split_beta && sum_pi) ? Verdict::Holds : Verdict::Fails;
  return r;
}

// explicit instantiations
#define EUCLID_INSTANTIATE(S)                                                                  \
  template PropositionReport check_I7_uniqueness<S>(const Point<S>&, const Point<S>&,         \
                                                    const S&, const S&, const PlaneModel&);   \
  template PropositionReport check_I27<S>(const PlaneModel&, const S&);                        \
  template PropositionReport check_I29<S>(const PlaneModel&, const Line<S>&, const Line<S>&,  \
                                          const Line<S>&);                                    \
  template PropositionReport parallels_through_point<S>(const PlaneModel&, const Point<S>&,   \
                                                        const Line<S>&, const std::vector<S>&); \
  template PropositionReport postulate5_check<S>(const PlaneModel&, const Line<S>&,           \
                                                 const Line<S>&, const Line<S>&);             \
  template PropositionReport check_I32<S>(const PlaneModel&, const Triangle<S>&);

EUCLID_INSTANTIATE(Rational)
EUCLID_INSTANTIATE(TowerReal)
EUCLID_INSTANTIATE(SeriesValue)
#undef EUCLID_INSTANTIATE

namespace {

const std::vector<std::string> kScriptIds = {"I.1", "I.2", "I.3", "I.5", "I.6", "I.22", "I.23"};
const std::vector<std::string> kCheckerIds = {"I.7", "I.27", "I.29", "I.32", "Post.5", "Parallels"};

template <class S>
PropositionReport run_script_prop(const std::string& id, const PlaneModel& model, uint64_t seed) {
  const CorpusEntry* entry = corpus_find(id);
  if (!entry) raise(ErrorCode::UnsupportedId, "no bundled script for '" + id + "'");
  Script script = parse_script(entry->text, id);
  Execution<S> ex = execute_script<S>(script, model, seed);
  PropositionReport r;
  r.id = id;
  r.model = model.name();
  r.seed = seed;
  r.trace = ex.trace;
  if (ex.ok()) {
    r.verdict = Verdict::Holds;
  } else if (ex.trace.failure.has_value()) {
    r.verdict = Verdict::ConstructionImpossible;
    r.reason = ex.trace.failure;
  } else {
    r.verdict = Verdict::Fails;
  }
  return r;
}

template <class S>
Line<S> hline(long y) {  // y = const
  return make_line(ScalarTraits<S>::from_rational(Rational(0)),
                   ScalarTraits<S>::from_rational(Rational(1)),
                   ScalarTraits<S>::from_rational(Rational(-y)));
}

template <class S>
Line<S> slope_line(const S& m, const Rational& y0) {  // y = m x + y0
  return make_line(m, ScalarTraits<S>::from_rational(Rational(-1)),
                   ScalarTraits<S>::from_rational(y0));
}

template <class S>
Line<S> vline(long x) {  // x = const
  return make_line(ScalarTraits<S>::from_rational(Rational(1)),
                   ScalarTraits<S>::from_rational(Rational(0)),
                   ScalarTraits<S>::from_rational(Rational(-x)));
}

// Seeded triangle with limited coordinates; over the series backend the
// coordinates carry infinitesimal parts.
template <class S>
Triangle<S> seeded_triangle(uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto rat = [&]() {
    return Rational(static_cast<long>(rng() % 17) - 8, 1 + static_cast<long>(rng() % 2));
  };
  auto coord = [&]() {
    S v = ScalarTraits<S>::from_rational(rat());
    if constexpr (std::is_same_v<S, SeriesValue>)
      v = v + SeriesValue::monomial(TowerReal(rat()), Rational(1));
    return v;
  };
  for (int tries = 0; tries < 100; ++tries) {
    Triangle<S> t{{coord(), coord()}, {coord(), coord()}, {coord(), coord()}};
    if (!is_zero(doubled_signed_area(t))) return t;
  }
  raise(ErrorCode::Degenerate, "no triangle after 100 draws");
}

template <class S>
PropositionReport run_checker_prop(const std::string& id, const PlaneModel& model, uint64_t seed) {
  const S one = ScalarTraits<S>::from_rational(Rational(1));
  const bool nonarch = model.tag == FieldTag::NonArch;
  if (id == "I.7") {
    Point<S> a{ScalarTraits<S>::from_rational(Rational(0)),
               ScalarTraits<S>::from_rational(Rational(0))};
    Point<S> b{ScalarTraits<S>::from_rational(Rational(4)),
               ScalarTraits<S>::from_rational(Rational(0))};
    S nine = ScalarTraits<S>::from_rational(Rational(9));
    PropositionReport r = check_I7_uniqueness(a, b, nine, nine, model);
    r.seed = seed;
    return r;
  }
  if (id == "I.27") {
    S slope = nonarch ? ScalarTraits<S>::eps() : one;
    PropositionReport r = check_I27(model, slope);
    r.seed = seed;
    return r;
  }
  if (id == "I.29") {
    PropositionReport r =
        nonarch ? check_I29(model, hline<S>(1), slope_line(ScalarTraits<S>::eps(), Rational(0)),
                            vline<S>(0))
                : check_I29(model, hline<S>(0), hline<S>(1),
                            slope_line(one, Rational(0)));  // transversal y = x
    r.seed = seed;
    return r;
  }
  if (id == "I.32") {
    PropositionReport r = check_I32(model, seeded_triangle<S>(seed));
    r.seed = seed;
    return r;
  }
  if (id == "Post.5") {
    PropositionReport r =
        (nonarch && model.limited)
            ? postulate5_check(model, hline<S>(1), slope_line(ScalarTraits<S>::eps(), Rational(0)),
                               vline<S>(0))
            : postulate5_check(model, hline<S>(0), slope_line(one, Rational(-10)), vline<S>(0));
    r.seed = seed;
    return r;
  }
  if (id == "Parallels") {
    Point<S> origin{ScalarTraits<S>::from_rational(Rational(0)),
                    ScalarTraits<S>::from_rational(Rational(0))};
    std::vector<S> slopes;
    if (nonarch) {
      S eps = ScalarTraits<S>::eps();
      slopes = {ScalarTraits<S>::from_rational(Rational(0)), eps, eps + eps, eps * eps};
    } else {
      slopes = {ScalarTraits<S>::from_rational(Rational(0)),
                ScalarTraits<S>::from_rational(Rational(1, 2))};
    }
    PropositionReport r = parallels_through_point(model, origin, hline<S>(1), slopes);
    r.seed = seed;
    return r;
  }
  raise(ErrorCode::UnsupportedId, "unknown proposition '" + id + "'");
}

template <class S>
PropositionReport run_prop_typed(const std::string& id, const PlaneModel& model, uint64_t seed) {
  for (const std::string& sid : kScriptIds)
    if (sid == id) return run_script_prop<S>(id, model, seed);
  if (id == "Fig.9") return run_script_prop<S>(id, model, seed);
  return run_checker_prop<S>(id, model, seed);
}

}  // namespace

std::vector<std::string> supported_propositions(const PlaneModel& model) {
  std::vector<std::string> ids = kScriptIds;
  ids.insert(ids.end(), kCheckerIds.begin(), kCheckerIds.end());
  if (model.tag == FieldTag::NonArch) ids.push_back("Fig.9");
  return ids;
}

PropositionReport run_proposition(const std::string& id, const PlaneModel& model, uint64_t seed) {
  switch (model.tag) {
    case FieldTag::Rat: return run_prop_typed<Rational>(id, model, seed);
    case FieldTag::Constructible: return run_prop_typed<TowerReal>(id, model, seed);
    case FieldTag::NonArch: return run_prop_typed<SeriesValue>(id, model, seed);
  }
  raise(ErrorCode::InternalError, "bad model tag");
}

Expectation expected_verdict(const std::string& id, const PlaneModel& model) {
  const bool rat = model.tag == FieldTag::Rat;
  const bool sub = model.limited;
  const bool nonarch = model.tag == FieldTag::NonArch;
  if (id == "I.1" || id == "I.2" || id == "I.3" || id == "I.22" || id == "I.23")
    return rat ? Expectation{Verdict::ConstructionImpossible, FailReason::NoSqrtInField}
               : Expectation{Verdict::Holds, std::nullopt};
  if (id == "I.5" || id == "I.32") return {Verdict::Holds, std::nullopt};
  if (id == "I.6") return {Verdict::ConstructionImpossible, FailReason::EqualNotLess};
  if (id == "I.7" || id == "I.27") return {Verdict::ImpossibleFigure, std::nullopt};
  if (id == "I.29") {
    if (sub) return {Verdict::Fails, std::nullopt};
    if (nonarch) return {Verdict::NotApplicable, std::nullopt};
    return {Verdict::Holds, std::nullopt};
  }
  if (id == "Post.5" || id == "Parallels")
    return sub ? Expectation{Verdict::Fails, std::nullopt}
               : Expectation{Verdict::Holds, std::nullopt};
  if (id == "Fig.9")
    return sub ? Expectation{Verdict::Holds, std::nullopt}
               : Expectation{Verdict::Fails, std::nullopt};
  raise(ErrorCode::UnsupportedId, "no expectation for '" + id + "'");
}

SuiteResult run_suite(const PlaneModel& model, uint64_t seed) {
  SuiteResult out;
  out.model = model;
  out.seed = seed;
  std::vector<std::string> ids = supported_propositions(model);
  std::vector<std::future<PropositionReport>> futures;
  futures.reserve(ids.size());
  for (const std::string& id : ids)
    futures.push_back(std::async(std::launch::async,
                                 [&, id] { return run_proposition(id, model, seed); }));
  bool all = true;
  for (size_t i = 0; i < ids.size(); ++i) {
    SuiteEntry entry;
    entry.report = futures[i].get();
    entry.expected = expected_verdict(ids[i], model);
    entry.matched = entry.report.verdict == entry.expected.verdict &&
                    (!entry.expected.reason || entry.report.reason == entry.expected.reason);
    all = all && entry.matched;
    out.entries.push_back(std::move(entry));
  }
  out.all_matched = all;
  return out;
}

}  // namespace euclid
