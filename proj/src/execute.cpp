#include "euclid/execute.hpp"

#include <random>

namespace euclid {

const char* fail_reason_name(FailReason r) {
  switch (r) {
    case FailReason::NoIntersection: return "NoIntersection";
    case FailReason::NoSqrtInField: return "NoSqrtInField";
    case FailReason::NotInModel: return "NotInModel";
    case FailReason::EqualNotLess: return "EqualNotLess";
    case FailReason::PrecisionExhausted: return "PrecisionExhausted";
    case FailReason::UnsupportedScalar: return "UnsupportedScalar";
    case FailReason::DivisionByZero: return "DivisionByZero";
    case FailReason::Degenerate: return "Degenerate";
  }
  return "?";
}

FailReason fail_reason_from(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoIntersection: return FailReason::NoIntersection;
    case ErrorCode::NoSqrtInField: return FailReason::NoSqrtInField;
    case ErrorCode::NotInModel: return FailReason::NotInModel;
    case ErrorCode::NotGreater: return FailReason::EqualNotLess;
    case ErrorCode::PrecisionExhausted: return FailReason::PrecisionExhausted;
    case ErrorCode::UnsupportedScalar: return FailReason::UnsupportedScalar;
    case ErrorCode::DivisionByZero: return FailReason::DivisionByZero;
    default: return FailReason::Degenerate;
  }
}

const char* step_outcome_kind_name(StepOutcome::Kind k) {
  switch (k) {
    case StepOutcome::Kind::Bound: return "bound";
    case StepOutcome::Kind::AssertHeld: return "assert-held";
    case StepOutcome::Kind::AssertFailed: return "assert-failed";
    case StepOutcome::Kind::ConstructionFailed: return "construction-failed";
  }
  return "?";
}

namespace {

template <class S>
std::string point_str(const Point<S>& p) {
  return "(" + scalar_str(p.x) + ", " + scalar_str(p.y) + ")";
}

template <class S>
SerializedObj serialize_obj(const std::string& id, const BoundObj<S>& obj) {
  SerializedObj out;
  out.id = id;
  if (const auto* p = std::get_if<Point<S>>(&obj)) {
    out.kind = "point";
    out.fields = {{"x", scalar_str(p->x)}, {"y", scalar_str(p->y)}};
  } else if (const auto* l = std::get_if<LineObj<S>>(&obj)) {
    out.kind = "line";
    out.fields = {{"a", scalar_str(l->line.a)},
                  {"b", scalar_str(l->line.b)},
                  {"c", scalar_str(l->line.c)}};
  } else if (const auto* r = std::get_if<RayObj<S>>(&obj)) {
    out.kind = "ray";
    out.fields = {{"ox", scalar_str(r->origin.x)},
                  {"oy", scalar_str(r->origin.y)},
                  {"tx", scalar_str(r->through.x)},
                  {"ty", scalar_str(r->through.y)}};
  } else if (const auto* s = std::get_if<Segment<S>>(&obj)) {
    out.kind = "segment";
    out.fields = {{"ax", scalar_str(s->a.x)},
                  {"ay", scalar_str(s->a.y)},
                  {"bx", scalar_str(s->b.x)},
                  {"by", scalar_str(s->b.y)}};
  } else {
    const auto& c = std::get<Circle<S>>(obj);
    out.kind = "circle";
    out.fields = {{"cx", scalar_str(c.center.x)},
                  {"cy", scalar_str(c.center.y)},
                  {"r_sq", scalar_str(c.radius_sq)}};
  }
  return out;
}

template <class S>
std::string describe(const BoundObj<S>& obj) {
  if (const auto* p = std::get_if<Point<S>>(&obj)) return "point " + point_str(*p);
  if (const auto* l = std::get_if<LineObj<S>>(&obj))
    return "line [" + scalar_str(l->line.a) + "]x + [" + scalar_str(l->line.b) + "]y + [" +
           scalar_str(l->line.c) + "] = 0";
  if (const auto* r = std::get_if<RayObj<S>>(&obj))
    return "ray " + point_str(r->origin) + " -> " + point_str(r->through);
  if (const auto* s = std::get_if<Segment<S>>(&obj))
    return "segment " + point_str(s->a) + " .. " + point_str(s->b);
  const auto& c = std::get<Circle<S>>(obj);
  return "circle center " + point_str(c.center) + " radius_sq " + scalar_str(c.radius_sq);
}

// Carrier view of a line/ray/segment: origin + t * dir with a t-domain.
template <class S>
struct Carrier {
  Point<S> origin, through;
  ObjKind kind;
};

template <class S>
class Executor {
 public:
  Executor(const PlaneModel& model, uint64_t seed) : model_(model), rng_(seed) {}

  Execution<S> run(const Script& script) {
    Execution<S> out;
    out.model = model_;
    out.trace.script = script.name;
    out.trace.model = model_.name();
    Script flat = expand_macros(script);
    for (const Stmt& stmt : flat.statements) {
      TraceStep step;
      step.text = render_stmt(stmt);
      try {
        step.outcome = exec_stmt(stmt);
      } catch (const Error& e) {
        step.outcome.kind = StepOutcome::Kind::ConstructionFailed;
        step.outcome.reason = fail_reason_from(e.code());
        step.outcome.detail = e.what();
      }
      out.trace.steps.push_back(step);
      const auto kind = out.trace.steps.back().outcome.kind;
      if (kind == StepOutcome::Kind::AssertFailed ||
          kind == StepOutcome::Kind::ConstructionFailed) {
        out.trace.success = false;
        out.trace.failed_at = static_cast<int>(out.trace.steps.size()) - 1;
        if (kind == StepOutcome::Kind::ConstructionFailed)
          out.trace.failure = out.trace.steps.back().outcome.reason;
        break;
      }
    }
    out.trace.objects = std::move(objects_);
    out.bindings = std::move(env_);
    return out;
  }

 private:
  PlaneModel model_;
  std::mt19937_64 rng_;
  std::map<std::string, BoundObj<S>> env_;
  std::vector<SerializedObj> objects_;

  // --- environment access (kinds were checked by the parser) ---

  const BoundObj<S>& obj(const std::string& id) const {
    auto it = env_.find(id);
    if (it == env_.end()) raise(ErrorCode::InternalError, "unbound id '" + id + "'");
    return it->second;
  }

  const Point<S>& point(const std::string& id) const {
    const auto* p = std::get_if<Point<S>>(&obj(id));
    if (!p) raise(ErrorCode::InternalError, "'" + id + "' is not a point");
    return *p;
  }

  // --- scalar expressions ---

  S eval(const SExpr& e) {
    switch (e.kind) {
      case SExpr::Kind::Literal: return ScalarTraits<S>::from_rational(e.literal);
      case SExpr::Kind::Eps: return ScalarTraits<S>::eps();
      case SExpr::Kind::Dist: {
        S d2 = dist_sq(point(e.id1), point(e.id2));
        auto r = try_field_sqrt(d2);
        if (!r)
          raise(ErrorCode::NoSqrtInField,
                "the distance |" + e.id1 + " " + e.id2 + "| = sqrt(" + scalar_str(d2) +
                    ") does not exist in this field");
        return *r;
      }
      case SExpr::Kind::Add: return eval(*e.lhs) + eval(*e.rhs);
      case SExpr::Kind::Sub: return eval(*e.lhs) - eval(*e.rhs);
      case SExpr::Kind::Mul: return eval(*e.lhs) * eval(*e.rhs);
      case SExpr::Kind::Div: {
        S num = eval(*e.lhs), den = eval(*e.rhs);
        if (is_zero(den)) raise(ErrorCode::DivisionByZero, "division by zero in scalar expression");
        return num / den;
      }
      case SExpr::Kind::Neg: return -eval(*e.lhs);
      case SExpr::Kind::Sqrt: {
        S v = eval(*e.lhs);
        if (sign_of(v) < 0) raise(ErrorCode::NegativeRadicand, "sqrt of a negative value");
        auto r = try_field_sqrt(v);
        if (!r)
          raise(ErrorCode::NoSqrtInField,
                "sqrt(" + scalar_str(v) + ") does not exist in this field");
        return *r;
      }
    }
    raise(ErrorCode::InternalError, "bad scalar expression");
  }

  // The square of the expression's value, computed without leaving the field
  // where the shape allows. A circle given by a radius segment exists over Q
  // even when the length scalar does not, so dist() contributes its squared
  // length directly. Sums genuinely need the value and fall back.
  S eval_squared(const SExpr& e) {
    switch (e.kind) {
      case SExpr::Kind::Literal: {
        S v = ScalarTraits<S>::from_rational(e.literal);
        return v * v;
      }
      case SExpr::Kind::Eps: {
        S v = ScalarTraits<S>::eps();
        return v * v;
      }
      case SExpr::Kind::Dist: return dist_sq(point(e.id1), point(e.id2));
      case SExpr::Kind::Mul: return eval_squared(*e.lhs) * eval_squared(*e.rhs);
      case SExpr::Kind::Div: {
        S den = eval_squared(*e.rhs);
        if (is_zero(den)) raise(ErrorCode::DivisionByZero, "division by zero in radius");
        return eval_squared(*e.lhs) / den;
      }
      case SExpr::Kind::Neg: return eval_squared(*e.lhs);
      case SExpr::Kind::Sqrt: {
        S v = eval(*e.lhs);
        if (sign_of(v) < 0) raise(ErrorCode::NegativeRadicand, "sqrt of a negative value");
        return v;
      }
      default: {
        S v = eval(e);
        return v * v;
      }
    }
  }

  // --- random draws (deterministic in the seed) ---

  Rational small_rational(long lo, long hi, long max_den) {
    long num = lo + static_cast<long>(rng_() % static_cast<uint64_t>(hi - lo + 1));
    long den = 1 + static_cast<long>(rng_() % static_cast<uint64_t>(max_den));
    return Rational(num, den);
  }

  bool coincides_with_bound_point(const Point<S>& p) const {
    for (const auto& [id, o] : env_)
      if (const auto* q = std::get_if<Point<S>>(&o))
        if (points_equal(p, *q)) return true;
    return false;
  }

  Point<S> draw_free_point() {
    for (int tries = 0; tries < 100; ++tries) {
      Point<S> p{ScalarTraits<S>::from_rational(small_rational(-6, 6, 2)),
                 ScalarTraits<S>::from_rational(small_rational(-6, 6, 2))};
      if (!coincides_with_bound_point(p)) return p;
    }
    raise(ErrorCode::Degenerate, "no non-degenerate free point after 100 draws");
  }

  Point<S> draw_point_on(const std::string& carrier_id) {
    const BoundObj<S>& carrier = obj(carrier_id);
    for (int tries = 0; tries < 100; ++tries) {
      std::optional<Point<S>> candidate;
      if (const auto* l = std::get_if<LineObj<S>>(&carrier)) {
        S t = ScalarTraits<S>::from_rational(small_rational(-6, 6, 2));
        candidate = Point<S>{l->p.x + t * (l->q.x - l->p.x), l->p.y + t * (l->q.y - l->p.y)};
      } else if (const auto* r = std::get_if<RayObj<S>>(&carrier)) {
        S t = ScalarTraits<S>::from_rational(small_rational(1, 12, 2));
        candidate = Point<S>{r->origin.x + t * (r->through.x - r->origin.x),
                             r->origin.y + t * (r->through.y - r->origin.y)};
      } else if (const auto* s = std::get_if<Segment<S>>(&carrier)) {
        long den = 2 + static_cast<long>(rng_() % 4);
        long num = 1 + static_cast<long>(rng_() % static_cast<uint64_t>(den - 1));
        S t = ScalarTraits<S>::from_rational(Rational(num, den));
        candidate = Point<S>{s->a.x + t * (s->b.x - s->a.x), s->a.y + t * (s->b.y - s->a.y)};
      } else if (const auto* c = std::get_if<Circle<S>>(&carrier)) {
        auto radius = try_field_sqrt(c->radius_sq);
        if (!radius)
          raise(ErrorCode::NoSqrtInField, "the circle's radius does not exist in this field");
        // rational parametrization by the half-angle tangent
        S t = ScalarTraits<S>::from_rational(small_rational(-6, 6, 2));
        S one = ScalarTraits<S>::from_rational(Rational(1));
        S denom = one + t * t;
        candidate = Point<S>{c->center.x + *radius * (one - t * t) / denom,
                             c->center.y + *radius * (t + t) / denom};
      } else {
        raise(ErrorCode::InternalError, "cannot pick a point on a point");
      }
      if (!coincides_with_bound_point(*candidate)) return *candidate;
    }
    raise(ErrorCode::Degenerate, "no non-degenerate point on carrier after 100 draws");
  }

  // --- intersections ---

  std::optional<Carrier<S>> as_carrier(const BoundObj<S>& o) const {
    if (const auto* l = std::get_if<LineObj<S>>(&o)) return Carrier<S>{l->p, l->q, ObjKind::Line};
    if (const auto* r = std::get_if<RayObj<S>>(&o))
      return Carrier<S>{r->origin, r->through, ObjKind::Ray};
    if (const auto* s = std::get_if<Segment<S>>(&o)) return Carrier<S>{s->a, s->b, ObjKind::Segment};
    return std::nullopt;
  }

  // t-parameter of a point already known to lie on the carrier's line
  S param_on(const Carrier<S>& c, const Point<S>& p) const {
    S dx = c.through.x - c.origin.x, dy = c.through.y - c.origin.y;
    return dot(p.x - c.origin.x, p.y - c.origin.y, dx, dy) / dot(dx, dy, dx, dy);
  }

  void check_carrier_domain(const Carrier<S>& c, const S& t) const {
    if (c.kind == ObjKind::Ray && sign_of(t) < 0)
      raise(ErrorCode::NoIntersection, "intersection lies behind the ray origin");
    if (c.kind == ObjKind::Segment &&
        (sign_of(t) < 0 || compare3(t, ScalarTraits<S>::from_rational(Rational(1))) > 0))
      raise(ErrorCode::NoIntersection, "intersection lies outside the segment");
  }

  Point<S> intersect_objs(const std::string& id1, const std::string& id2, Selector sel) {
    const BoundObj<S>&o1 = obj(id1), &o2 = obj(id2);
    auto c1 = as_carrier(o1), c2 = as_carrier(o2);
    const auto* k1 = std::get_if<Circle<S>>(&o1);
    const auto* k2 = std::get_if<Circle<S>>(&o2);

    if (c1 && c2) {
      Line<S> l1 = line_through(c1->origin, c1->through);
      Line<S> l2 = line_through(c2->origin, c2->through);
      auto rel = line_relation(l1, l2);
      const auto* meet = std::get_if<LinesMeet<S>>(&rel);
      if (!meet)
        raise(ErrorCode::NoIntersection,
              std::holds_alternative<LinesIdentical>(rel) ? "carriers are identical"
                                                          : "carriers are parallel");
      check_carrier_domain(*c1, param_on(*c1, meet->at));
      check_carrier_domain(*c2, param_on(*c2, meet->at));
      return meet->at;
    }

    if (k1 && k2) {
      CircleHits<S> hits = intersect_circles(*k1, *k2);
      return select_circle_circle(*k1, *k2, hits, sel);
    }

    // circle x carrier (either order)
    const Circle<S>& circ = k1 ? *k1 : *k2;
    const Carrier<S>& car = k1 ? *c2 : *c1;
    Point<S> dir{car.through.x - car.origin.x, car.through.y - car.origin.y};
    ParamHits<S> hits = intersect_circle_param(circ, car.origin, dir);
    if (hits.kind == HitKind::NoSqrtInField)
      raise(ErrorCode::NoSqrtInField, "the intersection point does not exist in this field: "
                                      "discriminant " +
                                          scalar_str(*hits.discriminant) +
                                          " has no square root");
    if (hits.kind == HitKind::None)
      raise(ErrorCode::NoIntersection, "the circle and the carrier do not meet");
    // first/left/lower take the smaller parameter, second/right/upper the larger
    size_t idx = (sel == Selector::Second || sel == Selector::Right || sel == Selector::Upper)
                     ? 1
                     : 0;
    if (idx >= hits.hits.size())
      raise(ErrorCode::NoIntersection, "the requested second intersection does not exist");
    const auto& [t, p] = hits.hits[idx];
    check_carrier_domain(car, t);
    return p;
  }

  Point<S> select_circle_circle(const Circle<S>& a, const Circle<S>& b, const CircleHits<S>& hits,
                                Selector sel) {
    if (hits.kind == HitKind::NoSqrtInField)
      raise(ErrorCode::NoSqrtInField, "the intersection point of the circles does not exist in "
                                      "this field: discriminant " +
                                          scalar_str(*hits.discriminant) +
                                          " has no square root");
    if (hits.kind == HitKind::None)
      raise(ErrorCode::NoIntersection, "the circles do not cut one another");
    if (hits.points.size() == 1) return hits.points[0];
    switch (sel) {
      case Selector::First: return hits.points[0];
      case Selector::Second: return hits.points[1];
      default: {
        // side of the oriented center line a.center -> b.center
        const bool want_positive = (sel == Selector::Upper || sel == Selector::Left);
        for (const Point<S>& p : hits.points) {
          int side = side_of(a.center, b.center, p);
          if (want_positive ? side > 0 : side < 0) return p;
        }
        return hits.points[0];  // symmetric pair on the center line itself
      }
    }
  }

  // --- statements ---

  void require_in_model(const Point<S>& p, const std::string& id) {
    if (!in_model(p, model_))
      raise(ErrorCode::NotInModel, "point " + id + " = " + point_str(p) +
                                       " lies outside the limited subplane");
  }

  StepOutcome exec_stmt(const Stmt& stmt) {
    if (const auto* d = std::get_if<DeclStmt>(&stmt.node)) return exec_decl(*d);
    if (const auto* a = std::get_if<AssertStmt>(&stmt.node)) return exec_assert(a->pred);
    if (const auto* r = std::get_if<RequireStmt>(&stmt.node)) return exec_require(*r);
    raise(ErrorCode::InternalError, "macro statement survived expansion");
  }

  StepOutcome exec_require(const RequireStmt& r) {
    S target = dist_sq(point(r.pts[0]), point(r.pts[1]));
    S source = dist_sq(point(r.pts[2]), point(r.pts[3]));
    if (compare3(target, source) <= 0)
      raise(ErrorCode::NotGreater,
            "cannot cut off: the segment to cut (squared " + scalar_str(source) +
                ") is not less than the target (squared " + scalar_str(target) + ")");
    StepOutcome ok;
    ok.kind = StepOutcome::Kind::Bound;
    ok.detail = "greater-than check: " + scalar_str(target) + " > " + scalar_str(source);
    return ok;
  }

  StepOutcome exec_decl(const DeclStmt& d) {
    BoundObj<S> bound = eval_obj(d);
    StepOutcome out;
    out.kind = StepOutcome::Kind::Bound;
    out.detail = d.id + " = " + describe(bound);
    objects_.push_back(serialize_obj(d.id, bound));
    env_.emplace(d.id, std::move(bound));
    return out;
  }

  BoundObj<S> eval_obj(const DeclStmt& d) {
    const ObjExpr& e = d.expr;
    switch (e.kind) {
      case ObjExpr::Kind::PointCoords: {
        Point<S> p{eval(*e.sx), eval(*e.sy)};
        require_in_model(p, d.id);
        return p;
      }
      case ObjExpr::Kind::FreePoint: {
        Point<S> p = draw_free_point();
        require_in_model(p, d.id);
        return p;
      }
      case ObjExpr::Kind::PointOn: {
        Point<S> p = draw_point_on(e.id1);
        require_in_model(p, d.id);
        return p;
      }
      case ObjExpr::Kind::Intersect: {
        Point<S> p = intersect_objs(e.id1, e.id2, e.selector);
        require_in_model(p, d.id);
        return p;
      }
      case ObjExpr::Kind::LineThrough: {
        const Point<S>&p = point(e.id1), &q = point(e.id2);
        if (points_equal(p, q))
          raise(ErrorCode::Degenerate, "line through coincident points " + e.id1 + ", " + e.id2);
        return LineObj<S>{line_through(p, q), p, q};
      }
      case ObjExpr::Kind::RayFrom: {
        const Point<S>&p = point(e.id1), &q = point(e.id2);
        if (points_equal(p, q))
          raise(ErrorCode::Degenerate, "ray through coincident points " + e.id1 + ", " + e.id2);
        return RayObj<S>{p, q};
      }
      case ObjExpr::Kind::SegmentOf: {
        const Point<S>&p = point(e.id1), &q = point(e.id2);
        if (points_equal(p, q))
          raise(ErrorCode::Degenerate, "segment with coincident endpoints");
        return Segment<S>{p, q};
      }
      case ObjExpr::Kind::CircleOf: {
        const Point<S>& center = point(e.id1);
        S radius_sq = eval_squared(*e.sx);
        if (is_zero(radius_sq)) raise(ErrorCode::Degenerate, "circle with zero radius");
        Circle<S> c{center, std::move(radius_sq)};
        if (!circle_in_model(c, model_))
          raise(ErrorCode::NotInModel, "circle " + d.id + " does not fit the limited subplane");
        return c;
      }
    }
    raise(ErrorCode::InternalError, "bad object expression");
  }

  const Line<S>& line_of(const std::string& id) const {
    const auto* l = std::get_if<LineObj<S>>(&obj(id));
    if (!l) raise(ErrorCode::InternalError, "'" + id + "' is not a line");
    return l->line;
  }

  StepOutcome exec_assert(const Predicate& p) {
    StepOutcome out;
    out.kind = StepOutcome::Kind::AssertHeld;
    std::string why;
    bool holds = eval_pred(p, why);
    if (!holds) out.kind = StepOutcome::Kind::AssertFailed;
    out.detail = why;
    return out;
  }

  bool eval_pred(const Predicate& p, std::string& why) {
    switch (p.kind) {
      case Predicate::Kind::EqualSeg: {
        S first = dist_sq(point(p.args[0]), point(p.args[1]));
        why = "squared lengths: " + scalar_str(first);
        for (size_t i = 2; i + 1 < p.args.size(); i += 2) {
          S next = dist_sq(point(p.args[i]), point(p.args[i + 1]));
          why += ", " + scalar_str(next);
          if (compare3(first, next) != 0) return false;
        }
        return true;
      }
      case Predicate::Kind::LessSeg: {
        S a = dist_sq(point(p.args[0]), point(p.args[1]));
        S b = dist_sq(point(p.args[2]), point(p.args[3]));
        why = "squared lengths: " + scalar_str(a) + " vs " + scalar_str(b);
        return compare3(a, b) < 0;
      }
      case Predicate::Kind::EqualAngle: {
        AnglePair<S> a =
            unsigned_angle(angle_at(point(p.args[0]), point(p.args[1]), point(p.args[2])));
        AnglePair<S> b =
            unsigned_angle(angle_at(point(p.args[3]), point(p.args[4]), point(p.args[5])));
        why = "pairs: (" + scalar_str(a.c) + ", " + scalar_str(a.s) + ") vs (" + scalar_str(b.c) +
              ", " + scalar_str(b.s) + ")";
        return angle_equal(a, b);
      }
      case Predicate::Kind::Parallel: {
        auto rel = line_relation(line_of(p.args[0]), line_of(p.args[1]));
        if (std::holds_alternative<LinesIdentical>(rel)) {
          why = "the lines are identical";
          return false;
        }
        auto m = meets_in_model(line_of(p.args[0]), line_of(p.args[1]), model_);
        why = m ? "the lines meet at " + point_str(*m) : "no meeting point in the model";
        return !m.has_value();
      }
      case Predicate::Kind::Meets: {
        auto m = meets_in_model(line_of(p.args[0]), line_of(p.args[1]), model_);
        why = m ? "meet at " + point_str(*m) : "no meeting point in the model";
        return m.has_value();
      }
      case Predicate::Kind::Collinear: {
        why = "cross product sign";
        return collinear(point(p.args[0]), point(p.args[1]), point(p.args[2]));
      }
      case Predicate::Kind::AngleSumPi: {
        Triangle<S> t{point(p.args[0]), point(p.args[1]), point(p.args[2])};
        bool ok = angle_sum_is_two_right(t);
        why = ok ? "interior angles compose to the straight-angle class" : "composition missed pi";
        return ok;
      }
    }
    raise(ErrorCode::InternalError, "bad predicate");
  }
};

}  // namespace

template <class S>
Execution<S> execute_script(const Script& script, const PlaneModel& model, uint64_t seed) {
  if (model.tag != ScalarTraits<S>::tag)
    raise(ErrorCode::TagMismatch, "model tag does not match the scalar backend");
  Executor<S> ex(model, seed);
  Execution<S> out = ex.run(script);
  out.trace.seed = seed;
  return out;
}

template Execution<Rational> execute_script<Rational>(const Script&, const PlaneModel&, uint64_t);
template Execution<TowerReal> execute_script<TowerReal>(const Script&, const PlaneModel&,
                                                        uint64_t);
template Execution<SeriesValue> execute_script<SeriesValue>(const Script&, const PlaneModel&,
                                                            uint64_t);

}  // namespace euclid
