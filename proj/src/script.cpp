#include "euclid/script.hpp"

#include <sstream>

namespace euclid {

const char* selector_name(Selector s) {
  switch (s) {
    case Selector::First: return "first";
    case Selector::Second: return "second";
    case Selector::Upper: return "upper";
    case Selector::Lower: return "lower";
    case Selector::Left: return "left";
    case Selector::Right: return "right";
  }
  return "?";
}

const char* obj_kind_name(ObjKind k) {
  switch (k) {
    case ObjKind::Point: return "point";
    case ObjKind::Line: return "line";
    case ObjKind::Ray: return "ray";
    case ObjKind::Segment: return "segment";
    case ObjKind::Circle: return "circle";
  }
  return "?";
}

const char* predicate_name(Predicate::Kind k) {
  switch (k) {
    case Predicate::Kind::EqualSeg: return "equal_seg";
    case Predicate::Kind::LessSeg: return "less_seg";
    case Predicate::Kind::EqualAngle: return "equal_angle";
    case Predicate::Kind::Parallel: return "parallel";
    case Predicate::Kind::Meets: return "meets";
    case Predicate::Kind::Collinear: return "collinear";
    case Predicate::Kind::AngleSumPi: return "angle_sum_pi";
  }
  return "?";
}

SExprPtr sexpr_literal(Rational r) {
  auto e = std::make_shared<SExpr>();
  e->kind = SExpr::Kind::Literal;
  e->literal = std::move(r);
  return e;
}

SExprPtr sexpr_eps() {
  auto e = std::make_shared<SExpr>();
  e->kind = SExpr::Kind::Eps;
  return e;
}

SExprPtr sexpr_dist(std::string p, std::string q) {
  auto e = std::make_shared<SExpr>();
  e->kind = SExpr::Kind::Dist;
  e->id1 = std::move(p);
  e->id2 = std::move(q);
  return e;
}

SExprPtr sexpr_binary(SExpr::Kind op, SExprPtr lhs, SExprPtr rhs) {
  auto e = std::make_shared<SExpr>();
  e->kind = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

SExprPtr sexpr_unary(SExpr::Kind op, SExprPtr operand) {
  auto e = std::make_shared<SExpr>();
  e->kind = op;
  e->lhs = std::move(operand);
  return e;
}

namespace {

int prec_of(SExpr::Kind k) {
  switch (k) {
    case SExpr::Kind::Add:
    case SExpr::Kind::Sub: return 1;
    case SExpr::Kind::Mul:
    case SExpr::Kind::Div: return 2;
    case SExpr::Kind::Neg: return 3;
    default: return 4;
  }
}

std::string render_prec(const SExpr& e, int parent) {
  int p = prec_of(e.kind);
  std::string out;
  switch (e.kind) {
    case SExpr::Kind::Literal: {
      // negative literals render through Neg to stay reparsable
      if (e.literal.sign() < 0) {
        SExpr neg;
        neg.kind = SExpr::Kind::Neg;
        neg.lhs = sexpr_literal(-e.literal);
        return render_prec(neg, parent);
      }
      out = rational_str(e.literal);
      if (denominator(e.literal) != 1) p = 2;  // renders as a division
      break;
    }
    case SExpr::Kind::Eps: out = "eps"; break;
    case SExpr::Kind::Dist: out = "dist(" + e.id1 + ", " + e.id2 + ")"; break;
    case SExpr::Kind::Sqrt: out = "sqrt(" + render_prec(*e.lhs, 0) + ")"; break;
    case SExpr::Kind::Neg: out = "-" + render_prec(*e.lhs, p); break;
    case SExpr::Kind::Add:
      out = render_prec(*e.lhs, p) + " + " + render_prec(*e.rhs, p + 1);
      break;
    case SExpr::Kind::Sub:
      out = render_prec(*e.lhs, p) + " - " + render_prec(*e.rhs, p + 1);
      break;
    case SExpr::Kind::Mul:
      out = render_prec(*e.lhs, p) + "*" + render_prec(*e.rhs, p + 1);
      break;
    case SExpr::Kind::Div:
      out = render_prec(*e.lhs, p) + "/" + render_prec(*e.rhs, p + 1);
      break;
  }
  if (p < parent) return "(" + out + ")";
  return out;
}

}  // namespace

std::string render_sexpr(const SExpr& e) { return render_prec(e, 0); }

std::string render_stmt(const Stmt& s) {
  std::ostringstream os;
  if (const auto* d = std::get_if<DeclStmt>(&s.node)) {
    os << obj_kind_name(d->kind) << " " << d->id << " = ";
    const ObjExpr& e = d->expr;
    switch (e.kind) {
      case ObjExpr::Kind::PointCoords:
        os << "(" << render_sexpr(*e.sx) << ", " << render_sexpr(*e.sy) << ")";
        break;
      case ObjExpr::Kind::FreePoint: os << "free"; break;
      case ObjExpr::Kind::PointOn: os << "on " << e.id1; break;
      case ObjExpr::Kind::Intersect:
        os << "intersect(" << e.id1 << ", " << e.id2 << ")[" << selector_name(e.selector) << "]";
        break;
      case ObjExpr::Kind::LineThrough: os << "line(" << e.id1 << ", " << e.id2 << ")"; break;
      case ObjExpr::Kind::RayFrom: os << "ray(" << e.id1 << ", " << e.id2 << ")"; break;
      case ObjExpr::Kind::SegmentOf: os << "seg(" << e.id1 << ", " << e.id2 << ")"; break;
      case ObjExpr::Kind::CircleOf:
        os << "circle(" << e.id1 << ", " << render_sexpr(*e.sx) << ")";
        break;
    }
  } else if (const auto* a = std::get_if<AssertStmt>(&s.node)) {
    os << "assert " << predicate_name(a->pred.kind) << "(";
    for (size_t i = 0; i < a->pred.args.size(); ++i) {
      if (i) os << ", ";
      os << a->pred.args[i];
    }
    os << ")";
  } else if (const auto* m = std::get_if<MacroStmt>(&s.node)) {
    os << m->name << "(";
    for (size_t i = 0; i < m->args.size(); ++i) {
      if (i) os << ", ";
      os << m->args[i];
    }
    os << ")";
  } else {
    const auto& r = std::get<RequireStmt>(s.node);
    os << "require greater_seg(" << r.pts[0] << ", " << r.pts[1] << ", " << r.pts[2] << ", "
       << r.pts[3] << ")";
  }
  return os.str();
}

std::string render_script(const Script& s) {
  std::ostringstream os;
  for (const Stmt& st : s.statements) os << render_stmt(st) << "\n";
  return os.str();
}

const std::vector<std::pair<std::string, MacroSignature>>& macro_signatures() {
  static const std::vector<std::pair<std::string, MacroSignature>> sigs = {
      {"equilateral", {2, 1}},    // A, B -> apex
      {"transport_seg", {3, 1}},  // A, B, C -> L with AL = BC
      {"cut_off", {4, 1}},        // A, B, P, Q -> E on AB with AE = PQ
      {"triangle_sss", {6, 3}},   // three segments -> D, G, K
      {"transport_angle", {5, 2}} // angle DCE, target ray AB -> F, G
  };
  return sigs;
}

namespace {

Stmt decl(ObjKind kind, std::string id, ObjExpr expr) {
  return Stmt{DeclStmt{kind, std::move(id), std::move(expr)}, 0};
}

ObjExpr intersect_of(std::string a, std::string b, Selector sel) {
  ObjExpr e;
  e.kind = ObjExpr::Kind::Intersect;
  e.id1 = std::move(a);
  e.id2 = std::move(b);
  e.selector = sel;
  return e;
}

ObjExpr two_point(ObjExpr::Kind kind, std::string p, std::string q) {
  ObjExpr e;
  e.kind = kind;
  e.id1 = std::move(p);
  e.id2 = std::move(q);
  return e;
}

ObjExpr circle_of(std::string center, SExprPtr radius) {
  ObjExpr e;
  e.kind = ObjExpr::Kind::CircleOf;
  e.id1 = std::move(center);
  e.sx = std::move(radius);
  return e;
}

ObjExpr free_point() {
  ObjExpr e;
  e.kind = ObjExpr::Kind::FreePoint;
  return e;
}

}  // namespace

std::vector<Stmt> macro_expand(const std::string& name, const std::vector<std::string>& args,
                               int& fresh_counter) {
  auto sig_it = macro_signatures().begin();
  for (; sig_it != macro_signatures().end(); ++sig_it)
    if (sig_it->first == name) break;
  if (sig_it == macro_signatures().end())
    raise(ErrorCode::UnsupportedId, "unknown macro '" + name + "'");
  if (args.size() != sig_it->second.inputs + sig_it->second.outputs)
    raise(ErrorCode::ArityError, "wrong argument count for macro '" + name + "'");

  const int n = ++fresh_counter;
  auto fresh = [&](const char* role) {
    return "_" + name.substr(0, 2) + std::to_string(n) + "_" + role;
  };
  std::vector<Stmt> out;

  if (name == "equilateral") {
    const std::string &A = args[0], &B = args[1], &C = args[2];
    std::string ca = fresh("ca"), cb = fresh("cb");
    out.push_back(decl(ObjKind::Circle, ca, circle_of(A, sexpr_dist(A, B))));
    out.push_back(decl(ObjKind::Circle, cb, circle_of(B, sexpr_dist(A, B))));
    out.push_back(decl(ObjKind::Point, C, intersect_of(ca, cb, Selector::Upper)));
    return out;
  }
  if (name == "transport_seg") {
    // place segment BC at A: equilateral apex D, G on ray DB with BG = BC,
    // then L on ray DA cut from circle (D, DG)
    const std::string &A = args[0], &B = args[1], &C = args[2], &L = args[3];
    std::string apex = fresh("apex"), cb = fresh("cb"), rb = fresh("rb"), g = fresh("g"),
                cd = fresh("cd"), ra = fresh("ra");
    out.push_back(Stmt{MacroStmt{"equilateral", {A, B, apex}}, 0});
    out.push_back(decl(ObjKind::Circle, cb, circle_of(B, sexpr_dist(B, C))));
    out.push_back(decl(ObjKind::Ray, rb, two_point(ObjExpr::Kind::RayFrom, apex, B)));
    out.push_back(decl(ObjKind::Point, g, intersect_of(cb, rb, Selector::Second)));
    out.push_back(decl(ObjKind::Circle, cd, circle_of(apex, sexpr_dist(apex, g))));
    out.push_back(decl(ObjKind::Ray, ra, two_point(ObjExpr::Kind::RayFrom, apex, A)));
    out.push_back(decl(ObjKind::Point, L, intersect_of(cd, ra, Selector::Second)));
    return out;
  }
  if (name == "cut_off") {
    // cut from AB, at A, a segment equal to PQ; PQ must be strictly lesser
    const std::string &A = args[0], &B = args[1], &P = args[2], &Q = args[3], &E = args[4];
    std::string l = fresh("l"), c = fresh("c"), r = fresh("r");
    out.push_back(Stmt{RequireStmt{{A, B, P, Q}}, 0});
    out.push_back(Stmt{MacroStmt{"transport_seg", {A, P, Q, l}}, 0});
    out.push_back(decl(ObjKind::Circle, c, circle_of(A, sexpr_dist(A, l))));
    out.push_back(decl(ObjKind::Ray, r, two_point(ObjExpr::Kind::RayFrom, A, B)));
    out.push_back(decl(ObjKind::Point, E, intersect_of(c, r, Selector::Second)));
    return out;
  }
  if (name == "triangle_sss") {
    // sides: DK = |a1 a2|, DG = |b1 b2|, GK = |c1 c2| on a random base ray
    const std::string &a1 = args[0], &a2 = args[1], &b1 = args[2], &b2 = args[3], &c1 = args[4],
                      &c2 = args[5], &D = args[6], &G = args[7], &K = args[8];
    std::string e = fresh("e"), cb = fresh("cb"), r = fresh("r"), ca = fresh("ca"),
                cc = fresh("cc");
    out.push_back(decl(ObjKind::Point, D, free_point()));
    out.push_back(decl(ObjKind::Point, e, free_point()));
    out.push_back(decl(ObjKind::Circle, cb, circle_of(D, sexpr_dist(b1, b2))));
    out.push_back(decl(ObjKind::Ray, r, two_point(ObjExpr::Kind::RayFrom, D, e)));
    out.push_back(decl(ObjKind::Point, G, intersect_of(cb, r, Selector::Second)));
    out.push_back(decl(ObjKind::Circle, ca, circle_of(D, sexpr_dist(a1, a2))));
    out.push_back(decl(ObjKind::Circle, cc, circle_of(G, sexpr_dist(c1, c2))));
    out.push_back(decl(ObjKind::Point, K, intersect_of(ca, cc, Selector::Upper)));
    return out;
  }
  // transport_angle: triangle CDE rebuilt at A on ray AB, SSS gives the angle
  const std::string &C = args[0], &D = args[1], &E = args[2], &A = args[3], &B = args[4],
                    &F = args[5], &G = args[6];
  std::string c1 = fresh("c1"), r = fresh("r"), c2 = fresh("c2"), c3 = fresh("c3");
  out.push_back(decl(ObjKind::Circle, c1, circle_of(A, sexpr_dist(C, D))));
  out.push_back(decl(ObjKind::Ray, r, two_point(ObjExpr::Kind::RayFrom, A, B)));
  out.push_back(decl(ObjKind::Point, G, intersect_of(c1, r, Selector::Second)));
  out.push_back(decl(ObjKind::Circle, c2, circle_of(A, sexpr_dist(C, E))));
  out.push_back(decl(ObjKind::Circle, c3, circle_of(G, sexpr_dist(D, E))));
  out.push_back(decl(ObjKind::Point, F, intersect_of(c2, c3, Selector::Upper)));
  return out;
}

namespace {

void expand_into(const Stmt& stmt, std::vector<Stmt>& out, int& counter) {
  if (const auto* m = std::get_if<MacroStmt>(&stmt.node)) {
    for (const Stmt& sub : macro_expand(m->name, m->args, counter)) expand_into(sub, out, counter);
    return;
  }
  out.push_back(stmt);
}

}  // namespace

Script expand_macros(const Script& s) {
  Script out{s.name, {}};
  int counter = 0;
  for (const Stmt& st : s.statements) expand_into(st, out.statements, counter);
  return out;
}

}  // namespace euclid
