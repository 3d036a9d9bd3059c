#include "euclid/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "euclid/exact_parse.hpp"

namespace euclid {

namespace {

struct DotPrim {
  double x, y;
  std::string label;
};

struct ArrowPrim {
  int sx, sy;  // which border: sign of the infinite coordinate(s)
  std::optional<double> fx, fy;  // finite coordinate if one exists
  std::string label;
};

struct SegPrim {
  double x1, y1, x2, y2;
  std::string label;
};

struct LinePrim {
  double px, py, dx, dy;  // point + direction, standard parts
  std::string label;      // object id, plus an exact slope note when needed
};

struct CirclePrim {
  double cx, cy, r;
  std::string label;
};

struct Scene {
  std::vector<DotPrim> dots;
  std::vector<ArrowPrim> arrows;
  std::vector<SegPrim> segs;
  std::vector<LinePrim> lines;
  std::vector<CirclePrim> circles;
};

double decimal_to_double(const Rational& r) { return std::stod(rational_decimal(r, 12)); }

// --- standard parts per backend ---

std::optional<double> st_double(const Rational& v) { return decimal_to_double(v); }

std::optional<double> st_double(const TowerReal& v) {
  return decimal_to_double(v.approx_within(Rational(1, 10000000000000LL)));
}

std::optional<double> st_double(const SeriesValue& v) {
  if (v.terms().empty()) return 0.0;
  if (v.terms().front().exp.sign() < 0) return std::nullopt;  // infinite
  for (const auto& t : v.terms())
    if (t.exp.is_zero()) return st_double(t.coef);
  return 0.0;  // purely infinitesimal
}

int infinite_sign(const Rational&) { return 0; }
int infinite_sign(const TowerReal&) { return 0; }
int infinite_sign(const SeriesValue& v) {
  if (v.terms().empty() || v.terms().front().exp.sign() >= 0) return 0;
  return v.terms().front().coef.sign();
}

// Nonzero exponents present: the value differs from its standard part.
bool has_eps_part(const Rational&) { return false; }
bool has_eps_part(const TowerReal&) { return false; }
bool has_eps_part(const SeriesValue& v) {
  for (const auto& t : v.terms())
    if (!t.exp.is_zero()) return true;
  return false;
}

template <class S>
S field_of(const std::vector<std::pair<std::string, std::string>>& fields, const char* key) {
  for (const auto& [k, v] : fields)
    if (k == key) return parse_exact<S>(v);
  raise(ErrorCode::SyntaxError, std::string("missing field '") + key + "' in object");
}

std::string str_field(const std::vector<std::pair<std::string, std::string>>& fields,
                      const char* key) {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  raise(ErrorCode::SyntaxError, std::string("missing field '") + key + "' in object");
}

template <class S>
void add_point(Scene& scene, const std::string& id, const S& x, const S& y,
               const std::string& x_str, const std::string& y_str) {
  auto fx = st_double(x), fy = st_double(y);
  if (fx && fy) {
    scene.dots.push_back({*fx, *fy, id});
    return;
  }
  ArrowPrim a;
  a.sx = infinite_sign(x);
  a.sy = infinite_sign(y);
  a.fx = fx;
  a.fy = fy;
  std::string what;
  if (!fx) what = "x = " + x_str;
  if (!fy) what += (what.empty() ? "" : ", ") + ("y = " + y_str);
  a.label = id + ": " + what;
  scene.arrows.push_back(std::move(a));
}

template <class S>
void add_line(Scene& scene, const std::string& id, S a, S b, S c) {
  // normalize so the dominant coefficient has standard part nonzero
  if constexpr (std::is_same_v<S, SeriesValue>) {
    Rational lead(0);
    bool have = false;
    for (const S* v : {&a, &b}) {
      if (v->terms().empty()) continue;
      Rational l = v->terms().front().exp;
      if (!have || l < lead) lead = l, have = true;
    }
    if (have && lead.sign() < 0) {
      SeriesValue scale = SeriesValue::monomial(TowerReal(1), -lead);
      a = a * scale;
      b = b * scale;
      c = c * scale;
    }
  }
  auto da = st_double(a), db = st_double(b), dc = st_double(c);
  if (!da || !db || !dc) return;  // the line's finite trace is out of view
  if (*da == 0.0 && *db == 0.0) return;
  std::string label = id;
  if (!is_zero(b) && (has_eps_part(a) || has_eps_part(b))) {
    S slope = (-a) / b;
    label += "  (slope " + scalar_str(slope) + ")";
  }
  // a point on the line and its direction, in doubles
  double px, py;
  if (std::abs(*db) >= std::abs(*da)) {
    px = 0.0;
    py = -*dc / *db;
  } else {
    px = -*dc / *da;
    py = 0.0;
  }
  scene.lines.push_back({px, py, -*db, *da, label});
}

template <class S>
Scene collect(const std::vector<SerializedObj>& objects) {
  Scene scene;
  for (const SerializedObj& o : objects) {
    if (o.kind == "point") {
      add_point(scene, o.id, field_of<S>(o.fields, "x"), field_of<S>(o.fields, "y"),
                str_field(o.fields, "x"), str_field(o.fields, "y"));
    } else if (o.kind == "line") {
      add_line(scene, o.id, field_of<S>(o.fields, "a"), field_of<S>(o.fields, "b"),
               field_of<S>(o.fields, "c"));
    } else if (o.kind == "ray" || o.kind == "segment") {
      const char* k1x = o.kind == "ray" ? "ox" : "ax";
      const char* k1y = o.kind == "ray" ? "oy" : "ay";
      const char* k2x = o.kind == "ray" ? "tx" : "bx";
      const char* k2y = o.kind == "ray" ? "ty" : "by";
      auto x1 = st_double(field_of<S>(o.fields, k1x));
      auto y1 = st_double(field_of<S>(o.fields, k1y));
      auto x2 = st_double(field_of<S>(o.fields, k2x));
      auto y2 = st_double(field_of<S>(o.fields, k2y));
      if (x1 && y1 && x2 && y2) scene.segs.push_back({*x1, *y1, *x2, *y2, o.id});
    } else if (o.kind == "circle") {
      auto cx = st_double(field_of<S>(o.fields, "cx"));
      auto cy = st_double(field_of<S>(o.fields, "cy"));
      auto r2 = st_double(field_of<S>(o.fields, "r_sq"));
      if (cx && cy && r2 && *r2 >= 0.0) scene.circles.push_back({*cx, *cy, std::sqrt(*r2), o.id});
    }
  }
  return scene;
}

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  // avoid the "-0.00" artifact
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

}  // namespace

std::string svg_from_objects(const std::vector<SerializedObj>& objects, FieldTag tag) {
  Scene scene;
  switch (tag) {
    case FieldTag::Rat: scene = collect<Rational>(objects); break;
    case FieldTag::Constructible: scene = collect<TowerReal>(objects); break;
    case FieldTag::NonArch: scene = collect<SeriesValue>(objects); break;
  }

  // world bounding box over finite primitives
  bool any = false;
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  auto grow = [&](double x, double y) {
    if (!any) {
      x0 = x1 = x;
      y0 = y1 = y;
      any = true;
      return;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (const auto& d : scene.dots) grow(d.x, d.y);
  for (const auto& s : scene.segs) {
    grow(s.x1, s.y1);
    grow(s.x2, s.y2);
  }
  for (const auto& c : scene.circles) {
    grow(c.cx - c.r, c.cy - c.r);
    grow(c.cx + c.r, c.cy + c.r);
  }
  for (const auto& l : scene.lines) grow(l.px, l.py);
  if (!any) raise(ErrorCode::UnrenderableScene, "no finite geometry to draw");

  double spanx = std::max(x1 - x0, 1e-9), spany = std::max(y1 - y0, 1e-9);
  x0 -= 0.15 * spanx;
  x1 += 0.15 * spanx;
  y0 -= 0.15 * spany;
  y1 += 0.15 * spany;
  spanx = x1 - x0;
  spany = y1 - y0;

  const double W = 640, H = 480, margin = 28;
  double scale = std::min((W - 2 * margin) / spanx, (H - 2 * margin) / spany);
  auto sx = [&](double x) { return margin + (x - x0) * scale; };
  auto sy = [&](double y) { return H - margin - (y - y0) * scale; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const auto& c : scene.circles)
    out << "  <circle cx=\"" << fmt(sx(c.cx)) << "\" cy=\"" << fmt(sy(c.cy)) << "\" r=\""
        << fmt(c.r * scale) << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";

  // lines clipped to the world box (Liang-Barsky on the padded bbox)
  for (const auto& l : scene.lines) {
    double t0 = -1e18, t1e = 1e18;
    auto clip = [&](double p, double q) {
      if (p == 0.0) return q >= 0;
      double t = q / p;
      if (p < 0) {
        if (t > t1e) return false;
        t0 = std::max(t0, t);
      } else {
        if (t < t0) return false;
        t1e = std::min(t1e, t);
      }
      return true;
    };
    if (!clip(-l.dx, l.px - x0) || !clip(l.dx, x1 - l.px) || !clip(-l.dy, l.py - y0) ||
        !clip(l.dy, y1 - l.py))
      continue;
    double ax = l.px + t0 * l.dx, ay = l.py + t0 * l.dy;
    double bx = l.px + t1e * l.dx, by = l.py + t1e * l.dy;
    out << "  <line x1=\"" << fmt(sx(ax)) << "\" y1=\"" << fmt(sy(ay)) << "\" x2=\"" << fmt(sx(bx))
        << "\" y2=\"" << fmt(sy(by)) << "\" stroke=\"#06c\" stroke-width=\"1\"/>\n";
    out << "  <text x=\"" << fmt(sx(bx) - 4) << "\" y=\"" << fmt(sy(by) - 4)
        << "\" font-size=\"10\" fill=\"#06c\" text-anchor=\"end\">" << escape(l.label)
        << "</text>\n";
  }

  for (const auto& s : scene.segs) {
    out << "  <line x1=\"" << fmt(sx(s.x1)) << "\" y1=\"" << fmt(sy(s.y1)) << "\" x2=\""
        << fmt(sx(s.x2)) << "\" y2=\"" << fmt(sy(s.y2))
        << "\" stroke=\"#080\" stroke-width=\"1.2\"/>\n";
  }

  for (const auto& d : scene.dots) {
    out << "  <circle cx=\"" << fmt(sx(d.x)) << "\" cy=\"" << fmt(sy(d.y))
        << "\" r=\"2.5\" fill=\"#c00\"/>\n";
    out << "  <text x=\"" << fmt(sx(d.x) + 5) << "\" y=\"" << fmt(sy(d.y) - 5)
        << "\" font-size=\"11\" fill=\"#c00\">" << escape(d.label) << "</text>\n";
  }

  // infinite coordinates as border arrows
  for (const auto& a : scene.arrows) {
    double ax = a.sx > 0 ? W - margin : (a.sx < 0 ? margin : W / 2);
    double ay = a.sy > 0 ? margin : (a.sy < 0 ? H - margin : H / 2);
    if (a.fx) ax = std::clamp(sx(*a.fx), margin, W - margin);
    if (a.fy) ay = std::clamp(sy(*a.fy), margin, H - margin);
    double dxn = a.sx, dyn = -a.sy;
    double norm = std::hypot(dxn, dyn);
    if (norm == 0) norm = 1;
    dxn /= norm;
    dyn /= norm;
    double tipx = ax + 12 * dxn, tipy = ay + 12 * dyn;
    out << "  <line x1=\"" << fmt(ax) << "\" y1=\"" << fmt(ay) << "\" x2=\"" << fmt(tipx)
        << "\" y2=\"" << fmt(tipy) << "\" stroke=\"#c60\" stroke-width=\"1.5\"/>\n";
    out << "  <circle cx=\"" << fmt(tipx) << "\" cy=\"" << fmt(tipy)
        << "\" r=\"2\" fill=\"#c60\"/>\n";
    out << "  <text x=\"" << fmt(ax - 4 * dxn) << "\" y=\"" << fmt(ay - 4 * dyn - 4)
        << "\" font-size=\"10\" fill=\"#c60\" text-anchor=\"" << (a.sx > 0 ? "end" : "start")
        << "\">" << escape(a.label) << "</text>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace euclid
