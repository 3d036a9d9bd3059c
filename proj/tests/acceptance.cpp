// Acceptance suite: one criterion per section, one PASS/FAIL line each, exit
// code = number of failed criteria. Every check is exact; the stated time
// budgets are enforced.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "euclid/corpus.hpp"
#include "euclid/props.hpp"
#include "euclid/report_json.hpp"

using namespace euclid;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("%s  %d. %s (%.2fs)\n", ok ? "PASS" : "FAIL", number, title.c_str(), elapsed);
  if (!ok) {
    if (!detail.empty()) std::printf("      %s\n", detail.c_str());
    ++failures;
  }
}

template <class S>
Point<S> pt(long x, long y) {
  return {ScalarTraits<S>::from_rational(Rational(x)), ScalarTraits<S>::from_rational(Rational(y))};
}

Rational small_rat(std::mt19937_64& rng, long span, long max_den) {
  long num = -span + static_cast<long>(rng() % static_cast<uint64_t>(2 * span + 1));
  long den = 1 + static_cast<long>(rng() % static_cast<uint64_t>(max_den));
  return Rational(num, den);
}

// --- criterion 1 ---

template <class S>
bool circle_pair_exact(std::string& detail) {
  Circle<S> c1{pt<S>(0, 0), ScalarTraits<S>::from_rational(Rational(1))};
  Circle<S> c2{pt<S>(0, 1), ScalarTraits<S>::from_rational(Rational(1))};
  auto hits = intersect_circles(c1, c2);
  if (hits.kind != HitKind::Two) {
    detail = "expected two intersection points";
    return false;
  }
  // expected coordinates: (+-sqrt(3)/2, 1/2), exactly
  const S four = ScalarTraits<S>::from_rational(Rational(4));
  const S three = ScalarTraits<S>::from_rational(Rational(3));
  const S half = ScalarTraits<S>::from_rational(Rational(1, 2));
  for (const auto& p : hits.points) {
    if (compare3(p.y, half) != 0) {
      detail = "ordinate differs from 1/2";
      return false;
    }
    if (compare3(p.x * p.x * four, three) != 0) {
      detail = "abscissa squared differs from 3/4";
      return false;
    }
    // substitution residuals exactly zero
    if (!is_zero(dist_sq(c1.center, p) - c1.radius_sq) ||
        !is_zero(dist_sq(c2.center, p) - c2.radius_sq)) {
      detail = "nonzero substitution residual";
      return false;
    }
  }
  if (sign_of(hits.points[0].x) >= 0 || sign_of(hits.points[1].x) <= 0) {
    detail = "expected one negative and one positive abscissa";
    return false;
  }
  return true;
}

bool criterion1(std::string& detail) {
  Circle<Rational> r1{pt<Rational>(0, 0), Rational(1)}, r2{pt<Rational>(0, 1), Rational(1)};
  auto rhits = intersect_circles(r1, r2);
  if (rhits.kind != HitKind::NoSqrtInField) {
    detail = "rational backend should report NoSqrtInField";
    return false;
  }
  if (!rhits.discriminant || is_rational_square(*rhits.discriminant)) {
    detail = "NoSqrtInField must carry a positive non-square discriminant";
    return false;
  }
  return circle_pair_exact<TowerReal>(detail) && circle_pair_exact<SeriesValue>(detail);
}

// --- criterion 2 ---

bool criterion2(std::string& detail) {
  PlaneModel sub = make_model(FieldTag::NonArch, true);
  SeriesValue eps = SeriesValue::eps();
  std::vector<SeriesValue> slopes = {SeriesValue(Rational(0)), eps, eps + eps, eps * eps};
  Line<SeriesValue> horizontal =
      make_line(SeriesValue(Rational(0)), SeriesValue(Rational(1)), SeriesValue(Rational(-1)));
  auto rep = parallels_through_point(sub, pt<SeriesValue>(0, 0), horizontal, slopes);
  bool mult4 = false;
  for (const auto& w : rep.witnesses)
    if (w.name == "multiplicity") mult4 = (w.value == "4");
  if (rep.verdict != Verdict::Fails || !mult4) {
    detail = "parallel multiplicity through (0,0) must be 4";
    return false;
  }

  std::mt19937_64 rng(2024);
  int done = 0;
  while (done < 100) {
    auto coord = [&]() {
      return SeriesValue(small_rat(rng, 8, 2)) +
             SeriesValue::monomial(TowerReal(small_rat(rng, 3, 2)), Rational(1));
    };
    Triangle<SeriesValue> t{{coord(), coord()}, {coord(), coord()}, {coord(), coord()}};
    if (is_zero(doubled_signed_area(t))) continue;
    Triangle<SeriesValue> o = t;
    if (sign_of(doubled_signed_area(o)) < 0) std::swap(o.q, o.r);
    AnglePair<SeriesValue> sum = angle_add(
        angle_add(angle_at(o.p, o.q, o.r), angle_at(o.q, o.r, o.p)), angle_at(o.r, o.p, o.q));
    if (!is_zero(sum.s) || sign_of(sum.c) >= 0) {
      detail = "interior angles failed to compose exactly to the pi class";
      return false;
    }
    ++done;
  }
  return true;
}

// --- criterion 3 ---

bool criterion3(std::string& detail) {
  SeriesValue eps = SeriesValue::eps();
  PlaneModel sub = make_model(FieldTag::NonArch, true);
  PlaneModel full = make_model(FieldTag::NonArch, false);
  Line<SeriesValue> horizontal =
      make_line(SeriesValue(Rational(0)), SeriesValue(Rational(1)), SeriesValue(Rational(-1)));
  Line<SeriesValue> slanted = make_line(eps, SeriesValue(Rational(-1)), SeriesValue(Rational(0)));
  Line<SeriesValue> transversal =
      make_line(SeriesValue(Rational(1)), SeriesValue(Rational(0)), SeriesValue(Rational(0)));

  if (meets_in_model(horizontal, slanted, sub).has_value()) {
    detail = "y = 1 and y = eps x must be model-parallel in the subplane";
    return false;
  }
  auto rep = check_I29(sub, horizontal, slanted, transversal);
  if (rep.verdict != Verdict::Fails) {
    detail = "alternate angles must be unequal in the subplane";
    return false;
  }

  auto meet = meets_in_model(horizontal, slanted, full);
  if (!meet) {
    detail = "the full plane must join y = 1 and y = eps x";
    return false;
  }
  SeriesValue inv_eps = SeriesValue(Rational(1)) / eps;
  if (!is_zero(meet->x - inv_eps) || !is_zero(meet->y - SeriesValue(Rational(1)))) {
    detail = "meeting point differs from (1/eps, 1)";
    return false;
  }
  return true;
}

// --- criterion 4 ---

bool criterion4(std::string& detail) {
  std::mt19937_64 rng(77);
  int done = 0;
  PlaneModel con = make_model(FieldTag::Constructible, false);
  while (done < 50) {
    Point<TowerReal> a{TowerReal(small_rat(rng, 6, 2)), TowerReal(small_rat(rng, 6, 2))};
    Point<TowerReal> b{TowerReal(small_rat(rng, 6, 2)), TowerReal(small_rat(rng, 6, 2))};
    if (points_equal(a, b)) continue;
    TowerReal asq(small_rat(rng, 8, 2));
    TowerReal bsq(small_rat(rng, 8, 2));
    if (asq.sign() <= 0 || bsq.sign() <= 0) continue;
    auto rep = check_I7_uniqueness(a, b, asq, bsq, con);
    if (rep.verdict == Verdict::Fails) {
      detail = "found two same-side points: I.7 refuted?!";
      return false;
    }
    ++done;
  }

  for (int i = 0; i < 20; ++i) {
    PropositionReport rep;
    if (i % 2 == 0) {
      rep = check_I27(con, TowerReal(small_rat(rng, 5, 3)));
    } else {
      SeriesValue slope = SeriesValue(small_rat(rng, 5, 3)) +
                          SeriesValue::monomial(TowerReal(small_rat(rng, 3, 1)), Rational(1));
      rep = check_I27(make_model(FieldTag::NonArch, false), slope);
    }
    if (rep.verdict != Verdict::ImpossibleFigure) {
      detail = "equal alternate angles failed to force parallelism";
      return false;
    }
  }
  return true;
}

// --- criterion 5 ---

template <class S>
bool axiom_battery(const std::function<S(std::mt19937_64&)>& gen, uint64_t seed,
                   std::string& detail) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 1000; ++i) {
    Magnitude<S> a = segment_magnitude(gen(rng));
    Magnitude<S> b = segment_magnitude(gen(rng));
    Magnitude<S> c = segment_magnitude(gen(rng));
    bool ok = check_E3(a, b, c).holds && trichotomy_check(a, b).holds &&
              cn_apply(CommonNotion::CN5, std::vector{a, b}).holds &&
              cn_apply(CommonNotion::CN1, std::vector{a, a, a}).holds &&
              cn_apply(CommonNotion::CN2, std::vector{a, a, b, b}).holds &&
              check_E4(a, 1 + static_cast<unsigned>(rng() % 9)).holds &&
              check_E5(a, b, c).holds;
    if (ok && mag_compare(a, b) == Ordering::GT)
      ok = check_E2(a, b).holds && cn_apply(CommonNotion::CN3, std::vector{a, a, b, b}).holds;
    // angle magnitudes: the additive subset
    if (ok && i % 4 == 0) {
      auto acute = [&]() {
        return angle_magnitude(AnglePair<S>{
            ScalarTraits<S>::from_rational(Rational(1 + static_cast<long>(rng() % 9))),
            ScalarTraits<S>::from_rational(Rational(1 + static_cast<long>(rng() % 9)))});
      };
      Magnitude<S> x = acute(), y = acute();
      ok = trichotomy_check(x, y).holds && cn_apply(CommonNotion::CN5, std::vector{x, y}).holds;
      if (ok && mag_compare(x, y) == Ordering::GT) ok = check_E2(x, y).holds;
    }
    if (!ok) {
      detail = "axiom failed on triple " + std::to_string(i);
      return false;
    }
  }
  return true;
}

bool criterion5(std::string& detail) {
  auto rat_gen = [](std::mt19937_64& rng) {
    return Rational(1 + static_cast<long>(rng() % 40), 1 + static_cast<long>(rng() % 6));
  };
  if (!axiom_battery<Rational>(rat_gen, 1, detail)) return false;

  TowerReal root2 = TowerReal::sqrt_of(TowerReal(2));
  auto tower_gen = [root2](std::mt19937_64& rng) {
    TowerReal v = TowerReal(Rational(1 + static_cast<long>(rng() % 20))) +
                  TowerReal(small_rat(rng, 5, 2)) * root2;
    return v.sign() > 0 ? v : v + TowerReal(20);
  };
  if (!axiom_battery<TowerReal>(tower_gen, 2, detail)) return false;

  auto series_gen = [](std::mt19937_64& rng) {
    return SeriesValue(Rational(1 + static_cast<long>(rng() % 15))) +
           SeriesValue::monomial(TowerReal(small_rat(rng, 4, 2)), Rational(1));
  };
  if (!axiom_battery<SeriesValue>(series_gen, 3, detail)) return false;

  // E1 on rational and constructible pairs: always holds
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) {
    auto a = segment_magnitude(rat_gen(rng)), b = segment_magnitude(rat_gen(rng));
    if (!check_E1(a, b).holds) {
      detail = "E1 failed over the rationals";
      return false;
    }
    auto ta = segment_magnitude(tower_gen(rng)), tb = segment_magnitude(tower_gen(rng));
    if (!check_E1(ta, tb).holds) {
      detail = "E1 failed over the constructible field";
      return false;
    }
  }
  // E1 over nonarch fails exactly on infinite ratios, both directions
  for (int i = 0; i < 300; ++i) {
    long la = static_cast<long>(rng() % 3) - 1;  // lead exponent -1, 0, or 1
    long lb = static_cast<long>(rng() % 3) - 1;
    auto mono = [&](long lead) {
      return SeriesValue::monomial(TowerReal(Rational(1 + static_cast<long>(rng() % 9))),
                                   Rational(lead));
    };
    SeriesValue a = mono(la), b = mono(lb);
    auto ma = segment_magnitude(a), mb = segment_magnitude(b);
    bool expected_infinite = classify_value(b / a) == MagnitudeClass::Infinite;
    bool holds = check_E1(ma, mb).holds;
    if (holds == expected_infinite) {
      detail = "E1 verdict disagrees with the classification of b/a";
      return false;
    }
  }
  return true;
}

// --- criterion 6 ---

template <class S>
bool corpus_against(FieldTag tag, std::string& detail) {
  PlaneModel model = make_model(tag, false);
  for (const char* id : {"I.1", "I.2", "I.3", "I.22", "I.23"}) {
    Script s = parse_script(corpus_find(id)->text, id);
    Execution<S> ex = execute_script<S>(s, model, 1);
    if (!ex.ok()) {
      detail = std::string(id) + " failed on " + model.name();
      return false;
    }
    auto point_of = [&](const char* n) { return std::get<Point<S>>(ex.bindings.at(n)); };
    if (std::string(id) == "I.2" &&
        compare3(dist_sq(point_of("A"), point_of("L")), dist_sq(point_of("B"), point_of("C"))) != 0) {
      detail = "I.2: transported segment not congruent";
      return false;
    }
    if (std::string(id) == "I.3" &&
        compare3(dist_sq(point_of("A"), point_of("E")), dist_sq(point_of("C"), point_of("D"))) != 0) {
      detail = "I.3: cut segment not congruent";
      return false;
    }
    if (std::string(id) == "I.22") {
      const S nine = ScalarTraits<S>::from_rational(Rational(9));
      const S sixteen = ScalarTraits<S>::from_rational(Rational(16));
      const S thirtysix = ScalarTraits<S>::from_rational(Rational(36));
      if (compare3(dist_sq(point_of("D"), point_of("K")), nine) != 0 ||
          compare3(dist_sq(point_of("D"), point_of("G")), sixteen) != 0 ||
          compare3(dist_sq(point_of("G"), point_of("K")), thirtysix) != 0) {
        detail = "I.22: sides do not match the given segments";
        return false;
      }
    }
    if (std::string(id) == "I.23") {
      auto original = unsigned_angle(angle_at(point_of("C"), point_of("D"), point_of("E")));
      auto moved = unsigned_angle(angle_at(point_of("A"), point_of("G"), point_of("F")));
      if (!angle_equal(original, moved)) {
        detail = "I.23: transported angle differs";
        return false;
      }
    }
  }
  Script i6 = parse_script(corpus_find("I.6")->text, "I.6");
  Execution<S> bad = execute_script<S>(i6, model, 1);
  if (bad.ok() || bad.trace.failure != FailReason::EqualNotLess) {
    detail = "I.6 cut_off with equal segments must fail with EqualNotLess";
    return false;
  }
  return true;
}

bool criterion6(std::string& detail) {
  return corpus_against<TowerReal>(FieldTag::Constructible, detail) &&
         corpus_against<SeriesValue>(FieldTag::NonArch, detail);
}

// --- criterion 7 ---

int run_cli(const std::string& args) {
  std::string cmd = std::string(EUCLID_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool criterion7(std::string& detail) {
  for (auto [model, seed] :
       {std::pair{make_model(FieldTag::Rat, false), 0}, {make_model(FieldTag::Constructible, false), 0},
        {make_model(FieldTag::NonArch, true), 3}}) {
    std::string a = dump_json(suite_to_json(run_suite(model, seed)));
    std::string b = dump_json(suite_to_json(run_suite(model, seed)));
    if (a != b) {
      detail = "suite JSON not byte-identical on " + model.name();
      return false;
    }
  }

  const std::string scripts = std::string(EUCLID_SOURCE_DIR) + "/scripts";
  struct Case {
    std::string args;
    int expected;
  };
  const Case cases[] = {
      {"run " + scripts + "/i1.euc --field rational", 2},
      {"run " + scripts + "/i1.euc --field constructible", 0},
      {"run " + scripts + "/i1.euc --field nonarch --subplane", 0},
      {"run " + scripts + "/i6.euc --field constructible", 2},
      {"run " + scripts + "/i1.euc --field bogus", 1},
      {"run " + scripts + "/no-such-file.euc", 1},
      {"suite --field rational", 0},
      {"suite --field constructible", 0},
      {"suite --field nonarch", 0},
      {"suite --field nonarch --subplane", 0},
      {"suite --subplane --field rational", 1},
  };
  for (const Case& c : cases) {
    int got = run_cli(c.args);
    if (got != c.expected) {
      detail = "exit " + std::to_string(got) + " != " + std::to_string(c.expected) + " for: " +
               c.args;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion(1, "I.1 circle intersection across the three fields, exact coordinates", 1.0,
            criterion1);
  criterion(2, "semi-Euclidean signature: parallel multiplicity 4 and exact pi sums", 10.0,
            criterion2);
  criterion(3, "I.29 exactness counterexample in the limited subplane", 1.0, criterion3);
  criterion(4, "impossible figures: I.7 uniqueness and I.27 no-meeting-point", 5.0, criterion4);
  criterion(5, "magnitude axioms on 1000 randomized triples per backend", 30.0, criterion5);
  criterion(6, "construction corpus with macro post-checks; I.6 fails EqualNotLess", 5.0,
            criterion6);
  criterion(7, "byte-deterministic suite JSON and CLI exit-code contract", 30.0, criterion7);
  if (failures == 0) std::printf("all acceptance criteria passed\n");
  return failures;
}
