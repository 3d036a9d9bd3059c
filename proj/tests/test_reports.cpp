#include <doctest.h>

#include <fstream>
#include <sstream>

#include "euclid/corpus.hpp"
#include "euclid/exact_parse.hpp"
#include "euclid/report_json.hpp"
#include "euclid/svg.hpp"
#include "testutil.hpp"

using namespace euclid;

TEST_CASE("exact strings round-trip through the parser") {
  testutil::Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    Rational r = rng.rational(40, 12);
    CHECK(parse_exact<Rational>(rational_str(r)) == r);
  }
  TowerReal t = TowerReal(Rational(1, 2)) + TowerReal(Rational(3, 2)) * TowerReal::sqrt_of(TowerReal(2));
  CHECK(parse_exact<TowerReal>(t.str()) == t);
  TowerReal nested = TowerReal::sqrt_of(TowerReal(1) + TowerReal::sqrt_of(TowerReal(2)));
  CHECK(parse_exact<TowerReal>(nested.str()) == nested);

  SeriesValue s = SeriesValue(Rational(3)) + SeriesValue::monomial(TowerReal(2), Rational(1)) +
                  SeriesValue::monomial(TowerReal::sqrt_of(TowerReal(2)), Rational(2));
  CHECK(parse_exact<SeriesValue>(s.str()).identical_to(s));

  SeriesValue inv = SeriesValue(Rational(1)) / SeriesValue::eps();
  CHECK(parse_exact<SeriesValue>(inv.str()).identical_to(inv));
  SeriesValue half = SeriesValue::sqrt_of(SeriesValue::eps());
  CHECK(parse_exact<SeriesValue>(half.str()).identical_to(half));
  SeriesValue trunc = SeriesValue(Rational(1)) / (SeriesValue(Rational(1)) - SeriesValue::eps());
  CHECK(parse_exact<SeriesValue>(trunc.str()).identical_to(trunc));

  CHECK_THROWS_AS(parse_exact<Rational>("1 +"), Error);
  CHECK_THROWS_AS(parse_exact<Rational>("eps"), Error);  // eps needs nonarch
}

TEST_CASE("trace JSON round-trips byte-identically") {
  Script s = parse_script(corpus_find("I.1")->text, "I.1");
  for (auto [tag, name] : {std::pair{FieldTag::Constructible, "c"}, {FieldTag::Rat, "r"}}) {
    Trace t = tag == FieldTag::Rat
                  ? execute_script<Rational>(s, make_model(tag, false), 1).trace
                  : execute_script<TowerReal>(s, make_model(tag, false), 1).trace;
    std::string bytes = dump_json(trace_to_json(t));
    Trace back = trace_from_json(Json::parse(bytes));
    CHECK(dump_json(trace_to_json(back)) == bytes);
  }
}

TEST_CASE("proposition report JSON round-trips") {
  for (const char* id : {"I.29", "I.7", "Post.5", "I.1"}) {
    PropositionReport r = run_proposition(id, make_model(FieldTag::NonArch, true), 2);
    std::string bytes = dump_json(report_to_json(r));
    PropositionReport back = report_from_json(Json::parse(bytes));
    CHECK(dump_json(report_to_json(back)) == bytes);
  }
}

TEST_CASE("suite JSON is byte-deterministic") {
  for (const PlaneModel& m :
       {make_model(FieldTag::Rat, false), make_model(FieldTag::NonArch, true)}) {
    std::string a = dump_json(suite_to_json(run_suite(m, 0)));
    std::string b = dump_json(suite_to_json(run_suite(m, 0)));
    CHECK(a == b);
  }
}

TEST_CASE("model names round-trip") {
  for (const PlaneModel& m : {make_model(FieldTag::Rat, false), make_model(FieldTag::NonArch, true),
                              make_model(FieldTag::Constructible, false)}) {
    PlaneModel back = model_from_name(m.name());
    CHECK(back.tag == m.tag);
    CHECK(back.limited == m.limited);
  }
  CHECK_THROWS_AS(model_from_name("fancy-plane"), Error);
}

TEST_CASE("SVG rendering is deterministic and projects standard parts") {
  Script s = parse_script(corpus_find("Fig.9")->text, "Fig.9");
  auto ex = execute_script<SeriesValue>(s, make_model(FieldTag::NonArch, true), 1);
  REQUIRE(ex.ok());
  std::string svg1 = svg_from_objects(ex.trace.objects, FieldTag::NonArch);
  std::string svg2 = svg_from_objects(ex.trace.objects, FieldTag::NonArch);
  CHECK(svg1 == svg2);
  CHECK(svg1.find("slope eps") != std::string::npos);  // annotated infinitesimal slope

  // a report with an infinite meeting point renders a border arrow
  PropositionReport r = run_proposition("I.29", make_model(FieldTag::NonArch, false), 0);
  std::string svg3 = svg_from_objects(r.objects, FieldTag::NonArch);
  CHECK(svg3.find("x = eps^-1") != std::string::npos);

  std::vector<SerializedObj> empty;
  CHECK_THROWS_AS(svg_from_objects(empty, FieldTag::Rat), Error);
}

TEST_CASE("shipped script files match the embedded corpus") {
  for (const CorpusEntry& e : corpus()) {
    std::ifstream in(std::string(EUCLID_SOURCE_DIR) + "/scripts/" + e.filename);
    REQUIRE_MESSAGE(in.good(), "missing scripts/", e.filename);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK_MESSAGE(buf.str() == e.text, "scripts/", e.filename, " diverged from the embedded text");
  }
}
