#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "euclid/corpus.hpp"
#include "euclid/props.hpp"
#include "euclid/report_json.hpp"
#include "euclid/svg.hpp"

using namespace euclid;

namespace {

struct CommonOpts {
  std::string field = "constructible";
  bool subplane = false;
  unsigned truncation = 16;
  uint64_t seed = 0;
  std::string json_path, svg_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--field", o.field, "field backend: rational | constructible | nonarch")
      ->check(CLI::IsMember({"rational", "constructible", "nonarch"}));
  cmd->add_flag("--subplane", o.subplane,
                "interpret geometry in the limited subplane L x L (requires --field nonarch)");
  cmd->add_option("--truncation", o.truncation, "series truncation window, >= 4 (default 16)");
  cmd->add_option("--seed", o.seed, "seed for random points (default 0)");
  cmd->add_option("--json", o.json_path, "write the JSON report to this path");
  cmd->add_option("--svg", o.svg_path, "write an SVG diagram to this path");
}

PlaneModel model_from_opts(const CommonOpts& o) {
  auto tag = field_tag_from_name(o.field);
  if (!tag) raise(ErrorCode::SyntaxError, "unknown field '" + o.field + "'");
  if (o.subplane && *tag != FieldTag::NonArch)
    raise(ErrorCode::SyntaxError, "--subplane requires --field nonarch");
  if (o.truncation < 4) raise(ErrorCode::SyntaxError, "--truncation must be at least 4");
  set_series_window(o.truncation);
  return make_model(*tag, o.subplane);
}

bool write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
  return static_cast<bool>(out);
}

Trace run_for_model(const Script& script, const PlaneModel& model, uint64_t seed) {
  switch (model.tag) {
    case FieldTag::Rat: return execute_script<Rational>(script, model, seed).trace;
    case FieldTag::Constructible: return execute_script<TowerReal>(script, model, seed).trace;
    case FieldTag::NonArch: return execute_script<SeriesValue>(script, model, seed).trace;
  }
  raise(ErrorCode::InternalError, "bad field tag");
}

int cmd_run(const std::string& script_path, const CommonOpts& o) {
  PlaneModel model = model_from_opts(o);
  std::ifstream in(script_path);
  if (!in) {
    std::cerr << "error: cannot read " << script_path << "\n";
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  Script script;
  try {
    script = parse_script(buf.str(), script_path);
  } catch (const ParseError& e) {
    std::cerr << "parse error in " << script_path << ": " << e.what() << "\n";
    return 1;
  }

  Trace trace = run_for_model(script, model, o.seed);
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    const char* mark = s.outcome.kind == StepOutcome::Kind::AssertFailed ||
                               s.outcome.kind == StepOutcome::Kind::ConstructionFailed
                           ? "FAIL"
                           : "ok";
    std::cout << "[" << mark << "] " << s.text << "\n";
    if (!s.outcome.detail.empty()) std::cout << "       " << s.outcome.detail << "\n";
  }
  if (trace.success) {
    std::cout << "construction succeeded on " << model.name() << "\n";
  } else {
    std::cout << "construction failed at step " << trace.failed_at + 1 << " on " << model.name();
    if (trace.failure) std::cout << " (" << fail_reason_name(*trace.failure) << ")";
    std::cout << "\n";
  }

  if (!o.json_path.empty() && !write_file(o.json_path, dump_json(trace_to_json(trace)))) {
    std::cerr << "error: cannot write " << o.json_path << "\n";
    return 1;
  }
  if (!o.svg_path.empty()) {
    try {
      if (!write_file(o.svg_path, svg_from_objects(trace.objects, model.tag))) {
        std::cerr << "error: cannot write " << o.svg_path << "\n";
        return 1;
      }
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return trace.success ? 0 : 2;
}

int cmd_suite(const CommonOpts& o) {
  PlaneModel model = model_from_opts(o);
  SuiteResult suite = run_suite(model, o.seed);
  for (const SuiteEntry& e : suite.entries) {
    std::cout << (e.matched ? "  [expected] " : "  [MISMATCH] ") << e.report.id << ": "
              << verdict_name(e.report.verdict);
    if (e.report.reason) std::cout << " (" << fail_reason_name(*e.report.reason) << ")";
    if (!e.matched) std::cout << "  -- expected " << verdict_name(e.expected.verdict);
    std::cout << "\n";
  }
  std::cout << (suite.all_matched ? "suite: every verdict matched its expectation on "
                                  : "suite: verdict mismatches on ")
            << model.name() << "\n";
  if (!o.json_path.empty() && !write_file(o.json_path, dump_json(suite_to_json(suite)))) {
    std::cerr << "error: cannot write " << o.json_path << "\n";
    return 1;
  }
  if (!o.svg_path.empty()) {
    // render the first entry that carries geometry
    for (const SuiteEntry& e : suite.entries) {
      const auto& objs = e.report.trace ? e.report.trace->objects : e.report.objects;
      if (objs.empty()) continue;
      if (!write_file(o.svg_path, svg_from_objects(objs, model.tag))) {
        std::cerr << "error: cannot write " << o.svg_path << "\n";
        return 1;
      }
      break;
    }
  }
  return suite.all_matched ? 0 : 2;
}

int cmd_render(const std::string& report_path, const CommonOpts& o) {
  if (o.svg_path.empty()) {
    std::cerr << "error: render needs --svg <output path>\n";
    return 1;
  }
  std::ifstream in(report_path);
  if (!in) {
    std::cerr << "error: cannot read " << report_path << "\n";
    return 1;
  }
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    std::cerr << "error: bad JSON in " << report_path << ": " << e.what() << "\n";
    return 1;
  }
  try {
    std::vector<SerializedObj> objects;
    std::string model_name;
    if (j.contains("steps")) {  // a trace
      Trace t = trace_from_json(j);
      objects = t.objects;
      model_name = t.model;
    } else if (j.contains("verdict")) {  // a proposition report
      PropositionReport r = report_from_json(j);
      objects = r.trace && !r.trace->objects.empty() ? r.trace->objects : r.objects;
      model_name = r.model;
    } else {
      std::cerr << "error: " << report_path << " is neither a trace nor a report\n";
      return 1;
    }
    PlaneModel model = model_from_name(model_name);
    if (!write_file(o.svg_path, svg_from_objects(objects, model.tag))) {
      std::cerr << "error: cannot write " << o.svg_path << "\n";
      return 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << "wrote " << o.svg_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"euclidwb: exact straightedge-and-compass workbench over rational, constructible, "
               "and non-Archimedean planes"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string script_path, report_path;

  CLI::App* run = app.add_subcommand("run", "execute a .euc construction script");
  run->add_option("script", script_path, "path to the script")->required();
  add_common(run, opts);

  CLI::App* suite = app.add_subcommand("suite", "run the bundled proposition suite");
  add_common(suite, opts);

  CLI::App* render = app.add_subcommand("render", "draw an SVG from a JSON trace or report");
  render->add_option("report", report_path, "path to the JSON file")->required();
  render->add_option("--svg", opts.svg_path, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) return cmd_run(script_path, opts);
    if (suite->parsed()) return cmd_suite(opts);
    return cmd_render(report_path, opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
