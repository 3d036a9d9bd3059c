#include "euclid/report_json.hpp"

namespace euclid {

namespace {

std::optional<FailReason> fail_reason_from_name(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(FailReason::Degenerate); ++i) {
    auto r = static_cast<FailReason>(i);
    if (name == fail_reason_name(r)) return r;
  }
  return std::nullopt;
}

std::optional<Verdict> verdict_from_name(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Verdict::NotApplicable); ++i) {
    auto v = static_cast<Verdict>(i);
    if (name == verdict_name(v)) return v;
  }
  return std::nullopt;
}

Json objects_to_json(const std::vector<SerializedObj>& objects) {
  Json arr = Json::array();
  for (const SerializedObj& o : objects) {
    Json fields = Json::object();
    for (const auto& [k, v] : o.fields) fields[k] = v;
    arr.push_back(Json{{"id", o.id}, {"kind", o.kind}, {"fields", fields}});
  }
  return arr;
}

std::vector<SerializedObj> objects_from_json(const Json& arr) {
  std::vector<SerializedObj> out;
  for (const Json& j : arr) {
    SerializedObj o;
    o.id = j.at("id").get<std::string>();
    o.kind = j.at("kind").get<std::string>();
    for (auto it = j.at("fields").begin(); it != j.at("fields").end(); ++it)
      o.fields.emplace_back(it.key(), it.value().get<std::string>());
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

Json trace_to_json(const Trace& t) {
  Json steps = Json::array();
  for (const TraceStep& s : t.steps) {
    Json outcome{{"kind", step_outcome_kind_name(s.outcome.kind)}, {"detail", s.outcome.detail}};
    if (s.outcome.reason) outcome["reason"] = fail_reason_name(*s.outcome.reason);
    steps.push_back(Json{{"stmt", s.text}, {"outcome", outcome}});
  }
  Json j{{"script", t.script}, {"model", t.model},     {"seed", t.seed},
         {"steps", steps},     {"success", t.success}, {"objects", objects_to_json(t.objects)}};
  if (!t.success) {
    j["failed_at"] = t.failed_at;
    if (t.failure) j["failure"] = fail_reason_name(*t.failure);
  }
  return j;
}

Trace trace_from_json(const Json& j) {
  Trace t;
  t.script = j.at("script").get<std::string>();
  t.model = j.at("model").get<std::string>();
  t.seed = j.at("seed").get<uint64_t>();
  t.success = j.at("success").get<bool>();
  if (j.contains("failed_at")) t.failed_at = j.at("failed_at").get<int>();
  if (j.contains("failure"))
    t.failure = fail_reason_from_name(j.at("failure").get<std::string>());
  for (const Json& js : j.at("steps")) {
    TraceStep step;
    step.text = js.at("stmt").get<std::string>();
    const Json& o = js.at("outcome");
    std::string kind = o.at("kind").get<std::string>();
    if (kind == "bound") step.outcome.kind = StepOutcome::Kind::Bound;
    else if (kind == "assert-held") step.outcome.kind = StepOutcome::Kind::AssertHeld;
    else if (kind == "assert-failed") step.outcome.kind = StepOutcome::Kind::AssertFailed;
    else step.outcome.kind = StepOutcome::Kind::ConstructionFailed;
    step.outcome.detail = o.at("detail").get<std::string>();
    if (o.contains("reason"))
      step.outcome.reason = fail_reason_from_name(o.at("reason").get<std::string>());
    t.steps.push_back(std::move(step));
  }
  t.objects = objects_from_json(j.at("objects"));
  return t;
}

Json report_to_json(const PropositionReport& r) {
  Json witnesses = Json::array();
  for (const Witness& w : r.witnesses) witnesses.push_back(Json{{"name", w.name}, {"value", w.value}});
  Json j{{"id", r.id},
         {"model", r.model},
         {"seed", r.seed},
         {"verdict", verdict_name(r.verdict)},
         {"witnesses", witnesses},
         {"objects", objects_to_json(r.objects)}};
  if (r.reason) j["reason"] = fail_reason_name(*r.reason);
  if (r.trace) j["trace"] = trace_to_json(*r.trace);
  return j;
}

PropositionReport report_from_json(const Json& j) {
  PropositionReport r;
  r.id = j.at("id").get<std::string>();
  r.model = j.at("model").get<std::string>();
  r.seed = j.at("seed").get<uint64_t>();
  auto v = verdict_from_name(j.at("verdict").get<std::string>());
  if (!v) raise(ErrorCode::SyntaxError, "unknown verdict in report");
  r.verdict = *v;
  if (j.contains("reason")) r.reason = fail_reason_from_name(j.at("reason").get<std::string>());
  for (const Json& w : j.at("witnesses"))
    r.witnesses.push_back({w.at("name").get<std::string>(), w.at("value").get<std::string>()});
  r.objects = objects_from_json(j.at("objects"));
  if (j.contains("trace")) r.trace = trace_from_json(j.at("trace"));
  return r;
}

Json suite_to_json(const SuiteResult& s) {
  Json results = Json::array();
  for (const SuiteEntry& e : s.entries) {
    Json expected{{"verdict", verdict_name(e.expected.verdict)}};
    if (e.expected.reason) expected["reason"] = fail_reason_name(*e.expected.reason);
    results.push_back(Json{{"id", e.report.id},
                           {"expected", expected},
                           {"matched", e.matched},
                           {"report", report_to_json(e.report)}});
  }
  return Json{{"model", Json{{"field", field_tag_name(s.model.tag)}, {"subplane", s.model.limited}}},
              {"seed", s.seed},
              {"all_matched", s.all_matched},
              {"results", results}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

PlaneModel model_from_name(const std::string& name) {
  size_t dash = name.rfind('-');
  if (dash == std::string::npos) raise(ErrorCode::SyntaxError, "bad model name '" + name + "'");
  auto tag = field_tag_from_name(name.substr(0, dash));
  if (!tag) raise(ErrorCode::SyntaxError, "bad field name in '" + name + "'");
  std::string rest = name.substr(dash + 1);
  if (rest != "full" && rest != "subplane")
    raise(ErrorCode::SyntaxError, "bad plane kind in '" + name + "'");
  return make_model(*tag, rest == "subplane");
}

}  // namespace euclid
