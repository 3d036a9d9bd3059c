#pragma once

#include <json.hpp>

#include "euclid/props.hpp"

namespace euclid {

using Json = nlohmann::json;

// JSON forms of traces, reports, and suite results. All field values are
// exact strings; emission is byte-deterministic (sorted keys, stable array
// order), and reports round-trip through from-json.

Json trace_to_json(const Trace& t);
Trace trace_from_json(const Json& j);

Json report_to_json(const PropositionReport& r);
PropositionReport report_from_json(const Json& j);

Json suite_to_json(const SuiteResult& s);

std::string dump_json(const Json& j);  // canonical indentation + newline

// "rational-full", "nonarch-subplane", ... back to a model.
PlaneModel model_from_name(const std::string& name);

}  // namespace euclid
