#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "euclid/geometry.hpp"
#include "euclid/script.hpp"

namespace euclid {

// Step failure reasons surfaced in traces. EqualNotLess is the I.6 analysis:
// the cut-off of an equal (not lesser) segment cannot be carried out.
enum class FailReason {
  NoIntersection,
  NoSqrtInField,
  NotInModel,
  EqualNotLess,
  PrecisionExhausted,
  UnsupportedScalar,
  DivisionByZero,
  Degenerate,
};

const char* fail_reason_name(FailReason r);
FailReason fail_reason_from(ErrorCode code);

struct StepOutcome {
  enum class Kind { Bound, AssertHeld, AssertFailed, ConstructionFailed };
  Kind kind = Kind::Bound;
  std::string detail;  // bound object / held values / failure message
  std::optional<FailReason> reason;
};

const char* step_outcome_kind_name(StepOutcome::Kind k);

struct TraceStep {
  std::string text;  // canonical statement text
  StepOutcome outcome;
};

// A bound object flattened to exact strings; enough to rebuild the geometry
// from the report alone (the strings parse back via parse_exact).
struct SerializedObj {
  std::string id;
  std::string kind;  // point | line | ray | segment | circle
  std::vector<std::pair<std::string, std::string>> fields;
};

// Execution record: every step before a failure succeeded; a failing step is
// the last one recorded.
struct Trace {
  std::string script;
  std::string model;
  uint64_t seed = 0;
  std::vector<TraceStep> steps;
  std::vector<SerializedObj> objects;  // successful bindings, in order
  bool success = true;
  int failed_at = -1;
  std::optional<FailReason> failure;
};

template <class S>
struct LineObj {
  Line<S> line;
  Point<S> p, q;  // defining points, orientation p -> q
};

template <class S>
struct RayObj {
  Point<S> origin, through;
};

template <class S>
using BoundObj = std::variant<Point<S>, LineObj<S>, RayObj<S>, Segment<S>, Circle<S>>;

template <class S>
struct Execution {
  Trace trace;
  std::map<std::string, BoundObj<S>> bindings;
  PlaneModel model;
  bool ok() const { return trace.success; }
};

// Run a script against a model. Deterministic in (script, model, seed): free
// points come from a seeded small-rational generator with degeneracy
// rejection. The model's tag must match S.
template <class S>
Execution<S> execute_script(const Script& script, const PlaneModel& model, uint64_t seed);

}  // namespace euclid
