#pragma once

#include <optional>
#include <string>
#include <vector>

#include "euclid/execute.hpp"
#include "euclid/magnitude.hpp"

namespace euclid {

// Machine-checked verdicts for the encoded propositions and counterexamples.
// Holds/Fails speak about the proposition in the given model;
// ImpossibleFigure marks a reductio figure whose object provably cannot
// exist; ConstructionImpossible carries the failing step's reason.
enum class Verdict { Holds, Fails, ImpossibleFigure, ConstructionImpossible, NotApplicable };

const char* verdict_name(Verdict v);

struct Witness {
  std::string name, value;
};

struct PropositionReport {
  std::string id;
  std::string model;
  uint64_t seed = 0;
  Verdict verdict = Verdict::NotApplicable;
  std::optional<FailReason> reason;  // ConstructionImpossible only
  std::vector<Witness> witnesses;
  std::vector<SerializedObj> objects;  // renderable geometry, exact strings
  std::optional<Trace> trace;
};

// --- dedicated checkers ---

// I.7: on segment AB no second point on the same side has the same pair of
// distances (a_sq, b_sq) to A and B. Solves the two-circle system and counts
// same-side solutions.
template <class S>
PropositionReport check_I7_uniqueness(const Point<S>& a, const Point<S>& b, const S& a_sq,
                                      const S& b_sq, const PlaneModel& model);

// I.27: equal alternate angles on the transversal x = 0 make the lines
// slope-equal exactly, so the meeting point G of the reductio proof cannot
// exist. The second line arises by exact point reflection of the first
// through the midpoint of the transversal segment.
template <class S>
PropositionReport check_I27(const PlaneModel& model, const S& slope);

// I.29: across model-parallel lines, are alternate angles equal? Holds for
// honest parallels; in the limited subplane the y = eps x configuration is
// model-parallel with unequal alternate angles; in the full plane those
// lines meet and the premise lapses (NotApplicable).
template <class S>
PropositionReport check_I29(const PlaneModel& model, const Line<S>& l1, const Line<S>& l2,
                            const Line<S>& t);

// Parallel uniqueness through a point: count how many of the given slopes
// miss `l` in the model.
template <class S>
PropositionReport parallels_through_point(const PlaneModel& model, const Point<S>& p,
                                          const Line<S>& l, const std::vector<S>& slopes);

// Postulate 5: if the interior angles on one side of the transversal sum to
// less than two right angles, the lines meet in the model on that side.
template <class S>
PropositionReport postulate5_check(const PlaneModel& model, const Line<S>& l1, const Line<S>& l2,
                                   const Line<S>& t);

// I.32 on a seeded triangle: the exterior angle equals the sum of the remote
// interior angles, and the interior angles compose to two right angles.
template <class S>
PropositionReport check_I32(const PlaneModel& model, const Triangle<S>& t);

// --- the bundled proposition set ---

std::vector<std::string> supported_propositions(const PlaneModel& model);

// Run a bundled proposition (script-backed or checker-backed) with the
// model's canonical configuration. UnsupportedId for unknown ids.
PropositionReport run_proposition(const std::string& id, const PlaneModel& model, uint64_t seed);

// Expected verdicts per model: the pass condition of the suite. For
// ConstructionImpossible entries the reason must match too.
struct Expectation {
  Verdict verdict;
  std::optional<FailReason> reason;
};
Expectation expected_verdict(const std::string& id, const PlaneModel& model);

struct SuiteEntry {
  PropositionReport report;
  Expectation expected;
  bool matched = false;
};

struct SuiteResult {
  PlaneModel model;
  uint64_t seed = 0;
  std::vector<SuiteEntry> entries;
  bool all_matched = false;
};

// Runs every supported proposition concurrently (each check is pure);
// results are collected in id order, so output is deterministic.
SuiteResult run_suite(const PlaneModel& model, uint64_t seed);

}  // namespace euclid
