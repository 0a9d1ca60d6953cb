#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conatus/intensity.hpp"
#include "conatus/tendency.hpp"

namespace conatus {

/// One test of a "whenever trigger, outcome" hypothesis: the trigger facts
/// observed at some step, and whether the outcome occurred.
struct Observation {
  int time = 0;
  Circumstance trigger_facts;
  bool outcome_occurred = false;
  ActionName outcome_name;
};

/// A "whenever S then A" hypothesis. Only trigger-true observations bear on
/// it: a confirming one raises support, a disconfirming one refutes, and
/// trigger-false observations are inert either way. With no observations at
/// all the hypothesis stands unrefuted with support 0 - an untested claim
/// is not thereby false.
struct Regularity {
  std::string id;
  Formula trigger;
  ActionName outcome;
  long support = 0;
  bool refuted = false;
  std::optional<int> refuted_at;  // time of the earliest counterexample

  /// "unrefuted, support N" / "refuted at t=T, support N"
  std::string report() const;
};

Regularity make_regularity(std::string id, Formula trigger, ActionName outcome);

/// Folds the observations (in time order) into the regularity. Observations
/// whose outcome name differs are ignored. Refutation is monotone and the
/// recorded counterexample is the time-minimal one.
Regularity test_regularity(Regularity r, std::vector<Observation> obs);

/// Forces are tendencies; their intensities compare on the trigger
/// formulas exactly like any other pair of tendencies.
IntensityRelation compare_forces(const Regularity& r1, const Regularity& r2,
                                 const EnumOptions& opts = {});

/// True iff no refuting observation falls within [from, to]. An interval
/// holding no observations is vacuously true: untested points carry no
/// truth value.
bool holds_during(const Regularity& r, const std::vector<Observation>& obs, int from,
                  int to);

/// Log line: "t=<step> trigger{<atom>=<0|1>,...} outcome=<name>:<0|1>"
std::string format_observation(const Observation& o);
Observation parse_observation(const std::string& line);
std::vector<Observation> parse_observation_log(const std::string& text);

}  // namespace conatus
