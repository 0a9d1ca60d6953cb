#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conatus/intensity.hpp"
#include "conatus/tendency.hpp"

namespace conatus {

/// A level-indexed staircase of strictly strengthening conditions. The
/// condition at internal level w is the base conjoined with every pickiness
/// step whose threshold has been reached, so a lower level means a weaker
/// condition and therefore a stronger desire.
class ConditionFamily {
 public:
  /// steps: (threshold, pickiness formula) pairs with strictly ascending,
  /// non-negative thresholds. Construction rejects a step that is already
  /// entailed by the preceding conjunction, since it would not strengthen
  /// the condition.
  ConditionFamily(std::string id, ActionName quality, Formula base,
                  std::vector<std::pair<double, Formula>> steps,
                  const EnumOptions& opts = {});

  const std::string& id() const { return id_; }
  const ActionName& quality() const { return quality_; }
  const Formula& base() const { return base_; }
  const std::vector<std::pair<double, Formula>>& steps() const { return steps_; }

  /// base & P1 & ... & Pk for every threshold wk <= level, left-folded.
  Formula condition_at(double level) const;

 private:
  std::string id_;
  ActionName quality_;
  Formula base_;
  std::vector<std::pair<double, Formula>> steps_;
};

/// Tendency in force at the given internal level.
ActionTendency instantiate(const ConditionFamily& f, double level);

enum class EventKind {
  Tested,
  Fired,
  ActionExecuted,
  LevelChanged,
  DesireActive,
  Escaped,
  Exposed,
};

const char* to_text(EventKind k);
std::optional<EventKind> event_kind_from_text(const std::string& text);

/// Stable text form for level values: integral values print without a
/// decimal point ("2"), everything else as %g.
std::string format_level(double v);

/// One time-stamped trace record. Within a step the simulator emits events
/// in the fixed order tested < fired < action_executed < level_changed.
struct Event {
  int time = 0;
  EventKind kind = EventKind::Tested;
  std::string subject;   // tendency or family id
  ActionName action;     // fired / action_executed / desire_active
  std::optional<Formula> condition;  // condition in force: tested / fired / desire_active
  std::optional<double> level_delta; // level_changed
  std::optional<double> level_after; // level_changed

  /// "t=<step> <kind> <subject> [action=..] [cond=..] [delta=.. level=..]"
  std::string to_line() const;
};

struct AgentState {
  std::vector<ConditionFamily> families;
  std::vector<ActionTendency> tendencies;
  std::map<std::string, double> levels;  // family id -> current level
};

/// action -> (family id -> level delta applied when that action executes)
using Effects = std::map<ActionName, std::map<std::string, double>>;

struct Trace {
  std::vector<Event> events;
  AgentState final_state;
  bool truncated = false;

  std::size_t count(EventKind k) const;
  std::string to_text() const;  // one event per line
};

/// Advances one discrete step at time t: every family and tendency is tested
/// in id order against the frozen circumstance; firing entities execute
/// their action and the action's level deltas apply immediately, so entities
/// tested later in the same step see updated levels.
std::pair<AgentState, std::vector<Event>> step(AgentState state, const Circumstance& c,
                                               const Effects& effects, int t = 0);

/// The satiation loop: repeatedly test the family's instantiated condition
/// under a fixed circumstance, acting and raising the level by delta each
/// time it fires, until it no longer fires or max_steps is reached (the
/// trace is then flagged truncated).
Trace run_satiation(const ConditionFamily& f, const Circumstance& c, double w0,
                    double delta, int max_steps);

/// A pleasure: doing the very thing one desires to do, at the step it is
/// being done.
struct PleasureEvent {
  int time = 0;
  std::string source;           // tendency/family id of the executed action
  Formula intensity_condition;  // condition in force at that step; pleasure
                                // events compare through the intensity order
};

/// One event per action_executed that coincides, at the same step, with an
/// active desire (fired or desire_active) of the same quality. No desire,
/// no pleasure.
std::vector<PleasureEvent> classify_pleasure(const Trace& tr);

/// Ids of desires (families instantiated at their current level, plus plain
/// tendencies) whose action is not executing under c because the condition
/// is false: the desire persists unexecuted.
std::vector<std::string> classify_pain(const AgentState& state, const Circumstance& c);

struct SublimeReport {
  int cycles = 0;
  ActionName quality;  // the desire fired in each cycle
};

/// Detects the macro-level pleasure of repeated exposure -> fired desire ->
/// escape cycles. Fewer than min_cycles consecutive full cycles (or an
/// exposure that never reaches escape, which is plain fear) yields nothing.
std::optional<SublimeReport> detect_sublime(const Trace& tr, int min_cycles = 2);

}  // namespace conatus
