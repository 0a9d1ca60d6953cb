#pragma once

#include <optional>
#include <string>

#include "conatus/dynamics.hpp"

namespace conatus {

/// A goal one can do nothing about except check for it: wishing is waiting
/// with a repeated check loop and a stop action.
struct Wish {
  std::string id;
  Formula goal;
  Formula stop_condition;  // defaults to the goal; may be weaker, e.g. S | G
  ActionName on_stop;
  int check_period = 1;  // steps between checks
};

/// Validates identifiers, period >= 1, and that the goal is one way to stop
/// (goal must entail the stop condition).
Wish make_wish(std::string id, Formula goal, ActionName on_stop, int check_period,
               std::optional<Formula> stop_condition = std::nullopt,
               const EnumOptions& opts = {});

struct WaitResult {
  Trace trace;
  std::optional<int> stopped_at;  // first check step whose circumstance stops the wait
};

/// Checks the stop condition at steps 0, p, 2p, ... below max_steps; on the
/// first check that succeeds, the stop action executes and waiting ends.
/// Steps between checks carry no truth claims and emit nothing. If no check
/// succeeds before max_steps the trace is flagged truncated.
WaitResult simulate_wait(const Wish& w, const World& world, int max_steps);

/// Wish strength has two dimensions which are never collapsed into one
/// number: how often one checks, and how hard the stop condition is to
/// reach. On the condition dimension the wish with the less easily
/// satisfied stop condition is the stronger one: it keeps waiting where the
/// weaker wish has already given up. Note the orientation is the reverse of
/// desire intensity, where the easier condition makes the stronger desire.
struct WishComparison {
  Verdict frequency;  // Stronger = checks more often (never Incomparable)
  Verdict condition;
  /// For a strict condition verdict: a circumstance stopping the weaker
  /// wish while the stronger keeps checking.
  std::optional<Circumstance> condition_witness;

  std::string to_string(const std::string& left, const std::string& right) const;
};

WishComparison compare_wishes(const Wish& w1, const Wish& w2, const EnumOptions& opts = {});

}  // namespace conatus
