#include "conatus/wish.hpp"

#include <utility>

#include "conatus/errors.hpp"

namespace conatus {

Wish make_wish(std::string id, Formula goal, ActionName on_stop, int check_period,
               std::optional<Formula> stop_condition, const EnumOptions& opts) {
  if (!is_valid_identifier(id)) throw ValidationError("invalid wish id '" + id + "'");
  if (!is_valid_identifier(on_stop)) {
    throw ValidationError("invalid action name '" + on_stop + "'");
  }
  if (check_period < 1) throw ValidationError("wish check period must be >= 1");
  Formula stop = stop_condition ? std::move(*stop_condition) : goal;
  if (!entails(goal, stop, opts)) {
    throw ValidationError("wish '" + id +
                          "': the goal must entail the stop condition (reaching the goal "
                          "must be one way to stop)");
  }
  return Wish{std::move(id), std::move(goal), std::move(stop), std::move(on_stop),
              check_period};
}

WaitResult simulate_wait(const Wish& w, const World& world, int max_steps) {
  if (max_steps <= 0) throw ValidationError("max_steps must be positive");
  WaitResult result;
  for (int t = 0; t < max_steps; t += w.check_period) {
    const Circumstance c = world.at(t);
    result.trace.events.push_back({t, EventKind::Tested, w.id, "", w.stop_condition, {}, {}});
    if (evaluate(w.stop_condition, c)) {
      result.trace.events.push_back(
          {t, EventKind::Fired, w.id, w.on_stop, w.stop_condition, {}, {}});
      result.trace.events.push_back({t, EventKind::ActionExecuted, w.id, w.on_stop, {}, {}, {}});
      result.stopped_at = t;
      return result;
    }
  }
  result.trace.truncated = true;
  return result;
}

std::string WishComparison::to_string(const std::string& left,
                                      const std::string& right) const {
  const auto word = [](Verdict v) {
    switch (v) {
      case Verdict::Stronger:
        return "left stronger";
      case Verdict::Weaker:
        return "right stronger";
      case Verdict::Equal:
        return "equal";
      case Verdict::Incomparable:
        return "incomparable";
    }
    return "";
  };
  std::string out = left + " vs " + right + "\n";
  out += "  frequency dimension: " + std::string(word(frequency)) + "\n";
  out += "  condition dimension: " + std::string(word(condition));
  if (condition_witness) out += " (witness: " + condition_witness->to_string() + ")";
  out += "\n";
  return out;
}

WishComparison compare_wishes(const Wish& w1, const Wish& w2, const EnumOptions& opts) {
  WishComparison out{Verdict::Equal, Verdict::Equal, std::nullopt};

  // Checking more often is the stronger wish.
  if (w1.check_period < w2.check_period) {
    out.frequency = Verdict::Stronger;
  } else if (w1.check_period > w2.check_period) {
    out.frequency = Verdict::Weaker;
  }

  // The harder stop condition persists longer: w1 is stronger when its stop
  // condition strictly entails w2's.
  EntailmentResult fwd = entails_witness(w1.stop_condition, w2.stop_condition, opts);
  EntailmentResult bwd = entails_witness(w2.stop_condition, w1.stop_condition, opts);
  if (fwd.holds && bwd.holds) {
    out.condition = Verdict::Equal;
  } else if (fwd.holds) {
    out.condition = Verdict::Stronger;
    out.condition_witness = std::move(bwd.counterexample);  // stops w2, not w1
  } else if (bwd.holds) {
    out.condition = Verdict::Weaker;
    out.condition_witness = std::move(fwd.counterexample);
  } else {
    out.condition = Verdict::Incomparable;
    out.condition_witness = std::move(fwd.counterexample);
  }
  return out;
}

}  // namespace conatus
