#include "conatus/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "conatus/errors.hpp"

namespace conatus {

// Levels are doubles but traces must be byte-stable, so print integral
// values without a decimal point and everything else with %g.
std::string format_level(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

ConditionFamily::ConditionFamily(std::string id, ActionName quality, Formula base,
                                 std::vector<std::pair<double, Formula>> steps,
                                 const EnumOptions& opts)
    : id_(std::move(id)), quality_(std::move(quality)), base_(std::move(base)),
      steps_(std::move(steps)) {
  if (!is_valid_identifier(id_)) throw ValidationError("invalid family id '" + id_ + "'");
  if (!is_valid_identifier(quality_)) {
    throw ValidationError("invalid action name '" + quality_ + "'");
  }
  double prev = -1.0;
  Formula accumulated = base_;
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const auto& [threshold, pickiness] = steps_[k];
    if (threshold < 0.0) {
      throw ValidationError("family '" + id_ + "': threshold must be non-negative");
    }
    if (threshold <= prev) {
      throw ValidationError("family '" + id_ + "': thresholds must be strictly ascending");
    }
    prev = threshold;
    if (entails(accumulated, pickiness, opts)) {
      throw ValidationError("family '" + id_ + "': pickiness step " + std::to_string(k + 1) +
                            " ('" + pickiness.to_string() +
                            "') is already entailed and would not strengthen the condition");
    }
    accumulated = Formula::conj(accumulated, pickiness);
  }
}

Formula ConditionFamily::condition_at(double level) const {
  Formula out = base_;
  for (const auto& [threshold, pickiness] : steps_) {
    if (threshold <= level) out = Formula::conj(out, pickiness);
  }
  return out;
}

ActionTendency instantiate(const ConditionFamily& f, double level) {
  // Satisfiability was settled at family construction; no need to re-check.
  return ActionTendency{f.id(), f.quality(), f.condition_at(level), TendencyKind::Emotion,
                        false};
}

const char* to_text(EventKind k) {
  switch (k) {
    case EventKind::Tested:
      return "tested";
    case EventKind::Fired:
      return "fired";
    case EventKind::ActionExecuted:
      return "action_executed";
    case EventKind::LevelChanged:
      return "level_changed";
    case EventKind::DesireActive:
      return "desire_active";
    case EventKind::Escaped:
      return "escaped";
    case EventKind::Exposed:
      return "exposed";
  }
  return "unknown";
}

std::optional<EventKind> event_kind_from_text(const std::string& text) {
  for (EventKind k : {EventKind::Tested, EventKind::Fired, EventKind::ActionExecuted,
                      EventKind::LevelChanged, EventKind::DesireActive, EventKind::Escaped,
                      EventKind::Exposed}) {
    if (text == to_text(k)) return k;
  }
  return std::nullopt;
}

std::string Event::to_line() const {
  std::string out = "t=" + std::to_string(time) + " " + to_text(kind) + " " + subject;
  if (!action.empty()) out += " action=" + action;
  if (condition) out += " cond=" + condition->to_string();
  if (level_delta) out += " delta=" + format_level(*level_delta);
  if (level_after) out += " level=" + format_level(*level_after);
  return out;
}

std::size_t Trace::count(EventKind k) const {
  return static_cast<std::size_t>(
      std::count_if(events.begin(), events.end(),
                    [k](const Event& e) { return e.kind == k; }));
}

std::string Trace::to_text() const {
  std::string out;
  for (const Event& e : events) {
    out += e.to_line();
    out += '\n';
  }
  return out;
}

std::pair<AgentState, std::vector<Event>> step(AgentState state, const Circumstance& c,
                                               const Effects& effects, int t) {
  std::vector<Event> events;

  // Merge families and tendencies into one deterministic id-ordered pass.
  struct Entity {
    const ConditionFamily* family = nullptr;
    const ActionTendency* tendency = nullptr;
    const std::string& id() const { return family ? family->id() : tendency->id; }
  };
  std::vector<Entity> entities;
  for (const auto& f : state.families) entities.push_back({&f, nullptr});
  for (const auto& td : state.tendencies) entities.push_back({nullptr, &td});
  std::sort(entities.begin(), entities.end(),
            [](const Entity& a, const Entity& b) { return a.id() < b.id(); });

  for (const Entity& entity : entities) {
    Formula condition;
    ActionName action;
    if (entity.family) {
      condition = entity.family->condition_at(state.levels[entity.family->id()]);
      action = entity.family->quality();
    } else {
      condition = entity.tendency->condition;
      action = entity.tendency->quality;
    }
    events.push_back({t, EventKind::Tested, entity.id(), "", condition, {}, {}});
    if (!evaluate(condition, c)) continue;
    events.push_back({t, EventKind::Fired, entity.id(), action, condition, {}, {}});
    events.push_back({t, EventKind::ActionExecuted, entity.id(), action, {}, {}, {}});
    const auto deltas = effects.find(action);
    if (deltas == effects.end()) continue;
    for (const auto& [family_id, delta] : deltas->second) {
      state.levels[family_id] += delta;
      events.push_back({t, EventKind::LevelChanged, family_id, "", {}, delta,
                        state.levels[family_id]});
    }
  }
  return {std::move(state), std::move(events)};
}

Trace run_satiation(const ConditionFamily& f, const Circumstance& c, double w0,
                    double delta, int max_steps) {
  if (delta <= 0.0) throw ValidationError("satiation delta must be positive");
  if (max_steps <= 0) throw ValidationError("max_steps must be positive");

  Trace trace;
  AgentState state;
  state.families.push_back(f);
  state.levels[f.id()] = w0;
  Effects effects;
  effects[f.quality()][f.id()] = delta;

  for (int t = 0; t < max_steps; ++t) {
    auto [next, events] = step(std::move(state), c, effects, t);
    state = std::move(next);
    const bool acted = std::any_of(events.begin(), events.end(), [](const Event& e) {
      return e.kind == EventKind::ActionExecuted;
    });
    trace.events.insert(trace.events.end(), events.begin(), events.end());
    if (!acted) {
      trace.final_state = std::move(state);
      return trace;  // condition too strong to be satisfied; intensity is zero
    }
  }
  trace.truncated = true;  // still firing when the step budget ran out
  trace.final_state = std::move(state);
  return trace;
}

std::vector<PleasureEvent> classify_pleasure(const Trace& tr) {
  std::vector<PleasureEvent> out;
  for (std::size_t i = 0; i < tr.events.size(); ++i) {
    const Event& e = tr.events[i];
    if (e.kind != EventKind::ActionExecuted) continue;
    // An active desire of the same quality at the same step.
    for (const Event& d : tr.events) {
      if (d.time != e.time) continue;
      if (d.kind != EventKind::Fired && d.kind != EventKind::DesireActive) continue;
      if (d.action != e.action) continue;
      out.push_back({e.time, e.subject,
                     d.condition ? *d.condition : Formula::constant(true)});
      break;
    }
  }
  return out;
}

std::vector<std::string> classify_pain(const AgentState& state, const Circumstance& c) {
  std::vector<std::string> ids;
  for (const auto& f : state.families) {
    const double level = state.levels.count(f.id()) ? state.levels.at(f.id()) : 0.0;
    if (!evaluate(f.condition_at(level), c)) ids.push_back(f.id());
  }
  for (const auto& td : state.tendencies) {
    if (!evaluate(td.condition, c)) ids.push_back(td.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::optional<SublimeReport> detect_sublime(const Trace& tr, int min_cycles) {
  // Scan the exposure/escape vocabulary for maximal runs of consecutive
  // [exposed -> fired -> escaped] cycles sharing one desire quality.
  int best = 0;
  ActionName best_quality;
  int run = 0;
  ActionName run_quality;
  int phase = 0;  // 0 awaiting exposed, 1 awaiting fired, 2 awaiting escaped
  ActionName cycle_quality;

  for (const Event& e : tr.events) {
    if (e.kind != EventKind::Exposed && e.kind != EventKind::Fired &&
        e.kind != EventKind::Escaped) {
      continue;
    }
    const bool expected = (phase == 0 && e.kind == EventKind::Exposed) ||
                          (phase == 1 && e.kind == EventKind::Fired) ||
                          (phase == 2 && e.kind == EventKind::Escaped);
    if (!expected) {
      run = 0;
      phase = (e.kind == EventKind::Exposed) ? 1 : 0;
      continue;
    }
    if (phase == 0) {
      phase = 1;
    } else if (phase == 1) {
      cycle_quality = e.action;
      phase = 2;
    } else {
      // Full cycle closed; it extends the run only if the quality matches.
      if (run > 0 && cycle_quality != run_quality) run = 0;
      run_quality = cycle_quality;
      ++run;
      phase = 0;
      if (run > best) {
        best = run;
        best_quality = run_quality;
      }
    }
  }

  if (best < min_cycles) return std::nullopt;
  return SublimeReport{best, best_quality};
}

}  // namespace conatus
