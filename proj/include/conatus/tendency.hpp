#pragma once

#include <string>

#include "conatus/circumstance.hpp"
#include "conatus/formula.hpp"
#include "conatus/semantics.hpp"

namespace conatus {

/// The action side of a tendency. Identifies a desire's quality: what
/// distinguishes hunger (eat) from an itch (scratch).
using ActionName = std::string;

/// Provenance label only. Forces and emotions share one schema and every
/// operation treats them identically.
enum class TendencyKind { Emotion, Force };

/// A condition -> action pair: whenever the condition holds, the action
/// happens. This single schema covers emotions, desires and forces.
struct ActionTendency {
  std::string id;
  ActionName quality;
  Formula condition;
  TendencyKind kind = TendencyKind::Emotion;
  /// Set when the condition is unsatisfiable: the tendency can never fire.
  bool degenerate = false;
};

/// Builds a tendency, validating identifiers and flagging unsatisfiable
/// conditions. Throws ValidationError on a bad id or quality.
ActionTendency make_tendency(std::string id, ActionName quality, Formula condition,
                             TendencyKind kind = TendencyKind::Emotion,
                             const EnumOptions& opts = {});

/// Does the tendency's condition hold under this circumstance?
bool fires(const ActionTendency& t, const Circumstance& c);

}  // namespace conatus
