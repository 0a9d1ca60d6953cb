#include "conatus/tendency.hpp"

#include <utility>

#include "conatus/errors.hpp"

namespace conatus {

ActionTendency make_tendency(std::string id, ActionName quality, Formula condition,
                             TendencyKind kind, const EnumOptions& opts) {
  if (!is_valid_identifier(id)) throw ValidationError("invalid tendency id '" + id + "'");
  if (!is_valid_identifier(quality)) {
    throw ValidationError("invalid action name '" + quality + "'");
  }
  const bool degenerate = !satisfiable(condition, opts);
  return ActionTendency{std::move(id), std::move(quality), std::move(condition), kind,
                        degenerate};
}

bool fires(const ActionTendency& t, const Circumstance& c) {
  return evaluate(t.condition, c);
}

}  // namespace conatus
