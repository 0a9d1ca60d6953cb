#include "conatus/circumstance.hpp"

#include <algorithm>

#include "conatus/errors.hpp"

namespace conatus {

bool Circumstance::value(const std::string& atom) const {
  const auto it = values_.find(atom);
  if (it == values_.end()) throw UnknownAtomError(atom);
  return it->second;
}

std::string Circumstance::to_string() const {
  std::string out;
  for (const auto& [atom, value] : values_) {
    if (!out.empty()) out += ", ";
    out += atom;
    out += value ? "=1" : "=0";
  }
  return out;
}

World::World(std::vector<std::string> universe) : universe_(std::move(universe)) {
  std::sort(universe_.begin(), universe_.end());
}

void World::set(int t, const std::string& atom, bool value) {
  if (std::find(universe_.begin(), universe_.end(), atom) == universe_.end()) {
    throw UnknownAtomError(atom);
  }
  if (t < 0) throw ValidationError("world step must be non-negative");
  updates_[t][atom] = value;
}

Circumstance World::at(int t) const {
  std::map<std::string, bool> values;
  for (const auto& atom : universe_) values[atom] = false;
  for (const auto& [step, changes] : updates_) {
    if (step > t) break;
    for (const auto& [atom, value] : changes) values[atom] = value;
  }
  return Circumstance(std::move(values));
}

}  // namespace conatus
