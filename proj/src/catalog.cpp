#include "conatus/catalog.hpp"

#include "conatus/parser.hpp"

namespace conatus {

namespace {

CatalogEntry base(const std::string& name, const ActionName& quality,
                  const std::string& condition, const std::string& gloss) {
  return CatalogEntry{name, false, quality,
                      make_tendency(name, quality, parse_formula(condition)), gloss};
}

CatalogEntry form(const std::string& name, const ActionName& quality,
                  const std::string& gloss) {
  return CatalogEntry{name, true, quality, std::nullopt, gloss};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back(base("hunger", "eat", "food_at_hand", "desiring to eat"));
  entries.push_back(base("thirst", "drink", "water_at_hand", "desiring to drink"));
  entries.push_back(base("itch", "scratch", "itch_present", "desiring to scratch"));
  entries.push_back(base("cold", "warm_oneself", "body_cold", "desiring to warm oneself"));
  entries.push_back(base("hot", "cool_oneself", "body_hot", "desiring to cool oneself"));
  entries.push_back(base("fear", "flee", "threat_present", "desiring to flee, or escape"));
  entries.push_back(base("love", "be_with", "beloved_near", "desiring to be with"));
  // The counterfactual in this gloss is not expressible in the propositional
  // core; the placeholder condition keeps the entry usable in scenarios.
  entries.push_back(base("regret", "undo", "deed_done",
                         "desiring to do what could have made oneself not do what was done"));
  entries.push_back(base("hate", "retaliate", "target_present",
                         "desiring to make someone feel pain, die, etc.; desiring to "
                         "retaliate someone"));
  entries.push_back(base("pain", "avert", "unwanted_present",
                         "desiring, when P is true, to do something as a result of which "
                         "P will not hold"));
  entries.push_back(base("excitement", "cheer", "goal_achieved", "desire to cheer"));
  entries.push_back(form("pleasure", "", "desiring to do what is being done"));
  entries.push_back(form("beauty", "see",
                         "desiring to see the object while I am actually seeing it"));
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& standard_catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* catalog_lookup(const std::string& emotion_name) {
  for (const CatalogEntry& e : standard_catalog()) {
    if (e.emotion_name == emotion_name) return &e;
  }
  return nullptr;
}

std::string catalog_export() {
  std::string out;
  for (const CatalogEntry& e : standard_catalog()) {
    out += e.emotion_name;
    out += '\t';
    out += e.is_form ? "form" : "base";
    out += '\t';
    out += e.quality;
    out += '\t';
    out += e.tendency_template ? e.tendency_template->condition.to_string() : "";
    out += '\t';
    out += e.gloss;
    out += '\n';
  }
  return out;
}

}  // namespace conatus
