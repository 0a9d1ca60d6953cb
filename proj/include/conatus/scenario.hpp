#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conatus/dynamics.hpp"
#include "conatus/regularity.hpp"
#include "conatus/wish.hpp"

namespace conatus {

/// One executable step of a scenario file, kept in file order.
struct Directive {
  enum class Kind {
    Compare,        // compare <tendencyA> <tendencyB>
    CompareForces,  // compare_forces <regularityA> <regularityB>
    CompareWishes,  // compare_wishes <wishA> <wishB>
    Fires,          // fires <tendency> at <t>
    Laws,           // laws
    Satiate,        // satiate <family> [w0=..] delta=.. max_steps=..
    Wait,           // wait <wish> max_steps=..
    Pleasure,       // classify pleasure
    Pain,           // classify pain at <t>
    Sublime,        // classify sublime
    TestRegularity, // test <regularity>
    Script,         // script <t> <kind> <subject> [action=..] [: <formula>]
  };

  Kind kind;
  std::size_t line = 0;  // 1-based source line, for error reporting
  std::string a;
  std::string b;
  int at = 0;
  double w0 = 0.0;
  bool has_w0 = false;
  double delta = 1.0;
  bool has_delta = false;
  int max_steps = 100;
  Event scripted;  // Script only
};

/// A fully validated scenario: every formula parses, every referenced atom
/// is declared, and every id resolves.
struct Scenario {
  std::string name;
  std::vector<std::string> atom_universe;
  std::vector<ActionTendency> tendencies;
  std::vector<ConditionFamily> families;
  std::map<std::string, double> initial_levels;  // family id -> starting level
  std::vector<Wish> wishes;
  World world;
  Effects effects;
  std::vector<Regularity> regularities;
  std::map<std::string, std::vector<Observation>> observations;  // regularity id -> obs
  std::vector<Directive> directives;

  const ActionTendency* find_tendency(const std::string& id) const;
  const ConditionFamily* find_family(const std::string& id) const;
  const Wish* find_wish(const std::string& id) const;
  const Regularity* find_regularity(const std::string& id) const;
};

Scenario load_scenario(const std::filesystem::path& path);
Scenario parse_scenario(const std::string& text, const std::string& origin = "<string>");

struct RunOptions {
  std::filesystem::path out_dir = ".";
  std::optional<int> max_steps;  // overrides every directive's step budget
  std::optional<int> cap;        // overrides the enumeration cap
};

/// Executes the directives in file order, writing one artifact file per
/// directive ("<scenario>_<NN>_<kind>.txt") and mirroring the content to
/// `log`. Returns 0 on success or 1 on the first directive error.
int run_scenario(const Scenario& s, const RunOptions& options, std::ostream& log);

}  // namespace conatus
