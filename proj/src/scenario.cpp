#include "conatus/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "conatus/errors.hpp"
#include "conatus/parser.hpp"

namespace conatus {

const ActionTendency* Scenario::find_tendency(const std::string& id) const {
  for (const auto& t : tendencies) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

const ConditionFamily* Scenario::find_family(const std::string& id) const {
  for (const auto& f : families) {
    if (f.id() == id) return &f;
  }
  return nullptr;
}

const Wish* Scenario::find_wish(const std::string& id) const {
  for (const auto& w : wishes) {
    if (w.id == id) return &w;
  }
  return nullptr;
}

const Regularity* Scenario::find_regularity(const std::string& id) const {
  for (const auto& r : regularities) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

namespace {

// ---------------------------------------------------------------------------
// Parsing. The file format is line oriented: the first word of a line picks
// the declaration or directive, '#' starts a comment, and a formula (when the
// line has one) follows the first ':' verbatim in the prop-logic grammar.
// ---------------------------------------------------------------------------

struct RawFamily {
  std::size_t line;
  std::string id;
  std::string quality;
  double w0 = 0.0;
  std::string base_text;
  std::vector<std::pair<double, std::string>> steps;  // (threshold, formula text)
};

struct RawWish {
  std::size_t line;
  std::string id;
  std::string on_stop;
  int period = 1;
  std::string goal_text;
  std::optional<std::string> stop_text;
  std::size_t stop_line = 0;
};

struct LineError {
  std::size_t line;
  std::string what;
};

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ValidationError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

int parse_int(const std::string& s, std::size_t line, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(line, "bad " + what + " '" + s + "'");
  }
}

double parse_num(const std::string& s, std::size_t line, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(line, "bad " + what + " '" + s + "'");
  }
}

// "key=value" -> value, or nullopt when the word has a different key.
std::optional<std::string> keyed(const std::string& word, const std::string& key) {
  if (word.rfind(key + "=", 0) == 0) return word.substr(key.size() + 1);
  return std::nullopt;
}

Formula parse_formula_at(const std::string& text, std::size_t line) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    fail(line, std::string(e.what()));
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& origin) {
  Scenario s;
  std::vector<RawFamily> raw_families;
  std::vector<RawWish> raw_wishes;
  struct RawObs {
    std::size_t line;
    int time;
    std::string reg_id;
    bool outcome;
    Circumstance facts;
  };
  std::vector<RawObs> raw_obs;
  struct WorldLine {
    std::size_t line;
    int t;
    std::vector<std::pair<std::string, bool>> values;
  };
  std::vector<WorldLine> world_lines;
  struct RawRegularity {
    std::size_t line;
    std::string id;
    std::string outcome;
    std::string trigger_text;
  };
  std::vector<RawRegularity> raw_regs;
  struct RawTendency {
    std::size_t line;
    std::string id;
    std::string quality;
    TendencyKind kind;
    std::string condition_text;
  };
  std::vector<RawTendency> raw_tendencies;
  struct RawEffect {
    std::size_t line;
    std::string action;
    std::string family;
    double delta;
  };
  std::vector<RawEffect> raw_effects;

  std::istringstream in(text);
  std::string raw_line;
  std::size_t line_no = 0;
  bool saw_name = false;

  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string line = raw_line;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // Split "head : formula" at the first colon.
    std::string head = line;
    std::optional<std::string> formula_text;
    const std::size_t colon = line.find(':');
    if (colon != std::string::npos) {
      head = line.substr(0, colon);
      std::string f = line.substr(colon + 1);
      const std::size_t b = f.find_first_not_of(" \t");
      const std::size_t e = f.find_last_not_of(" \t");
      if (b == std::string::npos) fail(line_no, "missing formula after ':'");
      formula_text = f.substr(b, e - b + 1);
    }
    std::vector<std::string> words = split_words(head);
    if (words.empty()) {
      if (formula_text) fail(line_no, "formula without a declaration");
      continue;
    }
    const std::string& kw = words[0];

    if (kw == "scenario") {
      if (saw_name) fail(line_no, "duplicate scenario line");
      if (words.size() != 2 || !is_valid_identifier(words[1])) {
        fail(line_no, "usage: scenario <name>");
      }
      s.name = words[1];
      saw_name = true;
    } else if (kw == "atom") {
      if (words.size() < 2) fail(line_no, "usage: atom <name> [<name> ...]");
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (!is_valid_identifier(words[i])) fail(line_no, "invalid atom name '" + words[i] + "'");
        if (std::find(s.atom_universe.begin(), s.atom_universe.end(), words[i]) !=
            s.atom_universe.end()) {
          fail(line_no, "duplicate atom '" + words[i] + "'");
        }
        s.atom_universe.push_back(words[i]);
      }
    } else if (kw == "tendency" || kw == "force") {
      if (words.size() != 3 || !formula_text) {
        fail(line_no, "usage: " + kw + " <id> <quality> : <formula>");
      }
      raw_tendencies.push_back({line_no, words[1], words[2],
                                kw == "force" ? TendencyKind::Force : TendencyKind::Emotion,
                                *formula_text});
    } else if (kw == "family") {
      if (!formula_text || words.size() < 3) {
        fail(line_no, "usage: family <id> <quality> [w0=<level>] : <base formula>");
      }
      RawFamily f;
      f.line = line_no;
      f.id = words[1];
      f.quality = words[2];
      for (std::size_t i = 3; i < words.size(); ++i) {
        if (auto v = keyed(words[i], "w0")) {
          f.w0 = parse_num(*v, line_no, "level");
        } else {
          fail(line_no, "unexpected word '" + words[i] + "'");
        }
      }
      f.base_text = *formula_text;
      raw_families.push_back(std::move(f));
    } else if (kw == "level") {
      if (words.size() != 3 || !formula_text) {
        fail(line_no, "usage: level <family> <threshold> : <pickiness formula>");
      }
      const double threshold = parse_num(words[2], line_no, "threshold");
      auto it = std::find_if(raw_families.begin(), raw_families.end(),
                             [&](const RawFamily& f) { return f.id == words[1]; });
      if (it == raw_families.end()) fail(line_no, "unknown family '" + words[1] + "'");
      it->steps.emplace_back(threshold, *formula_text);
    } else if (kw == "wish") {
      if (words.size() < 3 || !formula_text) {
        fail(line_no, "usage: wish <id> <stop action> [period=<n>] : <goal formula>");
      }
      RawWish w;
      w.line = line_no;
      w.id = words[1];
      w.on_stop = words[2];
      for (std::size_t i = 3; i < words.size(); ++i) {
        if (auto v = keyed(words[i], "period")) {
          w.period = parse_int(*v, line_no, "period");
        } else {
          fail(line_no, "unexpected word '" + words[i] + "'");
        }
      }
      w.goal_text = *formula_text;
      raw_wishes.push_back(std::move(w));
    } else if (kw == "stopwhen") {
      if (words.size() != 2 || !formula_text) {
        fail(line_no, "usage: stopwhen <wish> : <stop formula>");
      }
      auto it = std::find_if(raw_wishes.begin(), raw_wishes.end(),
                             [&](const RawWish& w) { return w.id == words[1]; });
      if (it == raw_wishes.end()) fail(line_no, "unknown wish '" + words[1] + "'");
      it->stop_text = *formula_text;
      it->stop_line = line_no;
    } else if (kw == "world") {
      if (words.size() < 3) fail(line_no, "usage: world <t> <atom>=<0|1> ...");
      WorldLine wl;
      wl.line = line_no;
      wl.t = parse_int(words[1], line_no, "step");
      for (std::size_t i = 2; i < words.size(); ++i) {
        const std::size_t eq = words[i].find('=');
        if (eq == std::string::npos) fail(line_no, "expected <atom>=<0|1>");
        const std::string value = words[i].substr(eq + 1);
        if (value != "0" && value != "1") fail(line_no, "expected <atom>=<0|1>");
        wl.values.emplace_back(words[i].substr(0, eq), value == "1");
      }
      world_lines.push_back(std::move(wl));
    } else if (kw == "effect") {
      if (words.size() != 4) fail(line_no, "usage: effect <action> <family> <delta>");
      raw_effects.push_back(
          {line_no, words[1], words[2], parse_num(words[3], line_no, "delta")});
    } else if (kw == "regularity") {
      if (words.size() != 3 || !formula_text) {
        fail(line_no, "usage: regularity <id> <outcome> : <trigger formula>");
      }
      raw_regs.push_back({line_no, words[1], words[2], *formula_text});
    } else if (kw == "obs") {
      if (words.size() < 4) {
        fail(line_no, "usage: obs <t> <regularity> outcome=<0|1> [<atom>=<0|1> ...]");
      }
      RawObs o;
      o.line = line_no;
      o.time = parse_int(words[1], line_no, "step");
      o.reg_id = words[2];
      bool saw_outcome = false;
      for (std::size_t i = 3; i < words.size(); ++i) {
        const std::size_t eq = words[i].find('=');
        if (eq == std::string::npos) fail(line_no, "expected key=value");
        const std::string key = words[i].substr(0, eq);
        const std::string value = words[i].substr(eq + 1);
        if (value != "0" && value != "1") fail(line_no, "expected 0 or 1 after '='");
        if (key == "outcome") {
          o.outcome = value == "1";
          saw_outcome = true;
        } else {
          o.facts.set(key, value == "1");
        }
      }
      if (!saw_outcome) fail(line_no, "observation needs outcome=<0|1>");
      raw_obs.push_back(std::move(o));
    } else if (kw == "script") {
      if (words.size() < 4) {
        fail(line_no, "usage: script <t> <kind> <subject> [action=<name>] [: <formula>]");
      }
      Directive d;
      d.kind = Directive::Kind::Script;
      d.line = line_no;
      Event e;
      e.time = parse_int(words[1], line_no, "step");
      const auto kind = event_kind_from_text(words[2]);
      if (!kind) fail(line_no, "unknown event kind '" + words[2] + "'");
      e.kind = *kind;
      e.subject = words[3];
      for (std::size_t i = 4; i < words.size(); ++i) {
        if (auto v = keyed(words[i], "action")) {
          e.action = *v;
        } else {
          fail(line_no, "unexpected word '" + words[i] + "'");
        }
      }
      if (formula_text) e.condition = parse_formula_at(*formula_text, line_no);
      d.scripted = std::move(e);
      s.directives.push_back(std::move(d));
    } else if (kw == "compare" || kw == "compare_forces" || kw == "compare_wishes") {
      if (words.size() != 3) fail(line_no, "usage: " + kw + " <idA> <idB>");
      Directive d;
      d.kind = kw == "compare"          ? Directive::Kind::Compare
               : kw == "compare_forces" ? Directive::Kind::CompareForces
                                        : Directive::Kind::CompareWishes;
      d.line = line_no;
      d.a = words[1];
      d.b = words[2];
      s.directives.push_back(std::move(d));
    } else if (kw == "fires") {
      if (words.size() != 4 || words[2] != "at") fail(line_no, "usage: fires <id> at <t>");
      Directive d;
      d.kind = Directive::Kind::Fires;
      d.line = line_no;
      d.a = words[1];
      d.at = parse_int(words[3], line_no, "step");
      s.directives.push_back(std::move(d));
    } else if (kw == "laws") {
      if (words.size() != 1) fail(line_no, "usage: laws");
      Directive d;
      d.kind = Directive::Kind::Laws;
      d.line = line_no;
      s.directives.push_back(std::move(d));
    } else if (kw == "satiate") {
      if (words.size() < 2) {
        fail(line_no, "usage: satiate <family> [w0=<level>] [delta=<d>] [max_steps=<n>]");
      }
      Directive d;
      d.kind = Directive::Kind::Satiate;
      d.line = line_no;
      d.a = words[1];
      for (std::size_t i = 2; i < words.size(); ++i) {
        if (auto v = keyed(words[i], "w0")) {
          d.w0 = parse_num(*v, line_no, "level");
          d.has_w0 = true;
        } else if (auto dv = keyed(words[i], "delta")) {
          d.delta = parse_num(*dv, line_no, "delta");
          d.has_delta = true;
        } else if (auto mv = keyed(words[i], "max_steps")) {
          d.max_steps = parse_int(*mv, line_no, "max_steps");
        } else if (auto av = keyed(words[i], "at")) {
          d.at = parse_int(*av, line_no, "step");
        } else {
          fail(line_no, "unexpected word '" + words[i] + "'");
        }
      }
      s.directives.push_back(std::move(d));
    } else if (kw == "wait") {
      if (words.size() < 2) fail(line_no, "usage: wait <wish> [max_steps=<n>]");
      Directive d;
      d.kind = Directive::Kind::Wait;
      d.line = line_no;
      d.a = words[1];
      for (std::size_t i = 2; i < words.size(); ++i) {
        if (auto mv = keyed(words[i], "max_steps")) {
          d.max_steps = parse_int(*mv, line_no, "max_steps");
        } else {
          fail(line_no, "unexpected word '" + words[i] + "'");
        }
      }
      s.directives.push_back(std::move(d));
    } else if (kw == "classify") {
      if (words.size() < 2) fail(line_no, "usage: classify pleasure|pain|sublime");
      Directive d;
      d.line = line_no;
      if (words[1] == "pleasure" && words.size() == 2) {
        d.kind = Directive::Kind::Pleasure;
      } else if (words[1] == "sublime" && words.size() == 2) {
        d.kind = Directive::Kind::Sublime;
      } else if (words[1] == "pain" && words.size() == 4 && words[2] == "at") {
        d.kind = Directive::Kind::Pain;
        d.at = parse_int(words[3], line_no, "step");
      } else {
        fail(line_no, "usage: classify pleasure | classify sublime | classify pain at <t>");
      }
      s.directives.push_back(std::move(d));
    } else if (kw == "test") {
      if (words.size() != 2) fail(line_no, "usage: test <regularity>");
      Directive d;
      d.kind = Directive::Kind::TestRegularity;
      d.line = line_no;
      d.a = words[1];
      s.directives.push_back(std::move(d));
    } else {
      fail(line_no, "unknown keyword '" + kw + "'");
    }
  }

  if (!saw_name) {
    throw ValidationError(origin + ": missing 'scenario <name>' line");
  }

  // ---- Resolution and validation ----
  const std::set<std::string> universe(s.atom_universe.begin(), s.atom_universe.end());
  const auto check_atoms = [&](const Formula& f, std::size_t line) {
    for (const auto& atom : f.atoms()) {
      if (!universe.count(atom)) fail(line, "undeclared atom '" + atom + "'");
    }
  };
  std::set<std::string> ids;
  const auto claim_id = [&](const std::string& id, std::size_t line) {
    if (!ids.insert(id).second) fail(line, "duplicate id '" + id + "'");
  };

  for (const auto& rt : raw_tendencies) {
    claim_id(rt.id, rt.line);
    Formula condition = parse_formula_at(rt.condition_text, rt.line);
    check_atoms(condition, rt.line);
    try {
      s.tendencies.push_back(make_tendency(rt.id, rt.quality, condition, rt.kind));
    } catch (const ValidationError& e) {
      fail(rt.line, e.what());
    }
  }
  for (const auto& rf : raw_families) {
    claim_id(rf.id, rf.line);
    Formula base = parse_formula_at(rf.base_text, rf.line);
    check_atoms(base, rf.line);
    std::vector<std::pair<double, Formula>> steps;
    for (const auto& [threshold, text] : rf.steps) {
      Formula p = parse_formula_at(text, rf.line);
      check_atoms(p, rf.line);
      steps.emplace_back(threshold, std::move(p));
    }
    try {
      s.families.emplace_back(rf.id, rf.quality, std::move(base), std::move(steps));
    } catch (const ValidationError& e) {
      fail(rf.line, e.what());
    }
    s.initial_levels[rf.id] = rf.w0;
  }
  for (const auto& rw : raw_wishes) {
    claim_id(rw.id, rw.line);
    Formula goal = parse_formula_at(rw.goal_text, rw.line);
    check_atoms(goal, rw.line);
    std::optional<Formula> stop;
    if (rw.stop_text) {
      stop = parse_formula_at(*rw.stop_text, rw.stop_line);
      check_atoms(*stop, rw.stop_line);
    }
    try {
      s.wishes.push_back(make_wish(rw.id, std::move(goal), rw.on_stop, rw.period,
                                   std::move(stop)));
    } catch (const ValidationError& e) {
      fail(rw.stop_text ? rw.stop_line : rw.line, e.what());
    }
  }
  for (const auto& rr : raw_regs) {
    claim_id(rr.id, rr.line);
    Formula trigger = parse_formula_at(rr.trigger_text, rr.line);
    check_atoms(trigger, rr.line);
    try {
      s.regularities.push_back(make_regularity(rr.id, std::move(trigger), rr.outcome));
    } catch (const ValidationError& e) {
      fail(rr.line, e.what());
    }
  }

  s.world = World(s.atom_universe);
  for (const auto& wl : world_lines) {
    for (const auto& [atom, value] : wl.values) {
      if (!universe.count(atom)) fail(wl.line, "undeclared atom '" + atom + "'");
      s.world.set(wl.t, atom, value);
    }
  }
  for (const auto& re : raw_effects) {
    if (!s.find_family(re.family)) fail(re.line, "unknown family '" + re.family + "'");
    if (!is_valid_identifier(re.action)) fail(re.line, "invalid action '" + re.action + "'");
    s.effects[re.action][re.family] = re.delta;
  }
  for (const auto& ro : raw_obs) {
    const Regularity* reg = s.find_regularity(ro.reg_id);
    if (!reg) fail(ro.line, "unknown regularity '" + ro.reg_id + "'");
    for (const auto& [atom, value] : ro.facts.values()) {
      (void)value;
      if (!universe.count(atom)) fail(ro.line, "undeclared atom '" + atom + "'");
    }
    for (const auto& atom : reg->trigger.atoms()) {
      if (!ro.facts.contains(atom)) {
        fail(ro.line, "observation does not cover trigger atom '" + atom + "'");
      }
    }
    s.observations[ro.reg_id].push_back(
        Observation{ro.time, ro.facts, ro.outcome, reg->outcome});
  }

  // Directive cross-references.
  for (const auto& d : s.directives) {
    switch (d.kind) {
      case Directive::Kind::Compare:
        if (!s.find_tendency(d.a)) fail(d.line, "unknown tendency '" + d.a + "'");
        if (!s.find_tendency(d.b)) fail(d.line, "unknown tendency '" + d.b + "'");
        break;
      case Directive::Kind::CompareForces:
        if (!s.find_regularity(d.a)) fail(d.line, "unknown regularity '" + d.a + "'");
        if (!s.find_regularity(d.b)) fail(d.line, "unknown regularity '" + d.b + "'");
        break;
      case Directive::Kind::CompareWishes:
        if (!s.find_wish(d.a)) fail(d.line, "unknown wish '" + d.a + "'");
        if (!s.find_wish(d.b)) fail(d.line, "unknown wish '" + d.b + "'");
        break;
      case Directive::Kind::Fires:
        if (!s.find_tendency(d.a)) fail(d.line, "unknown tendency '" + d.a + "'");
        break;
      case Directive::Kind::Satiate:
        if (!s.find_family(d.a)) fail(d.line, "unknown family '" + d.a + "'");
        break;
      case Directive::Kind::Wait:
        if (!s.find_wish(d.a)) fail(d.line, "unknown wish '" + d.a + "'");
        break;
      case Directive::Kind::TestRegularity:
        if (!s.find_regularity(d.a)) fail(d.line, "unknown regularity '" + d.a + "'");
        break;
      case Directive::Kind::Script:
        if (d.scripted.condition) check_atoms(*d.scripted.condition, d.line);
        break;
      default:
        break;
    }
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open scenario file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scenario(buffer.str(), path.string());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

namespace {

const char* directive_slug(Directive::Kind k) {
  switch (k) {
    case Directive::Kind::Compare:
      return "compare";
    case Directive::Kind::CompareForces:
      return "compare_forces";
    case Directive::Kind::CompareWishes:
      return "compare_wishes";
    case Directive::Kind::Fires:
      return "fires";
    case Directive::Kind::Laws:
      return "laws";
    case Directive::Kind::Satiate:
      return "satiate";
    case Directive::Kind::Wait:
      return "wait";
    case Directive::Kind::Pleasure:
      return "pleasure";
    case Directive::Kind::Pain:
      return "pain";
    case Directive::Kind::Sublime:
      return "sublime";
    case Directive::Kind::TestRegularity:
      return "regularity";
    case Directive::Kind::Script:
      return "script";
  }
  return "directive";
}

}  // namespace

int run_scenario(const Scenario& s, const RunOptions& options, std::ostream& log) {
  EnumOptions enum_opts;
  if (options.cap) enum_opts.cap = static_cast<std::size_t>(*options.cap);

  std::filesystem::create_directories(options.out_dir);

  // Mutable run state: family levels and the current trace. A satiation or
  // wait run replaces the trace; script directives append to it.
  std::map<std::string, double> levels = s.initial_levels;
  Trace current;

  std::size_t index = 0;
  for (const auto& d : s.directives) {
    ++index;
    std::string body;
    try {
      switch (d.kind) {
        case Directive::Kind::Compare: {
          const auto* a = s.find_tendency(d.a);
          const auto* b = s.find_tendency(d.b);
          body = render(compare(*a, *b, enum_opts), d.a, d.b) + "\n";
          break;
        }
        case Directive::Kind::CompareForces: {
          const auto* a = s.find_regularity(d.a);
          const auto* b = s.find_regularity(d.b);
          body = render(compare_forces(*a, *b, enum_opts), d.a, d.b) + "\n";
          break;
        }
        case Directive::Kind::CompareWishes: {
          const auto* a = s.find_wish(d.a);
          const auto* b = s.find_wish(d.b);
          body = compare_wishes(*a, *b, enum_opts).to_string(d.a, d.b);
          break;
        }
        case Directive::Kind::Fires: {
          const auto* t = s.find_tendency(d.a);
          const bool result = fires(*t, s.world.at(d.at));
          body = "fires(" + d.a + ", t=" + std::to_string(d.at) + ") = " +
                 (result ? "true" : "false") + "\n";
          break;
        }
        case Directive::Kind::Laws: {
          body = verify_order_laws(s.tendencies, enum_opts).to_string();
          break;
        }
        case Directive::Kind::Satiate: {
          const auto* f = s.find_family(d.a);
          const double w0 = d.has_w0 ? d.w0 : levels[d.a];
          const int max_steps = options.max_steps.value_or(d.max_steps);
          // Explicit delta= wins; otherwise the declared effect of the
          // family's own action, defaulting to 1.
          double delta = d.delta;
          if (!d.has_delta) {
            delta = 1.0;
            const auto by_action = s.effects.find(f->quality());
            if (by_action != s.effects.end()) {
              const auto by_family = by_action->second.find(d.a);
              if (by_family != by_action->second.end()) delta = by_family->second;
            }
          }
          current = run_satiation(*f, s.world.at(d.at), w0, delta, max_steps);
          levels[d.a] = current.final_state.levels.at(d.a);
          body = current.to_text();
          body += "# truncated=" + std::string(current.truncated ? "1" : "0");
          body += " actions=" + std::to_string(current.count(EventKind::ActionExecuted));
          body += " final_level=" + format_level(levels[d.a]);
          body += "\n";
          break;
        }
        case Directive::Kind::Wait: {
          const auto* w = s.find_wish(d.a);
          const int max_steps = options.max_steps.value_or(d.max_steps);
          WaitResult result = simulate_wait(*w, s.world, max_steps);
          current = std::move(result.trace);
          body = current.to_text();
          body += "# stopped_at=" +
                  (result.stopped_at ? std::to_string(*result.stopped_at) : std::string("never"));
          body += " truncated=" + std::string(current.truncated ? "1" : "0") + "\n";
          break;
        }
        case Directive::Kind::Pleasure: {
          const auto events = classify_pleasure(current);
          for (const auto& p : events) {
            body += "t=" + std::to_string(p.time) + " pleasure source=" + p.source +
                    " cond=" + p.intensity_condition.to_string() + "\n";
          }
          body += "# count=" + std::to_string(events.size()) + "\n";
          break;
        }
        case Directive::Kind::Pain: {
          AgentState state;
          state.families = s.families;
          state.tendencies = s.tendencies;
          state.levels = levels;
          const auto ids = classify_pain(state, s.world.at(d.at));
          body = "pain at t=" + std::to_string(d.at) + ":";
          if (ids.empty()) {
            body += " none";
          } else {
            for (const auto& id : ids) body += " " + id;
          }
          body += "\n";
          break;
        }
        case Directive::Kind::Sublime: {
          const auto report = detect_sublime(current);
          if (report) {
            body = "sublime cycles=" + std::to_string(report->cycles) +
                   " quality=" + report->quality + "\n";
          } else {
            body = "# no sublime pattern\n";
          }
          break;
        }
        case Directive::Kind::TestRegularity: {
          const auto* r = s.find_regularity(d.a);
          const auto it = s.observations.find(d.a);
          const Regularity updated =
              test_regularity(*r, it == s.observations.end() ? std::vector<Observation>{}
                                                             : it->second);
          body = d.a + ": " + updated.report() + "\n";
          break;
        }
        case Directive::Kind::Script: {
          current.events.push_back(d.scripted);
          continue;  // declaration-like; no artifact
        }
      }
    } catch (const Error& e) {
      log << "directive " << index << " (line " << d.line << "): error: " << e.what()
          << "\n";
      return 1;
    }

    char file_index[8];
    std::snprintf(file_index, sizeof(file_index), "%02zu", index);
    const auto artifact = options.out_dir /
                          (s.name + "_" + file_index + "_" + directive_slug(d.kind) + ".txt");
    std::ofstream out(artifact, std::ios::binary);
    if (!out) {
      log << "directive " << index << ": cannot write artifact " << artifact.string() << "\n";
      return 1;
    }
    out << body;
    log << "== " << artifact.filename().string() << "\n" << body;
  }
  return 0;
}

}  // namespace conatus
