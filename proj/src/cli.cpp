#include "conatus/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "conatus/catalog.hpp"
#include "conatus/errors.hpp"
#include "conatus/parser.hpp"
#include "conatus/scenario.hpp"

namespace conatus::cli {

namespace {

ActionTendency tendency_from_text(const std::string& id, const std::string& text,
                                  const EnumOptions& opts) {
  return make_tendency(id, "act", parse_formula(text), TendencyKind::Emotion, opts);
}

int cmd_compare(const std::string& f1, const std::string& f2, const EnumOptions& opts,
                std::ostream& out) {
  const auto left = tendency_from_text("left", f1, opts);
  const auto right = tendency_from_text("right", f2, opts);
  out << render(compare(left, right, opts), "left", "right") << "\n";
  return 0;
}

int cmd_laws(const std::string& path, const RunOptions& run_opts, std::ostream& out) {
  const Scenario s = load_scenario(path);
  EnumOptions opts;
  if (run_opts.cap) opts.cap = static_cast<std::size_t>(*run_opts.cap);
  out << verify_order_laws(s.tendencies, opts).to_string();
  return 0;
}

int cmd_simulate(const std::string& path, const RunOptions& run_opts, std::ostream& out) {
  const Scenario s = load_scenario(path);
  return run_scenario(s, run_opts, out);
}

// Same as simulate, restricted to the wish-related directives.
int cmd_wish(const std::string& path, const RunOptions& run_opts, std::ostream& out) {
  Scenario s = load_scenario(path);
  if (s.wishes.empty()) {
    throw ValidationError("scenario '" + s.name + "' declares no wishes");
  }
  std::vector<Directive> kept;
  for (const auto& d : s.directives) {
    if (d.kind == Directive::Kind::Wait || d.kind == Directive::Kind::CompareWishes) {
      kept.push_back(d);
    }
  }
  s.directives = std::move(kept);
  return run_scenario(s, run_opts, out);
}

int cmd_observe(const std::string& log_path, const std::string& trigger_text,
                const std::string& outcome, const EnumOptions& opts, std::ostream& out) {
  (void)opts;
  std::ifstream in(log_path);
  if (!in) throw ValidationError("cannot open observation log '" + log_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto observations = parse_observation_log(buffer.str());
  Regularity r = make_regularity("hypothesis", parse_formula(trigger_text), outcome);
  r = test_regularity(std::move(r), observations);
  out << trigger_text << " -> " << outcome << ": " << r.report() << "\n";
  return 0;
}

// Shell-style split: whitespace separates words, double quotes group them.
std::optional<std::vector<std::string>> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_word = false;
  bool in_quotes = false;
  for (char c : line) {
    if (c == '"') {
      in_quotes = !in_quotes;
      in_word = true;
      continue;
    }
    if (!in_quotes && std::isspace(static_cast<unsigned char>(c))) {
      if (in_word) out.push_back(cur);
      cur.clear();
      in_word = false;
      continue;
    }
    cur.push_back(c);
    in_word = true;
  }
  if (in_quotes) return std::nullopt;
  if (in_word) out.push_back(cur);
  return out;
}

const char* kReplHelp =
    "commands:\n"
    "  parse \"<formula>\"              print the canonical form\n"
    "  sat \"<formula>\"                satisfiability plus a model if any\n"
    "  eval \"<formula>\" \"a=1,b=0\"     evaluate under an assignment\n"
    "  entails \"<f1>\" \"<f2>\"          entailment with counterexample\n"
    "  compare \"<f1>\" \"<f2>\"          intensity comparison of conditions\n"
    "  catalog                        print the emotion dictionary\n"
    "  load <path>                    load a scenario file\n"
    "  run [<out dir>]                run the loaded scenario\n"
    "  laws                           order laws over the loaded scenario\n"
    "  quit\n";

Circumstance parse_assignment(const std::string& text) {
  Circumstance c;
  std::stringstream ss(text);
  std::string pair;
  while (std::getline(ss, pair, ',')) {
    const std::size_t b = pair.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const std::size_t e = pair.find_last_not_of(" \t");
    pair = pair.substr(b, e - b + 1);
    const std::size_t eq = pair.find('=');
    if (eq == std::string::npos || (pair.substr(eq + 1) != "0" && pair.substr(eq + 1) != "1")) {
      throw ValidationError("assignments must be <atom>=<0|1>[,<atom>=<0|1>...]");
    }
    c.set(pair.substr(0, eq), pair.substr(eq + 1) == "1");
  }
  return c;
}

}  // namespace

int run_repl(std::istream& in, std::ostream& out, std::ostream& err) {
  std::optional<Scenario> loaded;
  std::string line;
  out << "interactive mode; 'help' lists commands\n";
  while (out << "> " << std::flush, std::getline(in, line)) {
    const auto tokens = tokenize(line);
    if (!tokens) {
      err << "error: unterminated quote\n";
      continue;
    }
    if (tokens->empty()) continue;
    const std::string& verb = (*tokens)[0];
    const auto arity = tokens->size() - 1;
    try {
      if (verb == "quit" || verb == "exit") {
        break;
      } else if (verb == "help") {
        out << kReplHelp;
      } else if (verb == "parse" && arity == 1) {
        out << parse_formula((*tokens)[1]).to_string() << "\n";
      } else if (verb == "sat" && arity == 1) {
        const auto model = find_model(parse_formula((*tokens)[1]));
        if (model) {
          out << "satisfiable" << (model->empty() ? "" : ": " + model->to_string()) << "\n";
        } else {
          out << "unsatisfiable\n";
        }
      } else if (verb == "eval" && arity == 2) {
        const bool v = evaluate(parse_formula((*tokens)[1]), parse_assignment((*tokens)[2]));
        out << (v ? "true" : "false") << "\n";
      } else if (verb == "entails" && arity == 2) {
        const auto r = entails_witness(parse_formula((*tokens)[1]), parse_formula((*tokens)[2]));
        if (r.holds) {
          out << "yes\n";
        } else {
          out << "no (counterexample: " << r.counterexample->to_string() << ")\n";
        }
      } else if (verb == "compare" && arity == 2) {
        cmd_compare((*tokens)[1], (*tokens)[2], {}, out);
      } else if (verb == "catalog" && arity == 0) {
        out << catalog_export();
      } else if (verb == "load" && arity == 1) {
        loaded = load_scenario((*tokens)[1]);
        out << "loaded scenario '" << loaded->name << "'\n";
      } else if (verb == "run" && arity <= 1) {
        if (!loaded) throw ValidationError("no scenario loaded");
        RunOptions run_opts;
        run_opts.out_dir = arity == 1 ? (*tokens)[1] : ".";
        run_scenario(*loaded, run_opts, out);
      } else if (verb == "laws" && arity == 0) {
        if (!loaded) throw ValidationError("no scenario loaded");
        out << verify_order_laws(loaded->tendencies).to_string();
      } else {
        err << "unknown command; 'help' lists commands\n";
      }
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
    }
  }
  return 0;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"condition->action tendency calculus: comparisons, simulations, "
               "regularities"};
  app.name("conatus");

  RunOptions run_opts;
  std::string out_dir = ".";
  int max_steps = 0;
  int cap = 0;
  app.add_option("--out", out_dir, "directory for emitted artifacts");
  app.add_option("--max-steps", max_steps, "override simulation step budgets")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap", cap, "override the atom enumeration cap")
      ->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  std::string f1, f2, scenario_path, log_path, trigger_text, outcome;

  auto* compare_cmd = app.add_subcommand("compare", "compare two condition formulas");
  compare_cmd->add_option("formula1", f1, "left condition")->required();
  compare_cmd->add_option("formula2", f2, "right condition")->required();

  auto* laws_cmd = app.add_subcommand("laws", "verify the strict order laws over a scenario");
  laws_cmd->add_option("scenario", scenario_path, "scenario file")->required();

  auto* simulate_cmd = app.add_subcommand("simulate", "run a scenario's directives");
  simulate_cmd->add_option("scenario", scenario_path, "scenario file")->required();

  auto* wish_cmd = app.add_subcommand("wish", "run only a scenario's wish directives");
  wish_cmd->add_option("scenario", scenario_path, "scenario file")->required();

  auto* observe_cmd = app.add_subcommand("observe", "test a regularity against a log");
  observe_cmd->add_option("log", log_path, "observation log file")->required();
  observe_cmd->add_option("trigger", trigger_text, "trigger formula")->required();
  observe_cmd->add_option("outcome", outcome, "outcome name")->required();

  app.add_subcommand("catalog", "print the emotion dictionary");
  app.add_subcommand("repl", "interactive loop");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (max_steps > 0) run_opts.max_steps = max_steps;
  if (cap > 0) run_opts.cap = cap;
  run_opts.out_dir = out_dir;
  EnumOptions enum_opts;
  if (run_opts.cap) enum_opts.cap = static_cast<std::size_t>(*run_opts.cap);

  try {
    if (compare_cmd->parsed()) return cmd_compare(f1, f2, enum_opts, out);
    if (laws_cmd->parsed()) return cmd_laws(scenario_path, run_opts, out);
    if (simulate_cmd->parsed()) return cmd_simulate(scenario_path, run_opts, out);
    if (wish_cmd->parsed()) return cmd_wish(scenario_path, run_opts, out);
    if (observe_cmd->parsed()) {
      return cmd_observe(log_path, trigger_text, outcome, enum_opts, out);
    }
    if (app.get_subcommand("catalog")->parsed()) {
      out << catalog_export();
      return 0;
    }
    if (app.get_subcommand("repl")->parsed()) return run_repl(std::cin, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace conatus::cli
