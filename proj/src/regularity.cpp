#include "conatus/regularity.hpp"

#include <algorithm>
#include <sstream>

#include "conatus/errors.hpp"

namespace conatus {

std::string Regularity::report() const {
  std::string out = refuted ? "refuted at t=" + std::to_string(refuted_at.value_or(0))
                            : "unrefuted";
  out += ", support " + std::to_string(support);
  return out;
}

Regularity make_regularity(std::string id, Formula trigger, ActionName outcome) {
  if (!is_valid_identifier(id)) throw ValidationError("invalid regularity id '" + id + "'");
  if (!is_valid_identifier(outcome)) {
    throw ValidationError("invalid outcome name '" + outcome + "'");
  }
  return Regularity{std::move(id), std::move(trigger), std::move(outcome), 0, false,
                    std::nullopt};
}

Regularity test_regularity(Regularity r, std::vector<Observation> obs) {
  std::stable_sort(obs.begin(), obs.end(),
                   [](const Observation& a, const Observation& b) { return a.time < b.time; });
  for (const Observation& o : obs) {
    if (o.outcome_name != r.outcome) continue;
    if (!evaluate(r.trigger, o.trigger_facts)) continue;  // neither confirms nor refutes
    if (o.outcome_occurred) {
      ++r.support;
    } else if (!r.refuted) {
      r.refuted = true;
      r.refuted_at = o.time;
    }
  }
  return r;
}

IntensityRelation compare_forces(const Regularity& r1, const Regularity& r2,
                                 const EnumOptions& opts) {
  const ActionTendency a{r1.id, r1.outcome, r1.trigger, TendencyKind::Force, false};
  const ActionTendency b{r2.id, r2.outcome, r2.trigger, TendencyKind::Force, false};
  return compare(a, b, opts);
}

bool holds_during(const Regularity& r, const std::vector<Observation>& obs, int from,
                  int to) {
  if (from > to) throw ValidationError("holds_during: from must be <= to");
  for (const Observation& o : obs) {
    if (o.time < from || o.time > to) continue;
    if (o.outcome_name != r.outcome) continue;
    if (evaluate(r.trigger, o.trigger_facts) && !o.outcome_occurred) return false;
  }
  return true;
}

std::string format_observation(const Observation& o) {
  std::string out = "t=" + std::to_string(o.time) + " trigger{";
  bool first = true;
  for (const auto& [atom, value] : o.trigger_facts.values()) {
    if (!first) out += ",";
    first = false;
    out += atom;
    out += value ? "=1" : "=0";
  }
  out += "} outcome=" + o.outcome_name + ":";
  out += o.outcome_occurred ? "1" : "0";
  return out;
}

namespace {

[[noreturn]] void bad_line(const std::string& line, const std::string& why) {
  throw ValidationError("bad observation line '" + line + "': " + why);
}

}  // namespace

Observation parse_observation(const std::string& line) {
  Observation o;
  std::string s = line;
  if (s.rfind("t=", 0) != 0) bad_line(line, "expected 't=<step>'");
  std::size_t sp = s.find(' ');
  if (sp == std::string::npos) bad_line(line, "missing trigger section");
  try {
    o.time = std::stoi(s.substr(2, sp - 2));
  } catch (const std::exception&) {
    bad_line(line, "bad step number");
  }

  std::size_t open = s.find("trigger{", sp);
  if (open == std::string::npos) bad_line(line, "missing 'trigger{'");
  std::size_t close = s.find('}', open);
  if (close == std::string::npos) bad_line(line, "missing '}'");
  std::string facts = s.substr(open + 8, close - open - 8);
  std::stringstream fs(facts);
  std::string pair;
  while (std::getline(fs, pair, ',')) {
    if (pair.empty()) continue;
    const std::size_t eq = pair.find('=');
    if (eq == std::string::npos || (pair.substr(eq + 1) != "0" && pair.substr(eq + 1) != "1")) {
      bad_line(line, "trigger facts must be <atom>=<0|1>");
    }
    o.trigger_facts.set(pair.substr(0, eq), pair.substr(eq + 1) == "1");
  }

  std::size_t out_pos = s.find("outcome=", close);
  if (out_pos == std::string::npos) bad_line(line, "missing 'outcome='");
  std::string rest = s.substr(out_pos + 8);
  const std::size_t colon = rest.find(':');
  if (colon == std::string::npos || (rest.substr(colon + 1) != "0" && rest.substr(colon + 1) != "1")) {
    bad_line(line, "outcome must be <name>:<0|1>");
  }
  o.outcome_name = rest.substr(0, colon);
  if (!is_valid_identifier(o.outcome_name)) bad_line(line, "bad outcome name");
  o.outcome_occurred = rest.substr(colon + 1) == "1";
  return o;
}

std::vector<Observation> parse_observation_log(const std::string& text) {
  std::vector<Observation> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    out.push_back(parse_observation(line.substr(start)));
  }
  return out;
}

}  // namespace conatus
