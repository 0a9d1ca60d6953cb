#include <doctest.h>

#include "conatus/errors.hpp"
#include "conatus/parser.hpp"
#include "conatus/wish.hpp"

using namespace conatus;

namespace {

World present_world(int arrives_at) {
  World w({"present_here"});
  if (arrives_at >= 0) w.set(arrives_at, "present_here", true);
  return w;
}

}  // namespace

TEST_CASE("make_wish validates period and goal-entails-stop") {
  CHECK_THROWS_AS(make_wish("w", parse_formula("G"), "stop_checking", 0), ValidationError);
  // stop condition the goal does not entail
  CHECK_THROWS_AS(
      make_wish("w", parse_formula("G"), "stop_checking", 1, parse_formula("S & G2")),
      ValidationError);
  // the canonical weaker wish: stop on S | G
  const auto weak =
      make_wish("weak", parse_formula("G"), "stop_checking", 1, parse_formula("S | G"));
  CHECK(weak.stop_condition == parse_formula("S | G"));
  // default stop is the goal itself
  const auto strict = make_wish("strict", parse_formula("G"), "stop_checking", 1);
  CHECK(strict.stop_condition == parse_formula("G"));
}

TEST_CASE("waiting checks on the period schedule and stops at the first success") {
  // goal becomes true at step 7, checks at 0,3,6,9 -> stops at 9
  const auto wish = make_wish("present", parse_formula("present_here"), "stop_checking", 3);
  const auto result = simulate_wait(wish, present_world(7), 30);
  REQUIRE(result.stopped_at.has_value());
  CHECK(*result.stopped_at == 9);
  CHECK_FALSE(result.trace.truncated);

  // events: tested at 0,3,6,9 plus fired and action_executed at 9
  CHECK(result.trace.count(EventKind::Tested) == 4);
  CHECK(result.trace.count(EventKind::Fired) == 1);
  CHECK(result.trace.count(EventKind::ActionExecuted) == 1);
  CHECK(result.trace.events.back().kind == EventKind::ActionExecuted);
  CHECK(result.trace.events.back().action == "stop_checking");
  CHECK(result.trace.events.back().time == 9);

  // no event falls on a non-check step
  for (const auto& e : result.trace.events) CHECK(e.time % 3 == 0);

  // independent scan: the stopping step is the minimal check step satisfying
  // the stop condition
  int minimal = -1;
  for (int t = 0; t < 30; t += 3) {
    if (evaluate(wish.stop_condition, present_world(7).at(t))) {
      minimal = t;
      break;
    }
  }
  CHECK(minimal == *result.stopped_at);
}

TEST_CASE("goal true at step 0 stops at the first check") {
  const auto wish = make_wish("present", parse_formula("present_here"), "stop_checking", 5);
  const auto result = simulate_wait(wish, present_world(0), 30);
  REQUIRE(result.stopped_at.has_value());
  CHECK(*result.stopped_at == 0);
}

TEST_CASE("a weaker stop condition can stop without the goal") {
  // stop on raining | G; rain starts at 3, the goal never arrives
  World w({"raining", "G"});
  w.set(3, "raining", true);
  const auto wish =
      make_wish("pessimist", parse_formula("G"), "stop_checking", 1, parse_formula("raining | G"));
  const auto result = simulate_wait(wish, w, 50);
  REQUIRE(result.stopped_at.has_value());
  CHECK(*result.stopped_at == 3);
  // the goal itself still does not hold at the stopping step
  CHECK_FALSE(evaluate(wish.goal, w.at(3)));
}

TEST_CASE("never-stopping waits truncate at the step budget") {
  const auto wish = make_wish("forever", parse_formula("present_here"), "stop_checking", 4);
  const auto result = simulate_wait(wish, present_world(-1), 20);
  CHECK_FALSE(result.stopped_at.has_value());
  CHECK(result.trace.truncated);
  CHECK(result.trace.count(EventKind::Tested) == 5);  // 0,4,8,12,16
  CHECK(result.trace.count(EventKind::ActionExecuted) == 0);
}

TEST_CASE("wish strength, condition dimension: strict goal beats giving-up clause") {
  const auto strict = make_wish("strict", parse_formula("G"), "stop_checking", 3);
  const auto weak =
      make_wish("weak", parse_formula("G"), "stop_checking", 3, parse_formula("S | G"));
  const auto cmp = compare_wishes(strict, weak);
  CHECK(cmp.condition == Verdict::Stronger);
  CHECK(cmp.frequency == Verdict::Equal);
  // witness: a circumstance that stops the weak wish but not the strict one
  REQUIRE(cmp.condition_witness.has_value());
  CHECK(evaluate(weak.stop_condition, *cmp.condition_witness));
  CHECK_FALSE(evaluate(strict.stop_condition, *cmp.condition_witness));

  const auto mirror = compare_wishes(weak, strict);
  CHECK(mirror.condition == Verdict::Weaker);
}

TEST_CASE("wish strength, frequency dimension: checking more often is stronger") {
  const auto eager = make_wish("eager", parse_formula("G"), "cheer", 1);
  const auto lazy = make_wish("lazy", parse_formula("G"), "cheer", 5);
  const auto cmp = compare_wishes(eager, lazy);
  CHECK(cmp.frequency == Verdict::Stronger);
  CHECK(cmp.condition == Verdict::Equal);
  CHECK(compare_wishes(lazy, eager).frequency == Verdict::Weaker);
}

TEST_CASE("identical wishes are equal on both dimensions") {
  const auto a = make_wish("a", parse_formula("G"), "cheer", 2);
  const auto b = make_wish("b", parse_formula("G"), "cheer", 2);
  const auto cmp = compare_wishes(a, b);
  CHECK(cmp.frequency == Verdict::Equal);
  CHECK(cmp.condition == Verdict::Equal);
  CHECK_FALSE(cmp.condition_witness.has_value());
}

TEST_CASE("dimensions are reported separately and may disagree") {
  // checks less often but with the stricter stop condition
  const auto patient = make_wish("patient", parse_formula("G"), "cheer", 5);
  const auto flighty =
      make_wish("flighty", parse_formula("G"), "cheer", 1, parse_formula("S | G"));
  const auto cmp = compare_wishes(patient, flighty);
  CHECK(cmp.frequency == Verdict::Weaker);
  CHECK(cmp.condition == Verdict::Stronger);
  const auto text = cmp.to_string("patient", "flighty");
  CHECK(text.find("frequency dimension: right stronger") != std::string::npos);
  CHECK(text.find("condition dimension: left stronger") != std::string::npos);
}

TEST_CASE("football case: a wish paired with an ordinary cheering tendency") {
  const auto wish = make_wish("score", parse_formula("goal_scored"), "cheer", 1);
  const auto cheer = make_tendency("excitement", "cheer", parse_formula("goal_scored"));
  World w({"goal_scored"});
  w.set(4, "goal_scored", true);
  const auto result = simulate_wait(wish, w, 10);
  REQUIRE(result.stopped_at.has_value());
  CHECK(*result.stopped_at == 4);
  CHECK(fires(cheer, w.at(*result.stopped_at)));
  CHECK_FALSE(fires(cheer, w.at(3)));
}
