#include <doctest.h>

#include <algorithm>
#include <random>

#include "conatus/errors.hpp"
#include "conatus/parser.hpp"
#include "conatus/regularity.hpp"

using namespace conatus;

namespace {

Observation obs(int t, std::initializer_list<std::pair<const std::string, bool>> facts,
                bool occurred, const char* outcome = "fall") {
  return Observation{t, Circumstance(facts), occurred, outcome};
}

}  // namespace

TEST_CASE("the tray: five confirmations of the force schema") {
  Regularity force = make_regularity("tray_force", parse_formula("!support"), "fall");
  std::vector<Observation> log;
  for (int t = 0; t < 5; ++t) log.push_back(obs(t, {{"support", false}}, true));
  const auto updated = test_regularity(force, log);
  CHECK_FALSE(updated.refuted);
  CHECK(updated.support == 5);
  CHECK(updated.report() == "unrefuted, support 5");
}

TEST_CASE("a counterexample refutes at its time") {
  Regularity force = make_regularity("tray_force", parse_formula("!support"), "fall");
  const auto updated = test_regularity(
      force, {obs(0, {{"support", false}}, true), obs(3, {{"support", false}}, false),
              obs(4, {{"support", false}}, true)});
  CHECK(updated.refuted);
  CHECK(updated.refuted_at == 3);
  CHECK(updated.support == 2);  // support still counts every confirmation
  CHECK(updated.report() == "refuted at t=3, support 2");
}

TEST_CASE("trigger-false observations neither confirm nor refute") {
  Regularity force = make_regularity("tray_force", parse_formula("!support"), "fall");
  const auto updated = test_regularity(
      force, {obs(0, {{"support", true}}, false), obs(1, {{"support", true}}, true)});
  CHECK_FALSE(updated.refuted);
  CHECK(updated.support == 0);
}

TEST_CASE("the moon: zero observations leave the hypothesis standing") {
  Regularity moon = make_regularity("moon_there", parse_formula("look"), "see");
  const auto updated = test_regularity(moon, {});
  CHECK_FALSE(updated.refuted);
  CHECK(updated.support == 0);
  CHECK(updated.report() == "unrefuted, support 0");
}

TEST_CASE("observations about other outcomes are ignored") {
  Regularity moon = make_regularity("moon_there", parse_formula("look"), "see");
  const auto updated =
      test_regularity(moon, {obs(0, {{"look", true}}, false, "hear")});
  CHECK_FALSE(updated.refuted);
  CHECK(updated.support == 0);
}

TEST_CASE("refutation is monotone and records the time-minimal counterexample") {
  Regularity force = make_regularity("f", parse_formula("!support"), "fall");
  // shuffled input: the earliest refutation must win regardless of order
  std::vector<Observation> log = {obs(9, {{"support", false}}, false),
                                  obs(2, {{"support", false}}, false),
                                  obs(5, {{"support", false}}, true),
                                  obs(7, {{"support", false}}, false)};
  std::mt19937 rng(99);
  for (int round = 0; round < 20; ++round) {
    std::shuffle(log.begin(), log.end(), rng);
    const auto updated = test_regularity(force, log);
    REQUIRE(updated.refuted);
    REQUIRE(updated.refuted_at == 2);
    REQUIRE(updated.support == 1);
  }
}

TEST_CASE("final state is order independent without refutations") {
  Regularity force = make_regularity("f", parse_formula("!support"), "fall");
  std::vector<Observation> log = {obs(4, {{"support", false}}, true),
                                  obs(1, {{"support", true}}, false),
                                  obs(2, {{"support", false}}, true)};
  std::mt19937 rng(3);
  for (int round = 0; round < 10; ++round) {
    std::shuffle(log.begin(), log.end(), rng);
    const auto updated = test_regularity(force, log);
    REQUIRE_FALSE(updated.refuted);
    REQUIRE(updated.support == 2);
  }
}

TEST_CASE("unknown trigger atom surfaces by name") {
  Regularity force = make_regularity("f", parse_formula("!support & heavy"), "fall");
  try {
    test_regularity(force, {obs(0, {{"support", false}}, true)});
    FAIL("expected UnknownAtomError");
  } catch (const UnknownAtomError& e) {
    CHECK(e.atom() == "heavy");
  }
}

TEST_CASE("two-hands force is stronger than one-hand force") {
  const Regularity one = make_regularity("one_hand", parse_formula("!C1"), "fall");
  const Regularity two = make_regularity("two_hands", parse_formula("!(C1 & C2)"), "fall");
  CHECK(compare_forces(two, one).verdict == Verdict::Stronger);
  CHECK(compare_forces(one, two).verdict == Verdict::Weaker);
  CHECK(compare_forces(one, one).verdict == Verdict::Equal);
  const auto inc = compare_forces(make_regularity("a", parse_formula("!C1"), "fall"),
                                  make_regularity("b", parse_formula("!C2"), "fall"));
  CHECK(inc.verdict == Verdict::Incomparable);
}

TEST_CASE("compare_forces delegates exactly to tendency comparison") {
  const char* triggers[] = {"!C1", "!(C1 & C2)", "C1 | C2", "C1", "true", "false"};
  for (const char* a : triggers) {
    for (const char* b : triggers) {
      const auto via_forces = compare_forces(make_regularity("ra", parse_formula(a), "fall"),
                                             make_regularity("rb", parse_formula(b), "fall"));
      const auto via_tendencies =
          compare(make_tendency("ta", "fall", parse_formula(a), TendencyKind::Force),
                  make_tendency("tb", "fall", parse_formula(b), TendencyKind::Force));
      REQUIRE(via_forces.verdict == via_tendencies.verdict);
    }
  }
}

TEST_CASE("holds_during: interval semantics of repeated tests") {
  const Regularity force = make_regularity("f", parse_formula("!support"), "fall");
  const std::vector<Observation> log = {obs(1, {{"support", false}}, true),
                                        obs(5, {{"support", false}}, false),
                                        obs(9, {{"support", false}}, true)};
  CHECK(holds_during(force, log, 0, 4));    // confirmations only
  CHECK_FALSE(holds_during(force, log, 0, 5));  // includes the refutation
  CHECK_FALSE(holds_during(force, log, 5, 5));
  CHECK(holds_during(force, log, 6, 9));
  CHECK(holds_during(force, log, 2, 4));    // no observations at all: vacuously true
  CHECK(holds_during(force, log, 100, 200));
  CHECK_THROWS_AS(holds_during(force, log, 7, 3), ValidationError);
}

TEST_CASE("observation log lines round-trip") {
  const Observation o = obs(12, {{"support", false}, {"heavy", true}}, true);
  const std::string line = format_observation(o);
  CHECK(line == "t=12 trigger{heavy=1,support=0} outcome=fall:1");
  const Observation back = parse_observation(line);
  CHECK(back.time == 12);
  CHECK(back.outcome_name == "fall");
  CHECK(back.outcome_occurred);
  CHECK(back.trigger_facts == o.trigger_facts);
}

TEST_CASE("observation log parsing: comments, blanks and errors") {
  const auto log = parse_observation_log(
      "# a comment\n"
      "\n"
      "t=0 trigger{support=0} outcome=fall:1\n"
      "t=1 trigger{support=1} outcome=fall:0\n");
  REQUIRE(log.size() == 2);
  CHECK(log[0].time == 0);
  CHECK(log[1].time == 1);
  CHECK_FALSE(log[1].outcome_occurred);

  CHECK_THROWS_AS(parse_observation("t=x trigger{a=1} outcome=f:1"), ValidationError);
  CHECK_THROWS_AS(parse_observation("trigger{a=1} outcome=f:1"), ValidationError);
  CHECK_THROWS_AS(parse_observation("t=1 trigger{a=2} outcome=f:1"), ValidationError);
  CHECK_THROWS_AS(parse_observation("t=1 trigger{a=1} outcome=f"), ValidationError);
}

TEST_CASE("vacuity property: any regularity survives an empty log") {
  for (const char* trigger : {"look", "!support", "a & b -> c", "false", "true"}) {
    const auto updated =
        test_regularity(make_regularity("r", parse_formula(trigger), "seen"), {});
    REQUIRE_FALSE(updated.refuted);
    REQUIRE(updated.support == 0);
  }
}
