#include <doctest.h>

#include "conatus/catalog.hpp"
#include "conatus/errors.hpp"
#include "conatus/intensity.hpp"
#include "conatus/parser.hpp"
#include "conatus/tendency.hpp"

using namespace conatus;

TEST_CASE("make_tendency validates and fires on its condition") {
  const auto thirst = make_tendency("thirst", "drink", parse_formula("water_at_hand"));
  CHECK_FALSE(thirst.degenerate);
  CHECK(fires(thirst, Circumstance{{"water_at_hand", true}}));
  CHECK_FALSE(fires(thirst, Circumstance{{"water_at_hand", false}}));

  CHECK_THROWS_AS(make_tendency("bad id", "drink", parse_formula("a")), ValidationError);
  CHECK_THROWS_AS(make_tendency("ok", "9drink", parse_formula("a")), ValidationError);
}

TEST_CASE("a contradictory condition is flagged degenerate and never fires") {
  const auto dead = make_tendency("dead", "drink", parse_formula("C1 & !C1"));
  CHECK(dead.degenerate);
  CHECK_FALSE(fires(dead, Circumstance{{"C1", true}}));
  CHECK_FALSE(fires(dead, Circumstance{{"C1", false}}));
}

TEST_CASE("force kind is metadata only") {
  const auto gravity =
      make_tendency("gravity", "falls", parse_formula("!support"), TendencyKind::Force);
  CHECK(gravity.kind == TendencyKind::Force);
  CHECK(fires(gravity, Circumstance{{"support", false}}));

  // kind-blindness: intensity comparison across a force/emotion pair works
  const auto fear = make_tendency("fear", "flee", parse_formula("!support & dark"));
  const auto rel = compare(gravity, fear);
  CHECK(rel.verdict == Verdict::Stronger);
}

TEST_CASE("horse case: reins condition, and the calm horse is plain absence") {
  const auto horse = make_tendency("horse_pull", "move_forward", parse_formula("reins_cut"));
  CHECK(fires(horse, Circumstance{{"reins_cut", true}}));
  // case (a) is represented by not constructing any tendency at all; the
  // degenerate-false encoding stays available for testing:
  const auto calm = make_tendency("calm_horse", "move_forward", parse_formula("false"));
  CHECK(calm.degenerate);
}

TEST_CASE("hunger with a diet conjunct") {
  const auto hunger =
      make_tendency("hunger", "eat", parse_formula("food_at_hand & !on_diet"));
  CHECK_FALSE(fires(hunger, Circumstance{{"food_at_hand", true}, {"on_diet", true}}));
  CHECK(fires(hunger, Circumstance{{"food_at_hand", true}, {"on_diet", false}}));
}

TEST_CASE("standard catalog: exact entry list in order") {
  const auto& entries = standard_catalog();
  std::vector<std::string> names;
  for (const auto& e : entries) names.push_back(e.emotion_name);
  CHECK(names == std::vector<std::string>{"hunger", "thirst", "itch", "cold", "hot", "fear",
                                          "love", "regret", "hate", "pain", "excitement",
                                          "pleasure", "beauty"});
}

TEST_CASE("catalog lookups match the dictionary") {
  const auto* fear = catalog_lookup("fear");
  REQUIRE(fear != nullptr);
  CHECK(fear->quality == "flee");
  CHECK(fear->gloss == "desiring to flee, or escape");
  CHECK_FALSE(fear->is_form);

  const auto* itch = catalog_lookup("itch");
  REQUIRE(itch != nullptr);
  CHECK(itch->quality == "scratch");

  const auto* beauty = catalog_lookup("beauty");
  REQUIRE(beauty != nullptr);
  CHECK(beauty->is_form);
  CHECK_FALSE(beauty->tendency_template.has_value());

  const auto* pleasure = catalog_lookup("pleasure");
  REQUIRE(pleasure != nullptr);
  CHECK(pleasure->is_form);
  CHECK(pleasure->gloss == "desiring to do what is being done");

  CHECK(catalog_lookup("boredom") == nullptr);
}

TEST_CASE("every base entry's template parses and is satisfiable") {
  for (const auto& e : standard_catalog()) {
    if (e.is_form) continue;
    REQUIRE(e.tendency_template.has_value());
    const auto& t = *e.tendency_template;
    CHECK_FALSE(t.degenerate);
    CHECK(t.condition == parse_formula(t.condition.to_string()));
    CHECK(satisfiable(t.condition));
  }
}

TEST_CASE("catalog export is one tab-separated record per entry") {
  const auto text = catalog_export();
  std::size_t lines = 0;
  for (char c : text) lines += (c == '\n');
  CHECK(lines == standard_catalog().size());
  CHECK(text.find("thirst\tbase\tdrink\twater_at_hand\tdesiring to drink\n") !=
        std::string::npos);
  CHECK(text.find("pleasure\tform\t\t\tdesiring to do what is being done\n") !=
        std::string::npos);
}
