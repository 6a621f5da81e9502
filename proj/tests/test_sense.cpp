#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdtb/sense.hpp"

using namespace gdtb;

TEST_CASE("builtin hierarchy holds the full PDTB v3 inventory") {
  SenseHierarchy h = SenseHierarchy::builtin();
  CHECK(h.all().size() == 29);
  CHECK(h.valid({"Temporal", "Synchronous", ""}));
  CHECK(h.valid({"Contingency", "Cause", "Reason"}));
  CHECK(h.valid({"Contingency", "Cause", "NegResult"}));
  CHECK(h.valid({"Expansion", "Substitution", "Arg1-as-subst"}));
  CHECK(h.valid({"Contingency", "Cause", ""}));  // bare Level-2 prefix is fine
  CHECK_FALSE(h.valid({"Expansion", "Cause", "Reason"}));
  CHECK_FALSE(h.valid({"Contingency", "Cause", "Bogus"}));
}

TEST_CASE("directional distinguishes symmetric Level-2 senses") {
  SenseHierarchy h = SenseHierarchy::builtin();
  CHECK(h.directional("Contingency", "Cause"));
  CHECK(h.directional("Comparison", "Concession"));
  CHECK(h.directional("Temporal", "Asynchronous"));
  CHECK(h.directional("Expansion", "Level-of-detail"));
  CHECK_FALSE(h.directional("Temporal", "Synchronous"));
  CHECK_FALSE(h.directional("Comparison", "Contrast"));
  CHECK_FALSE(h.directional("Expansion", "Conjunction"));
  CHECK_FALSE(h.directional("Expansion", "Equivalence"));
}

TEST_CASE("normalize strips belief and speech-act variants") {
  SenseHierarchy h = SenseHierarchy::builtin();
  CHECK(h.normalize("Contingency.Cause+Belief.Reason").full() ==
        "Contingency.Cause.Reason");
  CHECK(h.normalize("Contingency.Cause+SpeechAct.Result+SpeechAct").full() ==
        "Contingency.Cause.Result");
  CHECK(h.normalize("Comparison.Concession+SpeechAct.Arg2-as-denier+SpeechAct")
            .full() == "Comparison.Concession.Arg2-as-denier");
}

TEST_CASE("normalize canonicalizes case") {
  SenseHierarchy h = SenseHierarchy::builtin();
  CHECK(h.normalize("expansion.conjunction").full() == "Expansion.Conjunction");
  CHECK(h.normalize("CONTINGENCY.PURPOSE.ARG2-AS-GOAL").full() ==
        "Contingency.Purpose.Arg2-as-goal");
}

TEST_CASE("normalize accepts Level-2 prefixes of directional senses") {
  SenseHierarchy h = SenseHierarchy::builtin();
  SenseLabel s = h.normalize("Comparison.Concession");
  CHECK(s.level3.empty());
  CHECK(s.at_level(2) == "Comparison.Concession");
}

TEST_CASE("normalize rejects labels outside the hierarchy") {
  SenseHierarchy h = SenseHierarchy::builtin();
  CHECK_THROWS_AS(h.normalize("Temporal"), std::runtime_error);
  CHECK_THROWS_AS(h.normalize("Contingency.Cause.Bogus"), std::runtime_error);
  CHECK_THROWS_AS(h.normalize("Foo.Bar"), std::runtime_error);
  CHECK_THROWS_AS(h.normalize("A.B.C.D"), std::runtime_error);
}

TEST_CASE("normalize is idempotent") {
  SenseHierarchy h = SenseHierarchy::builtin();
  for (const SenseLabel& s : h.all()) {
    CHECK(h.normalize(s.full()) == s);
  }
}

TEST_CASE("at_level truncates the dotted path") {
  SenseLabel s{"Contingency", "Cause", "Reason"};
  CHECK(s.at_level(1) == "Contingency");
  CHECK(s.at_level(2) == "Contingency.Cause");
  CHECK(s.at_level(3) == "Contingency.Cause.Reason");
  SenseLabel l2{"Comparison", "Contrast", ""};
  CHECK(l2.at_level(3) == "Comparison.Contrast");
  CHECK(l2.full() == "Comparison.Contrast");
}

TEST_CASE("shipped hierarchy file matches the builtin inventory") {
  SenseHierarchy file =
      SenseHierarchy::load(std::string(GDTB_RESOURCES_DIR) + "/sense_hierarchy.tsv");
  SenseHierarchy builtin = SenseHierarchy::builtin();
  CHECK(file.all() == builtin.all());
}

TEST_CASE("load rejects malformed hierarchy files") {
  CHECK_THROWS_AS(SenseHierarchy::load("/nonexistent/senses.tsv"),
                  std::runtime_error);
}
