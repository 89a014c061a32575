#include <doctest.h>

#include <cmath>
#include <nlohmann/json.hpp>

#include "ksbound/report.hpp"
#include "ksbound/scenario.hpp"
#include "test_util.hpp"

using namespace ksb;
using nlohmann::json;

TEST_CASE("builtin scenarios round-trip byte-identically") {
  for (const std::string name : {"yo13", "kcbs", "cycle:6"}) {
    Scenario s = builtin_scenario(name);
    std::string text = scenario_to_json(s);
    Scenario reloaded = parse_scenario(text, name);
    CHECK(scenario_to_json(reloaded) == text);
  }
}

TEST_CASE("scenario names resolve to builtins") {
  CHECK(is_builtin_scenario_name("yo13"));
  CHECK(is_builtin_scenario_name("kcbs"));
  CHECK(is_builtin_scenario_name("cycle:9"));
  CHECK(is_builtin_scenario_name("cycle(9)"));
  CHECK(!is_builtin_scenario_name("cycle:3"));
  CHECK(!is_builtin_scenario_name("pentagon"));
  CHECK_ERRC(resolve_scenario("no-such-file.json"), Errc::io_error);
  CHECK(resolve_scenario("cycle:5").graph.size() == 10);
}

TEST_CASE("kcbs constraint value is the sqrt(5) surd") {
  Scenario s = builtin_scenario("kcbs");
  REQUIRE(s.constraint.has_value());
  CHECK(!s.constraint->value.is_exact());
  CHECK(s.constraint->value.str() == "sqrt(5)");
  CHECK(s.constraint->value.value() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  CHECK(s.constraint->value.upper_rational() == Rational(161, 72));
  CHECK(s.constraint->mixing_coefficient == Rational(1, 3));
}

TEST_CASE("schema violations carry a pointer to the offending node") {
  json j = json::parse(scenario_to_json(builtin_scenario("kcbs")));

  SUBCASE("context with an unknown label") {
    j["contexts"][2][1] = "Z";
    try {
      parse_scenario(j.dump(), "test");
      FAIL("expected schema violation");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::schema_violation);
      CHECK(std::string(e.what()).find("/contexts/2") != std::string::npos);
    }
  }
  SUBCASE("a_contexts index out of range") {
    j["a_contexts"][0] = 17;
    CHECK_ERRC(parse_scenario(j.dump(), "test"), Errc::bad_index);
  }
  SUBCASE("outcome position naming the wrong label") {
    j["constraint"]["outcome_positions"][0] = {1, 2};
    CHECK_ERRC(parse_scenario(j.dump(), "test"), Errc::schema_violation);
  }
  SUBCASE("unknown surd") {
    j["constraint"]["value"] = "cbrt(5)";
    CHECK_ERRC(parse_scenario(j.dump(), "test"), Errc::schema_violation);
  }
  SUBCASE("unknown golden key") {
    j["golden"]["mystery"] = {{"value", 1}, {"tol", 0}};
    CHECK_ERRC(parse_scenario(j.dump(), "test"), Errc::schema_violation);
  }
  SUBCASE("negative max-group coefficient") {
    j["functionals"]["T"]["max_groups"][0]["coeff"] = "-1/5";
    CHECK_ERRC(parse_scenario(j.dump(), "test"), Errc::schema_violation);
  }
  SUBCASE("bad schema version") {
    j["schema"] = 2;
    CHECK_ERRC(parse_scenario(j.dump(), "test"), Errc::schema_violation);
  }
}

TEST_CASE("missing standard functionals are synthesized") {
  json j = json::parse(scenario_to_json(builtin_scenario("kcbs")));
  j.erase("functionals");
  Scenario s = parse_scenario(j.dump(), "test");
  CHECK(s.find_functional("F") != nullptr);   // from constraint labels
  CHECK(s.find_functional("T") != nullptr);   // from a_contexts
  CHECK(s.find_functional("I") == nullptr);   // never synthesized
  CHECK(s.find_functional("F")->linear().size() == 5);
  CHECK(s.find_functional("T")->max_groups().size() == 5);
}

TEST_CASE("pipeline reports are deterministic") {
  Scenario s = builtin_scenario("cycle:5");
  Report a = run_pipeline(s);
  Report b = run_pipeline(s);
  CHECK(a.json() == b.json());
  CHECK(a.pass());
}

TEST_CASE("kcbs pipeline verdicts pass and note the closed-form discrepancy") {
  Report rep = run_pipeline(builtin_scenario("kcbs"));
  CHECK(rep.pass());
  json j = json::parse(rep.json());
  for (auto it = j["verdicts"].begin(); it != j["verdicts"].end(); ++it)
    CHECK_MESSAGE(it.value()["pass"].get<bool>(), it.key());

  bool noted_sign = false, noted_cap = false;
  for (const json& note : j["steps"]["onci"]["notes"]) {
    std::string text = note.get<std::string>();
    if (text.find("sign") != std::string::npos) noted_sign = true;
    if (text.find("161/72") != std::string::npos) noted_cap = true;
  }
  CHECK(noted_sign);
  CHECK(noted_cap);
  CHECK(j["steps"]["vertices"]["count"] == 12);
  CHECK(j["steps"]["onci"]["envelope"]["alpha"] == "17/5");
  CHECK(j["steps"]["quantum"]["constraint_operator"]["holds"] == false);
}

TEST_CASE("yo13 pipeline matches every golden value") {
  Report rep = run_pipeline(builtin_scenario("yo13"));
  json j = json::parse(rep.json());
  for (auto it = j["verdicts"].begin(); it != j["verdicts"].end(); ++it)
    CHECK_MESSAGE(it.value()["pass"].get<bool>(), it.key());
  CHECK(rep.pass());
  CHECK(j["steps"]["vertices"]["count"] == 420);
  CHECK(j["steps"]["cliques"]["count"] == 16);
  CHECK(j["steps"]["cliques"]["matches_contexts"] == true);
  CHECK(j["steps"]["bounds"]["ks"]["I"] == "7");
  CHECK(j["steps"]["bounds"]["polytope"]["aprime"] == "4");
  CHECK(j["steps"]["onci"]["polytope_max"] == "8/3");
  CHECK(j["steps"]["quantum"]["state_independence"]["holds"] == true);
  CHECK(j["steps"]["quantum"]["constraint_operator"]["holds"] == true);
  CHECK(j["steps"]["quantum"]["uniform_average"]["pass"] == true);
}

TEST_CASE("slice limit r surfaces the nonlinearity of the larger slice") {
  // With the slice extended to the polytope maximum the kcbs conditional
  // maxima are no longer collinear; the pipeline reports that honestly.
  Scenario s = builtin_scenario("kcbs");
  PipelineOptions opts;
  opts.slice_limit = SliceLimit::polytope_max;
  CHECK_ERRC(run_pipeline(s, opts), Errc::envelope_not_collinear);
}

TEST_CASE("hand-written scenarios in dimension 4 load and run") {
  const char* text = R"({
    "name": "k4", "schema": 1, "dimension": 4,
    "vertices": ["a", "b", "c", "d"],
    "edges": [["a","b"], ["a","c"], ["a","d"], ["b","c"], ["b","d"], ["c","d"]],
    "contexts": [["a", "b", "c", "d"]],
    "functionals": {"I": {"linear": {"a": "1"}}},
    "quantum": {
      "vectors": {"a": [1,0,0,0], "b": [0,1,0,0], "c": [0,0,1,0], "d": [0,0,0,1]},
      "state": "maximally_mixed"
    },
    "golden": {
      "vertex_count": {"value": 4, "tol": 0},
      "ks_I": {"value": 1, "tol": 0},
      "quantum_I": {"value": "1/4", "tol": 1e-9}
    }
  })";
  Scenario s = parse_scenario(text, "test");
  CHECK(s.dimension == 4);
  Report rep = run_pipeline(s);
  CHECK(rep.pass());
  json out = json::parse(rep.json());
  CHECK(out["steps"]["vertices"]["count"] == 4);
  CHECK(out["steps"]["quantum"]["realization"]["pass"] == true);
}

TEST_CASE("golden verdicts fail when the target is wrong") {
  Scenario s = builtin_scenario("cycle:4");
  s.golden["clique_count"] = GoldenEntry{Rational(5), 0.0};  // actually 4
  Report rep = run_pipeline(s);
  CHECK(!rep.pass());
  json j = json::parse(rep.json());
  CHECK(j["verdicts"]["clique_count"]["pass"] == false);
}
