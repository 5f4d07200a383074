#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "predeq/predeq.h"

namespace {

const char* gamma_text =
    "structure gamma\n  elements v1 v2 v3 v4 v5\n  predicate E 3\n    (v1, v1, v2)\n"
    "    (v1, v3, v3)\n    (v2, v4, v1)\n    (v3, v2, v2)\n    (v5, v4, v5)\nend\n";

const char* systems_text =
    "system s\n  vars x y\n  E(x, v4, y)\n  x = v2\n  E(x, v4, v1)\nend\n"
    "system t\n  vars x y\n  E(x, v4, y)\n  E(x, v4, v1)\nend\n";

struct Fixture {
  predeq_structure* s = nullptr;
  predeq_systems* sys = nullptr;
  Fixture() {
    REQUIRE(predeq_structure_parse(gamma_text, std::strlen(gamma_text), &s) == PREDEQ_OK);
    REQUIRE(predeq_systems_parse(s, systems_text, std::strlen(systems_text), &sys) == PREDEQ_OK);
  }
  ~Fixture() {
    predeq_systems_free(sys);
    predeq_structure_free(s);
  }
};

nlohmann::json take_json(predeq_report* r) {
  auto j = nlohmann::json::parse(predeq_report_json(r));
  predeq_report_free(r);
  return j;
}

}  // namespace

TEST_CASE_FIXTURE(Fixture, "systems lookup") {
  CHECK(predeq_systems_count(sys) == 2);
  CHECK(predeq_systems_find(sys, "t") == 1);
  CHECK(predeq_systems_find(sys, "nope") == static_cast<size_t>(-1));
}

TEST_CASE_FIXTURE(Fixture, "solve, equiv, minimize, classify") {
  predeq_report* r = nullptr;
  REQUIRE(predeq_solve(s, sys, 0, &r) == PREDEQ_OK);
  auto j = take_json(r);
  CHECK(j["schema"] == 1);
  CHECK(j["points"] == nlohmann::json::parse(R"([["v2","v1"]])"));

  REQUIRE(predeq_equiv(s, sys, 0, 1, &r) == PREDEQ_OK);
  CHECK(take_json(r)["equivalent"] == true);

  REQUIRE(predeq_minimize(s, sys, 0, 1, &r) == PREDEQ_OK);
  CHECK(take_json(r)["kept"].size() == 2);

  REQUIRE(predeq_classify(sys, 0, &r) == PREDEQ_OK);
  j = take_json(r);
  CHECK(j["shapes"]["mixed"].size() == 3);

  CHECK(predeq_solve(s, sys, 9, &r) == PREDEQ_E_USAGE);
}

TEST_CASE_FIXTURE(Fixture, "project and glue goldens") {
  predeq_report* r = nullptr;
  const size_t keep[] = {1, 3};
  const size_t pos[] = {2};
  const char* el[] = {"v4"};
  REQUIRE(predeq_project(s, "E", keep, 2, pos, el, 1, &r) == PREDEQ_OK);
  CHECK(std::string(predeq_report_text(r)) == "{(v2,v1),(v5,v5)}\n");
  predeq_report_free(r);
  REQUIRE(predeq_project(s, "E", nullptr, 0, pos, el, 1, &r) == PREDEQ_OK);
  CHECK(std::string(predeq_report_text(r)) == "{(v2,v1),(v5,v5)}\n");
  predeq_report_free(r);

  const size_t labels[] = {1, 2, 2};
  REQUIRE(predeq_glue(s, "E", labels, 3, &r) == PREDEQ_OK);
  CHECK(std::string(predeq_report_text(r)) == "{(v1,v3),(v3,v2)}\n");
  predeq_report_free(r);

  const size_t wrong_keep[] = {1};
  CHECK(predeq_project(s, "E", wrong_keep, 1, pos, el, 1, &r) == PREDEQ_E_USAGE);
  const char* missing[] = {"v9"};
  CHECK(predeq_project(s, "E", nullptr, 0, pos, missing, 1, &r) == PREDEQ_E_MODEL);
  CHECK(std::string(predeq_last_error()).find("v9") != std::string::npos);
  CHECK(predeq_glue(s, "E", labels, 2, &r) == PREDEQ_E_USAGE);
  CHECK(predeq_glue(s, "F", labels, 3, &r) == PREDEQ_E_MODEL);
}

TEST_CASE("parse errors report positions") {
  predeq_structure* s = nullptr;
  const char* bad = "structure s\nelements a\npredicate E 2\n(a)\nend\n";
  CHECK(predeq_structure_parse(bad, std::strlen(bad), &s) == PREDEQ_E_PARSE);
  CHECK(s == nullptr);
  CHECK(predeq_last_error_line() == 4);
  CHECK(predeq_last_error_column() == 1);
  CHECK(predeq_structure_parse(nullptr, 0, &s) == PREDEQ_E_USAGE);
}

TEST_CASE("searches report whether a witness was found") {
  predeq_structure* s = nullptr;
  REQUIRE(predeq_structure_builtin("base-graph", 4, &s) == PREDEQ_OK);
  predeq_report* r = nullptr;
  REQUIRE(predeq_staircase(s, "E", 1, 1, 4, &r) == PREDEQ_OK);
  CHECK(take_json(r)["found"] == true);
  REQUIRE(predeq_clique(s, "E", 3, &r) == PREDEQ_OK);
  CHECK(take_json(r)["found"] == false);
  REQUIRE(predeq_graph(s, "E", 0, 4, &r) == PREDEQ_OK);
  CHECK(take_json(r)["staircase"]["depth"] == 4);
  predeq_scan_caps caps;
  predeq_scan_caps_default(&caps);
  REQUIRE(predeq_criterion(s, 2, &caps, &r) == PREDEQ_OK);
  CHECK(take_json(r)["command"] == "criterion");
  caps.max_permutations = 0;
  CHECK(predeq_criterion(s, 2, &caps, &r) == PREDEQ_E_MODEL);
  CHECK(predeq_staircase(s, "E", 2, 1, 2, &r) == PREDEQ_E_MODEL);
  predeq_structure_free(s);
  CHECK(predeq_structure_builtin("nothing", 2, &s) == PREDEQ_E_MODEL);
}

TEST_CASE("poset analysis through the C API") {
  predeq_report* r = nullptr;
  REQUIRE(predeq_poset_builtin("int-strict", "negative", 3, 30, &r) == PREDEQ_OK);
  auto j = take_json(r);
  CHECK(j["consistent"] == true);
  CHECK(j["growth_down"]["stabilized"] == false);
  CHECK(predeq_poset_builtin("int-strict", "sideways", 3, 30, &r) == PREDEQ_E_MODEL);

  predeq_structure* s = nullptr;
  REQUIRE(predeq_structure_builtin("int-nonstrict", 3, &s) == PREDEQ_OK);
  REQUIRE(predeq_poset_structure(s, "le", 0, "all", 2, 7, &r) == PREDEQ_OK);
  CHECK(take_json(r)["clique_searched"] == false);
  CHECK(predeq_poset_structure(s, "le", 1, "all", 2, 7, &r) == PREDEQ_E_MODEL);
  predeq_structure_free(s);
}

TEST_CASE("gen prints the canonical text") {
  predeq_structure* s = nullptr;
  REQUIRE(predeq_structure_builtin("clique-graph", 2, &s) == PREDEQ_OK);
  predeq_report* r = nullptr;
  REQUIRE(predeq_gen(s, &r) == PREDEQ_OK);
  CHECK(std::string(predeq_report_text(r)) ==
        "structure clique-graph\n  elements v1 v2\n  predicate E 2\n    (v1, v2)\n    (v2, v1)\nend\n");
  predeq_report_free(r);
  predeq_structure_free(s);
}
