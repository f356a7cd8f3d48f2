#include <doctest.h>

#include <cstring>
#include <string>

#include "json.hpp"
#include "nichols/nichols_c.h"
#include "nichols/session.hpp"

using namespace nichols;
using json = nlohmann::ordered_json;

namespace {

const std::string kW = R"({
  "group": {"abelian": [2, 2, 2], "symbol": "h"},
  "cocycle": {"sign3": true},
  "tuples": {"W": ["W1", "W2", "W3"]}
})";

std::string session_path(const char* name) { return std::string(NICHOLS_SOURCE_DIR) + "/sessions/" + name; }

}  // namespace

TEST_CASE("session: presets resolve without declarations") {
  const Session s = Session::parse(kW);
  CHECK(s.group().order() == 8);
  CHECK(s.tuple("W").theta() == 3);
  CHECK(s.tuple("W1,W4").theta() == 2);
  CHECK(s.module("W5").dim() == 2);
  CHECK_THROWS_AS(s.module("W9"), std::invalid_argument);
  CHECK(s.validate().passed);
}

TEST_CASE("session: schema errors are parse errors") {
  CHECK_THROWS_AS(Session::parse("{"), ParseError);
  CHECK_THROWS_AS(Session::parse("[]"), ParseError);
  CHECK_THROWS_AS(Session::parse(R"({"cocycle": {"trivial": true}})"), ParseError);
  CHECK_THROWS_AS(Session::parse(R"({"group": {"abelian": [2]}, "extra": 1})"), ParseError);
  CHECK_THROWS_AS(Session::parse(R"({"group": {"abelian": [2]}, "cocycle": {"sign3": true}})"), ParseError);
  CHECK_THROWS_AS(Session::parse(R"({"group": {"abelian": [2]}, "cocycle": {"table": [1, 1]}})"), ParseError);
  CHECK_THROWS_AS(Session::parse(R"({"group": {"abelian": [2]},
      "modules": {"A": {"degrees": ["g1"], "action": {"g1": [[1, 0]]}}}})"),
                  ParseError);
  CHECK_THROWS_AS(Session::parse(R"({"group": {"abelian": [2]},
      "modules": {"A": {"degrees": ["q7"]}}})"),
                  ParseError);
  CHECK_THROWS_AS(Session::parse(R"({"group": {"abelian": [2]},
      "modules": {"A": {"dim": 2, "degrees": ["g1"]}}})"),
                  ParseError);
}

TEST_CASE("session: cocycle and module failures surface in validate") {
  const Session bad = Session::parse(R"({"group": {"abelian": [2]}, "cocycle": {"table": [1,1,1,1,1,1,1,2]}})");
  const auto v = bad.validate();
  CHECK_FALSE(v.passed);
  CHECK(v.lines.front().rfind("cocycle: FAIL", 0) == 0);
  CHECK_THROWS_AS(bad.require_valid(), ValidationError);

  const Session unresolved = Session::parse(R"({"group": {"abelian": [2, 2, 2]}, "cocycle": {"sign3": true},
      "tuples": {"T": ["W1", "Q"]}})");
  CHECK_FALSE(unresolved.validate().passed);
  CHECK_THROWS_AS(command_cartan(unresolved, "T", OutputFormat::Text), ValidationError);
}

TEST_CASE("session: explicit module stanza equals its preset") {
  const Session s = Session::parse(R"({
    "group": {"abelian": [2, 2, 2], "symbol": "h"},
    "cocycle": {"sign3": true},
    "modules": {"A": {"dim": 2, "degrees": ["h1", "h1"],
                      "action": {"h1": [[-1, 0], [0, -1]], "h2": [[1, 0], [0, -1]], "h3": [[0, 1], [1, 0]]}}}
  })");
  CHECK(s.validate().passed);
  CHECK(is_isomorphic(s.module("A"), s.module("W1")));
}

TEST_CASE("session: reflect stanzas re-ingest to isomorphic modules") {
  const Session s = Session::parse(kW);
  for (std::size_t i = 1; i <= 3; ++i) {
    const json r = json::parse(command_reflect(s, "W", i, OutputFormat::Json));
    json next = json::parse(kW);
    next["modules"] = r["modules"];
    next["tuples"] = r["tuples"];
    const Session t = Session::parse(next.dump());
    CHECK(t.validate().passed);
    const std::string name = r["tuple"].get<std::string>();
    CHECK(tuples_isomorphic(t.tuple(name), reflect(s.tuple("W"), i - 1)));
  }
}

TEST_CASE("session: text reflection names the iso classes") {
  const Session s = Session::parse(kW);
  const json r = json::parse(command_reflect(s, "W", 2, OutputFormat::Json));
  std::vector<std::string> iso;
  for (const auto& e : r["entries"]) iso.push_back(e["iso"].get<std::string>());
  CHECK(iso == std::vector<std::string>{"W4", "W2", "W6"});
}

TEST_CASE("session: outputs are deterministic") {
  const Session a = Session::parse(kW);
  const Session b = Session::parse(kW);
  CHECK(command_graph(a, "W", OutputFormat::Text) == command_graph(b, "W", OutputFormat::Text));
  CHECK(command_certify(a, "W", OutputFormat::Json) == command_certify(a, "W", OutputFormat::Json));
  CHECK(command_nichols(a, "W1,W2", 3, OutputFormat::Text) == command_nichols(b, "W1,W2", 3, OutputFormat::Text));
}

TEST_CASE("session: command payloads") {
  const Session s = Session::parse(kW);
  const json n = json::parse(command_nichols(s, "W1", 3, OutputFormat::Json));
  std::vector<std::size_t> dims;
  for (const auto& row : n["degrees"]) dims.push_back(row["dim"].get<std::size_t>());
  CHECK(dims == std::vector<std::size_t>{1, 2, 1, 0});
  CHECK(n["finite"] == true);
  CHECK(n["dimension"] == 4);

  const json c = json::parse(command_certify(s, "W", OutputFormat::Json));
  CHECK(c["verdict"] == "infinite-dimensional");
  CHECK(c["cartan"] == json::parse("[[2,-1,-1],[-1,2,-1],[-1,-1,2]]"));

  const json roots = json::parse(command_roots(s, "W1,W2", 50, OutputFormat::Json));
  CHECK(roots["count"] == 6);
  CHECK(roots["truncated"] == false);

  const json ad = json::parse(command_ad(s, "W", 3, 1, OutputFormat::Json));
  CHECK(ad["m"] == 1);
  CHECK(ad["levels"][1]["iso"] == "W5");
  CHECK_THROWS_AS(command_ad(s, "W", 1, 1, OutputFormat::Text), std::invalid_argument);
  CHECK_THROWS_AS(command_reflect(s, "W", 4, OutputFormat::Text), std::invalid_argument);
}

TEST_CASE("c api: status codes and ownership") {
  nb_session* s = nullptr;
  REQUIRE(nb_session_open_file(session_path("w222.json").c_str(), &s) == NB_OK);
  char* out = nullptr;
  int passed = 0;
  CHECK(nb_validate(s, NB_FORMAT_TEXT, &passed, &out) == NB_OK);
  CHECK(passed == 1);
  nb_string_free(out);

  CHECK(nb_cartan(s, "W", NB_FORMAT_TEXT, &out) == NB_OK);
  CHECK(std::string(out).find("[[2,-1,-1],[-1,2,-1],[-1,-1,2]]") != std::string::npos);
  nb_string_free(out);

  CHECK(nb_ad(s, "W", 0, 2, NB_FORMAT_TEXT, &out) == NB_ERR_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(std::strlen(nb_last_error()) > 0);
  CHECK(nb_cartan(s, "nope", NB_FORMAT_TEXT, &out) == NB_ERR_ARGUMENT);
  CHECK(nb_cartan(nullptr, "W", NB_FORMAT_TEXT, &out) == NB_ERR_ARGUMENT);
  nb_session_close(s);

  CHECK(nb_session_open_string("{", &s) == NB_ERR_PARSE);
  CHECK(s == nullptr);
  CHECK(nb_session_open_file("/nonexistent/session.json", &s) == NB_ERR_PARSE);

  REQUIRE(nb_session_open_string(R"({"group": {"abelian": [2,2,2]}, "cocycle": {"sign3": true},
      "cutoffs": {"ad": 1, "vertices": 3}})",
                                 &s) == NB_OK);
  CHECK(nb_cartan(s, "W1,W2,W3", NB_FORMAT_TEXT, &out) == NB_ERR_UNDECIDED);
  nb_session_close(s);
  REQUIRE(nb_session_open_string(R"({"group": {"abelian": [2,2,2]}, "cocycle": {"sign3": true},
      "cutoffs": {"vertices": 3}})",
                                 &s) == NB_OK);
  CHECK(nb_graph(s, "W1,W2,W3", NB_FORMAT_TEXT, &out) == NB_ERR_RESOURCE);
  nb_session_close(s);
  REQUIRE(nb_session_open_string(R"({"group": {"abelian": [2]}, "cocycle": {"table": [1,1,1,1,1,1,1,2]}})", &s) ==
          NB_OK);
  CHECK(nb_certify(s, "W1", NB_FORMAT_TEXT, &out) == NB_ERR_VALIDATION);
  nb_session_close(s);
}
