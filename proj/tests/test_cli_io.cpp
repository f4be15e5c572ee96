#include <catch_amalgamated.hpp>

#include "grady/cli_io.hpp"

using namespace grady;

namespace {

const char* q_star_job = R"({
  "ring": {"field": "Q", "vars": ["x", "y"]},
  "grading": "fine",
  "ideals": {"q": ["x^4", "x^3*y", "x^2*y^2 + x*y^3", "y^4"]},
  "command": {"op": "star", "args": ["q"]}
})";

ResultDocument run(const std::string& text) { return execute_job(parse_job(text)); }

std::string schema_message(const std::string& text) {
  try {
    parse_job(text);
  } catch (const SchemaError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("star job", "[cli]") {
  auto doc = run(q_star_job);
  CHECK(doc.status == "ok");
  CHECK(doc.payload["generators"] == json({"x^4", "x^3*y", "x^2*y^3", "y^4"}));
  CHECK(exit_code(doc) == 0);
}

TEST_CASE("unknown variable is a schema error with a path", "[cli]") {
  auto msg = schema_message(R"({
    "ring": {"field": "Q", "vars": ["x", "y"]},
    "ideals": {"i": ["x + z"]},
    "command": {"op": "gb", "args": ["i"]}
  })");
  CHECK(msg.find("ideals.i[0]") != std::string::npos);
  CHECK(msg.find("z") != std::string::npos);
}

TEST_CASE("schema rejections", "[cli]") {
  CHECK_THROWS_AS(parse_job("{"), SchemaError);
  CHECK_THROWS_AS(parse_job(R"({"ring": {"field": "F6", "vars": ["x"]}, "command": {"op": "gb"}})"), SchemaError);
  CHECK_THROWS_AS(parse_job(R"({"ring": {"field": "Q", "vars": ["x"]}, "command": {"op": "frobnicate"}})"),
                  SchemaError);
  CHECK_THROWS_AS(parse_job(R"({"ring": {"field": "Q", "vars": ["x"]}, "command": {"op": "star", "args": ["nope"]}})"),
                  SchemaError);
  CHECK_THROWS_AS(parse_job(R"({"ring": {"field": "Q", "vars": ["x"]}, "extra": 1, "command": {"op": "gb"}})"),
                  SchemaError);
  auto wrong_length = schema_message(R"({
    "ring": {"field": "Q", "vars": ["x", "y"]},
    "grading": {"free_rank": 1, "torsion": [2], "degrees": [[1, 0], [1]]},
    "ideals": {"i": ["x"]},
    "command": {"op": "star", "args": ["i"]}
  })");
  CHECK(wrong_length.find("grading.degrees[1]") != std::string::npos);
}

TEST_CASE("torsion residues are reduced", "[cli]") {
  auto job = parse_job(R"({
    "ring": {"field": "F<5>", "vars": ["x"]},
    "grading": {"free_rank": 0, "torsion": [2], "degrees": [[3]]},
    "ideals": {"i": ["x - 1"]},
    "command": {"op": "star", "args": ["i"]}
  })");
  CHECK(job.field == "F5");
  CHECK(job.grading.degrees[0].torsion == std::vector<std::int64_t>{1});
  auto doc = execute_job(job);
  CHECK(doc.payload["generators"] == json({"x^2 + 4"}));
}

TEST_CASE("gdecomp reports distinct G-radicals", "[cli]") {
  auto doc = run(R"({
    "ring": {"field": "Q", "vars": ["x", "y"]},
    "ideals": {"i": ["x^2", "x*y"]},
    "command": {"op": "gdecomp", "args": ["i"]}
  })");
  REQUIRE(doc.status == "ok");
  const auto& comps = doc.payload["components"];
  REQUIRE(comps.size() == 2);
  CHECK(comps[0]["g_radical"] != comps[1]["g_radical"]);
  CHECK(doc.payload["minimal"] == true);
}

TEST_CASE("verify passes on a G-ideal", "[cli]") {
  auto doc = run(R"({
    "ring": {"field": "F5", "vars": ["x", "y"]},
    "ideals": {"q": ["x^4", "x^3*y", "x^2*y^2 + x*y^3", "y^4"]},
    "command": {"op": "verify", "args": ["q"], "options": {"degree_bound": 8}}
  })");
  CHECK(doc.payload["verdict"] == "pass");
  CHECK(doc.payload["oracle"]["verdict"] == "pass");
  CHECK(exit_code(doc) == 0);
}

TEST_CASE("oracle verdicts map to exit codes", "[cli]") {
  auto bad = run(R"({
    "ring": {"field": "F5", "vars": ["x", "y"]},
    "ideals": {"q": ["x^4", "x^3*y", "x^2*y^2 + x*y^3", "y^4"], "c": ["x^4", "x^3*y", "y^4"]},
    "command": {"op": "oracle", "args": ["q", "c"]}
  })");
  CHECK(bad.payload["verdict"] == "fail");
  CHECK(exit_code(bad) == 1);

  auto small = run(R"({
    "ring": {"field": "F5", "vars": ["x", "y"]},
    "ideals": {"q": ["x^4", "y^4"]},
    "command": {"op": "oracle", "args": ["q"], "options": {"degree_bound": 3}}
  })");
  CHECK(small.payload["verdict"] == "degree_too_small");
  CHECK(exit_code(small) == 1);
}

TEST_CASE("non-homogeneous input to G-operations is an input error", "[cli]") {
  auto doc = run(R"({
    "ring": {"field": "Q", "vars": ["x"]},
    "grading": "standard",
    "ideals": {"i": ["x - 1"]},
    "command": {"op": "is_g_prime", "args": ["i"]}
  })");
  CHECK(doc.status == "error");
  CHECK(doc.reason == "input-error");
  CHECK(exit_code(doc) == 2);
}

TEST_CASE("unsupported classes exit with 3", "[cli]") {
  auto doc = run(R"({
    "ring": {"field": "Q", "vars": ["x", "y"]},
    "ideals": {"i": ["x^2 - y^3", "x*y - 1"]},
    "command": {"op": "decompose", "args": ["i"]}
  })");
  CHECK(doc.status == "unsupported");
  CHECK(doc.reason == "unsupported-class");
  CHECK(exit_code(doc) == 3);
}

TEST_CASE("jobs round-trip byte for byte", "[cli]") {
  auto job = parse_job(R"({
    "ring": {"field": "F<7>", "vars": ["a", "b"]},
    "grading": {"free_rank": 1, "torsion": [3], "degrees": [[1, 4], [2, -1]]},
    "ideals": {"i": ["b*a + a^2", "2*b"]},
    "polys": {"f": "a + 8"},
    "matrices": {"m": {"rows": 1, "cols": 2, "entries": ["a", "b"], "col_degrees": [[1, 1], [2, 2]]}},
    "certificates": {"i": [{"component": ["a", "b"]}]},
    "command": {"op": "fitting", "args": ["m"], "options": {"j": 0}}
  })");
  auto once = job_to_json(job).dump(2);
  auto again = parse_job(once);
  CHECK(again == job);
  CHECK(job_to_json(again).dump(2) == once);
  CHECK(job.polys.at("f") == "a + 1");
  CHECK(job.grading.degrees[0].torsion == std::vector<std::int64_t>{1});

  auto doc = execute_job(job);
  auto text = render_result(doc, Format::json);
  CHECK(parse_result(text) == doc);
  CHECK(render_result(execute_job(job), Format::json) == text);
}

TEST_CASE("text rendering", "[cli]") {
  auto text = render_result(run(q_star_job), Format::text);
  CHECK(text == "status: ok\nop: star\ngenerators: (x^4, x^3*y, x^2*y^3, y^4)\n");

  auto d = render_result(run(R"({
    "ring": {"field": "Q", "vars": ["x", "y"]},
    "ideals": {"i": ["x^2", "x*y"]},
    "command": {"op": "decompose", "args": ["i"]}
  })"),
                         Format::text);
  CHECK(d.find("⊣") != std::string::npos);
}

TEST_CASE("timing is only present on request", "[cli]") {
  auto job = parse_job(q_star_job);
  CHECK_FALSE(execute_job(job).timing_ms);
  CHECK(execute_job(job, true).timing_ms);
  CHECK(render_result(execute_job(job), Format::json).find("timing") == std::string::npos);
}
