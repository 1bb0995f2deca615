// Exercises the shared-library surface the way an external consumer would:
// everything through the C header, no core includes.
#include "doctest.h"

#include <cstring>
#include <string>

#include "g2forge/g2forge.h"
#include "json.hpp"

namespace {

struct Freed {
  char* p = nullptr;
  ~Freed() { g2f_string_free(p); }
};

}  // namespace

TEST_CASE("options defaults and environment override") {
  g2f_options opts;
  g2f_options_init(&opts);
  CHECK(opts.tol == 1e-9);
  CHECK(opts.float_mode == 0);

  setenv("G2FORGE_TOL", "1e-7", 1);
  g2f_options_init(&opts);
  CHECK(opts.tol == 1e-7);
  unsetenv("G2FORGE_TOL");
}

TEST_CASE("builtin instances and compute round trip") {
  g2f_instance* inst = nullptr;
  REQUIRE(g2f_instance_builtin("gs", "1/4", &inst) == G2F_OK);
  Freed json;
  g2f_options opts;
  g2f_options_init(&opts);
  REQUIRE(g2f_compute(inst, "soliton", &opts, &json.p) == G2F_OK);
  auto parsed = nlohmann::json::parse(json.p);
  CHECK(parsed["classification"] == "shrinking");
  double c = std::strtod(parsed["c"].get<std::string>().c_str(), nullptr);
  CHECK(std::abs(c - (-11.0 / 8.0)) < 1e-8);
  g2f_instance_free(inst);
}

TEST_CASE("colon shorthand and parse errors") {
  g2f_instance* inst = nullptr;
  REQUIRE(g2f_instance_builtin("sa:3/4", nullptr, &inst) == G2F_OK);
  g2f_instance_free(inst);

  inst = nullptr;
  CHECK(g2f_instance_builtin("nope", nullptr, &inst) == G2F_BAD_INPUT);
  CHECK(std::strlen(g2f_last_error()) > 0);

  CHECK(g2f_instance_parse("{ bad json", &inst) == G2F_BAD_INPUT);

  const char* invalid_family = R"({"kind":"family",
    "A1":[["0","0"],["0","0"]],
    "A":[["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]],
    "B":[["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]],
    "C":[["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]})";
  CHECK(g2f_instance_parse(invalid_family, &inst) == G2F_CONSTRAINT);
  CHECK(std::string(g2f_last_error()).find("tr B != 0") != std::string::npos);
}

TEST_CASE("scan and flow through the C surface") {
  g2f_options opts;
  g2f_options_init(&opts);

  Freed csv;
  REQUIRE(g2f_scan("sa", "0", "1/10", "1/20", &opts, &csv.p) == G2F_OK);
  std::string text(csv.p);
  CHECK(text.rfind("param,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);

  g2f_instance* inst = nullptr;
  REQUIRE(g2f_instance_builtin("fr", nullptr, &inst) == G2F_OK);
  Freed traj, summary;
  REQUIRE(g2f_flow(inst, 0.01, 1e-3, 0, &opts, &traj.p, &summary.p) == G2F_OK);
  auto sum = nlohmann::json::parse(summary.p);
  CHECK(sum["termination"] == "completed");
  g2f_instance_free(inst);
}

TEST_CASE("single-check verification through the C surface") {
  g2f_options opts;
  g2f_options_init(&opts);
  Freed json, table;
  REQUIRE(g2f_verify_suite(&opts, "hodge-involution", -1.0, &json.p, &table.p) == G2F_OK);
  auto rep = nlohmann::json::parse(json.p);
  CHECK(rep["all_passed"] == true);
  CHECK(rep["checks"].size() == 1);
  CHECK(rep["checks"][0]["name"] == "hodge-involution");

  CHECK(g2f_verify_suite(&opts, "no-such-check", -1.0, &json.p, &table.p) == G2F_BAD_INPUT);
}
