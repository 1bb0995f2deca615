#include "doctest.h"

#include "errors.hpp"
#include "instance.hpp"
#include "report.hpp"
#include "sampling.hpp"
#include "serialize.hpp"

using namespace g2forge;

TEST_CASE("scalar round trip preserves exactness") {
  Scalar q = frac(-3, 8);
  CHECK(scalar_str(q) == "-3/8");
  Scalar back = scalar_from_json(nlohmann::json::parse("\"-3/8\""));
  CHECK(back.is_exact());
  CHECK(back == q);

  Scalar f = scalar_from_json(nlohmann::json::parse("0.125"));
  CHECK(f.is_float());
  CHECK(f.to_double() == 0.125);

  Scalar i = scalar_from_json(nlohmann::json::parse("7"));
  CHECK(i.is_exact());

  // Decimal strings stay floats; fraction strings stay exact.
  CHECK(Scalar::parse("1e-3")->is_float());
  CHECK(Scalar::parse("22/7")->is_exact());
  CHECK_FALSE(Scalar::parse("nonsense").has_value());
  CHECK_THROWS_AS(scalar_from_json(nlohmann::json::parse("\"x/y\"")), Error);
}

TEST_CASE("forms round trip through JSON") {
  Rng rng(71);
  for (int k = 0; k <= 5; ++k) {
    KForm f = random_kform(rng, k);
    KForm back = form_from_json(nlohmann::json::parse(form_json(f).dump()));
    CHECK(back.degree() == f.degree());
    CHECK((back - f).norm_sq().is_exact_zero());
  }
  CHECK_THROWS_AS(form_from_json(nlohmann::json::parse("{\"degree\":2}")), Error);
  CHECK_THROWS_AS(
      form_from_json(nlohmann::json::parse("{\"degree\":2,\"coefficients\":{\"19\":\"1\"}}")),
      Error);
}

TEST_CASE("instance parsing: all three kinds and the error paths") {
  Instance fam = Instance::from_json_text(R"({
    "kind": "family",
    "A1": [["3/8","0"],["0","-1/8"]],
    "A": [["3/8","0","0","0"],["0","-1/8","0","0"],["0","0","1/4","0"],["0","0","0","3/4"]],
    "B": [["0","0","0","0"],["0","0","0","0"],["0","-1","0","0"],["-1","0","0","0"]],
    "C": [["0","0","0","0"],["0","0","0","0"],["-1","0","0","0"],["0","0","0","0"]]
  })");
  CHECK(fam.kind == Instance::Kind::family);
  REQUIRE(fam.family.has_value());
  // This is gs(0).
  CHECK(closedness_conditions(*fam.family).closed());

  Instance sc = Instance::from_json_text(
      R"({"kind":"structure-constants","c":[[7,3,3,"1/4"]]})");
  CHECK(sc.kind == Instance::Kind::structure_constants);
  CHECK_FALSE(sc.family.has_value());

  Instance bi = Instance::from_json_text(R"({"kind":"builtin","name":"gs","param":"5/8"})");
  CHECK(bi.kind == Instance::Kind::builtin);
  CHECK(bi.builtin_param == frac(5, 8));

  Instance colon = Instance::from_builtin("sa:3/4", std::nullopt);
  CHECK(colon.builtin_name == "sa");
  CHECK(colon.builtin_param == frac(3, 4));

  CHECK_THROWS_AS(Instance::from_json_text("not json"), Error);
  CHECK_THROWS_AS(Instance::from_json_text(R"({"kind":"nope"})"), Error);
  CHECK_THROWS_AS(Instance::from_builtin("zz", std::nullopt), Error);
  // Jacobi-violating structure constants are a constraint error.
  try {
    Instance::from_json_text(R"({"kind":"structure-constants","c":[[1,2,3,1],[1,3,1,1]]})");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::constraint);
  }
}

TEST_CASE("compute reports are byte-deterministic and well-formed") {
  Instance inst = Instance::from_builtin("gs", std::string("1/4"));
  RunOptions opts;
  std::string a = compute_report(inst, "soliton", opts).dump(2);
  std::string b = compute_report(inst, "soliton", opts).dump(2);
  CHECK(a == b);

  OrderedJson t = compute_report(inst, "torsion", opts);
  CHECK(t["path"] == "family-closed-form");
  CHECK(t["oracle_mismatch"] == "0");
  KForm tau2 = form_from_json(t["tau2"]);
  CHECK(tau2.coeff(Blade::of({5, 6})) == frac(-5, 2));

  OrderedJson r = compute_report(inst, "ricci", opts);
  CHECK(r["F"].get<std::string>() ==
        pinching_functional(builtin_gs(frac(1, 4))).str());

  CHECK_THROWS_AS(compute_report(inst, "unknown-op", opts), Error);

  Instance sc = Instance::from_json_text(R"({"kind":"structure-constants","c":[]})");
  CHECK_THROWS_AS(compute_report(sc, "ricci", opts), Error);
}

TEST_CASE("erp and eigenform computes reject non-closed instances") {
  // fr with the torsion-breaking C removed is no longer closed.
  Instance inst = Instance::from_json_text(R"({
    "kind": "family",
    "A1": [["0","0"],["0","0"]],
    "A": [["1","0","0","0"],["0","-1","0","0"],["0","0","-1","0"],["0","0","0","-1"]],
    "B": [["0","0","0","0"],["0","0","0","0"],["0","2","0","0"],["0","0","0","0"]],
    "C": [["0","0","0","0"],["0","0","0","0"],["0","0","0","0"],["0","0","0","0"]]
  })");
  RunOptions opts;
  CHECK_THROWS_AS(compute_report(inst, "erp", opts), Error);
  CHECK_THROWS_AS(compute_report(inst, "eigenform", opts), Error);
}

TEST_CASE("scan CSV shape and determinism") {
  RunOptions opts;
  std::string csv = scan_csv("gs", Scalar(0), frac(1, 10), frac(1, 20), opts);
  std::string again = scan_csv("gs", Scalar(0), frac(1, 10), frac(1, 20), opts);
  CHECK(csv == again);

  std::istringstream is(csv);
  std::string header;
  std::getline(is, header);
  CHECK(header ==
        "param,scal,ric_norm,F,c,classification,laplacian_residual,ricci_soliton_residual");
  int rows = 0;
  for (std::string line; std::getline(is, line);) ++rows;
  CHECK(rows == 3);  // 0, 1/20, 1/10

  // Empty range: header only.
  std::string empty = scan_csv("gs", Scalar(1), Scalar(0), frac(1, 20), opts);
  CHECK(empty ==
        "param,scal,ric_norm,F,c,classification,laplacian_residual,ricci_soliton_residual\n");

  CHECK_THROWS_AS(scan_csv("zz", Scalar(0), Scalar(1), frac(1, 10), opts), Error);
  CHECK_THROWS_AS(scan_csv("gs", Scalar(0), Scalar(1), Scalar(0), opts), Error);
}

TEST_CASE("flow report carries the trajectory and the summary") {
  Instance inst = Instance::from_builtin("gs", std::string("0"));
  RunOptions opts;
  FlowReport rep = flow_report(inst, 0.02, 1e-3, false, opts);
  CHECK(rep.summary["termination"] == "completed");
  std::istringstream is(rep.csv);
  std::string header;
  std::getline(is, header);
  CHECK(header ==
        "t,phi_127,phi_347,phi_567,phi_135,phi_146,phi_236,phi_245,laplacian_norm,"
        "positivity_margin");
  int rows = 0;
  for (std::string line; std::getline(is, line);) ++rows;
  CHECK(rows == 21);
}
