#include "doctest.h"
#include "json.hpp"
#include "resist/bounds.hpp"
#include "resist/families.hpp"
#include "resist/json_io.hpp"
#include "resist/resistance.hpp"
#include "resist/spectral.hpp"
#include "support/fixtures.hpp"

using namespace resist;
using nlohmann::json;

TEST_CASE("matrix serialization") {
  RationalMatrix m = RationalMatrix::from_rows({{Rational(1, 2), 3}, {0, Rational(-2, 7)}});
  json j = matrix_to_json(m);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 2);
  CHECK(j["entries"][0][0]["num"] == "1");
  CHECK(j["entries"][0][0]["den"] == "2");
  CHECK(j["entries"][0][1]["num"] == "3");
  CHECK(j["entries"][0][1]["den"] == "1");
  CHECK(j["entries"][1][0]["num"] == "0");
  CHECK(j["entries"][1][0]["den"] == "1");
  CHECK(j["entries"][1][1]["num"] == "-2");
  CHECK(j["entries"][1][1]["den"] == "7");
}

TEST_CASE("label serialization") {
  ResistanceProfile reg = profile(generate({Family::cycle, {5}}));
  json j = label_to_json(reg.label);
  CHECK(j["kind"] == "ResistanceRegular");
  CHECK(j["k"] == "4/1");

  ResistanceProfile nei = profile(generate({Family::path, {3}}));
  json k = label_to_json(nei.label);
  CHECK(k["kind"] == "Neither");
  CHECK(k["k"].is_null());
}

TEST_CASE("profile serialization") {
  json j = profile_to_json(profile(generate({Family::complete, {3}})));
  CHECK(j["n"] == 3);
  CHECK(j["label"]["kind"] == "ResistanceRegular");
  CHECK(j["label"]["k"] == "4/3");
  REQUIRE(j["row_sums"].size() == 3);
  for (const auto& r : j["row_sums"]) CHECK(r == "4/3");
  CHECK(j["kirchhoff"] == "2/1");
  CHECK(j["s_sum"] == "8/3");
  // exactly the documented keys
  CHECK(j.size() == 5);
}

TEST_CASE("spectrum serialization") {
  json j = spectrum_to_json(r_spectrum(generate({Family::complete, {4}})));
  REQUIRE(j["groups"].size() == 2);
  CHECK(j["groups"][0][0].get<double>() == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(j["groups"][0][1] == 1);
  CHECK(j["groups"][1][1] == 3);
  CHECK(j["energy"].get<double>() == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(j["radius"].get<double>() == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("bounds serialization") {
  json j = bounds_to_json("K_4", bounds_report(generate({Family::complete, {4}})));
  CHECK(j["graph"] == "K_4");
  REQUIRE(j["bounds"].size() == 10);
  for (const auto& e : j["bounds"]) {
    CHECK(e.contains("id"));
    CHECK(e.contains("lhs"));
    CHECK(e.contains("rhs"));
    CHECK(e.contains("holds"));
    CHECK(e.contains("equality"));
    CHECK(e.contains("condition_holds"));
    if (e["id"] == "ALPHA_ENERGY_UPPER") {
      CHECK(e.size() == 7);
      CHECK(e.contains("rhs_literal"));
    } else {
      CHECK(e.size() == 6);
    }
    if (e["id"] == "KF_SPECTRAL_UPPER")
      CHECK(e["condition_holds"].is_null());
    else
      CHECK(e["condition_holds"].is_boolean());
  }
}

TEST_CASE("csv rendering of a resistance matrix") {
  std::string csv = resistance_matrix(generate({Family::complete, {3}})).to_csv();
  CHECK(csv == "0/1,2/3,2/3\n2/3,0/1,2/3\n2/3,2/3,0/1\n");
}

TEST_CASE("fraction strings round-trip through json") {
  json j = profile_to_json(profile(fixtures::fig2()));
  CHECK(j["label"]["k"] == "47/15");
  for (const auto& r : j["row_sums"]) CHECK(rational_from_string(r.get<std::string>()) == Rational(47, 15));
}
