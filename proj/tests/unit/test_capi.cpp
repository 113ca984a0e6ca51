#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <orbiq/orbiq.h>

#include <nlohmann/json.hpp>

#include <string>

namespace {

nlohmann::json take(char* s) {
  REQUIRE(s != nullptr);
  auto j = nlohmann::json::parse(s);
  orbiq_string_free(s);
  return j;
}

bool all_pass(const nlohmann::json& j) {
  for (const auto& c : j.at("checks"))
    if (!c.at("pass").get<bool>()) return false;
  return !j.at("checks").empty();
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(orbiq_version()).size() > 0);
  CHECK(std::string(orbiq_status_name(ORBIQ_OK)) == "ok");
  CHECK(std::string(orbiq_status_name(ORBIQ_ERR_PARSE)) == "parse_error");
}

TEST_CASE("curve handles") {
  orbiq_curve* c = nullptr;
  REQUIRE(orbiq_curve_parse("g=0;a=2,3,5", &c) == ORBIQ_OK);
  int n = 0;
  CHECK(orbiq_curve_basis_size(c, &n) == ORBIQ_OK);
  CHECK(n == 9);
  char* lit = nullptr;
  CHECK(orbiq_curve_literal(c, &lit) == ORBIQ_OK);
  CHECK(std::string(lit) == "g=0;a=2,3,5");
  orbiq_string_free(lit);
  char* out = nullptr;
  CHECK(orbiq_classify(c, &out) == ORBIQ_OK);
  auto j = take(out);
  CHECK(j["results"]["class"] == "Fano");
  CHECK(j["results"]["chi_orb"] == "1/30");
  orbiq_curve_free(c);

  orbiq_curve* bad = nullptr;
  CHECK(orbiq_curve_parse("g=0;a=2,x", &bad) == ORBIQ_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::string(orbiq_last_error()).find("8") != std::string::npos);
  CHECK(orbiq_curve_parse(nullptr, &bad) == ORBIQ_ERR_INVALID_ARGUMENT);
  CHECK(orbiq_curve_basis_size(nullptr, &n) == ORBIQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reconstruction round trip through json") {
  orbiq_potential* p = nullptr;
  REQUIRE(orbiq_reconstruct(2, 0, &p) == ORBIQ_OK);
  char* js = nullptr;
  REQUIRE(orbiq_potential_to_json(p, &js) == ORBIQ_OK);
  std::string text = js;
  orbiq_string_free(js);
  orbiq_potential* q = nullptr;
  REQUIRE(orbiq_potential_from_json(text.c_str(), &q) == ORBIQ_OK);
  char* w = nullptr;
  REQUIRE(orbiq_wdvv_check(q, &w) == ORBIQ_OK);
  CHECK(all_pass(take(w)));
  orbiq_curve* c = nullptr;
  REQUIRE(orbiq_curve_parse("g=0;a=2", &c) == ORBIQ_OK);
  char* e = nullptr;
  REQUIRE(orbiq_euler_det(c, q, &e) == ORBIQ_OK);
  CHECK(all_pass(take(e)));
  orbiq_curve* other = nullptr;
  REQUIRE(orbiq_curve_parse("g=0;a=3", &other) == ORBIQ_OK);
  CHECK(orbiq_euler_det(other, q, &e) == ORBIQ_ERR_INVALID_ARGUMENT);
  orbiq_curve_free(other);
  orbiq_curve_free(c);
  orbiq_potential_free(q);
  orbiq_potential_free(p);

  CHECK(orbiq_reconstruct(5, 0, &p) == ORBIQ_ERR_BUDGET);
  CHECK(orbiq_reconstruct(1, 0, &p) == ORBIQ_ERR_INVALID_ARGUMENT);
  CHECK(orbiq_potential_from_json("{", &p) == ORBIQ_ERR_PARSE);
  char* r = nullptr;
  REQUIRE(orbiq_reconstruct_report(3, 4, &r) == ORBIQ_OK);
  CHECK(all_pass(take(r)));
}

TEST_CASE("small quantum, hurwitz and pipeline") {
  orbiq_curve* c = nullptr;
  REQUIRE(orbiq_curve_parse("g=0;a=2,3,4", &c) == ORBIQ_OK);
  char* s = nullptr;
  REQUIRE(orbiq_smallqh_solve(c, "1", &s) == ORBIQ_OK);
  auto j = take(s);
  CHECK(all_pass(j));
  CHECK(j.dump().find("\"points\"") != std::string::npos);
  CHECK(orbiq_smallqh_solve(c, "1/0", &s) != ORBIQ_OK);
  char* pl = nullptr;
  REQUIRE(orbiq_pipeline(c, 4, &pl) == ORBIQ_OK);
  CHECK(all_pass(take(pl)));
  orbiq_curve_free(c);

  char* h = nullptr;
  REQUIRE(orbiq_hurwitz(3, "2,1|2,1|2,1|2,1", &h) == ORBIQ_OK);
  auto hj = take(h);
  CHECK(hj["results"]["value"] == "4");
  CHECK(orbiq_hurwitz(3, "2|1", &h) == ORBIQ_ERR_INVALID_ARGUMENT);
  CHECK(orbiq_hurwitz(12, "12|12", &h) == ORBIQ_ERR_BUDGET);
}
