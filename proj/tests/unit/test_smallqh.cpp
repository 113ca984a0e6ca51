#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "smallqh.hpp"

using namespace orbiq;

namespace {

const nlohmann::json& fixture() {
  static const nlohmann::json doc = oracle::load_json(ORBIQ_FIXTURE_DIR "/golden_points.json");
  return doc;
}

// Fixture points that are roots of the presentation.
std::vector<oracle::Point> verified_points(const std::string& literal) {
  std::vector<oracle::Point> out;
  for (const auto& p : fixture().at("curves").at(literal).at("points")) {
    if (!p.at("satisfies_generators").get<bool>()) continue;
    oracle::Point pt;
    for (const auto& c : p.at("coordinates")) pt.emplace_back(c[0].get<double>(), c[1].get<double>());
    out.push_back(pt);
  }
  return out;
}

double max_residual(const PresentedAlgebra& p, const SolutionSet& s) {
  double r = 0;
  for (const auto& x : s.points)
    for (const auto& g : p.gens) r = std::max(r, std::abs(evaluate(g, x)));
  return r;
}

}  // namespace

TEST_CASE("presentations of the fano families") {
  auto p = presentation(parse_curve("g=0;a=2,3"));
  CHECK(p.family == "P1_{a1,a2}");
  CHECK(p.gens.size() == 2);
  auto q = presentation(parse_curve("g=0;a=2,2,5"));
  CHECK(q.family == "P1_{2,2,a}");
  CHECK(q.gens.size() == 3);
  auto r = presentation(parse_curve("g=0;a=2,3,4"));
  CHECK(r.family == "P1_{2,3,4}");
  CHECK(r.table->names() == std::vector<std::string>{"x", "y", "z"});
  auto tear = presentation(parse_curve("g=0;a=5"));
  CHECK(tear.family == "P1_{a1,a2}");
  CHECK(tear.point_of_var == std::vector<int>{1, 0});
  CHECK(tear.orders == std::vector<int>{5, 1});
  auto sorted = presentation(parse_curve("g=0;a=4,3,2"));
  CHECK(sorted.family == "P1_{2,3,4}");
  for (const char* bad : {"g=0;a=2,2,2,2", "g=0;a=2,3,6", "g=1;a=", "g=0;a=2,3,7", "g=2;a="})
    CHECK_THROWS_AS(presentation(parse_curve(bad)), NotFanoError);
}

TEST_CASE("quotient dimension equals the basis size for every fano curve") {
  for (const auto& [literal, entry] : fixture().at("curves").items()) {
    OrbiCurve C = parse_curve(literal);
    auto p = presentation(C);
    auto q = quotient_algebra(p);
    CHECK_MESSAGE(q.dim() == basis_size(C), literal);
    CHECK(q.standard.front() == Exponent(p.table->size(), 0));
    auto tf = trace_form_semisimple(q.algebra);
    CHECK_MESSAGE(tf.semisimple, literal);
    CHECK_FALSE(tf.det.is_zero());
    validate_algebra(q.algebra);
  }
}

TEST_CASE("solution points match the reference lists") {
  for (const auto& [literal, entry] : fixture().at("curves").items()) {
    auto p = presentation(parse_curve(literal));
    auto s = solve_points(p);
    CHECK(s.separating);
    CHECK(s.total_multiplicity() == static_cast<int>(basis_size(p.curve)));
    for (int m : s.multiplicities) CHECK(m == 1);
    CHECK_MESSAGE(max_residual(p, s) < 1e-9, literal);
    auto expected = verified_points(literal);
    if (literal == "g=0;a=2,3,4") {
      // The two listed points (0,4,3+-sqrt 2) are not roots; the roots there are (0,4,+-3 sqrt 2).
      CHECK(expected.size() == 6);
      expected.push_back({0.0, 4.0, 3 * std::sqrt(2.0)});
      expected.push_back({0.0, 4.0, -3 * std::sqrt(2.0)});
    }
    auto m = oracle::match_points(expected, s.points);
    CHECK_MESSAGE(m.same_count, literal);
    CHECK_MESSAGE(m.max_error < 1e-9, literal << " error " << m.max_error);
  }
}

TEST_CASE("closed forms for the two infinite families") {
  for (auto [a1, a2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 7}, {4, 4}}) {
    auto p = presentation(OrbiCurve(0, {a1, a2}));
    auto m = oracle::match_points(oracle::closed_form_a1a2(a1, a2), solve_points(p).points);
    CHECK(m.same_count);
    CHECK_MESSAGE(m.max_error < 1e-9, a1 << "," << a2);
  }
  for (int a = 2; a <= 10; ++a) {
    auto p = presentation(OrbiCurve(0, {2, 2, a}));
    auto m = oracle::match_points(oracle::closed_form_22a(a), solve_points(p).points);
    CHECK(m.same_count);
    CHECK_MESSAGE(m.max_error < 1e-9, a);
  }
}

TEST_CASE("rational specialization of Q") {
  auto p = presentation(parse_curve("g=0;a=1,1"), Ratio(4));
  auto s = solve_points(p);
  REQUIRE(s.points.size() == 2);
  for (const auto& x : s.points) {
    CHECK(std::abs(x[0] * x[1] - 4.0) < 1e-9);
    CHECK(std::abs(x[0] * x[0] - 4.0) < 1e-9);
  }
  auto v = semisimplicity_verdict(parse_curve("g=0;a=2,3,5"), Ratio(1, 3));
  CHECK(v.semisimple);
  CHECK(v.solutions->points.size() == 9);
}

TEST_CASE("custom presentations and nilpotent quotients") {
  auto T = make_table({"x", "y"}, {Ratio(1), Ratio(1)});
  MPoly x = MPoly::variable(T, 0), y = MPoly::variable(T, 1);
  auto nil = custom_presentation(T, {x * x, y * y});
  auto q = quotient_algebra(nil);
  CHECK(q.dim() == 4);
  CHECK_FALSE(trace_form_semisimple(q.algebra).semisimple);
  auto red = custom_presentation(T, {x * x - MPoly::constant(T, Ratio(1)), y * y - x});
  auto qr = quotient_algebra(red);
  CHECK(trace_form_semisimple(qr.algebra).semisimple);
  CHECK(solve_points(red, qr).points.size() == 4);
  CHECK(quotient_coordinates(qr, x * x * y) == quotient_coordinates(qr, y));
  auto pos = custom_presentation(T, {x * y});
  CHECK_THROWS_AS(quotient_algebra(pos), PositiveDimensionalError);
}

TEST_CASE("univariate helpers") {
  Matrix<Ratio> m(2, 2, Ratio(0));
  m(0, 1) = Ratio(1);
  m(1, 0) = Ratio(2);
  CHECK(characteristic_polynomial(m) == std::vector<Ratio>{Ratio(-2), Ratio(0), Ratio(1)});
  CHECK(squarefree({Ratio(-2), Ratio(0), Ratio(1)}));
  CHECK_FALSE(squarefree({Ratio(1), Ratio(-2), Ratio(1)}));
}

TEST_CASE("nilpotency certificates for non-fano curves") {
  for (const char* lit : {"g=0;a=2,2,2,2", "g=0;a=3,3,3", "g=0;a=2,4,4", "g=0;a=2,3,6", "g=1;a=", "g=2;a=",
                          "g=0;a=2,3,7", "g=1;a=2", "g=0;a=2,2,2,2,2"}) {
    OrbiCurve C = parse_curve(lit);
    auto cert = nilpotency_certificate(C);
    CHECK_MESSAGE(cert.verified(), lit);
    CHECK(cert.chen_ruan_power_vanishes);
    CHECK(cert.exponent_bound >= 2);
    for (const auto& row : cert.filtration_table) CHECK(row.holds);
    auto v = semisimplicity_verdict(C);
    CHECK_FALSE(v.semisimple);
    CHECK(v.cls != CurveClass::Fano);
    CHECK(v.certificate.has_value());
  }
  CHECK_THROWS_AS(nilpotency_certificate(parse_curve("g=0;a=2,3,5")), std::invalid_argument);
}

TEST_CASE("semisimple iff fano") {
  for (int a = 1; a <= 7; ++a)
    for (int b = a; b <= 7; ++b)
      for (int c = b; c <= 7; ++c) {
        OrbiCurve C(0, {a, b, c});
        auto v = semisimplicity_verdict(C);
        CHECK_MESSAGE(v.semisimple == (classify(C) == CurveClass::Fano), C.literal());
        if (v.semisimple) {
          CHECK(v.quotient_dim == basis_size(C));
          CHECK(v.solutions->points.size() == basis_size(C));
        }
      }
}

TEST_CASE("solution json") {
  auto p = presentation(parse_curve("g=0;a=2,2"));
  auto j = to_json(solve_points(p));
  CHECK(j.contains("points"));
  CHECK(j["points"].size() == 4);
  CHECK(to_json(p).contains("generators"));
  CHECK(to_json(nilpotency_certificate(parse_curve("g=1;a="))).contains("witness"));
}
