#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "potential.hpp"

#include <nlohmann/json.hpp>

using namespace orbiq;

namespace {

// Hand-derived tear-drop data for a = 2: A = -(t^1)^4/96, B1 = t^1.
TearDropData teardrop2() {
  OrbiCurve c(0, {2});
  TablePtr T = curve_table(c);
  MPoly t = MPoly::variable(T, 2);
  return TearDropData{2, T, t.pow(4) * Ratio(-1, 96), t};
}

MPoly var(const Potential& F, const std::string& name) { return MPoly::variable(F.table, name); }

// Cubic part of A from three-point invariants <phi_{a,i} phi_{a,j} phi_{a,k}> = 1/a for i+j+k = a.
MPoly cubic_A(const OrbiCurve& C, const TablePtr& T) {
  BasisSet B(C);
  MPoly A(T);
  for (std::size_t al = 0; al < C.orders.size(); ++al) {
    const int a = C.orders[al];
    const int p = static_cast<int>(al) + 1;
    for (int i = 1; i < a; ++i)
      for (int j = i; j < a; ++j) {
        const int k = a - i - j;
        if (k < j) continue;
        Exponent e(T->size(), 0);
        ++e[B.position({p, i})];
        ++e[B.position({p, j})];
        ++e[B.position({p, k})];
        Ratio sym(1);
        for (int c : e) sym *= factorial(c);
        A.add_term(e, Ratio(1, a) / sym);
      }
  }
  return A;
}

}  // namespace

TEST_CASE("classical potentials") {
  Potential P1 = classical_potential(parse_curve("g=0;a="));
  CHECK(P1.classical == var(P1, "t00").pow(2) * var(P1, "t01") * Ratio(1, 2));
  Potential P2 = classical_potential(parse_curve("g=0;a=2"));
  CHECK(P2.classical ==
        var(P2, "t00").pow(2) * var(P2, "t01") * Ratio(1, 2) + var(P2, "t00") * var(P2, "t1_1").pow(2) * Ratio(1, 4));
  Potential P3 = classical_potential(parse_curve("g=0;a=3"));
  CHECK(P3.classical ==
        var(P3, "t00").pow(2) * var(P3, "t01") * Ratio(1, 2) + var(P3, "t00") * var(P3, "t1_1") * var(P3, "t1_2") * Ratio(1, 3));
  CHECK(P3.truncation_order() == 1);
  CHECK(P3.A.is_zero());
  CHECK(P3.B[0].is_zero());
}

TEST_CASE("coordinate weights") {
  TablePtr T = curve_table(parse_curve("g=0;a=2,3"));
  CHECK(T->names() == std::vector<std::string>{"t00", "t01", "t1_1", "t2_1", "t2_2"});
  CHECK(T->weights() == std::vector<Ratio>{Ratio(1), Ratio(0), Ratio(1, 2), Ratio(2, 3), Ratio(1, 3)});
}

TEST_CASE("third derivatives with the divisor rule") {
  Potential F = teardrop_potential(teardrop2());
  BasisIndex u{0, 0}, p{0, 1}, x{1, 1};
  QSeries a = third_derivative(F, u, u, p);
  CHECK(a[0] == MPoly::constant(F.table, Ratio(1)));
  CHECK(a[1].is_zero());
  QSeries b = third_derivative(F, x, x, x);
  CHECK(b[0] == var(F, "t1_1") * Ratio(-1, 4));
  QSeries c = third_derivative(F, x, p, p);
  CHECK(c[0].is_zero());
  CHECK(c[1] == MPoly::constant(F.table, Ratio(1)));
  QSeries d = third_derivative(F, p, p, p);
  CHECK(d[1] == var(F, "t1_1"));
}

TEST_CASE("quantum product examples") {
  Potential F = teardrop_potential(teardrop2());
  const OrbiCurve& C = F.curve;
  BasisSet B(C);
  auto lifted = [&](const BasisIndex& s) { return lift_class(F, basis_class(C, s)); };
  auto xx = quantum_product(F, lifted({1, 1}), lifted({1, 1}));
  CHECK(xx.coeffs[B.position({1, 1})][0] == var(F, "t1_1") * Ratio(-1, 2));
  CHECK(xx.coeffs[B.position({0, 1})][0] == MPoly::constant(F.table, Ratio(1, 2)));
  CHECK(xx.coeffs[B.position({0, 0})].is_zero());
  auto pp = quantum_product(F, lifted({0, 1}), lifted({0, 1}));
  CHECK(pp.coeffs[0][1] == var(F, "t1_1"));
  CHECK(pp.coeffs[B.position({1, 1})][1] == MPoly::constant(F.table, Ratio(2)));
  for (std::size_t k = 0; k < B.size(); ++k) {
    auto y = lifted(B[k]);
    auto uy = quantum_product(F, lifted({0, 0}), y);
    for (std::size_t w = 0; w < B.size(); ++w) CHECK(uy.coeffs[w] == y.coeffs[w]);
  }
}

TEST_CASE("quantum product at q = 0 of the cubic part is the chen-ruan product") {
  for (const char* lit : {"g=0;a=2", "g=0;a=3", "g=0;a=2,3", "g=0;a=2,2,2,2", "g=0;a=3,4", "g=0;a=6"}) {
    OrbiCurve C = parse_curve(lit);
    Potential F = classical_potential(C);
    F.A = cubic_A(C, F.table);
    QuantumStructure qs(F);
    BasisSet B(C);
    for (std::size_t u = 0; u < B.size(); ++u)
      for (std::size_t v = 0; v < B.size(); ++v) {
        auto prod = qs.basis_product(u, v);
        auto cr = oracle::chen_ruan_rule(B, u, v);
        for (std::size_t w = 0; w < B.size(); ++w) CHECK(prod[w][0] == MPoly::constant(F.table, cr[w]));
      }
  }
}

TEST_CASE("wdvv residuals") {
  Potential P1 = classical_potential(parse_curve("g=0;a="));
  P1.B[0] = MPoly::constant(P1.table, Ratio(1));
  CHECK(wdvv_audit(P1).pass());

  Potential F = teardrop_potential(teardrop2());
  BasisIndex x{1, 1}, p{0, 1};
  CHECK(wdvv_residual(F, x, x, p, p).is_zero());
  WdvvAudit audit = wdvv_audit(F);
  CHECK(audit.pass());
  CHECK(audit.types_checked == 81);

  // Corrupting A breaks WDVV.
  Potential bad = F;
  bad.A = var(F, "t1_1").pow(4) * Ratio(-1, 95);
  CHECK_FALSE(wdvv_audit(bad).pass());

  // Rescaling B1 acts on the potential like q -> 2q, which preserves WDVV.
  Potential scaled = F;
  scaled.B[0] = var(F, "t1_1") * Ratio(2);
  CHECK(wdvv_residual(scaled, x, x, p, p).is_zero());
  CHECK(wdvv_audit(scaled).pass());
}

TEST_CASE("wdvv residual is antisymmetric in the middle slots") {
  Potential F = teardrop_potential(teardrop2());
  F.A = var(F, "t1_1").pow(4) * Ratio(1, 7);
  BasisSet B(F.curve);
  for (const auto& s1 : B.indices())
    for (const auto& s2 : B.indices())
      for (const auto& s3 : B.indices())
        for (const auto& s4 : B.indices())
          CHECK(wdvv_residual(F, s1, s2, s3, s4) == -wdvv_residual(F, s1, s3, s2, s4));
}

TEST_CASE("homogeneity audit") {
  Potential F = teardrop_potential(teardrop2());
  CHECK(homogeneity_report(F).pass());
  Potential P3 = classical_potential(parse_curve("g=0;a=3"));
  CHECK(homogeneity_report(P3).pass());
  P3.B[0] = var(P3, "t1_1") * var(P3, "t1_2");
  auto rep = homogeneity_report(P3);
  CHECK_FALSE(rep.pass());
  bool flagged = false;
  for (const auto& e : rep.entries)
    if (e.component == "B1") {
      flagged = !e.pass;
      CHECK(e.expected == Ratio(2, 3));
      CHECK(e.degree.value == Ratio(1));
    }
  CHECK(flagged);
}

TEST_CASE("multi-point assembly") {
  TearDropData td = teardrop2();
  std::vector<TearDropData> one{td};
  Potential F1 = assemble_multipoint(one);
  CHECK(F1.A == td.A);
  CHECK(F1.B[0] == td.B1);

  std::vector<TearDropData> two{td, td};
  Potential F = assemble_multipoint(two);
  CHECK(F.curve == parse_curve("g=0;a=2,2"));
  CHECK(F.A == (var(F, "t1_1").pow(4) + var(F, "t2_1").pow(4)) * Ratio(-1, 96));
  CHECK(F.B[0] == var(F, "t1_1") * var(F, "t2_1"));
  CHECK(wdvv_audit(F).pass());
  CHECK(homogeneity_report(F).pass());

  std::vector<PointData> dup{{1, td}, {1, td}};
  CHECK_THROWS_AS(assemble_multipoint(std::span<const PointData>(dup)), std::invalid_argument);
  std::vector<PointData> swapped{{2, td}, {1, td}};
  CHECK(assemble_multipoint(std::span<const PointData>(swapped)).B[0] == F.B[0]);
}

TEST_CASE("potential json round trip") {
  std::vector<TearDropData> two{teardrop2(), teardrop2()};
  Potential F = assemble_multipoint(two);
  auto j = potential_to_json(F);
  CHECK(j.contains("curve"));
  CHECK(j.contains("truncation_order"));
  CHECK(j.contains("classical"));
  Potential G = potential_from_json(nlohmann::json::parse(j.dump()));
  CHECK(G.curve == F.curve);
  CHECK(G.A == F.A);
  CHECK(G.B[0] == F.B[0]);
  CHECK(potential_to_json(G).dump() == j.dump());
  auto td = teardrop_to_json(teardrop2());
  Potential H = potential_from_json(td);
  CHECK(H.A == teardrop2().A);
  nlohmann::json broken = j;
  broken["classical"] = nlohmann::json::array();
  CHECK_THROWS(potential_from_json(broken));
}
