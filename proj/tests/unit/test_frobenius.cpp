#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobenius.hpp"
#include "oracles.hpp"
#include "reconstruct.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <random>

using namespace orbiq;

namespace {

// k^n in the idempotent basis with metric diag(w); the unit is not a basis vector.
AlgebraData<Ratio> split_algebra(const std::vector<Ratio>& w) {
  AlgebraData<Ratio> alg;
  alg.dim = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) alg.labels.push_back("e" + std::to_string(i));
  alg.structure.assign(alg.dim * alg.dim * alg.dim, Ratio(0));
  for (std::size_t i = 0; i < alg.dim; ++i) alg.c(i, i, i) = Ratio(1);
  alg.metric = Matrix<Ratio>(alg.dim, alg.dim, Ratio(0));
  for (std::size_t i = 0; i < alg.dim; ++i) alg.metric(i, i) = w[i];
  return alg;
}

// Truncated polynomial ring C[x]/(x^n) with g(x^i, x^j) = [i + j = n - 1].
AlgebraData<Ratio> truncated_algebra(std::size_t n) {
  AlgebraData<Ratio> alg;
  alg.dim = n;
  for (std::size_t i = 0; i < n; ++i) alg.labels.push_back("x^" + std::to_string(i));
  alg.structure.assign(n * n * n, Ratio(0));
  alg.metric = Matrix<Ratio>(n, n, Ratio(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i + j < n) alg.c(i, j, i + j) = Ratio(1);
      if (i + j == n - 1) alg.metric(i, j) = Ratio(1);
    }
  return alg;
}

// Rewrite the algebra in the basis f_v = sum_u P(u, v) e_u.
AlgebraData<Ratio> change_basis(const AlgebraData<Ratio>& alg, const Matrix<Ratio>& P) {
  const std::size_t n = alg.dim;
  Matrix<Ratio> Pinv = inverse(P);
  AlgebraData<Ratio> out = alg;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<Ratio> fu(n), fv(n);
      for (std::size_t k = 0; k < n; ++k) {
        fu[k] = P(k, u);
        fv[k] = P(k, v);
      }
      auto prod = algebra_product(alg, fu, fv);
      for (std::size_t w = 0; w < n; ++w) {
        Ratio s(0);
        for (std::size_t k = 0; k < n; ++k) s += Pinv(w, k) * prod[k];
        out.c(u, v, w) = s;
      }
    }
  out.metric = transpose(P) * alg.metric * P;
  return out;
}

Matrix<Ratio> unit_fixing_matrix(std::mt19937& rng, std::size_t n, std::size_t unit) {
  for (;;) {
    Matrix<Ratio> P = oracle::random_ratio_matrix(rng, n, -3, 3);
    for (std::size_t k = 0; k < n; ++k) P(k, unit) = Ratio(k == unit ? 1 : 0);
    if (!det_exact(P).is_zero()) return P;
  }
}

MPoly var(const Potential& F, const std::string& name) { return MPoly::variable(F.table, name); }

Potential assembled(const std::vector<int>& orders) {
  std::vector<TearDropData> tds;
  for (int a : orders) tds.push_back(solve_teardrop(a));
  return assemble_multipoint(tds);
}

}  // namespace

TEST_CASE("trace form and euler determinant on split and nilpotent algebras") {
  auto split = split_algebra({Ratio(1), Ratio(2), Ratio(1, 3)});
  // basis 1, e_1, e_2
  Matrix<Ratio> P(3, 3, Ratio(0));
  for (std::size_t k = 0; k < 3; ++k) P(k, 0) = Ratio(1);
  P(1, 1) = Ratio(1);
  P(2, 2) = Ratio(1);
  auto k3 = change_basis(split, P);
  k3.unit = 0;
  validate_algebra(k3);
  auto tf = trace_form_semisimple(k3);
  CHECK(tf.semisimple);
  auto ec = euler_class_result(k3);
  CHECK(ec.verdict == EulerVerdict::Semisimple);
  CHECK_FALSE(ec.det.is_zero());
  for (std::size_t n : {2u, 3u, 4u}) {
    auto nil = truncated_algebra(n);
    validate_algebra(nil);
    CHECK_FALSE(trace_form_semisimple(nil).semisimple);
    CHECK(euler_class_result(nil).det.is_zero());
    CHECK(euler_class_result(nil).verdict == EulerVerdict::NotSemisimple);
  }
  auto one = truncated_algebra(1);
  CHECK(trace_form_semisimple(one).semisimple);
  CHECK(euler_det(one) == Ratio(1));
}

TEST_CASE("euler class of the split algebra is sum of inverse weights times idempotents") {
  auto alg = split_algebra({Ratio(1), Ratio(2), Ratio(1, 3), Ratio(-5)});
  auto e = quantum_euler(alg);
  CHECK(e == std::vector<Ratio>{Ratio(1), Ratio(1, 2), Ratio(3), Ratio(-1, 5)});
  CHECK(euler_det(alg) == Ratio(1) * Ratio(1, 2) * Ratio(3) * Ratio(-1, 5));
}

TEST_CASE("invariance under change of basis") {
  std::mt19937 rng(2718);
  std::vector<AlgebraData<Ratio>> algs{truncated_algebra(3), chen_ruan_algebra(parse_curve("g=0;a=3")),
                                       chen_ruan_algebra(parse_curve("g=0;a=2,2"))};
  for (const auto& alg : algs) {
    for (int it = 0; it < 5; ++it) {
      Matrix<Ratio> P = unit_fixing_matrix(rng, alg.dim, alg.unit);
      auto b = change_basis(alg, P);
      validate_algebra(b);
      CHECK(euler_det(b) == euler_det(alg));
      Ratio dp = det_exact(P);
      CHECK(trace_form_semisimple(b).det == trace_form_semisimple(alg).det * dp * dp);
    }
  }
}

TEST_CASE("validation rejects broken algebras") {
  auto alg = truncated_algebra(3);
  auto noncomm = alg;
  noncomm.c(1, 2, 0) = Ratio(1);
  CHECK_THROWS_AS(validate_algebra(noncomm), std::invalid_argument);
  auto badmetric = alg;
  badmetric.metric(0, 0) = Ratio(1);
  badmetric.metric(1, 1) = Ratio(5);
  CHECK_THROWS_AS(validate_algebra(badmetric), std::invalid_argument);
  auto singular = alg;
  singular.metric = Matrix<Ratio>(3, 3, Ratio(0));
  CHECK_THROWS(quantum_euler(singular));
}

TEST_CASE("chen-ruan algebras are frobenius and nilpotent") {
  for (const char* lit : {"g=0;a=", "g=0;a=2", "g=0;a=2,3,5", "g=1;a=", "g=2;a=", "g=1;a=3"}) {
    auto alg = chen_ruan_algebra(parse_curve(lit));
    validate_algebra(alg);
    CHECK_MESSAGE(!trace_form_semisimple(alg).semisimple, lit);
    CHECK(euler_det(alg).is_zero());
  }
}

TEST_CASE("leading determinants of assembled potentials") {
  struct Case {
    std::vector<int> orders;
    std::function<MPoly(const Potential&)> expected;
  };
  std::vector<Case> cases{
      {{2}, [](const Potential& F) { return var(F, "t1_1").pow(3) * Ratio(-2); }},
      {{3}, [](const Potential& F) { return var(F, "t1_1").pow(4) * Ratio(-16, 3); }},
      {{4}, [](const Potential& F) { return var(F, "t1_1").pow(5) * Ratio(-27); }},
      {{2, 2}, [](const Potential& F) { return var(F, "t1_1").pow(3) * var(F, "t2_1").pow(3) * Ratio(-1); }},
      {{2, 3}, [](const Potential& F) { return var(F, "t1_1").pow(3) * var(F, "t2_1").pow(4) * Ratio(-8, 3); }},
  };
  for (const auto& c : cases) {
    Potential F = assembled(c.orders);
    LeadingDetReport rep = leading_det_check(F.curve, F);
    CHECK(rep.q0.is_zero());
    CHECK(rep.q0_vanishes);
    CHECK(rep.q1_reduced == c.expected(F));
    CHECK(rep.expected == c.expected(F));
    CHECK(rep.pass());
    auto big = big_quantum_algebra(F);
    CHECK(euler_class_result(big).verdict == EulerVerdict::Semisimple);
  }
  Potential P1 = classical_potential(parse_curve("g=0;a="));
  P1.B[0] = MPoly::constant(P1.table, Ratio(1));
  LeadingDetReport r = leading_det_check(P1.curve, P1);
  CHECK(r.q1 == MPoly::constant(P1.table, Ratio(-4)));
  CHECK(r.pass());
}

TEST_CASE("leading determinant detects a corrupted potential") {
  Potential F = assembled({3});
  F.A = F.A * Ratio(2);
  CHECK_FALSE(leading_det_check(F.curve, F).pass());
  Potential G = assembled({2});
  CHECK_THROWS_AS(leading_det_check(parse_curve("g=0;a=3"), G), std::invalid_argument);
}

TEST_CASE("algebra json round trip") {
  for (const auto& alg : {truncated_algebra(4), chen_ruan_algebra(parse_curve("g=0;a=2,3"))}) {
    auto j = algebra_to_json(alg);
    auto back = algebra_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.dim == alg.dim);
    CHECK(back.labels == alg.labels);
    CHECK(back.structure == alg.structure);
    CHECK(back.metric == alg.metric);
    CHECK(back.unit == alg.unit);
    CHECK(algebra_to_json(back).dump() == j.dump());
  }
}
