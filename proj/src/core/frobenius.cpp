#include "frobenius.hpp"

#include <nlohmann/json.hpp>

namespace orbiq {

TraceFormResult trace_form_semisimple(const AlgebraData<Ratio>& alg) {
  const std::size_t n = alg.dim;
  std::vector<Ratio> tr(n, Ratio(0));
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t z = 0; z < n; ++z) tr[w] += alg.c(w, z, z);
  Matrix<Ratio> gram(n, n, Ratio(0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (!alg.c(u, v, w).is_zero()) gram(u, v) += alg.c(u, v, w) * tr[w];
  Ratio d = det_exact(gram);
  return TraceFormResult{!d.is_zero(), gram, d};
}

std::string to_string(EulerVerdict v) {
  switch (v) {
    case EulerVerdict::Semisimple: return "semisimple";
    case EulerVerdict::NotSemisimple: return "not semisimple";
    case EulerVerdict::UndecidedAtTruncation: return "undecided at truncation";
  }
  return "?";
}

EulerClassResult<Ratio> euler_class_result(const AlgebraData<Ratio>& alg) {
  auto e = quantum_euler(alg);
  Ratio d = det_exact(mult_matrix(alg, e));
  return {e, d, d.is_zero() ? EulerVerdict::NotSemisimple : EulerVerdict::Semisimple};
}

EulerClassResult<QSeries> euler_class_result(const AlgebraData<QSeries>& alg) {
  auto e = quantum_euler(alg);
  QSeries d = det_exact(mult_matrix(alg, e));
  // A nonzero known coefficient certifies det != 0; all-zero says nothing past the truncation.
  return {e, d, d.is_zero() ? EulerVerdict::UndecidedAtTruncation : EulerVerdict::Semisimple};
}

AlgebraData<QSeries> big_quantum_algebra(const Potential& F) {
  QuantumStructure qs(F);
  const std::size_t n = qs.dim();
  AlgebraData<QSeries> alg{n, {}, {}, qs.pairing().g, 0};
  for (const auto& s : qs.basis().indices()) alg.labels.push_back(s.label());
  alg.structure.reserve(n * n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      auto prod = qs.basis_product(u, v);
      for (auto& p : prod) alg.structure.push_back(std::move(p));
    }
  return alg;
}

AlgebraData<Ratio> chen_ruan_algebra(const OrbiCurve& curve) {
  BasisSet basis(curve);
  const std::size_t n = basis.size();
  AlgebraData<Ratio> alg{n, {}, {}, pairing_matrix(curve).g, 0};
  for (const auto& s : basis.indices()) alg.labels.push_back(s.label());
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      auto prod = chen_ruan_basis_product(basis, u, v);
      alg.structure.insert(alg.structure.end(), prod.begin(), prod.end());
    }
  return alg;
}

MPoly expected_leading_det(const OrbiCurve& curve, const TablePtr& table) {
  BasisSet basis(curve);
  Ratio coeff(-4);
  Exponent e(table->size(), 0);
  for (std::size_t alpha = 0; alpha < curve.orders.size(); ++alpha) {
    const int a = curve.orders[alpha];
    if (a < 2) continue;
    coeff *= pow(Ratio(a - 1), static_cast<unsigned>(a - 1)) / Ratio(a);
    e[basis.position({static_cast<int>(alpha) + 1, 1})] = a + 1;
  }
  return MPoly::monomial(table, e, coeff);
}

LeadingDetReport leading_det_check(const OrbiCurve& curve, const Potential& F) {
  if (F.truncation_order() != 1) throw std::invalid_argument("leading_det_check: potential must be truncated at D = 1");
  if (!(F.curve == curve)) throw std::invalid_argument("leading_det_check: potential belongs to a different curve");
  auto alg = big_quantum_algebra(F);
  QSeries d = euler_det(alg);

  BasisSet basis(curve);
  std::vector<bool> mask(F.table->size(), false);
  for (std::size_t k = 2; k < basis.size(); ++k)
    if (basis[k].twist >= 2) mask[k] = true;

  LeadingDetReport rep{d, d[0], d[1], d[1].drop_vars(mask), expected_leading_det(curve, F.table), false, false};
  rep.q0_vanishes = rep.q0.is_zero();
  rep.q1_matches = rep.q1_reduced == rep.expected;
  return rep;
}

nlohmann::json algebra_to_json(const AlgebraData<Ratio>& alg) {
  nlohmann::json metric = nlohmann::json::array();
  for (std::size_t i = 0; i < alg.dim; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < alg.dim; ++j) row.push_back(alg.metric(i, j).str());
    metric.push_back(row);
  }
  nlohmann::json triples = nlohmann::json::array();
  for (std::size_t u = 0; u < alg.dim; ++u)
    for (std::size_t v = 0; v < alg.dim; ++v)
      for (std::size_t w = 0; w < alg.dim; ++w)
        if (!alg.c(u, v, w).is_zero()) triples.push_back(nlohmann::json::array({u, v, w, alg.c(u, v, w).str()}));
  return nlohmann::json{{"dim", alg.dim}, {"labels", alg.labels}, {"unit", alg.unit}, {"metric", metric}, {"structure", triples}};
}

AlgebraData<Ratio> algebra_from_json(const nlohmann::json& j) {
  const std::size_t n = j.at("dim").get<std::size_t>();
  if (n == 0) throw std::invalid_argument("algebra JSON: dim must be positive");
  AlgebraData<Ratio> alg{n, j.at("labels").get<std::vector<std::string>>(), std::vector<Ratio>(n * n * n, Ratio(0)),
                         Matrix<Ratio>(n, n, Ratio(0)), j.value("unit", std::size_t{0})};
  const auto& m = j.at("metric");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) alg.metric(i, k) = Ratio::parse(m.at(i).at(k).get<std::string>());
  for (const auto& t : j.at("structure")) {
    auto u = t.at(0).get<std::size_t>(), v = t.at(1).get<std::size_t>(), w = t.at(2).get<std::size_t>();
    if (u >= n || v >= n || w >= n) throw std::invalid_argument("algebra JSON: structure index out of range");
    alg.c(u, v, w) = Ratio::parse(t.at(3).get<std::string>());
  }
  validate_algebra(alg);
  return alg;
}

}  // namespace orbiq
