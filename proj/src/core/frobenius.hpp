#pragma once

// Finite-dimensional commutative Frobenius algebras given by structure
// constants and a metric: multiplication matrices, the quantum Euler
// class, and the trace-form semisimplicity test.

#include "potential.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace orbiq {

template <typename T>
struct AlgebraData {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<T> structure;  // c_{uv}^w at (u * dim + v) * dim + w
  Matrix<Ratio> metric = Matrix<Ratio>(1, 1, Ratio(0));
  std::size_t unit = 0;

  const T& c(std::size_t u, std::size_t v, std::size_t w) const { return structure[(u * dim + v) * dim + w]; }
  T& c(std::size_t u, std::size_t v, std::size_t w) { return structure[(u * dim + v) * dim + w]; }
};

/// Throws std::invalid_argument unless c is commutative, the unit acts as the
/// identity and g(xy, z) = g(x, yz) holds on all basis triples.
template <typename T>
void validate_algebra(const AlgebraData<T>& alg) {
  const std::size_t n = alg.dim;
  if (alg.structure.size() != n * n * n || alg.labels.size() != n || alg.metric.rows() != n || !alg.metric.square())
    throw std::invalid_argument("algebra: inconsistent dimensions");
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w) {
        if (!(alg.c(u, v, w) == alg.c(v, u, w))) throw std::invalid_argument("algebra: product is not commutative");
        bool delta = (v == w);
        T expected = delta ? one_like(alg.c(0, 0, 0)) : zero_like(alg.c(0, 0, 0));
        if (!(alg.c(alg.unit, v, w) == expected)) throw std::invalid_argument("algebra: unit does not act as identity");
      }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        T lhs = zero_like(alg.c(0, 0, 0));
        T rhs = zero_like(alg.c(0, 0, 0));
        for (std::size_t w = 0; w < n; ++w) {
          if (!alg.metric(w, z).is_zero()) lhs += alg.c(x, y, w) * alg.metric(w, z);
          if (!alg.metric(x, w).is_zero()) rhs += alg.c(y, z, w) * alg.metric(x, w);
        }
        if (!(lhs == rhs)) throw std::invalid_argument("algebra: metric is not invariant (Frobenius property fails)");
      }
}

template <typename T>
std::vector<T> algebra_product(const AlgebraData<T>& alg, const std::vector<T>& x, const std::vector<T>& y) {
  const std::size_t n = alg.dim;
  std::vector<T> r(n, zero_like(alg.c(0, 0, 0)));
  for (std::size_t u = 0; u < n; ++u) {
    if (is_zero(x[u])) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (is_zero(y[v])) continue;
      T xy = x[u] * y[v];
      for (std::size_t w = 0; w < n; ++w)
        if (!is_zero(alg.c(u, v, w))) r[w] += xy * alg.c(u, v, w);
    }
  }
  return r;
}

/// Column v holds the coordinates of x * e_v.
template <typename T>
Matrix<T> mult_matrix(const AlgebraData<T>& alg, const std::vector<T>& x) {
  const std::size_t n = alg.dim;
  if (x.size() != n) throw std::invalid_argument("mult_matrix: vector length does not match the algebra dimension");
  Matrix<T> m(n, n, zero_like(alg.c(0, 0, 0)));
  for (std::size_t u = 0; u < n; ++u) {
    if (is_zero(x[u])) continue;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (!is_zero(alg.c(u, v, w))) m(w, v) += x[u] * alg.c(u, v, w);
  }
  return m;
}

/// e = sum_s e_s * e^s with e^s the metric-dual basis.  Throws std::domain_error
/// for a singular metric.
template <typename T>
std::vector<T> quantum_euler(const AlgebraData<T>& alg) {
  const std::size_t n = alg.dim;
  Matrix<Ratio> ginv = inverse(alg.metric);
  std::vector<T> e(n, zero_like(alg.c(0, 0, 0)));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t sp = 0; sp < n; ++sp) {
      if (ginv(s, sp).is_zero()) continue;
      for (std::size_t w = 0; w < n; ++w)
        if (!is_zero(alg.c(s, sp, w))) e[w] += alg.c(s, sp, w) * ginv(s, sp);
    }
  return e;
}

template <typename T>
T euler_det(const AlgebraData<T>& alg) {
  return det_exact(mult_matrix(alg, quantum_euler(alg)));
}

struct TraceFormResult {
  bool semisimple = false;
  Matrix<Ratio> gram;
  Ratio det;
};

/// Gram matrix T_{uv} = tr(L_{e_u e_v}); nondegenerate iff the algebra is reduced.
TraceFormResult trace_form_semisimple(const AlgebraData<Ratio>& alg);

enum class EulerVerdict { Semisimple, NotSemisimple, UndecidedAtTruncation };
std::string to_string(EulerVerdict v);

template <typename T>
struct EulerClassResult {
  std::vector<T> element;
  T det;
  EulerVerdict verdict;
};

EulerClassResult<Ratio> euler_class_result(const AlgebraData<Ratio>& alg);
EulerClassResult<QSeries> euler_class_result(const AlgebraData<QSeries>& alg);

/// Big quantum product algebra of a potential (basis order of BasisSet).
AlgebraData<QSeries> big_quantum_algebra(const Potential& F);
AlgebraData<Ratio> chen_ruan_algebra(const OrbiCurve& curve);

struct LeadingDetReport {
  QSeries det;
  MPoly q0;
  MPoly q1;
  MPoly q1_reduced;   // q^1 coefficient with every t^{alpha,i}, i >= 2, set to zero
  MPoly expected;     // -4 prod (a-1)^{a-1}/a (t^{alpha,1})^{a+1}
  bool q0_vanishes = false;
  bool q1_matches = false;
  bool pass() const { return q0_vanishes && q1_matches; }
};

/// Checks the order-q^0 and order-q^1 coefficients of det(e_q *) for an
/// assembled potential.  Throws std::invalid_argument unless D = 1.
LeadingDetReport leading_det_check(const OrbiCurve& curve, const Potential& F);

MPoly expected_leading_det(const OrbiCurve& curve, const TablePtr& table);

nlohmann::json algebra_to_json(const AlgebraData<Ratio>& alg);
AlgebraData<Ratio> algebra_from_json(const nlohmann::json& j);

}  // namespace orbiq
