#pragma once

// Independent reference computations used only by the tests.

#include "matrix.hpp"
#include "orbicurve.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using orbiq::Matrix;
using orbiq::Ratio;

// Laplace expansion along the first row.
template <typename T>
T cofactor_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  T total = orbiq::zero_like(m(0, 0));
  for (std::size_t j = 0; j < n; ++j) {
    if (orbiq::is_zero(m(0, j))) continue;
    Matrix<T> minor(n - 1, n - 1, m(0, 0));
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    T term = m(0, j) * cofactor_det(minor);
    if (j % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

inline Matrix<Ratio> random_ratio_matrix(std::mt19937& rng, std::size_t n, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, 4);
  Matrix<Ratio> m(n, n, Ratio(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Ratio(num(rng), den(rng));
  return m;
}

// Chen-Ruan product of basis elements straight from the sector rule:
// phi_{a,i} phi_{a,j} = phi_{a,i+j} (i+j<a), (1/a) phi_01 (i+j=a), 0 (i+j>a);
// different points multiply to zero; phi_00 is the unit and phi_01 * anything
// except phi_00 vanishes.
inline std::vector<Ratio> chen_ruan_rule(const orbiq::BasisSet& b, std::size_t u, std::size_t v) {
  std::vector<Ratio> out(b.size(), Ratio(0));
  const auto& s = b[u];
  const auto& t = b[v];
  if (s.is_unit()) {
    out[v] = Ratio(1);
    return out;
  }
  if (t.is_unit()) {
    out[u] = Ratio(1);
    return out;
  }
  if (s.is_point_class() || t.is_point_class()) return out;
  if (s.point != t.point) return out;
  const int a = b.curve().orders[static_cast<std::size_t>(s.point - 1)];
  const int k = s.twist + t.twist;
  if (k < a) out[b.position({s.point, k})] = Ratio(1);
  if (k == a) out[b.position({0, 1})] = Ratio(1, a);
  return out;
}

using Point = std::vector<std::complex<double>>;

inline double max_coord_error(const Point& a, const Point& b) {
  double e = 0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

// Hungarian algorithm (potentials, O(n^3)) on a square cost matrix; returns
// assignment[row] = column minimising the total cost.
inline std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost) {
  const std::size_t n = cost.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      std::size_t i0 = p[j0], j1 = 0;
      double delta = inf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[p[j] - 1] = j - 1;
  return assignment;
}

struct Matching {
  bool same_count = false;
  double max_error = std::numeric_limits<double>::infinity();
  std::size_t worst_expected = 0;
};

inline Matching match_points(const std::vector<Point>& expected, const std::vector<Point>& found) {
  Matching m;
  m.same_count = expected.size() == found.size();
  if (!m.same_count || expected.empty()) {
    if (m.same_count) m.max_error = 0;
    return m;
  }
  std::vector<std::vector<double>> cost(expected.size(), std::vector<double>(found.size()));
  for (std::size_t i = 0; i < expected.size(); ++i)
    for (std::size_t j = 0; j < found.size(); ++j) cost[i][j] = max_coord_error(expected[i], found[j]);
  auto asg = hungarian(cost);
  m.max_error = 0;
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (cost[i][asg[i]] > m.max_error) {
      m.max_error = cost[i][asg[i]];
      m.worst_expected = i;
    }
  return m;
}

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  return nlohmann::json::parse(in);
}

inline std::vector<Point> golden_points(const nlohmann::json& doc, const std::string& literal) {
  std::vector<Point> out;
  for (const auto& p : doc.at("curves").at(literal).at("points")) {
    Point pt;
    for (const auto& c : p.at("coordinates")) pt.emplace_back(c[0].get<double>(), c[1].get<double>());
    out.push_back(pt);
  }
  return out;
}

// Closed forms at Q = 1 for the two infinite families.
inline std::vector<Point> closed_form_a1a2(int a1, int a2) {
  const int n = a1 + a2;
  const double r1 = std::pow(static_cast<double>(a2) / a1, 1.0 / n);
  const double r2 = std::pow(static_cast<double>(a1) / a2, 1.0 / n);
  std::vector<Point> out;
  for (int k = 1; k <= n; ++k) {
    const double th = 2 * M_PI * k / n;
    out.push_back({std::polar(r1, th), std::polar(r2, -th)});
  }
  return out;
}

inline std::vector<Point> closed_form_22a(int a) {
  using C = std::complex<double>;
  std::vector<Point> out;
  const double A = a;
  if (a % 2 == 0) {
    const int m = a / 2;
    out = {{A, A, 2.0}, {-A, -A, 2.0}, {A, -A, -2.0}, {-A, A, -2.0}, {0.0, 0.0, 0.0}};
    for (int k = 1; k < m; ++k) {
      const double r = std::sqrt(2 - 2 * std::cos(k * M_PI / m));
      out.push_back({0.0, 0.0, r});
      out.push_back({0.0, 0.0, -r});
    }
  } else {
    const int m = (a - 1) / 2;
    out = {{A, A, 2.0}, {-A, -A, 2.0}, {C(0, A), C(0, -A), -2.0}, {C(0, -A), C(0, A), -2.0}};
    for (int k = 0; k < m; ++k) {
      const double r = std::sqrt(2 - 2 * std::cos((2 * k + 1) * M_PI / (2 * m + 1)));
      out.push_back({0.0, 0.0, r});
      out.push_back({0.0, 0.0, -r});
    }
  }
  return out;
}

}  // namespace oracle
