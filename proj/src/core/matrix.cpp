#include "matrix.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace orbiq {

namespace {

// Appends a fresh variable standing for q so series entries become plain
// polynomials; Bareiss then runs in the integral domain Q[t, q].
TablePtr with_q_variable(const TablePtr& base) {
  auto names = base->names();
  auto weights = base->weights();
  std::string qname = "q";
  while (base->find(qname)) qname += "_";
  names.push_back(qname);
  weights.push_back(Ratio(0));
  return make_table(std::move(names), std::move(weights));
}

MPoly series_to_poly(const QSeries& s, int max_order, const TablePtr& ext) {
  const std::size_t nbase = s.table()->size();
  std::vector<std::size_t> idx(nbase);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  MPoly out(ext);
  for (int d = 0; d <= std::min(max_order, s.order()); ++d) {
    for (const auto& [e, c] : s[d].terms()) {
      Exponent f(e);
      f.push_back(d);
      out.add_term(f, c);
    }
  }
  return out;
}

QSeries poly_to_series(const MPoly& p, const TablePtr& base, int order) {
  QSeries s(base, order);
  const std::size_t qidx = base->size();
  for (const auto& [e, c] : p.terms()) {
    int d = e[qidx];
    if (d > order) continue;
    Exponent f(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(qidx));
    s[d].add_term(f, c);
  }
  return s;
}

}  // namespace

QSeries det_exact(const Matrix<QSeries>& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const int order = m(0, 0).order();
  const TablePtr base = m(0, 0).table();

  // Take out the largest power of q common to each column.
  std::vector<int> col_shift(n, 0);
  int total_shift = 0;
  for (std::size_t j = 0; j < n; ++j) {
    int v = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < n; ++i) v = std::min(v, m(i, j).valuation());
    if (v > order) return QSeries(base, order);  // zero column up to the truncation
    col_shift[j] = v;
    total_shift += v;
  }
  if (total_shift > order) return QSeries(base, order);

  // After factoring, only orders 0..order-total_shift of the determinant are known.
  const int residual_order = order - total_shift;
  const TablePtr ext = with_q_variable(base);
  Matrix<MPoly> pm(n, n, MPoly(ext));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      pm(i, j) = series_to_poly(m(i, j).shift_down(col_shift[j]), residual_order, ext);

  MPoly d = det_bareiss(pm);
  return poly_to_series(d, base, residual_order).truncated(order).shift_up(total_shift);
}

Matrix<Ratio> inverse(const Matrix<Ratio>& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Ratio> a = m;
  Matrix<Ratio> inv = identity_like(n, Ratio(0));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    a.swap_rows(p, k);
    inv.swap_rows(p, k);
    Ratio piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      Ratio f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

LinearSolveResult linear_solve_rational(const Matrix<Ratio>& a, const std::vector<Ratio>& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (b.size() != rows) throw std::invalid_argument("linear_solve_rational: right-hand side length mismatch");
  Matrix<Ratio> m(rows, cols + 1, Ratio(0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(i, j);
    m(i, cols) = b[i];
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    Ratio piv = m(r, c);
    for (std::size_t j = c; j <= cols; ++j) m(r, j) /= piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Ratio f = m(i, c);
      for (std::size_t j = c; j <= cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }

  LinearSolveResult out;
  for (std::size_t i = r; i < rows; ++i) {
    if (!m(i, cols).is_zero()) {
      out.consistent = false;
      out.kernel_dim = cols - r;
      out.determined.assign(cols, false);
      return out;
    }
  }
  out.consistent = true;
  out.kernel_dim = cols - r;
  out.solution.assign(cols, Ratio(0));
  out.determined.assign(cols, false);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t c = pivot_cols[i];
    out.solution[c] = m(i, cols);
    bool touches_free = false;
    for (std::size_t j = 0; j < cols; ++j)
      if (!is_pivot[j] && !m(i, j).is_zero()) touches_free = true;
    out.determined[c] = !touches_free;
  }
  return out;
}

}  // namespace orbiq
