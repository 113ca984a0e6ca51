#include "qseries.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbiq {

QSeries::QSeries(TablePtr table, int order) : table_(std::move(table)) {
  if (order < 0) throw std::invalid_argument("QSeries: negative truncation order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, MPoly(table_));
}

QSeries QSeries::from_poly(const MPoly& p, int order) { return monomial(p, 0, order); }

QSeries QSeries::monomial(const MPoly& p, int degree, int order) {
  QSeries s(p.table(), order);
  if (degree >= 0 && degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = p;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MPoly& p) { return p.is_zero(); });
}

int QSeries::valuation() const {
  for (std::size_t d = 0; d < coeffs_.size(); ++d)
    if (!coeffs_[d].is_zero()) return static_cast<int>(d);
  return order() + 1;
}

QSeries QSeries::shift_down(int k) const {
  if (valuation() < k) throw std::domain_error("QSeries::shift_down: series not divisible by q^k");
  QSeries r(table_, order());
  for (int d = k; d <= order(); ++d) r.coeffs_[static_cast<std::size_t>(d - k)] = coeffs_[static_cast<std::size_t>(d)];
  return r;
}

QSeries QSeries::shift_up(int k) const {
  QSeries r(table_, order());
  for (int d = 0; d + k <= order(); ++d) r.coeffs_[static_cast<std::size_t>(d + k)] = coeffs_[static_cast<std::size_t>(d)];
  return r;
}

QSeries QSeries::truncated(int new_order) const {
  QSeries r(table_, new_order);
  for (int d = 0; d <= std::min(new_order, order()); ++d)
    r.coeffs_[static_cast<std::size_t>(d)] = coeffs_[static_cast<std::size_t>(d)];
  return r;
}

void QSeries::check_compatible(const QSeries& o) const {
  if (o.order() != order()) throw std::invalid_argument("QSeries: truncation orders differ");
}

QSeries QSeries::operator-() const {
  QSeries r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  check_compatible(o);
  for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  check_compatible(o);
  for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
  return *this;
}

QSeries& QSeries::operator*=(const Ratio& c) {
  for (auto& p : coeffs_) p *= c;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.check_compatible(b);
  QSeries r(a.table_, a.order());
  const int n = a.order();
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs_[static_cast<std::size_t>(j)].is_zero()) continue;
      r.coeffs_[static_cast<std::size_t>(i + j)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= order(); ++d) {
    const auto& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << c.str();
    } else {
      os << "(" << c.str() << ")*q";
      if (d > 1) os << "^" << d;
    }
  }
  if (first) os << "0";
  os << " + O(q^" << order() + 1 << ")";
  return os.str();
}

nlohmann::json to_json(const QSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : s.coeffs()) arr.push_back(to_json(c));
  return nlohmann::json{{"truncation_order", s.order()}, {"coeffs", arr}};
}

}  // namespace orbiq
