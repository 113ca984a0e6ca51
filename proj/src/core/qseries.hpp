#pragma once

// Truncated power series c_0 + c_1 q + ... + c_D q^D with MPoly coefficients.
// q stands for Q·exp(t^{01}); everything beyond order D is discarded.

#include "mpoly.hpp"

#include <vector>

namespace orbiq {

class QSeries {
 public:
  QSeries(TablePtr table, int order);
  /// The constant series p·q^0.
  static QSeries from_poly(const MPoly& p, int order);
  /// Series with p at q^degree (zero if degree exceeds the order).
  static QSeries monomial(const MPoly& p, int degree, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const TablePtr& table() const { return table_; }
  const MPoly& operator[](int d) const { return coeffs_.at(static_cast<std::size_t>(d)); }
  MPoly& operator[](int d) { return coeffs_.at(static_cast<std::size_t>(d)); }
  const std::vector<MPoly>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Lowest d with c_d != 0, or order()+1 for the zero series.
  int valuation() const;

  /// Divides by q^k; requires valuation() >= k.  The result keeps the same
  /// order with zero top slots (those coefficients are unknown, not zero, so
  /// callers must re-truncate).
  QSeries shift_down(int k) const;
  /// Multiplies by q^k, truncating.
  QSeries shift_up(int k) const;
  QSeries truncated(int order) const;

  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Ratio& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator*(QSeries a, const Ratio& c) { return a *= c; }
  friend QSeries operator*(const Ratio& c, QSeries a) { return a *= c; }
  friend bool operator==(const QSeries& a, const QSeries& b);

  std::string str() const;

 private:
  void check_compatible(const QSeries& o) const;

  TablePtr table_;
  std::vector<MPoly> coeffs_;
};

inline bool is_zero(const QSeries& s) { return s.is_zero(); }
inline QSeries zero_like(const QSeries& s) { return QSeries(s.table(), s.order()); }
inline QSeries one_like(const QSeries& s) {
  return QSeries::from_poly(MPoly::constant(s.table(), Ratio(1)), s.order());
}

nlohmann::json to_json(const QSeries& s);

}  // namespace orbiq
