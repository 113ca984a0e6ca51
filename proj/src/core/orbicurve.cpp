#include "orbicurve.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace orbiq {

OrbiCurve::OrbiCurve(int g, std::vector<int> a) : genus(g), orders(std::move(a)) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  for (int x : orders)
    if (x < 1) throw std::invalid_argument("orbifold orders must be >= 1");
}

OrbiCurve OrbiCurve::canonical() const {
  std::vector<int> a;
  for (int x : orders)
    if (x > 1) a.push_back(x);
  std::sort(a.begin(), a.end(), std::greater<>());
  return OrbiCurve(genus, a);
}

std::string OrbiCurve::literal() const {
  std::ostringstream os;
  os << "g=" << genus << ";a=";
  for (std::size_t i = 0; i < orders.size(); ++i) os << (i ? "," : "") << orders[i];
  return os.str();
}

namespace {

int parse_int_at(std::string_view s, std::size_t& pos, std::size_t offset) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) throw CurveSyntaxError("expected a non-negative integer", offset + start);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + pos, value);
  if (ec != std::errc()) throw CurveSyntaxError("integer out of range", offset + start);
  return value;
}

}  // namespace

OrbiCurve parse_curve(std::string_view lit) {
  std::string compact;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < lit.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(lit[i]))) continue;
    compact.push_back(lit[i]);
    origin.push_back(i);
  }
  auto where = [&](std::size_t p) { return p < origin.size() ? origin[p] : lit.size(); };
  std::string_view s(compact);
  std::size_t pos = 0;
  auto expect = [&](std::string_view tok) {
    if (s.substr(pos, tok.size()) != tok) throw CurveSyntaxError("expected '" + std::string(tok) + "'", where(pos));
    pos += tok.size();
  };

  expect("g=");
  int g = parse_int_at(s, pos, 0);
  expect(";a=");
  std::vector<int> orders;
  if (pos < s.size()) {
    while (true) {
      std::size_t at = pos;
      try {
        orders.push_back(parse_int_at(s, pos, 0));
      } catch (const CurveSyntaxError&) {
        throw CurveSyntaxError("expected an orbifold order", where(at));
      }
      if (orders.back() < 1) throw CurveSyntaxError("orbifold orders must be >= 1", where(at));
      if (pos == s.size()) break;
      if (s[pos] != ',') throw CurveSyntaxError("expected ',' between orders", where(pos));
      ++pos;
    }
  }
  return OrbiCurve(g, orders);
}

std::string BasisIndex::label() const { return std::to_string(point) + (point == 0 ? "" : ",") + std::to_string(twist); }

std::string to_string(CurveClass c) {
  switch (c) {
    case CurveClass::Fano: return "Fano";
    case CurveClass::CalabiYau: return "CalabiYau";
    case CurveClass::GeneralType: return "GeneralType";
  }
  return "?";
}

Ratio euler_char(const OrbiCurve& curve) {
  Ratio chi(2 - 2 * curve.genus);
  for (int a : curve.orders) chi -= Ratio(1) - Ratio(1, a);
  return chi;
}

CurveClass classify(const OrbiCurve& curve) {
  int s = euler_char(curve).sign();
  return s > 0 ? CurveClass::Fano : (s == 0 ? CurveClass::CalabiYau : CurveClass::GeneralType);
}

BasisSet::BasisSet(const OrbiCurve& curve) : curve_(curve) {
  basis_.push_back({0, 0});
  basis_.push_back({0, 1});
  for (std::size_t alpha = 0; alpha < curve.orders.size(); ++alpha)
    for (int i = 1; i < curve.orders[alpha]; ++i) basis_.push_back({static_cast<int>(alpha) + 1, i});
}

std::size_t BasisSet::position(const BasisIndex& s) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), s);
  if (it == basis_.end() || *it != s) throw std::out_of_range("basis index (" + s.label() + ") not in index set");
  return static_cast<std::size_t>(it - basis_.begin());
}

bool BasisSet::contains(const BasisIndex& s) const { return std::binary_search(basis_.begin(), basis_.end(), s); }

Ratio BasisSet::orbifold_degree(std::size_t k) const {
  const auto& s = basis_.at(k);
  if (s.is_unit()) return Ratio(0);
  if (s.is_point_class()) return Ratio(2);
  return Ratio(2 * s.twist, curve_.orders[static_cast<std::size_t>(s.point - 1)]);
}

std::size_t BasisSet::dual_position(std::size_t k) const {
  const auto& s = basis_.at(k);
  if (s.is_unit()) return 1;
  if (s.is_point_class()) return 0;
  int a = curve_.orders[static_cast<std::size_t>(s.point - 1)];
  return position({s.point, a - s.twist});
}

std::size_t basis_size(const OrbiCurve& curve) {
  std::size_t n = 2;
  for (int a : curve.orders) n += static_cast<std::size_t>(a - 1);
  return n;
}

Pairing pairing_matrix(const OrbiCurve& curve) {
  BasisSet basis(curve);
  const std::size_t n = basis.size();
  Matrix<Ratio> g(n, n, Ratio(0));
  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = basis[k];
    std::size_t d = basis.dual_position(k);
    g(k, d) = s.is_twisted() ? Ratio(1, curve.orders[static_cast<std::size_t>(s.point - 1)]) : Ratio(1);
  }
  Pairing out{g, inverse(g), {}};
  for (std::size_t k = 0; k < n; ++k) {
    CohClass<Ratio> phi{curve, std::vector<Ratio>(n, Ratio(0))};
    for (std::size_t j = 0; j < n; ++j) phi.coeffs[j] = out.g_inv(k, j);
    out.dual.push_back(std::move(phi));
  }
  return out;
}

std::vector<Ratio> chen_ruan_basis_product(const BasisSet& basis, std::size_t u, std::size_t v) {
  const std::size_t n = basis.size();
  std::vector<Ratio> out(n, Ratio(0));
  const auto& x = basis[u];
  const auto& y = basis[v];
  if (x.is_unit()) {
    out[v] = 1;
    return out;
  }
  if (y.is_unit()) {
    out[u] = 1;
    return out;
  }
  // Everything else has positive degree; the point class kills positive degree.
  if (x.is_point_class() || y.is_point_class()) return out;
  if (x.point != y.point) return out;
  int a = basis.curve().orders[static_cast<std::size_t>(x.point - 1)];
  int k = x.twist + y.twist;
  if (k < a) {
    out[basis.position({x.point, k})] = 1;
  } else if (k == a) {
    out[1] = Ratio(1, a);
  }
  return out;
}

CohClass<Ratio> chen_ruan_mul(const CohClass<Ratio>& x, const CohClass<Ratio>& y) {
  if (!(x.curve == y.curve)) throw std::invalid_argument("chen_ruan_mul: classes live on different curves");
  BasisSet basis(x.curve);
  const std::size_t n = basis.size();
  if (x.coeffs.size() != n || y.coeffs.size() != n) throw std::invalid_argument("chen_ruan_mul: coefficient length mismatch");
  CohClass<Ratio> r{x.curve, std::vector<Ratio>(n, Ratio(0))};
  for (std::size_t u = 0; u < n; ++u) {
    if (x.coeffs[u].is_zero()) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (y.coeffs[v].is_zero()) continue;
      auto prod = chen_ruan_basis_product(basis, u, v);
      Ratio c = x.coeffs[u] * y.coeffs[v];
      for (std::size_t w = 0; w < n; ++w)
        if (!prod[w].is_zero()) r.coeffs[w] += c * prod[w];
    }
  }
  return r;
}

CohClass<Ratio> basis_class(const OrbiCurve& curve, const BasisIndex& s) {
  BasisSet basis(curve);
  CohClass<Ratio> c{curve, std::vector<Ratio>(basis.size(), Ratio(0))};
  c.coeffs[basis.position(s)] = 1;
  return c;
}

}  // namespace orbiq
