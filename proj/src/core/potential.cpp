#include "potential.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace orbiq {

std::string coordinate_name(const BasisIndex& s) {
  if (s.point == 0) return s.twist == 0 ? "t00" : "t01";
  return "t" + std::to_string(s.point) + "_" + std::to_string(s.twist);
}

TablePtr curve_table_with(const OrbiCurve& curve, const std::vector<std::string>& extra) {
  BasisSet basis(curve);
  std::vector<std::string> names;
  std::vector<Ratio> weights;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& s = basis[k];
    names.push_back(coordinate_name(s));
    if (s.is_unit())
      weights.emplace_back(1);
    else if (s.is_point_class())
      weights.emplace_back(0);
    else
      weights.push_back(Ratio(1) - Ratio(s.twist, curve.orders[static_cast<std::size_t>(s.point - 1)]));
  }
  for (const auto& e : extra) {
    names.push_back(e);
    weights.emplace_back(0);
  }
  return make_table(std::move(names), std::move(weights));
}

TablePtr curve_table(const OrbiCurve& curve) { return curve_table_with(curve, {}); }

MPoly classical_cubic(const OrbiCurve& curve, const TablePtr& table) {
  BasisSet basis(curve);
  const std::size_t nv = table->size();
  MPoly p(table);
  Exponent e(nv, 0);
  e[0] = 2;
  e[1] = 1;
  p.add_term(e, Ratio(1, 2));
  for (std::size_t k = 2; k < basis.size(); ++k) {
    const auto& s = basis[k];
    int a = curve.orders[static_cast<std::size_t>(s.point - 1)];
    Exponent f(nv, 0);
    f[0] = 1;
    f[k] += 1;
    f[basis.position({s.point, a - s.twist})] += 1;
    p.add_term(f, Ratio(1, 2 * a));
  }
  return p;
}

Potential classical_potential(const OrbiCurve& curve, int truncation_order, TablePtr table) {
  if (truncation_order < 0) throw std::invalid_argument("negative truncation order");
  if (!table) table = curve_table(curve);
  if (table->size() < basis_size(curve)) throw std::invalid_argument("variable table too small for the curve");
  Potential F{curve, table, classical_cubic(curve, table), MPoly(table), {}};
  F.B.assign(static_cast<std::size_t>(truncation_order), MPoly(table));
  return F;
}

namespace {

bool uses_var(const MPoly& p, std::size_t idx) {
  return std::any_of(p.terms().begin(), p.terms().end(), [&](const auto& t) { return t.first[idx] != 0; });
}

}  // namespace

void validate_potential(const Potential& F) {
  const std::size_t n = basis_size(F.curve);
  if (!F.table || F.table->size() < n) throw std::invalid_argument("potential: variable table too small");
  if (!(F.classical == classical_cubic(F.curve, F.table)))
    throw std::invalid_argument("potential: classical part differs from the cubic Chen-Ruan terms");
  std::vector<bool> tmask(F.table->size(), false);
  for (std::size_t k = 2; k < n; ++k) tmask[k] = true;
  auto check = [&](const MPoly& p, const std::string& what) {
    if (uses_var(p, 0) || uses_var(p, 1)) throw std::invalid_argument("potential: " + what + " depends on t00 or t01");
  };
  check(F.A, "A");
  for (const auto& [e, c] : F.A.terms()) {
    int d = 0;
    for (std::size_t k = 2; k < n; ++k) d += e[k];
    if (d < 3) throw std::invalid_argument("potential: A has a monomial of t-degree below 3");
  }
  for (std::size_t d = 0; d < F.B.size(); ++d) check(F.B[d], "B" + std::to_string(d + 1));
}

QuantumStructure::QuantumStructure(const Potential& F)
    : F_(F), basis_(F.curve), pairing_(pairing_matrix(F.curve)) {
  const std::size_t n = basis_.size();
  const int D = F_.truncation_order();
  for (std::size_t s = 0; s < n; ++s) {
    dual_.push_back(basis_.dual_position(s));
    dual_scale_.push_back(pairing_.g_inv(s, dual_.back()));
  }

  // Derivatives of the q^0 part and each B_d, cached by sorted index triples.
  MPoly zero_part = F_.classical + F_.A;
  std::vector<MPoly> parts{zero_part};
  for (const auto& b : F_.B) parts.push_back(b);

  table_.assign(n * n * n, QSeries(F_.table, D));
  for (std::size_t part = 0; part < parts.size(); ++part) {
    const MPoly& P = parts[part];
    if (P.is_zero()) continue;
    const int d = static_cast<int>(part);
    for (std::size_t i = 0; i < n; ++i) {
      // In the q^d part with d >= 1 the t^{01}-derivative is multiplication by d.
      auto diff = [&](const MPoly& p, std::size_t var) -> MPoly {
        if (d > 0 && var == 1) return p * Ratio(d);
        return p.derivative(var);
      };
      MPoly di = diff(P, i);
      if (di.is_zero()) continue;
      for (std::size_t j = i; j < n; ++j) {
        MPoly dij = diff(di, j);
        if (dij.is_zero()) continue;
        for (std::size_t k = j; k < n; ++k) {
          MPoly dijk = diff(dij, k);
          if (dijk.is_zero()) continue;
          table_[(i * n + j) * n + k][d] += dijk;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::array<std::size_t, 3> s{i, j, k};
        std::sort(s.begin(), s.end());
        if (s[0] == i && s[1] == j && s[2] == k) continue;
        table_[(i * n + j) * n + k] = table_[(s[0] * n + s[1]) * n + s[2]];
      }
}

const QSeries& QuantumStructure::third(std::size_t s1, std::size_t s2, std::size_t s3) const {
  const std::size_t n = basis_.size();
  if (s1 >= n || s2 >= n || s3 >= n) throw std::out_of_range("third derivative index out of range");
  return table_[(s1 * n + s2) * n + s3];
}

std::vector<QSeries> QuantumStructure::basis_product(std::size_t u, std::size_t v) const {
  const std::size_t n = basis_.size();
  std::vector<QSeries> out;
  out.reserve(n);
  // c_{uv}^w = F_{u v s} g^{s w} with s = dual(w).
  for (std::size_t w = 0; w < n; ++w) out.push_back(third(u, v, dual_[w]) * dual_scale_[dual_[w]]);
  return out;
}

QSeries QuantumStructure::wdvv_residual(std::size_t s1, std::size_t s2, std::size_t s3, std::size_t s4) const {
  const std::size_t n = basis_.size();
  QSeries r(F_.table, order());
  for (std::size_t sp = 0; sp < n; ++sp) {
    const std::size_t spp = dual_[sp];
    const Ratio& g = dual_scale_[sp];
    const QSeries& l1 = third(s1, s2, sp);
    const QSeries& l2 = third(s1, s3, sp);
    if (!l1.is_zero()) {
      const QSeries& r1 = third(spp, s3, s4);
      if (!r1.is_zero()) r += (l1 * r1) * g;
    }
    if (!l2.is_zero()) {
      const QSeries& r2 = third(spp, s2, s4);
      if (!r2.is_zero()) r -= (l2 * r2) * g;
    }
  }
  return r;
}

QSeries third_derivative(const Potential& F, const BasisIndex& s1, const BasisIndex& s2, const BasisIndex& s3) {
  QuantumStructure qs(F);
  const auto& b = qs.basis();
  return qs.third(b.position(s1), b.position(s2), b.position(s3));
}

CohClass<QSeries> lift_class(const Potential& F, const CohClass<Ratio>& x) {
  CohClass<QSeries> r{x.curve, {}};
  for (const auto& c : x.coeffs)
    r.coeffs.push_back(QSeries::from_poly(MPoly::constant(F.table, c), F.truncation_order()));
  return r;
}

CohClass<QSeries> quantum_product(const Potential& F, const CohClass<QSeries>& x, const CohClass<QSeries>& y) {
  if (!(x.curve == F.curve) || !(y.curve == F.curve))
    throw std::invalid_argument("quantum_product: classes and potential live on different curves");
  QuantumStructure qs(F);
  const std::size_t n = qs.dim();
  if (x.coeffs.size() != n || y.coeffs.size() != n) throw std::invalid_argument("quantum_product: coefficient length mismatch");
  CohClass<QSeries> r{F.curve, std::vector<QSeries>(n, QSeries(F.table, F.truncation_order()))};
  for (std::size_t u = 0; u < n; ++u) {
    if (x.coeffs[u].is_zero()) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (y.coeffs[v].is_zero()) continue;
      QSeries xy = x.coeffs[u] * y.coeffs[v];
      auto prod = qs.basis_product(u, v);
      for (std::size_t w = 0; w < n; ++w)
        if (!prod[w].is_zero()) r.coeffs[w] += xy * prod[w];
    }
  }
  return r;
}

QSeries wdvv_residual(const Potential& F, const BasisIndex& s1, const BasisIndex& s2, const BasisIndex& s3,
                      const BasisIndex& s4) {
  QuantumStructure qs(F);
  const auto& b = qs.basis();
  return qs.wdvv_residual(b.position(s1), b.position(s2), b.position(s3), b.position(s4));
}

WdvvAudit wdvv_audit(const Potential& F, std::size_t keep_failures) {
  QuantumStructure qs(F);
  const std::size_t n = qs.dim();
  WdvvAudit audit;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          ++audit.types_checked;
          QSeries r = qs.wdvv_residual(a, b, c, d);
          if (r.is_zero()) continue;
          ++audit.nonzero;
          if (audit.failures.size() < keep_failures)
            audit.failures.push_back({{qs.basis()[a], qs.basis()[b], qs.basis()[c], qs.basis()[d]}, r});
        }
  return audit;
}

bool HomogeneityReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const HomogeneityEntry& e) { return e.pass; });
}

HomogeneityReport homogeneity_report(const Potential& F) {
  HomogeneityReport rep;
  const Ratio chi = euler_char(F.curve);
  auto add = [&](const std::string& name, const MPoly& p, const Ratio& expected) {
    HomogeneityEntry e{name, p.weighted_degree(), expected, false};
    e.pass = e.degree.kind == WeightedDegree::Kind::Zero ||
             (e.degree.homogeneous() && e.degree.value == expected);
    rep.entries.push_back(e);
  };
  add("classical", F.classical, Ratio(2));
  add("A", F.A, Ratio(2));
  for (std::size_t d = 0; d < F.B.size(); ++d)
    add("B" + std::to_string(d + 1), F.B[d], Ratio(2) - Ratio(static_cast<long>(d + 1)) * chi);
  return rep;
}

Potential assemble_multipoint(std::span<const PointData> points) {
  const std::size_t r = points.size();
  std::vector<const TearDropData*> by_label(r, nullptr);
  for (const auto& p : points) {
    if (p.label < 1 || static_cast<std::size_t>(p.label) > r)
      throw std::invalid_argument("assemble_multipoint: point label " + std::to_string(p.label) + " out of range");
    auto& slot = by_label[static_cast<std::size_t>(p.label - 1)];
    if (slot) throw std::invalid_argument("assemble_multipoint: duplicate point label " + std::to_string(p.label));
    if (p.td.a < 2) throw std::invalid_argument("assemble_multipoint: tear drop order must be >= 2");
    slot = &p.td;
  }
  std::vector<int> orders;
  for (const auto* td : by_label) orders.push_back(td->a);
  OrbiCurve curve(0, orders);
  Potential F = classical_potential(curve, 1);
  BasisSet basis(curve);
  MPoly B1 = MPoly::constant(F.table, Ratio(1));
  for (std::size_t alpha = 0; alpha < r; ++alpha) {
    const TearDropData& td = *by_label[alpha];
    // Tear-drop table: t00, t01, t^1..t^{a-1}.
    std::vector<std::size_t> idx{0, 1};
    for (int i = 1; i < td.a; ++i) idx.push_back(basis.position({static_cast<int>(alpha) + 1, i}));
    F.A += td.A.remap(F.table, idx);
    B1 = B1 * td.B1.remap(F.table, idx);
  }
  F.B[0] = B1;
  return F;
}

Potential assemble_multipoint(std::span<const TearDropData> tds) {
  std::vector<PointData> pts;
  for (std::size_t i = 0; i < tds.size(); ++i) pts.push_back({static_cast<int>(i) + 1, tds[i]});
  return assemble_multipoint(std::span<const PointData>(pts));
}

TearDropData teardrop_from_potential(const Potential& F) {
  if (F.curve.genus != 0 || F.curve.orders.size() != 1 || F.curve.orders[0] < 2)
    throw std::invalid_argument("teardrop_from_potential: curve is not a tear drop");
  if (F.truncation_order() < 1) throw std::invalid_argument("teardrop_from_potential: potential has no q^1 part");
  return TearDropData{F.curve.orders[0], F.table, F.A, F.B[0]};
}

Potential teardrop_potential(const TearDropData& td) {
  OrbiCurve curve(0, {td.a});
  Potential F = classical_potential(curve, 1, td.table);
  F.A = td.A;
  F.B[0] = td.B1;
  return F;
}

nlohmann::json potential_to_json(const Potential& F) {
  const std::size_t n = basis_size(F.curve);
  if (F.table->size() != n) throw std::invalid_argument("potential_to_json: potential carries extra symbols");
  nlohmann::json b = nlohmann::json::array();
  for (const auto& p : F.B) b.push_back(to_json(p));
  return nlohmann::json{{"curve", F.curve.literal()},
                        {"truncation_order", F.truncation_order()},
                        {"variables", F.table->names()},
                        {"classical", to_json(F.classical)},
                        {"A", to_json(F.A)},
                        {"B", b}};
}

nlohmann::json teardrop_to_json(const TearDropData& td) {
  nlohmann::json j = potential_to_json(teardrop_potential(td));
  j["a"] = td.a;
  j["B1"] = to_json(td.B1);
  return j;
}

namespace {

// Tear-drop polynomials may be written over t^1..t^{a-1} only; pad t00, t01.
MPoly teardrop_poly_from_json(const nlohmann::json& j, const TablePtr& table) {
  nlohmann::json fixed = nlohmann::json::array();
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("malformed polynomial term");
    auto e = term[0].get<Exponent>();
    if (e.size() + 2 == table->size()) e.insert(e.begin(), {0, 0});
    fixed.push_back(nlohmann::json::array({e, term[1]}));
  }
  return mpoly_from_json(fixed, table);
}

}  // namespace

Potential potential_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("potential JSON must be an object");
  if (!j.contains("curve")) {
    if (!j.contains("a") || !j.contains("A") || !j.contains("B1"))
      throw std::invalid_argument("potential JSON needs either 'curve' or the tear-drop keys a, A, B1");
    int a = j.at("a").get<int>();
    if (a < 2) throw std::invalid_argument("tear drop order must be >= 2");
    OrbiCurve curve(0, {a});
    auto table = curve_table(curve);
    TearDropData td{a, table, teardrop_poly_from_json(j.at("A"), table), teardrop_poly_from_json(j.at("B1"), table)};
    Potential F = teardrop_potential(td);
    validate_potential(F);
    return F;
  }
  OrbiCurve curve = parse_curve(j.at("curve").get<std::string>());
  auto table = curve_table(curve);
  if (j.contains("variables") && j.at("variables").get<std::vector<std::string>>() != table->names())
    throw std::invalid_argument("potential JSON: variable list does not match the curve");
  int D = j.value("truncation_order", 1);
  Potential F = classical_potential(curve, D, table);
  if (j.contains("classical")) F.classical = mpoly_from_json(j.at("classical"), table);
  if (j.contains("A")) F.A = mpoly_from_json(j.at("A"), table);
  if (j.contains("B")) {
    const auto& b = j.at("B");
    if (!b.is_array() || static_cast<int>(b.size()) > D)
      throw std::invalid_argument("potential JSON: B must be a list of at most truncation_order polynomials");
    for (std::size_t d = 0; d < b.size(); ++d) F.B[d] = mpoly_from_json(b[d], table);
  } else if (j.contains("B1") && D >= 1) {
    F.B[0] = mpoly_from_json(j.at("B1"), table);
  }
  validate_potential(F);
  return F;
}

}  // namespace orbiq
