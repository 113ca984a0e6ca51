#pragma once

// Genus-zero potentials of P^1-orbifolds in the form
//
//   F = 1/2 (t^{00})^2 t^{01} + sum t^{00} t^{a,i} t^{a,a-i} / (2 a)  +  A  +  sum_d B_d q^d
//
// with q = Q e^{t^{01}}.  t^{01} never appears in A or B_d; derivatives in
// the (0,1) direction act on q^d as multiplication by d.

#include "orbicurve.hpp"

#include <nlohmann/json_fwd.hpp>

#include <span>
#include <string>
#include <vector>

namespace orbiq {

/// Variable name of t^s: "t00", "t01", "t<alpha>_<i>".
std::string coordinate_name(const BasisIndex& s);

/// Table of the flat coordinates in basis order with weights
/// deg t^{00} = 1, deg t^{01} = 0, deg t^{alpha,i} = 1 - i/a_alpha.
TablePtr curve_table(const OrbiCurve& curve);

/// curve_table followed by extra (weight 0) symbols, e.g. unknown coefficients.
TablePtr curve_table_with(const OrbiCurve& curve, const std::vector<std::string>& extra);

struct Potential {
  OrbiCurve curve;
  TablePtr table;            // first N variables are t^s in basis order
  MPoly classical;
  MPoly A;
  std::vector<MPoly> B;      // B[d-1] is the coefficient of q^d; size = truncation order

  int truncation_order() const { return static_cast<int>(B.size()); }
};

/// Potential with A = 0 and B_1..B_D = 0, on the given table (defaults to the curve table).
Potential classical_potential(const OrbiCurve& curve, int truncation_order = 1, TablePtr table = nullptr);
MPoly classical_cubic(const OrbiCurve& curve, const TablePtr& table);

/// Throws std::invalid_argument when the stored classical part or the A/B
/// variable usage violate the shape above.
void validate_potential(const Potential& F);

/// Third partial derivatives and the induced big quantum product.
class QuantumStructure {
 public:
  explicit QuantumStructure(const Potential& F);

  const Potential& potential() const { return F_; }
  const BasisSet& basis() const { return basis_; }
  const Pairing& pairing() const { return pairing_; }
  std::size_t dim() const { return basis_.size(); }
  int order() const { return F_.truncation_order(); }

  /// F_{s1,s2,s3} as a q-series.
  const QSeries& third(std::size_t s1, std::size_t s2, std::size_t s3) const;

  /// phi_u * phi_v = sum_w c_{uv}^w phi_w.
  std::vector<QSeries> basis_product(std::size_t u, std::size_t v) const;

  /// WDVV residual of type (s1,s2;s3,s4).
  QSeries wdvv_residual(std::size_t s1, std::size_t s2, std::size_t s3, std::size_t s4) const;

 private:
  Potential F_;
  BasisSet basis_;
  Pairing pairing_;
  std::vector<std::size_t> dual_;
  std::vector<Ratio> dual_scale_;  // g^{s, dual(s)}
  std::vector<QSeries> table_;     // dim^3, symmetric
};

QSeries third_derivative(const Potential& F, const BasisIndex& s1, const BasisIndex& s2, const BasisIndex& s3);

/// Bilinear big quantum product.  Throws std::invalid_argument on mismatched curves.
CohClass<QSeries> quantum_product(const Potential& F, const CohClass<QSeries>& x, const CohClass<QSeries>& y);
CohClass<QSeries> lift_class(const Potential& F, const CohClass<Ratio>& x);

QSeries wdvv_residual(const Potential& F, const BasisIndex& s1, const BasisIndex& s2, const BasisIndex& s3,
                      const BasisIndex& s4);

struct WdvvAudit {
  std::size_t types_checked = 0;
  std::size_t nonzero = 0;
  struct Failure {
    std::vector<BasisIndex> type;
    QSeries residual;
  };
  std::vector<Failure> failures;  // first few nonzero residuals
  bool pass() const { return nonzero == 0; }
};

/// Evaluates every WDVV type (s1,s2;s3,s4) over the full index set.
WdvvAudit wdvv_audit(const Potential& F, std::size_t keep_failures = 5);

struct HomogeneityEntry {
  std::string component;  // "classical", "A", "B1", ...
  WeightedDegree degree;
  Ratio expected;
  bool pass = false;
};

struct HomogeneityReport {
  std::vector<HomogeneityEntry> entries;
  bool pass() const;
};

HomogeneityReport homogeneity_report(const Potential& F);

/// Degree-zero and degree-one data of a tear drop P^1_a, on the table of P^1_a.
struct TearDropData {
  int a = 0;
  TablePtr table;  // curve_table of g=0;a=<a>
  MPoly A;
  MPoly B1;
};

struct PointData {
  int label = 0;  // 1-based position of the orbifold point
  TearDropData td;
};

/// A = sum_alpha A^{a_alpha}(t^{alpha,*}), B_1 = prod_alpha B_1^{a_alpha}(t^{alpha,*}), D = 1.
/// Points must carry labels 1..r exactly once.
Potential assemble_multipoint(std::span<const PointData> points);
Potential assemble_multipoint(std::span<const TearDropData> tds);

/// Restricts a tear-drop potential (curve g=0;a=<a>) to its TearDropData.
TearDropData teardrop_from_potential(const Potential& F);
Potential teardrop_potential(const TearDropData& td);

nlohmann::json potential_to_json(const Potential& F);
/// Accepts a full potential document, or the tear-drop subset {a, A, B1}.
Potential potential_from_json(const nlohmann::json& j);

nlohmann::json teardrop_to_json(const TearDropData& td);

}  // namespace orbiq
