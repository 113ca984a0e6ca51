#pragma once

// Orbi-curves C_a of genus g with orbifold points of orders a_1..a_r, the
// basis of even orbifold cohomology, its Poincare pairing and the Chen-Ruan
// cup product.

#include "matrix.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace orbiq {

struct OrbiCurve {
  int genus = 0;
  std::vector<int> orders;  // a_1..a_r, each >= 1

  OrbiCurve() = default;
  OrbiCurve(int g, std::vector<int> a);

  std::size_t num_points() const { return orders.size(); }
  /// Orders sorted descending with trivial points removed.
  OrbiCurve canonical() const;
  /// "g=0;a=2,3,5"
  std::string literal() const;

  friend bool operator==(const OrbiCurve&, const OrbiCurve&) = default;
};

/// Parses "g=<int>;a=<comma list>" (the list may be empty).  Throws
/// CurveSyntaxError carrying the offending character position.
OrbiCurve parse_curve(std::string_view literal);

struct CurveSyntaxError : std::invalid_argument {
  CurveSyntaxError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

/// (0,0) = unit, (0,1) = point class, (alpha, i) = twisted sector i of point alpha (1-based).
struct BasisIndex {
  int point = 0;
  int twist = 0;

  bool is_unit() const { return point == 0 && twist == 0; }
  bool is_point_class() const { return point == 0 && twist == 1; }
  bool is_twisted() const { return point > 0; }
  std::string label() const;  // "00", "01", "1,2"

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

enum class CurveClass { Fano, CalabiYau, GeneralType };
std::string to_string(CurveClass c);

Ratio euler_char(const OrbiCurve& curve);
CurveClass classify(const OrbiCurve& curve);

/// Ordered index set: (0,0), (0,1), then (alpha, i) lexicographically.
class BasisSet {
 public:
  explicit BasisSet(const OrbiCurve& curve);

  const OrbiCurve& curve() const { return curve_; }
  std::size_t size() const { return basis_.size(); }
  const BasisIndex& operator[](std::size_t k) const { return basis_.at(k); }
  const std::vector<BasisIndex>& indices() const { return basis_; }
  /// Position of an index; throws std::out_of_range if it does not exist.
  std::size_t position(const BasisIndex& s) const;
  bool contains(const BasisIndex& s) const;

  /// deg phi_{00} = 0, deg phi_{01} = 2, deg phi_{alpha,i} = 2i/a_alpha.
  Ratio orbifold_degree(std::size_t k) const;
  /// The partner s' with g_{s s'} != 0.
  std::size_t dual_position(std::size_t k) const;

 private:
  OrbiCurve curve_;
  std::vector<BasisIndex> basis_;
};

/// N = 2 + sum (a_alpha - 1).
std::size_t basis_size(const OrbiCurve& curve);

/// A vector over the basis {phi_s}; coefficient k belongs to BasisSet position k.
template <typename T>
struct CohClass {
  OrbiCurve curve;
  std::vector<T> coeffs;
};

struct Pairing {
  Matrix<Ratio> g;
  Matrix<Ratio> g_inv;
  /// dual[k] = phi^{s_k} expanded in the basis.
  std::vector<CohClass<Ratio>> dual;
};

Pairing pairing_matrix(const OrbiCurve& curve);

/// Chen-Ruan product of two basis elements, expanded in the basis.
std::vector<Ratio> chen_ruan_basis_product(const BasisSet& basis, std::size_t u, std::size_t v);

/// Bilinear extension; throws std::invalid_argument for classes on different curves.
CohClass<Ratio> chen_ruan_mul(const CohClass<Ratio>& x, const CohClass<Ratio>& y);

CohClass<Ratio> basis_class(const OrbiCurve& curve, const BasisIndex& s);

}  // namespace orbiq
