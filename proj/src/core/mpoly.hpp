#pragma once

// Sparse multivariate polynomials with exact rational coefficients over a
// named, weighted variable table.  Terms are kept in graded-reverse-lex
// order (leading term first) so serialization is deterministic.

#include "ratio.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orbiq {

class VarTable {
 public:
  VarTable(std::vector<std::string> names, std::vector<Ratio> weights);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const Ratio& weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Ratio>& weights() const { return weights_; }

  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws std::invalid_argument for an unknown name.
  std::size_t index(const std::string& name) const;

  friend bool operator==(const VarTable&, const VarTable&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Ratio> weights_;
};

using TablePtr = std::shared_ptr<const VarTable>;

TablePtr make_table(std::vector<std::string> names, std::vector<Ratio> weights);

using Exponent = std::vector<int>;

/// Strict "a comes before b" for grevlex with the first variable largest.
struct GrevlexBefore {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

struct WeightedDegree {
  enum class Kind { Zero, Homogeneous, Inhomogeneous };
  Kind kind = Kind::Zero;
  Ratio value;  // meaningful only for Homogeneous

  bool homogeneous() const { return kind == Kind::Homogeneous; }
  std::string str() const;
};

class MPoly {
 public:
  using TermMap = std::map<Exponent, Ratio, GrevlexBefore>;

  explicit MPoly(TablePtr table);

  static MPoly constant(TablePtr table, const Ratio& c);
  static MPoly variable(TablePtr table, std::size_t index);
  static MPoly variable(TablePtr table, const std::string& name);
  static MPoly monomial(TablePtr table, Exponent exp, const Ratio& c);

  const TablePtr& table() const { return table_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  std::size_t num_vars() const { return table_->size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Ratio constant_term() const;
  Ratio coefficient(const Exponent& exp) const;

  /// Adds c·x^exp (merging and dropping zeros).
  void add_term(const Exponent& exp, const Ratio& c);

  /// Leading term under grevlex; precondition: nonzero.
  const TermMap::value_type& leading() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Ratio& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Ratio& c) { return a *= c; }
  friend MPoly operator*(const Ratio& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned k) const;

  /// Formal partial derivative; throws std::invalid_argument for an index
  /// outside the table.
  MPoly derivative(std::size_t var) const;
  MPoly derivative(const std::string& name) const;

  WeightedDegree weighted_degree() const;
  int total_degree() const;  // -1 for the zero polynomial

  /// Sum of exponents restricted to the flagged variables, maximised over terms.
  int degree_in(const std::vector<bool>& mask) const;

  /// Replaces the listed variables by rational values.
  MPoly substitute(const std::map<std::size_t, Ratio>& values) const;
  /// Sets the flagged variables to zero (reduction modulo the ideal they generate).
  MPoly drop_vars(const std::vector<bool>& mask) const;

  /// Rewrites onto another table: variable i goes to index_map[i].
  MPoly remap(TablePtr target, std::span<const std::size_t> index_map) const;

  /// Exact quotient a / d, or nullopt when d does not divide a.
  std::optional<MPoly> divide_exact(const MPoly& d) const;

  std::string str() const;

 private:
  void check_same_table(const MPoly& o) const;

  TablePtr table_;
  TermMap terms_;
};

// Ring helpers used by the generic matrix code.
inline bool is_zero(const MPoly& p) { return p.is_zero(); }
inline MPoly zero_like(const MPoly& p) { return MPoly(p.table()); }
inline MPoly one_like(const MPoly& p) { return MPoly::constant(p.table(), Ratio(1)); }
/// Throws std::domain_error when the division is not exact.
MPoly exact_div(const MPoly& a, const MPoly& b);

/// [[exponents...], "p/q"] pairs in term order.
nlohmann::json to_json(const MPoly& p);
MPoly mpoly_from_json(const nlohmann::json& j, TablePtr table);

}  // namespace orbiq
