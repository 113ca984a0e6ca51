#pragma once

// Small quantum cohomology at a rational specialization of Q: explicit
// presentations for the Fano P^1-orbifolds, the quotient algebra and its
// exact semisimplicity, numeric solution points, and nilpotency
// certificates when chi_orb <= 0.

#include "frobenius.hpp"
#include "groebner.hpp"

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbiq {

struct PresentedAlgebra {
  OrbiCurve curve;
  std::string family;              // "P1_{a1,a2}", "P1_{2,2,a}", "P1_{2,3,3}", ...
  std::vector<int> orders;         // order attached to each variable
  std::vector<int> point_of_var;   // 1-based point of the input curve; 0 for a padded trivial point
  Ratio Qval;
  TablePtr table;
  std::vector<MPoly> gens;
};

struct NotFanoError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Throws NotFanoError unless the curve is Fano of genus 0.
PresentedAlgebra presentation(const OrbiCurve& curve, const Ratio& Qval = Ratio(1));

/// Presentation from explicit generators (variables named by the table).
PresentedAlgebra custom_presentation(TablePtr table, std::vector<MPoly> gens);

struct QuotientAlgebra {
  MonomialOrder order = MonomialOrder::Grevlex;
  std::vector<MPoly> basis;               // reduced Groebner basis
  std::vector<Exponent> standard;         // standard monomials, 1 first
  std::vector<Matrix<Ratio>> mult;        // multiplication by each variable
  AlgebraData<Ratio> algebra;             // metric from a generic linear functional
  unsigned metric_seed = 0;

  std::size_t dim() const { return standard.size(); }
};

struct PositiveDimensionalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws PositiveDimensionalError when the quotient is infinite-dimensional.
QuotientAlgebra quotient_algebra(const PresentedAlgebra& p, MonomialOrder order = MonomialOrder::Grevlex);

/// Normal-form coordinates of f in the standard-monomial basis.
std::vector<Ratio> quotient_coordinates(const QuotientAlgebra& q, const MPoly& f);

using Point = std::vector<std::complex<double>>;

struct SolutionSet {
  std::vector<Point> points;
  std::vector<int> multiplicities;
  double residual_bound = 0;
  double min_separation = 0;
  std::vector<long> combination;  // coefficients of the separating linear form
  int attempts = 0;
  bool separating = false;        // characteristic polynomial of the form is squarefree

  int total_multiplicity() const;
};

SolutionSet solve_points(const PresentedAlgebra& p);
SolutionSet solve_points(const PresentedAlgebra& p, const QuotientAlgebra& q);

std::complex<double> evaluate(const MPoly& f, const Point& x);

/// Univariate helpers over Q (coefficients low to high).
std::vector<Ratio> characteristic_polynomial(const Matrix<Ratio>& m);
bool squarefree(const std::vector<Ratio>& p);

struct CertificateRow {
  BasisIndex x, y, s;
  int d = 1;
  bool all_d = false;     // chi = 0: the degree equation does not involve d
  Ratio lhs;              // deg x + deg y
  Ratio dual_degree;      // deg phi^s = 2 - deg phi_s
  bool holds = false;
};

struct NilpotencyCertificate {
  OrbiCurve curve;
  BasisIndex witness;
  Ratio witness_degree;
  std::vector<CertificateRow> filtration_table;
  int exponent_bound = 0;
  bool chen_ruan_power_vanishes = false;
  bool verified() const;
};

/// Throws std::invalid_argument for a Fano curve.
NilpotencyCertificate nilpotency_certificate(const OrbiCurve& curve);

struct SmallVerdict {
  OrbiCurve curve;
  CurveClass cls = CurveClass::Fano;
  bool semisimple = false;
  std::size_t N = 0;
  std::optional<std::string> family;
  std::optional<std::size_t> quotient_dim;
  std::optional<Ratio> trace_det;
  std::optional<SolutionSet> solutions;
  std::optional<NilpotencyCertificate> certificate;
};

struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

SmallVerdict semisimplicity_verdict(const OrbiCurve& curve, const Ratio& Qval = Ratio(1));

nlohmann::json to_json(const SolutionSet& s);
nlohmann::json to_json(const NilpotencyCertificate& c);
nlohmann::json to_json(const PresentedAlgebra& p);

}  // namespace orbiq
