#pragma once

// Tear-drop reconstruction: A^a and B^a_1 for P^1_a from the WDVV equations
// at orders q^0 and q^1, under the grading and the fixed normalizations.

#include "potential.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace orbiq {

inline constexpr int kDefaultAMax = 4;

struct AnsatzSlot {
  enum class Host { A, B1 };
  Host host;
  Exponent exp;              // over t^1..t^{a-1}
  bool fixed = false;
  Ratio value;               // fixed value, or the solved value once known
  std::size_t unknown = 0;   // index among unknowns when !fixed
};

struct AnsatzSystem {
  int a = 0;
  OrbiCurve curve;
  TablePtr table;            // curve coordinates followed by the unknowns c0, c1, ...
  std::vector<AnsatzSlot> slots;
  std::size_t num_unknowns = 0;

  /// Potential whose A and B1 carry the unknowns as symbols.
  Potential symbolic_potential() const;
};

/// Admissible monomials of weighted degree 2 (A, t-degree >= 3) and (a-1)/a (B1).
/// `b1_leading` is the fixed t^1 coefficient of B1.
AnsatzSystem build_ansatz(int a, const Ratio& b1_leading = Ratio(1));

/// Coefficient equations of all WDVV residuals, as polynomials in the unknowns
/// (a table with one weight-0 variable per unknown).  Sorted and deduplicated.
std::vector<MPoly> ansatz_equations(const AnsatzSystem& sys);

class ReconstructionError : public std::runtime_error {
 public:
  enum class Kind { Underdetermined, Inconsistent, Nonlinear, Budget, InvalidOrder };
  ReconstructionError(Kind kind, const std::string& msg, std::size_t kernel_dim = 0)
      : std::runtime_error(msg), kind_(kind), kernel_dim_(kernel_dim) {}
  Kind kind() const { return kind_; }
  std::size_t kernel_dim() const { return kernel_dim_; }

 private:
  Kind kind_;
  std::size_t kernel_dim_;
};

struct SolveOptions {
  int a_max = kDefaultAMax;
  Ratio b1_leading = Ratio(1);
  unsigned shuffle_seed = 0;  // nonzero: permute the equations before solving
};

struct SolveStats {
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t stages = 0;
};

TearDropData solve_teardrop(int a, const SolveOptions& opts = {}, SolveStats* stats = nullptr);

struct StructureCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct StructureReport {
  int a = 0;
  std::vector<StructureCheck> checks;
  bool pass() const;
  const StructureCheck* find(const std::string& name) const;
};

/// Exact checks of the structural identities satisfied by tear-drop data:
///   b1_leading_coefficient    coefficient of t^1 in B1 is 1
///   b1_mixed_second_vanish    d^2 B1 / dt^i dt^{a-i} = 0
///   a_trace_leading           sum_i A_{i,a-i,a-k} = -(a-1)/a^2 t^1 mod (t^2..) for k = 1, in (t^2..) for k >= 2
///   a_mixed_third_values      A_{1,j,a-l}: 1/a + ... if l = j+1, -t^1/a^2 mod (t^2..) if (j,l) = (a-1,1), else in (t^2..)
///   a_b1_coupling             sum_k A_{i,a-i,a-k} (B1)_k = -B1/a^2 for every i
StructureReport verify_structure(const TearDropData& td);

}  // namespace orbiq
