#pragma once

// Connected genus-zero Hurwitz numbers with branching exactly over r marked
// points, by permutation enumeration and by the Frobenius character formula.

#include "potential.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbiq {

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::string str() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Sorts and validates; throws std::invalid_argument on non-positive parts.
Partition make_partition(std::vector<int> parts);
std::vector<Partition> partitions_of(int d);

struct HurwitzQuery {
  int d = 1;
  std::vector<Partition> profiles;
};

/// "3|2,1|2,1": profiles separated by '|', parts by ','.  Validates |mu| = d.
HurwitzQuery parse_hurwitz_query(int d, const std::string& profiles);

/// sum_alpha (d - l(mu^alpha)) = 2d - 2.
bool rh_feasible(const HurwitzQuery& q);

inline constexpr int kEnumerationMaxDegree = 6;
inline constexpr int kCharacterMaxDegree = 8;

struct HurwitzBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Transitive tuples (sigma_alpha in C(mu^alpha), product = id) divided by d!,
/// without the genus filter.
Ratio connected_count_enumeration(const HurwitzQuery& q);
Ratio connected_count_character(const HurwitzQuery& q);

/// All tuples with product = id (not necessarily transitive), as an integer count.
Ratio tuple_count_character(const HurwitzQuery& q);

/// chi^lambda(mu) by the Murnaghan-Nakayama rule.
long character_value(const Partition& lambda, const Partition& mu);

enum class HurwitzMethod { Auto, Enumeration, Character };

/// H^0_{0,d}(mu^1..mu^r): 0 unless rh_feasible, else the connected count over d!.
Ratio hurwitz_connected(const HurwitzQuery& q, HurwitzMethod method = HurwitzMethod::Auto);

struct B1AssemblyReport {
  Ratio h_degree_one;
  MPoly product_formula;
  MPoly assembled;
  std::vector<std::string> issues;
  bool pass() const { return issues.empty(); }
};

/// Compares the degree-one covering formula H^0_{0,1}((1),...,(1)) prod B^{a}_1
/// with the assembled B_1, and checks each tear drop's t^1 normalization.
B1AssemblyReport b1_assembly_check(const OrbiCurve& curve, std::span<const TearDropData> tds);

}  // namespace orbiq
