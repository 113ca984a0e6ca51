#pragma once

// Reduced Groebner bases over Q (Buchberger with the coprime and chain
// criteria), normal forms, and standard monomials of zero-dimensional ideals.

#include "mpoly.hpp"

#include <vector>

namespace orbiq {

enum class MonomialOrder { Grevlex, Lex };

/// a > b in the given order, with the first variable largest.
bool monomial_greater(const Exponent& a, const Exponent& b, MonomialOrder order);

Exponent leading_monomial(const MPoly& p, MonomialOrder order);
Ratio leading_coefficient(const MPoly& p, MonomialOrder order);

/// Reduced Groebner basis: monic, inter-reduced, sorted by decreasing leading monomial.
std::vector<MPoly> groebner(const std::vector<MPoly>& gens, MonomialOrder order = MonomialOrder::Grevlex);

/// Fully reduced remainder of f modulo G (G need not be a Groebner basis).
MPoly normal_form(const MPoly& f, const std::vector<MPoly>& G, MonomialOrder order = MonomialOrder::Grevlex);

struct StandardMonomials {
  bool finite = false;
  std::vector<Exponent> monomials;  // increasing order, 1 first
};

/// Monomials outside the leading-term ideal of a Groebner basis.
StandardMonomials standard_monomials(const std::vector<MPoly>& G, MonomialOrder order = MonomialOrder::Grevlex);

}  // namespace orbiq
