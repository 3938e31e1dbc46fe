#pragma once

// Multivariate algebra over the coefficient field: exact division, gcd,
// squarefree parts, pseudo-division and resultants.

#include <optional>
#include <vector>

#include "diffchow/poly.hpp"

namespace diffchow {

/// a / b when b divides a exactly, otherwise nullopt. Throws on b = 0.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

/// Greatest common divisor, normalized by Poly::primitive(). gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Content of p viewed as a polynomial in v (gcd of its coefficients).
Poly content_in(const Poly& p, Var v);

/// Product of the distinct irreducible factors of p, normalized.
Poly squarefree_part(const Poly& p);

/// p with every factor that also divides `q` removed (repeatedly).
Poly remove_common_factors(const Poly& p, const Poly& q);

struct PseudoDivision {
  Poly quotient;
  Poly remainder;
  /// Multiplier applied to the dividend: initial^power (or a unit).
  Poly multiplier;
  unsigned power = 0;
};

/// Pseudo-division of f by g in v: multiplier*f = quotient*g + remainder with
/// deg(remainder, v) < deg(g, v). The initial is only multiplied in when the
/// current leading coefficient is not already divisible by it.
PseudoDivision pseudo_divide(const Poly& f, const Poly& g, Var v);

/// Sylvester resultant in v (fraction-free Bareiss elimination).
Poly resultant(const Poly& a, const Poly& b, Var v);

/// Determinant of a square matrix of polynomials (Bareiss).
Poly determinant(std::vector<std::vector<Poly>> m);

}  // namespace diffchow
