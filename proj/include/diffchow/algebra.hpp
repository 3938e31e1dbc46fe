#pragma once

// Difference-specific operations on polynomials: orders, homogeneity,
// denomination, substitution of fractions.

#include <climits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "diffchow/poly.hpp"

namespace diffchow {

enum class ArithOp { Add, Sub, Mul, Neg, Pow };

/// Generic entry point for ring arithmetic; `b` is ignored for Neg, and for
/// Pow its constant value is the exponent.
Poly arith(ArithOp op, const Poly& a, const Poly& b);
Poly arith_pow(const Poly& a, unsigned e);

inline constexpr int kMinusInfinity = INT_MIN;

struct OrderStats {
  int ord = kMinusInfinity;
  int lord = kMinusInfinity;
  int eord = kMinusInfinity;
  bool absent() const { return ord == kMinusInfinity; }
};

/// Order, least order and effective order of p in the symbol (shift ignored).
/// Throws on p = 0.
OrderStats order_stats(const Poly& p, Var symbol);
inline OrderStats order_stats(const Poly& p, std::uint32_t y_index) { return order_stats(p, Var::y(y_index)); }

/// Largest shift of any variable of p (-infinity for constants).
int max_shift(const Poly& p);

struct Homogeneity {
  bool homogeneous = false;
  /// M(lambda) when homogeneous.
  Monomial multiplier;
};

/// Replaces every occurrence v^(k) with v a symbol in `block` by lambda^(k)*v^(k)
/// and checks whether the result equals M(lambda)*p.
Homogeneity is_transformally_homogeneous(const Poly& p, const std::set<Var>& block);

/// prod_i (y^(i))^deg(p, y^(i)) for p in a single main symbol and no parameters.
Monomial denomination(const Poly& p);

/// Substitutes each symbol s (shift 0 key) by num_s / den, then clears
/// denominators: with m_k the largest total degree of a term in the
/// substituted variables of shift k, the result is prod_k (den^(k))^(m_k) * p(num/den).
Poly substitute_fraction(const Poly& p, const std::map<Var, Poly>& numerators, const Poly& den);

/// Symbols (shift 0) of the variables in p.
std::set<Var> symbols_of(const Poly& p);

}  // namespace diffchow
