#pragma once

// Generic hyperplanes, generic difference polynomials and generic linear
// transformations, plus the intersection checks built on them.

#include <cstdint>
#include <vector>

#include "diffchow/charset.hpp"

namespace diffchow {

/// P_i = u_i0 + u_i1*y1 + ... + u_in*yn for i = first_block .. first_block+count-1.
std::vector<Poly> make_hyperplanes(std::uint32_t n, std::uint32_t count, std::uint32_t first_block = 0);

struct GenericPoly {
  Poly poly;
  std::uint32_t order = 0;
  std::uint32_t degree = 0;
  std::uint32_t block = 0;
  /// Support monomials; coefficient of support[i] is u<block>_<i>.
  std::vector<Monomial> support;
};

/// sum over all monomials m of order <= s and degree <= r in y1..yn of u_m*m.
/// Throws InvalidArgument for r = 0.
GenericPoly make_generic_poly(std::uint32_t n, std::uint32_t s, std::uint32_t r, std::uint32_t block = 0);

/// Y = U*Z with U = (u<block>_<(i-1)*n + (j-1)>).
struct GenericLinearTransform {
  std::uint32_t n = 0;
  std::uint32_t block = 0;
  Var entry(std::uint32_t i, std::uint32_t j) const { return Var::u(block, (i - 1) * n + (j - 1)); }
};

/// Generators of the image T(V) of V = V(gens): gens are rewritten in the
/// auxiliary variables Z, the relations y_i - sum_j u_ij z_j adjoined, and Z
/// eliminated through a characteristic set under the block ranking Y < Z.
std::vector<Poly> apply_transform(const GenericLinearTransform& T, const std::vector<Poly>& gens);

struct IntersectionReport {
  bool unit_ideal = false;
  CharSetResult result;
  int expected_dim = 0;
  int expected_order = 0;
  /// Whether the computed invariants match the generic intersection theorem
  /// (dim d-1, order h+s; unit ideal when d = 0).
  bool matches = false;
};

/// Characteristic set of [I, g] with g's coefficients left unranked.
/// `chain` presents I under an orderly ranking of the main symbols.
IntersectionReport intersect_generic(const Chain& chain, const Poly& g, std::uint32_t s);

/// Same computation with every unranked parameter specialized to a random
/// integer in [-range, range]; a fast screen, not a proof.
IntersectionReport intersect_generic_numeric(const Chain& chain, const Poly& g, std::uint32_t s,
                                             std::uint64_t seed, long range = 97);

struct SystemStats {
  int dim = 0;
  int order = 0;
};

/// Dimension and order of independent generic polynomials of the given orders.
SystemStats generic_system_stats(std::uint32_t n, const std::vector<std::uint32_t>& orders,
                                 std::uint32_t degree = 1);

/// Orderly ranking over y1..yn.
Ranking orderly_ranking(std::uint32_t n);

}  // namespace diffchow
