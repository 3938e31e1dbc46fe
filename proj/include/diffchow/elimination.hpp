#pragma once

// Truncated algebraic elimination used by the Chow form pipeline.

#include <set>
#include <vector>

#include "diffchow/charset.hpp"

namespace diffchow {

struct TruncatedSystem {
  std::vector<Poly> polynomials;
  int bound = 0;
  std::set<Var> eliminate_block;
  std::set<Var> keep_block;
  /// Nonconstant initials of the prolonged chain members; the ideal is
  /// saturated by their product.
  std::vector<Poly> saturate_by;
  /// Lexicographic order on keep_block, most significant first. Empty means
  /// descending variable key.
  std::vector<Var> keep_order;
};

/// Prolongs the chain up to shift B (members of order above B are dropped) and
/// adds every transform of the hyperplanes up to shift B. Main variables go to
/// the eliminate block, parameters to the keep block.
TruncatedSystem truncate(const Chain& chain, const std::vector<Poly>& hyperplanes, int B);

/// Generators of the elimination ideal (saturated by the recorded initials)
/// intersected with the keep ring. Throws UnitIdeal when it is the whole ring.
std::vector<Poly> eliminate(const TruncatedSystem& sys);

/// Same contract, computed by iterated resultants with primitive/squarefree
/// cleaning and removal of initial factors. Returns candidate eliminants that
/// vanish on the projection; used as an independent cross-check.
std::vector<Poly> eliminate_by_resultants(const TruncatedSystem& sys);

/// Lowest member of a characteristic set of gens, primitive and squarefree.
/// Throws InvalidArgument for the zero ideal and UnitIdeal for the unit ideal.
Poly minimal_eliminant(const std::vector<Poly>& gens, const Ranking& ranking);

/// Lex order on the keep block derived from a ranking: highest ranked first.
std::vector<Var> keep_order_from_ranking(const std::set<Var>& keep, const Ranking& ranking);

}  // namespace diffchow
