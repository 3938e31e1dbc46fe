#pragma once

// Ritt-Wu characteristic sets and the invariants read off from them.

#include <set>
#include <vector>

#include "diffchow/reduction.hpp"

namespace diffchow {

struct CharSetOptions {
  /// Reduce the current set against the basic set on several threads.
  bool parallel = false;
  /// Divide remainders by their content in the unranked variables.
  bool strip_parameter_content = true;
};

struct CharSetResult {
  Chain chain;
  int dim = 0;
  int order = 0;
  std::set<Var> parametric_set;
  Ranking ranking;
  /// phi(t) = d*(t+1) + h with d = dim, h = order.
  int poly_d = 0;
  int poly_h = 0;
};

/// Basic set: a lowest-ranked ascending chain extracted from `polys`.
Chain basic_set(const std::vector<Poly>& polys, const Ranking& ranking);

/// Throws InconsistentSystem when a nonzero field element shows up.
CharSetResult char_set(const std::vector<Poly>& S, const Ranking& ranking, const CharSetOptions& opts = {});

/// Stats of an existing chain packaged like a char_set result.
CharSetResult describe_chain(const Chain& chain);

long dimension_polynomial(long d, long h, long t);

/// diff_prem(f, chain) == 0.
bool sat_member(const Poly& f, const Chain& chain);

/// Order of a chain computed under an elimination ranking with the given
/// parametric symbols ranked below every other symbol.
int relative_order(const Chain& chain, const std::set<Var>& parametric);

/// Divides p by the gcd of its coefficients as a polynomial in the ranked variables.
Poly strip_parameter_content(const Poly& p, const Ranking& ranking);

}  // namespace diffchow
