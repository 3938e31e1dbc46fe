#pragma once

// Buchberger's algorithm over Q or Q(x) with block monomial orders. Internal
// engine for the elimination module.

#include <vector>

#include "diffchow/poly.hpp"

namespace diffchow {

struct OrderBlock {
  enum class Kind { Lex, Grevlex };
  Kind kind = Kind::Grevlex;
  /// Variables of the block, most significant first.
  std::vector<Var> vars;
};

/// Block order; earlier blocks dominate later ones. Variables occurring in the
/// generators but absent from every block are appended as a final grevlex block.
struct BlockOrder {
  std::vector<OrderBlock> blocks;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_size = 0;
};

/// Reduced Groebner basis (monic, sorted by leading monomial ascending).
std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const BlockOrder& order,
                                 GroebnerStats* stats = nullptr);

/// Normal form of f modulo a Groebner basis computed for the same order.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const BlockOrder& order);

}  // namespace diffchow
