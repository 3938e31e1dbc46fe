#pragma once

// Rankings, leaders, ascending chains, prolongation and pseudo-remainders.

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "diffchow/poly.hpp"

namespace diffchow {

/// A ranking on the shifted variables of a finite set of symbols. Symbols are
/// grouped into blocks listed from lowest to highest; a variable's rank is
/// (block, shift, position in block). One block gives an orderly ranking,
/// singleton blocks an elimination ranking. Symbols outside the universe are
/// unranked and behave as coefficient-field transcendentals.
class Ranking {
 public:
  enum class Kind { Orderly, Elimination, BlockElimination };

  Ranking() = default;
  /// symbols listed lowest first; ties at equal shift broken by this order.
  static Ranking orderly(std::vector<Var> symbols);
  /// symbols listed lowest first.
  static Ranking elimination(std::vector<Var> symbols);
  /// blocks listed lowest first.
  static Ranking block_elimination(std::vector<std::vector<Var>> blocks);

  Kind kind() const { return kind_; }
  const std::vector<std::vector<Var>>& blocks() const { return blocks_; }
  /// All symbols, lowest block first.
  std::vector<Var> symbols() const;
  bool ranks(Var v) const { return pos_.count(v.symbol().key()) > 0; }

  /// Throws InvalidArgument for variables outside the universe.
  std::strong_ordering compare(Var a, Var b) const;
  bool less(Var a, Var b) const { return compare(a, b) < 0; }

  /// Highest ranked variable of p, if p involves any ranked variable.
  std::optional<Var> leader(const Poly& p) const;
  /// True when p involves no ranked variable.
  bool is_field_element(const Poly& p) const { return !leader(p).has_value(); }

  std::string to_string() const;

 private:
  Ranking(Kind kind, std::vector<std::vector<Var>> blocks);
  struct Pos {
    std::uint32_t block;
    std::uint32_t position;
  };
  Pos pos_of(Var v) const;

  Kind kind_ = Kind::Orderly;
  std::vector<std::vector<Var>> blocks_;
  std::unordered_map<std::uint64_t, Pos> pos_;
};

enum class Cmp { LT, EQ, GT };
Cmp compare(const Ranking& r, Var a, Var b);

struct LeaderParts {
  Var leader;
  Poly initial;
  /// Leading symbol (leader with shift 0).
  Var lvar;
  std::uint32_t degree = 0;
};

/// Throws InvalidArgument when p involves no ranked variable.
LeaderParts leader_parts(const Poly& p, const Ranking& ranking);

/// g is reduced with respect to f: deg(g, sigma^l(lead f)) < deg(f, lead f) for all l >= 0.
bool is_reduced(const Poly& g, const Poly& f, const Ranking& ranking);

/// Rank comparison of polynomials (leader, then degree in it). Field elements
/// rank lowest.
std::strong_ordering poly_rank_compare(const Poly& a, const Poly& b, const Ranking& ranking);

/// An ascending chain (or difference triangular set) under a ranking.
class Chain {
 public:
  enum class Validation { Ascending, Triangular };

  Chain() = default;
  /// Sorts the elements by rank and validates them. Ascending requires
  /// strictly increasing ranks with every element reduced with respect to the
  /// earlier ones; Triangular only requires distinct leaders and sets the
  /// triangular_only() flag when the stricter test fails.
  Chain(std::vector<Poly> elements, Ranking ranking, Validation mode = Validation::Ascending);

  const std::vector<Poly>& elements() const { return elems_; }
  const Ranking& ranking() const { return ranking_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const Poly& operator[](std::size_t i) const { return elems_[i]; }
  const LeaderParts& parts(std::size_t i) const { return parts_[i]; }
  bool triangular_only() const { return triangular_only_; }

  /// Members grouped by leading symbol; each group lists element indices with
  /// increasing leader shift.
  const std::map<Var, std::vector<std::size_t>>& groups() const { return groups_; }

  /// Product of the initials of all members.
  Poly initial_product() const;

  std::string to_string() const;

 private:
  std::vector<Poly> elems_;
  std::vector<LeaderParts> parts_;
  Ranking ranking_;
  std::map<Var, std::vector<std::size_t>> groups_;
  bool triangular_only_ = false;
};

/// One member of an algebraic triangular sequence, remembering where it came from.
struct ProlongedMember {
  Poly poly;
  Var leader;
  Poly initial;
  std::uint32_t degree = 0;
  std::size_t source = 0;   // index in the chain
  std::uint32_t shift = 0;  // transform applied
};

/// Prolongation of a chain up to per-symbol bounds (missing symbol = -infinity):
/// each group member A_j is followed by its transforms with leaders up to the
/// next member's order minus one; the last member is transformed up to
/// max(h_c, o_last + 1). Output sorted by increasing leader.
std::vector<ProlongedMember> prolong(const Chain& chain, const std::map<Var, int>& h);
std::vector<Poly> prolong_polys(const Chain& chain, const std::map<Var, int>& h);

/// Optional exact certificate for a pseudo-remainder:
/// multiplier * f - remainder = sum cofactor_i * member_i.
struct PremWitness {
  Poly multiplier{1};
  std::vector<std::pair<Poly, Poly>> terms;  // (member, cofactor)
};

/// Algebraic pseudo-remainder against a triangular sequence with distinct
/// leaders, dividing from the highest leader down.
Poly algebraic_prem(const Poly& f, const std::vector<ProlongedMember>& T, const Ranking& ranking,
                    PremWitness* witness = nullptr);
Poly algebraic_prem(const Poly& f, const std::vector<Poly>& T, const Ranking& ranking);

/// Difference pseudo-remainder: algebraic_prem against prolong(chain, orders(f)).
/// The prolongation is extended and the reduction repeated while the
/// remainder still carries shifts beyond the prolonged range.
Poly diff_prem(const Poly& f, const Chain& chain, PremWitness* witness = nullptr);

/// True when g is reduced with respect to every chain member.
bool is_reduced_wrt(const Poly& g, const Chain& chain);

struct ChainStats {
  int order = 0;
  std::set<Var> parametric_set;
};

/// order = sum over leading symbols of the order of the group's first member;
/// parametric set = ranked symbols that lead no member.
ChainStats chain_stats(const Chain& chain);

}  // namespace diffchow
