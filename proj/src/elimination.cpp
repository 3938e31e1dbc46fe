#include "diffchow/elimination.hpp"

#include <algorithm>

#include "diffchow/algebra.hpp"
#include "diffchow/errors.hpp"
#include "diffchow/groebner.hpp"
#include "diffchow/polyalg.hpp"

namespace diffchow {

TruncatedSystem truncate(const Chain& chain, const std::vector<Poly>& hyperplanes, int B) {
  int need = 0;
  for (const auto& p : chain.elements()) need = std::max(need, max_shift(p));
  for (const auto& p : hyperplanes) need = std::max(need, max_shift(p));
  if (B < need)
    throw InvalidArgument("truncation bound " + std::to_string(B) + " below the largest order " + std::to_string(need));

  TruncatedSystem sys;
  sys.bound = B;
  std::map<Var, int> h;
  for (const auto& [sym, idx] : chain.groups()) {
    (void)idx;
    h[sym] = B;
  }
  for (auto& m : prolong(chain, h)) {
    if (max_shift(m.poly) > B) continue;
    if (!m.initial.is_constant() &&
        std::find(sys.saturate_by.begin(), sys.saturate_by.end(), m.initial) == sys.saturate_by.end())
      sys.saturate_by.push_back(m.initial);
    sys.polynomials.push_back(std::move(m.poly));
  }
  for (const auto& p : hyperplanes) {
    const int s = std::max(0, max_shift(p));
    for (int k = 0; s + k <= B; ++k) sys.polynomials.push_back(p.transform(static_cast<std::uint32_t>(k)));
  }
  for (const auto& p : sys.polynomials)
    for (const Var v : p.variables()) (v.is_main() ? sys.eliminate_block : sys.keep_block).insert(v);
  return sys;
}

std::vector<Var> keep_order_from_ranking(const std::set<Var>& keep, const Ranking& ranking) {
  std::vector<Var> ranked, other;
  for (const Var v : keep) (ranking.ranks(v) ? ranked : other).push_back(v);
  std::sort(ranked.begin(), ranked.end(), [&](Var a, Var b) { return ranking.compare(a, b) > 0; });
  std::sort(other.begin(), other.end(), [](Var a, Var b) { return a > b; });
  ranked.insert(ranked.end(), other.begin(), other.end());
  return ranked;
}

namespace {

// Substitutes away eliminated variables that occur linearly with a constant
// coefficient in some generator.
void presubstitute(std::vector<Poly>& polys, std::vector<Poly>& sat, const std::set<Var>& elim) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < polys.size() && !progress; ++i) {
      const Poly& g = polys[i];
      for (const Var v : g.variables()) {
        if (!elim.count(v) || g.degree(v) != 1) continue;
        const Poly c = g.coefficient(v, 1);
        if (!c.is_constant()) continue;
        const Poly rest = g - c * Poly(v);
        if (rest.contains(v)) continue;
        const Poly value = (-rest).scaled(c.constant_term().inverse());
        const std::map<Var, Poly> bind{{v, value}};
        std::vector<Poly> next;
        for (std::size_t j = 0; j < polys.size(); ++j) {
          if (j == i) continue;
          Poly q = polys[j].substitute_vars(bind);
          if (!q.is_zero()) next.push_back(std::move(q));
        }
        for (auto& s : sat) s = s.substitute_vars(bind);
        polys = std::move(next);
        progress = true;
        break;
      }
    }
  }
}

bool touches(const Poly& p, const std::set<Var>& vars) {
  for (const Var v : p.variables())
    if (vars.count(v)) return true;
  return false;
}

}  // namespace

std::vector<Poly> eliminate(const TruncatedSystem& sys) {
  std::vector<Poly> polys;
  for (const auto& p : sys.polynomials)
    if (!p.is_zero()) polys.push_back(p);
  bool any = false;
  for (const auto& p : polys) any = any || touches(p, sys.eliminate_block);
  if (!any) return sys.polynomials;

  std::vector<Poly> sat = sys.saturate_by;
  presubstitute(polys, sat, sys.eliminate_block);
  for (const auto& p : polys)
    if (p.is_constant()) throw UnitIdeal("elimination produced a nonzero constant");

  std::vector<Poly> gens = polys;
  Poly prod(1);
  for (const auto& s : sat) {
    if (s.is_zero()) throw UnitIdeal("an initial vanishes on the truncated system");
    if (!s.is_constant()) prod *= s.primitive();
  }
  const Var t = Var::sat(0);
  std::vector<Var> first;
  if (!prod.is_constant()) {
    gens.push_back(Poly(1) - Poly(t) * prod);
    first.push_back(t);
  }
  std::set<Var> elim_present;
  for (const auto& g : gens)
    for (const Var v : g.variables())
      if (sys.eliminate_block.count(v)) elim_present.insert(v);
  for (auto it = elim_present.rbegin(); it != elim_present.rend(); ++it) first.push_back(*it);

  std::set<Var> keep_present;
  for (const auto& g : gens)
    for (const Var v : g.variables())
      if (!sys.eliminate_block.count(v) && v != t) keep_present.insert(v);
  std::vector<Var> keep;
  if (!sys.keep_order.empty()) {
    for (const Var v : sys.keep_order)
      if (keep_present.count(v)) keep.push_back(v);
    for (const Var v : keep_present)
      if (std::find(keep.begin(), keep.end(), v) == keep.end()) keep.push_back(v);
  } else {
    keep.assign(keep_present.rbegin(), keep_present.rend());
  }

  BlockOrder order{{{OrderBlock::Kind::Grevlex, first}, {OrderBlock::Kind::Lex, keep}}};
  if (first.empty()) order.blocks.erase(order.blocks.begin());
  const auto gb = groebner_basis(gens, order);
  if (gb.size() == 1 && gb[0].is_constant()) throw UnitIdeal("elimination produced the unit ideal");
  std::set<Var> drop = sys.eliminate_block;
  drop.insert(t);
  std::vector<Poly> out;
  for (const auto& g : gb)
    if (!touches(g, drop)) out.push_back(g.primitive());
  return out;
}

std::vector<Poly> eliminate_by_resultants(const TruncatedSystem& sys) {
  std::vector<Poly> polys;
  for (const auto& p : sys.polynomials)
    if (!p.is_zero()) polys.push_back(p);
  std::vector<Poly> sat = sys.saturate_by;
  presubstitute(polys, sat, sys.eliminate_block);
  Poly sat_prod(1);
  for (const auto& s : sat)
    if (!s.is_constant()) sat_prod *= s;

  auto clean = [&](const Poly& p) -> Poly {
    if (p.is_zero() || p.is_constant()) return p;
    Poly q = squarefree_part(p);
    if (!sat_prod.is_constant()) q = remove_common_factors(q, sat_prod);
    return q;
  };

  while (true) {
    // Eliminated variable of least degree, ties by fewest occurrences.
    std::optional<Var> best;
    std::uint32_t best_deg = 0;
    std::size_t best_count = 0;
    for (const Var v : sys.eliminate_block) {
      std::uint32_t d = 0;
      std::size_t count = 0;
      for (const auto& p : polys)
        if (p.contains(v)) {
          d = std::max(d, p.degree(v));
          ++count;
        }
      if (count == 0) continue;
      if (!best || d < best_deg || (d == best_deg && count < best_count)) {
        best = v;
        best_deg = d;
        best_count = count;
      }
    }
    if (!best) break;
    const Var v = *best;
    std::size_t pivot = polys.size();
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (!polys[i].contains(v)) continue;
      if (pivot == polys.size() || polys[i].degree(v) < polys[pivot].degree(v) ||
          (polys[i].degree(v) == polys[pivot].degree(v) && polys[i].size() < polys[pivot].size()))
        pivot = i;
    }
    const Poly piv = polys[pivot];
    std::vector<Poly> next;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (i == pivot) continue;
      if (!polys[i].contains(v)) {
        next.push_back(polys[i]);
        continue;
      }
      Poly r = clean(resultant(piv, polys[i], v));
      if (r.is_zero()) continue;
      if (r.is_constant()) throw UnitIdeal("resultant elimination produced a nonzero constant");
      next.push_back(std::move(r));
    }
    std::sort(next.begin(), next.end(), [](const Poly& a, const Poly& b) { return canonical_less(a, b); });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    polys = std::move(next);
  }
  std::vector<Poly> out;
  for (const auto& p : polys) out.push_back(p.primitive());
  return out;
}

Poly minimal_eliminant(const std::vector<Poly>& gens, const Ranking& ranking) {
  bool nonzero = false;
  for (const auto& g : gens) nonzero = nonzero || !g.is_zero();
  if (!nonzero) throw InvalidArgument("minimal eliminant of the zero ideal");
  CharSetResult cs;
  try {
    cs = char_set(gens, ranking);
  } catch (const InconsistentSystem& e) {
    throw UnitIdeal(e.what());
  }
  if (cs.chain.empty()) throw InvalidArgument("no ranked variable in the generators");
  return squarefree_part(cs.chain[0]);
}

}  // namespace diffchow
