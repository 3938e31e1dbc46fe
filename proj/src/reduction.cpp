#include "diffchow/reduction.hpp"

#include <algorithm>

#include "diffchow/algebra.hpp"
#include "diffchow/errors.hpp"
#include "diffchow/polyalg.hpp"

namespace diffchow {

// ---------------------------------------------------------------- Ranking

Ranking::Ranking(Kind kind, std::vector<std::vector<Var>> blocks) : kind_(kind), blocks_(std::move(blocks)) {
  for (std::uint32_t b = 0; b < blocks_.size(); ++b) {
    for (std::uint32_t i = 0; i < blocks_[b].size(); ++i) {
      Var& s = blocks_[b][i];
      s = s.symbol();
      if (!pos_.emplace(s.key(), Pos{b, i}).second)
        throw InvalidArgument("symbol " + s.to_string() + " listed twice in ranking");
    }
  }
}

Ranking Ranking::orderly(std::vector<Var> symbols) { return Ranking(Kind::Orderly, {std::move(symbols)}); }

Ranking Ranking::elimination(std::vector<Var> symbols) {
  std::vector<std::vector<Var>> blocks;
  for (Var v : symbols) blocks.push_back({v});
  return Ranking(Kind::Elimination, std::move(blocks));
}

Ranking Ranking::block_elimination(std::vector<std::vector<Var>> blocks) {
  return Ranking(Kind::BlockElimination, std::move(blocks));
}

std::vector<Var> Ranking::symbols() const {
  std::vector<Var> out;
  for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
  return out;
}

Ranking::Pos Ranking::pos_of(Var v) const {
  auto it = pos_.find(v.symbol().key());
  if (it == pos_.end()) throw InvalidArgument("variable " + v.to_string() + " is not ranked");
  return it->second;
}

std::strong_ordering Ranking::compare(Var a, Var b) const {
  const Pos pa = pos_of(a), pb = pos_of(b);
  if (pa.block != pb.block) return pa.block <=> pb.block;
  if (a.shift() != b.shift()) return a.shift() <=> b.shift();
  return pa.position <=> pb.position;
}

std::optional<Var> Ranking::leader(const Poly& p) const {
  std::optional<Var> best;
  for (const auto& t : p.terms())
    for (const auto& f : t.mono.factors()) {
      if (!ranks(f.first)) continue;
      if (!best || compare(f.first, *best) > 0) best = f.first;
    }
  return best;
}

std::string Ranking::to_string() const {
  std::string s;
  switch (kind_) {
    case Kind::Orderly: s = "orderly:"; break;
    case Kind::Elimination: s = "elim:"; break;
    case Kind::BlockElimination: s = "blocks:"; break;
  }
  bool first_block = true;
  for (const auto& b : blocks_) {
    if (!first_block) s += kind_ == Kind::BlockElimination ? " | " : "<";
    first_block = false;
    bool first = true;
    for (Var v : b) {
      if (!first) s += kind_ == Kind::Orderly ? "<" : ",";
      first = false;
      s += v.to_string();
    }
  }
  return s;
}

Cmp compare(const Ranking& r, Var a, Var b) {
  const auto c = r.compare(a, b);
  return c < 0 ? Cmp::LT : (c > 0 ? Cmp::GT : Cmp::EQ);
}

// ---------------------------------------------------------------- leaders

LeaderParts leader_parts(const Poly& p, const Ranking& ranking) {
  auto lead = ranking.leader(p);
  if (!lead) throw InvalidArgument("no ranked variable in " + p.to_string());
  LeaderParts out;
  out.leader = *lead;
  out.degree = p.degree(*lead);
  out.initial = p.coefficient(*lead, out.degree);
  out.lvar = lead->symbol();
  return out;
}

bool is_reduced(const Poly& g, const Poly& f, const Ranking& ranking) {
  const LeaderParts lp = leader_parts(f, ranking);
  for (const Var v : g.variables())
    if (v.symbol() == lp.lvar && v.shift() >= lp.leader.shift() && g.degree(v) >= lp.degree) return false;
  return true;
}

std::strong_ordering poly_rank_compare(const Poly& a, const Poly& b, const Ranking& ranking) {
  const auto la = ranking.leader(a), lb = ranking.leader(b);
  if (!la || !lb) return static_cast<bool>(la) <=> static_cast<bool>(lb);
  const auto c = ranking.compare(*la, *lb);
  if (c != 0) return c;
  return a.degree(*la) <=> b.degree(*lb);
}

// ---------------------------------------------------------------- Chain

Chain::Chain(std::vector<Poly> elements, Ranking ranking, Validation mode)
    : elems_(std::move(elements)), ranking_(std::move(ranking)) {
  for (const auto& e : elems_)
    if (ranking_.is_field_element(e)) throw InvalidArgument("chain member without ranked variable: " + e.to_string());
  std::stable_sort(elems_.begin(), elems_.end(), [&](const Poly& a, const Poly& b) {
    const auto c = poly_rank_compare(a, b, ranking_);
    if (c != 0) return c < 0;
    return canonical_less(a, b);
  });
  for (const auto& e : elems_) parts_.push_back(leader_parts(e, ranking_));
  bool ascending = true;
  for (std::size_t j = 1; j < elems_.size(); ++j) {
    if (parts_[j].leader == parts_[j - 1].leader) {
      if (mode == Validation::Triangular) throw InvalidArgument("triangular set with repeated leader");
      ascending = false;
    }
    for (std::size_t i = 0; i < j && ascending; ++i)
      if (!is_reduced(elems_[j], elems_[i], ranking_)) ascending = false;
  }
  if (!ascending) {
    if (mode == Validation::Ascending) throw InvalidArgument("not an ascending chain: " + to_string());
    triangular_only_ = true;
  }
  for (std::size_t i = 0; i < elems_.size(); ++i) groups_[parts_[i].lvar].push_back(i);
}

Poly Chain::initial_product() const {
  Poly p(1);
  for (const auto& lp : parts_) p *= lp.initial;
  return p;
}

std::string Chain::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ", ";
    s += elems_[i].to_string();
  }
  return s + "}";
}

// ---------------------------------------------------------------- prolongation

namespace {

std::map<Var, int> bounds_for(const Chain& chain, const std::map<Var, int>& h) {
  std::map<Var, int> hbar;
  for (const auto& [sym, idx] : chain.groups()) {
    const int o_last = static_cast<int>(chain.parts(idx.back()).leader.shift());
    auto it = h.find(sym);
    const int hc = it == h.end() ? kMinusInfinity : it->second;
    hbar[sym] = std::max(hc, o_last + 1);
  }
  return hbar;
}

}  // namespace

std::vector<ProlongedMember> prolong(const Chain& chain, const std::map<Var, int>& h) {
  std::vector<ProlongedMember> out;
  const auto hbar = bounds_for(chain, h);
  for (const auto& [sym, idx] : chain.groups()) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const auto& lp = chain.parts(idx[j]);
      const int o = static_cast<int>(lp.leader.shift());
      const int top = j + 1 < idx.size() ? static_cast<int>(chain.parts(idx[j + 1]).leader.shift()) - 1
                                         : hbar.at(sym);
      for (int k = 0; o + k <= top; ++k) {
        const auto uk = static_cast<std::uint32_t>(k);
        out.push_back({chain[idx[j]].transform(uk), lp.leader.shifted(uk), lp.initial.transform(uk), lp.degree,
                       idx[j], uk});
      }
    }
  }
  const Ranking& r = chain.ranking();
  std::sort(out.begin(), out.end(),
            [&](const ProlongedMember& a, const ProlongedMember& b) { return r.less(a.leader, b.leader); });
  return out;
}

std::vector<Poly> prolong_polys(const Chain& chain, const std::map<Var, int>& h) {
  std::vector<Poly> out;
  for (auto& m : prolong(chain, h)) out.push_back(std::move(m.poly));
  return out;
}

// ---------------------------------------------------------------- remainders

Poly algebraic_prem(const Poly& f, const std::vector<ProlongedMember>& T, const Ranking& ranking,
                    PremWitness* witness) {
  (void)ranking;
  Poly r = f;
  for (auto it = T.rbegin(); it != T.rend() && !r.is_zero(); ++it) {
    if (r.degree(it->leader) < it->degree) continue;
    PseudoDivision pd = pseudo_divide(r, it->poly, it->leader);
    if (witness) {
      if (pd.power > 0) {
        witness->multiplier *= pd.multiplier;
        for (auto& term : witness->terms) term.second *= pd.multiplier;
      }
      witness->terms.emplace_back(it->poly, pd.quotient);
    }
    r = std::move(pd.remainder);
  }
  return r;
}

Poly algebraic_prem(const Poly& f, const std::vector<Poly>& T, const Ranking& ranking) {
  std::vector<ProlongedMember> members;
  for (const auto& p : T) {
    const LeaderParts lp = leader_parts(p, ranking);
    members.push_back({p, lp.leader, lp.initial, lp.degree, 0, 0});
  }
  std::sort(members.begin(), members.end(), [&](const ProlongedMember& a, const ProlongedMember& b) {
    return ranking.less(a.leader, b.leader);
  });
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i].leader == members[i - 1].leader)
      throw InvalidArgument("triangular sequence with repeated leader");
  return algebraic_prem(f, members, ranking);
}

Poly diff_prem(const Poly& f, const Chain& chain, PremWitness* witness) {
  if (witness) *witness = PremWitness{};
  if (f.is_zero() || chain.empty()) return f;
  std::map<Var, int> h;
  auto raise_bounds = [&](const Poly& p) {
    for (const auto& [sym, idx] : chain.groups()) {
      (void)idx;
      const OrderStats st = p.is_zero() ? OrderStats{} : order_stats(p, sym);
      if (st.absent()) continue;
      auto& slot = h.try_emplace(sym, kMinusInfinity).first->second;
      slot = std::max(slot, st.ord);
    }
  };
  Poly r = f;
  raise_bounds(r);
  while (true) {
    const auto T = prolong(chain, h);
    const auto hbar = bounds_for(chain, h);
    r = algebraic_prem(r, T, chain.ranking(), witness ? &*witness : nullptr);
    if (r.is_zero()) return r;
    bool beyond = false;
    for (const auto& [sym, bound] : hbar) {
      const OrderStats st = order_stats(r, sym);
      if (!st.absent() && st.ord > bound) beyond = true;
    }
    if (!beyond) return r;
    raise_bounds(r);
  }
}

bool is_reduced_wrt(const Poly& g, const Chain& chain) {
  for (const auto& e : chain.elements())
    if (!is_reduced(g, e, chain.ranking())) return false;
  return true;
}

ChainStats chain_stats(const Chain& chain) {
  ChainStats st;
  for (const auto& [sym, idx] : chain.groups()) st.order += static_cast<int>(chain.parts(idx.front()).leader.shift());
  for (const Var s : chain.ranking().symbols())
    if (!chain.groups().count(s)) st.parametric_set.insert(s);
  return st;
}

}  // namespace diffchow
