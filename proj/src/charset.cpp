#include "diffchow/charset.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "diffchow/errors.hpp"
#include "diffchow/polyalg.hpp"

namespace diffchow {

Poly strip_parameter_content(const Poly& p, const Ranking& ranking) {
  if (p.is_zero()) return p;
  std::map<Monomial, std::vector<Term>> by_ranked;
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Factor> ranked, other;
    for (const auto& f : t.mono.factors()) (ranking.ranks(f.first) ? ranked : other).push_back(f);
    by_ranked[Monomial(std::move(ranked))].push_back({Monomial(std::move(other)), t.coeff});
  }
  if (by_ranked.size() == 1 && by_ranked.begin()->first.is_one()) return p.primitive();
  Poly g;
  for (auto& [m, terms] : by_ranked) {
    g = gcd(g, Poly::from_terms(terms));
    if (g.is_constant()) return p.primitive();
  }
  auto q = exact_divide(p, g);
  if (!q) throw InvariantViolation("content division failed");
  return q->primitive();
}

Chain basic_set(const std::vector<Poly>& polys, const Ranking& ranking) {
  std::vector<const Poly*> order;
  for (const auto& p : polys)
    if (!p.is_zero() && !ranking.is_field_element(p)) order.push_back(&p);
  std::sort(order.begin(), order.end(), [&](const Poly* a, const Poly* b) {
    const auto c = poly_rank_compare(*a, *b, ranking);
    if (c != 0) return c < 0;
    return canonical_less(*a, *b);
  });
  std::vector<Poly> chosen;
  for (const Poly* p : order) {
    bool ok = true;
    for (const auto& c : chosen)
      if (!is_reduced(*p, c, ranking)) {
        ok = false;
        break;
      }
    if (ok && (chosen.empty() || poly_rank_compare(*p, chosen.back(), ranking) > 0)) chosen.push_back(*p);
  }
  return Chain(std::move(chosen), ranking);
}

namespace {

void normalize_set(std::vector<Poly>& v) {
  std::sort(v.begin(), v.end(), [](const Poly& a, const Poly& b) { return canonical_less(a, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

CharSetResult describe_chain(const Chain& chain) {
  CharSetResult res;
  const ChainStats st = chain_stats(chain);
  res.chain = chain;
  res.ranking = chain.ranking();
  res.order = st.order;
  res.parametric_set = st.parametric_set;
  res.dim = static_cast<int>(st.parametric_set.size());
  res.poly_d = res.dim;
  res.poly_h = res.order;
  return res;
}

CharSetResult char_set(const std::vector<Poly>& S, const Ranking& ranking, const CharSetOptions& opts) {
  auto clean = [&](const Poly& p) {
    return opts.strip_parameter_content ? strip_parameter_content(p, ranking) : p.primitive();
  };
  std::vector<Poly> current;
  for (const auto& p : S) {
    if (p.is_zero()) continue;
    if (ranking.is_field_element(p)) throw InconsistentSystem("input contains a nonzero field element: " + p.to_string());
    current.push_back(clean(p));
  }
  normalize_set(current);

  while (true) {
    Chain B = basic_set(current, ranking);
    std::vector<const Poly*> todo;
    for (const auto& p : current)
      if (std::find(B.elements().begin(), B.elements().end(), p) == B.elements().end()) todo.push_back(&p);

    std::vector<Poly> rems(todo.size());
    if (opts.parallel && todo.size() > 1) {
      std::vector<std::future<Poly>> jobs;
      for (const Poly* p : todo) jobs.push_back(std::async(std::launch::async, [p, &B] { return diff_prem(*p, B); }));
      for (std::size_t i = 0; i < jobs.size(); ++i) rems[i] = jobs[i].get();
    } else {
      for (std::size_t i = 0; i < todo.size(); ++i) rems[i] = diff_prem(*todo[i], B);
    }

    std::vector<Poly> fresh;
    for (auto& r : rems) {
      if (r.is_zero()) continue;
      if (ranking.is_field_element(r)) throw InconsistentSystem("remainder is a nonzero field element: " + r.to_string());
      fresh.push_back(clean(r));
    }
    if (fresh.empty()) return describe_chain(B);
    normalize_set(fresh);
    current.insert(current.end(), fresh.begin(), fresh.end());
    normalize_set(current);
  }
}

long dimension_polynomial(long d, long h, long t) { return d * (t + 1) + h; }

bool sat_member(const Poly& f, const Chain& chain) { return diff_prem(f, chain).is_zero(); }

int relative_order(const Chain& chain, const std::set<Var>& parametric) {
  const Ranking& r = chain.ranking();
  if (r.kind() == Ranking::Kind::Orderly && !parametric.empty() && r.symbols().size() > parametric.size())
    throw InvalidArgument("relative order needs an elimination ranking over the parametric set");
  // Every parametric symbol must sit in a block strictly below every other symbol.
  const auto& blocks = r.blocks();
  std::size_t seen = 0;
  std::size_t b = 0;
  for (; b < blocks.size() && seen < parametric.size(); ++b) {
    for (Var v : blocks[b]) {
      if (!parametric.count(v))
        throw InvalidArgument("ranking does not place the parametric set lowest");
      ++seen;
    }
  }
  if (seen != parametric.size()) throw InvalidArgument("parametric set not covered by the ranking");
  return chain_stats(chain).order;
}

}  // namespace diffchow
