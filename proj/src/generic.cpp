#include "diffchow/generic.hpp"

#include <algorithm>
#include <random>

#include "diffchow/algebra.hpp"
#include "diffchow/errors.hpp"

namespace diffchow {

Ranking orderly_ranking(std::uint32_t n) {
  std::vector<Var> ys;
  for (std::uint32_t j = 1; j <= n; ++j) ys.push_back(Var::y(j));
  return Ranking::orderly(ys);
}

std::vector<Poly> make_hyperplanes(std::uint32_t n, std::uint32_t count, std::uint32_t first_block) {
  if (n == 0) throw InvalidArgument("hyperplanes need n >= 1");
  std::vector<Poly> out;
  for (std::uint32_t i = first_block; i < first_block + count; ++i) {
    Poly p(Var::u(i, 0));
    for (std::uint32_t j = 1; j <= n; ++j) p += Poly(Var::u(i, j)) * Poly(Var::y(j));
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

// Monomials of degree exactly `deg` in vars[from..], appended to out.
void monomials_of_degree(const std::vector<Var>& vars, std::size_t from, std::uint32_t deg,
                         std::vector<Monomial::Factor>& cur, std::vector<Monomial>& out) {
  if (deg == 0) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t i = from; i < vars.size(); ++i) {
    const bool same = !cur.empty() && cur.back().first == vars[i];
    if (same)
      ++cur.back().second;
    else
      cur.emplace_back(vars[i], 1);
    monomials_of_degree(vars, i, deg - 1, cur, out);
    if (same)
      --cur.back().second;
    else
      cur.pop_back();
  }
}

}  // namespace

GenericPoly make_generic_poly(std::uint32_t n, std::uint32_t s, std::uint32_t r, std::uint32_t block) {
  if (r == 0) throw InvalidArgument("a generic polynomial needs degree r >= 1");
  if (n == 0) throw InvalidArgument("a generic polynomial needs n >= 1");
  std::vector<Var> vars;
  for (std::uint32_t j = 1; j <= n; ++j)
    for (std::uint32_t k = 0; k <= s; ++k) vars.push_back(Var::y(j, k));
  GenericPoly g;
  g.order = s;
  g.degree = r;
  g.block = block;
  for (std::uint32_t d = 0; d <= r; ++d) {
    std::vector<Monomial::Factor> cur;
    std::vector<Monomial> level;
    monomials_of_degree(vars, 0, d, cur, level);
    for (auto& m : level) {
      // Monomial wants factors sorted descending by key.
      auto fs = m.factors();
      std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
      g.support.emplace_back(std::move(fs));
    }
  }
  for (std::size_t i = 0; i < g.support.size(); ++i)
    g.poly += Poly(Coeff(1), g.support[i]) * Poly(Var::u(block, static_cast<std::uint32_t>(i)));
  return g;
}

std::vector<Poly> apply_transform(const GenericLinearTransform& T, const std::vector<Poly>& gens) {
  if (T.n == 0) throw InvalidArgument("transform needs n >= 1");
  std::map<Var, Poly> to_z;
  std::vector<Var> ys, zs;
  for (std::uint32_t j = 1; j <= T.n; ++j) {
    to_z[Var::y(j)] = Poly(Var::z(j));
    ys.push_back(Var::y(j));
    zs.push_back(Var::z(j));
  }
  std::vector<Poly> system;
  for (const auto& g : gens) {
    for (const Var s : symbols_of(g))
      if (s.is_main() && (s.block() != 0 || s.index() < 1 || s.index() > T.n))
        throw InvalidArgument("generator involves " + s.to_string() + " outside y1..y" + std::to_string(T.n));
    system.push_back(g.substitute(to_z));
  }
  for (std::uint32_t i = 1; i <= T.n; ++i) {
    Poly rel(Var::y(i));
    for (std::uint32_t j = 1; j <= T.n; ++j) rel -= Poly(T.entry(i, j)) * Poly(Var::z(j));
    system.push_back(std::move(rel));
  }
  const Ranking r = Ranking::block_elimination({ys, zs});
  const CharSetResult cs = char_set(system, r);
  std::vector<Poly> out;
  for (const auto& p : cs.chain.elements()) {
    bool z_free = true;
    for (const Var v : p.variables()) z_free = z_free && !(v.is_main() && v.block() == Var::kAuxMainBlock);
    if (z_free) out.push_back(p);
  }
  return out;
}

namespace {

std::set<Var> main_universe(const Chain& chain) {
  std::set<Var> syms;
  for (const Var v : chain.ranking().symbols())
    if (v.is_main()) syms.insert(v);
  return syms;
}

IntersectionReport intersect_impl(const Chain& chain, const Poly& g, std::uint32_t s) {
  if (chain.empty() && chain.ranking().symbols().empty())
    throw InvalidArgument("the chain carries no ranking universe");
  const std::set<Var> uni = main_universe(chain);
  for (const Var sym : symbols_of(g))
    if (sym.is_main() && !uni.count(sym)) throw InvalidArgument("g involves " + sym.to_string() + " outside the universe");
  const Ranking r = Ranking::orderly(std::vector<Var>(uni.begin(), uni.end()));
  const CharSetResult base = describe_chain(Chain(chain.elements(), r));
  IntersectionReport rep;
  rep.expected_dim = base.dim - 1;
  rep.expected_order = base.order + static_cast<int>(s);
  std::vector<Poly> all = chain.elements();
  all.push_back(g);
  try {
    rep.result = char_set(all, r);
    rep.unit_ideal = false;
  } catch (const InconsistentSystem&) {
    rep.unit_ideal = true;
  }
  if (base.dim == 0)
    rep.matches = rep.unit_ideal;
  else
    rep.matches = !rep.unit_ideal && rep.result.dim == rep.expected_dim && rep.result.order == rep.expected_order;
  return rep;
}

}  // namespace

IntersectionReport intersect_generic(const Chain& chain, const Poly& g, std::uint32_t s) {
  return intersect_impl(chain, g, s);
}

IntersectionReport intersect_generic_numeric(const Chain& chain, const Poly& g, std::uint32_t s,
                                             std::uint64_t seed, long range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-range, range);
  std::map<Var, Poly> bind;
  for (const Var v : g.variables())
    if (v.is_param()) {
      long c = 0;
      while (c == 0) c = dist(rng);
      bind[v] = Poly(c);
    }
  return intersect_impl(chain, g.substitute_vars(bind), s);
}

SystemStats generic_system_stats(std::uint32_t n, const std::vector<std::uint32_t>& orders, std::uint32_t degree) {
  if (orders.size() > n)
    throw InvalidArgument("more generic polynomials (" + std::to_string(orders.size()) + ") than variables (" +
                          std::to_string(n) + ")");
  std::vector<Poly> polys;
  for (std::size_t i = 0; i < orders.size(); ++i)
    polys.push_back(make_generic_poly(n, orders[i], degree, static_cast<std::uint32_t>(i)).poly);
  const Ranking r = orderly_ranking(n);
  if (polys.empty()) return {static_cast<int>(n), 0};
  const CharSetResult cs = char_set(polys, r);
  return {cs.dim, cs.order};
}

}  // namespace diffchow
