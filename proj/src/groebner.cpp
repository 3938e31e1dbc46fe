#include "diffchow/groebner.hpp"

#include <algorithm>
#include <map>

#include "diffchow/errors.hpp"

namespace diffchow {

namespace {

using Exp = std::vector<std::uint16_t>;

struct GTerm {
  Exp e;
  Coeff c;
};
using GPoly = std::vector<GTerm>;

class Engine {
 public:
  Engine(const std::vector<Poly>& gens, const BlockOrder& order) {
    std::set<Var> seen;
    for (const auto& b : order.blocks) {
      std::vector<std::size_t> idx;
      for (Var v : b.vars) {
        if (!seen.insert(v).second) throw InvalidArgument("variable repeated in block order");
        idx.push_back(vars_.size());
        index_[v] = vars_.size();
        vars_.push_back(v);
      }
      blocks_.push_back({b.kind, std::move(idx)});
    }
    std::vector<std::size_t> extra;
    for (const auto& g : gens)
      for (Var v : g.variables())
        if (!index_.count(v)) {
          index_[v] = vars_.size();
          extra.push_back(vars_.size());
          vars_.push_back(v);
        }
    if (!extra.empty()) blocks_.push_back({OrderBlock::Kind::Grevlex, std::move(extra)});
  }

  int cmp(const Exp& a, const Exp& b) const {
    for (const auto& [kind, idx] : blocks_) {
      if (kind == OrderBlock::Kind::Lex) {
        for (std::size_t i : idx)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      } else {
        unsigned da = 0, db = 0;
        for (std::size_t i : idx) {
          da += a[i];
          db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (auto it = idx.rbegin(); it != idx.rend(); ++it)
          if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
      }
    }
    return 0;
  }

  GPoly to_g(const Poly& p) const {
    GPoly out;
    for (const auto& t : p.terms()) {
      Exp e(vars_.size(), 0);
      for (const auto& [v, k] : t.mono.factors()) {
        if (k > 0xffff) throw InvalidArgument("exponent too large for Groebner engine");
        e[index_.at(v)] = static_cast<std::uint16_t>(k);
      }
      out.push_back({std::move(e), t.coeff});
    }
    sort(out);
    return out;
  }

  Poly from_g(const GPoly& g) const {
    std::vector<Term> terms;
    for (const auto& t : g) {
      std::vector<Monomial::Factor> fs;
      for (std::size_t i = 0; i < t.e.size(); ++i)
        if (t.e[i]) fs.emplace_back(vars_[i], t.e[i]);
      terms.push_back({Monomial(std::move(fs)), t.c});
    }
    return Poly::from_terms(std::move(terms));
  }

  void sort(GPoly& p) const {
    std::sort(p.begin(), p.end(), [&](const GTerm& a, const GTerm& b) { return cmp(a.e, b.e) > 0; });
  }

  static bool divides(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  }
  static Exp lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
  }
  static Exp sub(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
    return r;
  }
  static bool coprime(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && b[i]) return false;
    return true;
  }
  static unsigned deg(const Exp& a) {
    unsigned d = 0;
    for (auto x : a) d += x;
    return d;
  }

  // a - c * x^m * b
  GPoly axpy(const GPoly& a, const Coeff& c, const Exp& m, const GPoly& b, std::size_t a_from = 0) const {
    GPoly out;
    out.reserve(a.size() - a_from + b.size());
    std::size_t i = a_from, j = 0;
    Exp tmp(m.size());
    while (i < a.size() || j < b.size()) {
      if (j < b.size())
        for (std::size_t k = 0; k < m.size(); ++k) tmp[k] = static_cast<std::uint16_t>(m[k] + b[j].e[k]);
      const int c0 = i == a.size() ? -1 : (j == b.size() ? 1 : cmp(a[i].e, tmp));
      if (c0 > 0) {
        out.push_back(a[i++]);
      } else if (c0 < 0) {
        out.push_back({tmp, -(c * b[j].c)});
        ++j;
      } else {
        Coeff s = a[i].c - c * b[j].c;
        if (!s.is_zero()) out.push_back({tmp, std::move(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  static void make_monic(GPoly& p) {
    if (p.empty() || p[0].c.is_one()) return;
    const Coeff inv = p[0].c.inverse();
    for (auto& t : p) t.c *= inv;
  }

  // Full reduction of f by the polynomials listed in `red`.
  GPoly reduce(GPoly f, const std::vector<std::size_t>& red) const {
    GPoly result;
    while (!f.empty()) {
      const std::size_t* hit = nullptr;
      for (const auto& r : red)
        if (divides(polys_[r][0].e, f[0].e)) {
          hit = &r;
          break;
        }
      if (!hit) {
        result.push_back(std::move(f[0]));
        f.erase(f.begin());
        continue;
      }
      const GPoly& g = polys_[*hit];
      const Coeff c = f[0].c / g[0].c;
      f = axpy(f, c, sub(f[0].e, g[0].e), g);
    }
    return result;
  }

  struct Pair {
    std::size_t i, j;
    Exp lcm;
    unsigned sugar;
  };

  void update(std::size_t h) {
    const Exp& lh = polys_[h][0].e;
    std::vector<Pair> C;
    for (std::size_t g : G_) {
      const Exp l = lcm(lh, polys_[g][0].e);
      C.push_back({g, h, l, std::max(sugar_[g] + deg(l) - deg(polys_[g][0].e), sugar_[h] + deg(l) - deg(lh))});
    }
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const bool cp = coprime(polys_[C[a].i][0].e, lh);
      bool keep = cp;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (divides(C[b].lcm, C[a].lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (divides(D[b].lcm, C[a].lcm)) keep = false;
      }
      if (keep) D.push_back(C[a]);
    }
    std::vector<Pair> E;
    for (auto& p : D)
      if (!coprime(polys_[p.i][0].e, lh)) E.push_back(std::move(p));
    std::vector<Pair> P2;
    for (auto& p : P_) {
      const bool drop = divides(lh, p.lcm) && lcm(polys_[p.i][0].e, lh) != p.lcm &&
                        lcm(polys_[p.j][0].e, lh) != p.lcm;
      if (!drop) P2.push_back(std::move(p));
    }
    for (auto& p : E) P2.push_back(std::move(p));
    P_ = std::move(P2);
    std::vector<std::size_t> G2;
    for (std::size_t g : G_)
      if (!divides(lh, polys_[g][0].e)) G2.push_back(g);
    G2.push_back(h);
    G_ = std::move(G2);
  }

  std::size_t add(GPoly p, unsigned sugar) {
    make_monic(p);
    polys_.push_back(std::move(p));
    sugar_.push_back(sugar);
    return polys_.size() - 1;
  }

  std::vector<Poly> run(const std::vector<Poly>& gens, GroebnerStats* stats) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      GPoly p = reduce(to_g(g), G_);
      if (p.empty()) continue;
      unsigned sg = 0;
      for (const auto& t : p) sg = std::max(sg, deg(t.e));
      update(add(std::move(p), sg));
      if (is_unit()) return {Poly(1)};
    }
    while (!P_.empty()) {
      auto best = std::min_element(P_.begin(), P_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return cmp(a.lcm, b.lcm) < 0;
      });
      Pair pr = *best;
      P_.erase(best);
      const GPoly& f = polys_[pr.i];
      const GPoly& g = polys_[pr.j];
      // S-polynomial of two monic polynomials.
      GPoly s = axpy(mul_exp(f, sub(pr.lcm, f[0].e), 1), Coeff(1), sub(pr.lcm, g[0].e), g);
      if (stats) ++stats->pairs_reduced;
      GPoly h = reduce(std::move(s), G_);
      if (h.empty()) {
        if (stats) ++stats->zero_reductions;
        continue;
      }
      update(add(std::move(h), pr.sugar));
      if (is_unit()) return {Poly(1)};
    }
    // Reduced basis.
    std::vector<std::size_t> minimal;
    for (std::size_t a : G_) {
      bool redundant = false;
      for (std::size_t b : G_)
        if (a != b && divides(polys_[b][0].e, polys_[a][0].e) &&
            (polys_[b][0].e != polys_[a][0].e || b < a))
          redundant = true;
      if (!redundant) minimal.push_back(a);
    }
    std::vector<GPoly> reduced;
    for (std::size_t a : minimal) {
      std::vector<std::size_t> others;
      for (std::size_t b : minimal)
        if (b != a) others.push_back(b);
      GPoly tail(polys_[a].begin() + 1, polys_[a].end());
      GPoly r = reduce(std::move(tail), others);
      r.insert(r.begin(), polys_[a][0]);
      reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const GPoly& a, const GPoly& b) { return cmp(a[0].e, b[0].e) < 0; });
    if (stats) stats->basis_size = reduced.size();
    std::vector<Poly> out;
    for (const auto& r : reduced) out.push_back(from_g(r));
    return out;
  }

  Poly nf(const Poly& f, const std::vector<Poly>& basis) {
    for (const auto& b : basis) {
      polys_.push_back(to_g(b));
      G_.push_back(polys_.size() - 1);
    }
    return from_g(reduce(to_g(f), G_));
  }

 private:
  bool is_unit() const {
    const GPoly& last = polys_.back();
    return deg(last[0].e) == 0;
  }

  static GPoly mul_exp(const GPoly& p, const Exp& m, int) {
    GPoly r = p;
    for (auto& t : r)
      for (std::size_t k = 0; k < m.size(); ++k) t.e[k] = static_cast<std::uint16_t>(t.e[k] + m[k]);
    return r;
  }

  std::vector<Var> vars_;
  std::map<Var, std::size_t> index_;
  std::vector<std::pair<OrderBlock::Kind, std::vector<std::size_t>>> blocks_;
  std::vector<GPoly> polys_;
  std::vector<unsigned> sugar_;
  std::vector<std::size_t> G_;
  std::vector<Pair> P_;
};

}  // namespace

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const BlockOrder& order, GroebnerStats* stats) {
  Engine e(gens, order);
  return e.run(gens, stats);
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const BlockOrder& order) {
  std::vector<Poly> all = basis;
  all.push_back(f);
  Engine e(all, order);
  return e.nf(f, basis);
}

}  // namespace diffchow
