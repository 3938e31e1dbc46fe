#include "diffchow/algebra.hpp"

#include <algorithm>

#include "diffchow/errors.hpp"

namespace diffchow {

Poly arith(ArithOp op, const Poly& a, const Poly& b) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Neg: return -a;
    case ArithOp::Pow: {
      if (!b.is_constant() || !b.constant_term().is_rational())
        throw InvalidArgument("exponent must be a constant");
      const Rational e = b.constant_term().rational();
      if (e < 0 || e.get_den() != 1 || !e.get_num().fits_uint_p())
        throw InvalidArgument("exponent must be a non-negative integer");
      return a.pow(static_cast<unsigned>(e.get_num().get_ui()));
    }
  }
  return {};
}

Poly arith_pow(const Poly& a, unsigned e) { return a.pow(e); }

OrderStats order_stats(const Poly& p, Var symbol) {
  if (p.is_zero()) throw InvalidArgument("order of the zero polynomial");
  const Var s = symbol.symbol();
  OrderStats st;
  for (const Var v : p.variables()) {
    if (v.symbol() != s) continue;
    const int k = static_cast<int>(v.shift());
    if (st.absent()) {
      st.ord = st.lord = k;
    } else {
      st.ord = std::max(st.ord, k);
      st.lord = std::min(st.lord, k);
    }
  }
  if (!st.absent()) st.eord = st.ord - st.lord;
  return st;
}

int max_shift(const Poly& p) {
  int m = kMinusInfinity;
  for (const Var v : p.variables()) m = std::max(m, static_cast<int>(v.shift()));
  return m;
}

std::set<Var> symbols_of(const Poly& p) {
  std::set<Var> s;
  for (const Var v : p.variables()) s.insert(v.symbol());
  return s;
}

Homogeneity is_transformally_homogeneous(const Poly& p, const std::set<Var>& block) {
  std::map<Var, Poly> bind;
  for (const Var v : p.variables())
    if (block.count(v.symbol())) bind.emplace(v, Poly(Var::lambda(v.shift())) * Poly(v));
  const Poly scaled = p.substitute_vars(bind);
  Homogeneity out;
  if (p.is_zero()) {
    out.homogeneous = true;
    return out;
  }
  // Split each term into its lambda part and the rest.
  std::optional<Monomial> m;
  std::vector<Term> rest;
  for (const auto& t : scaled.terms()) {
    std::vector<Monomial::Factor> lam, other;
    for (const auto& f : t.mono.factors())
      (f.first.is_reserved() && f.first.block() == Var::kLambdaBlock ? lam : other).push_back(f);
    Monomial lm(std::move(lam));
    if (m && !(*m == lm)) return out;
    m = lm;
    rest.push_back({Monomial(std::move(other)), t.coeff});
  }
  if (Poly::from_terms(std::move(rest)) != p) return out;
  out.homogeneous = true;
  out.multiplier = *m;
  return out;
}

Monomial denomination(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("denomination of the zero polynomial");
  const auto syms = symbols_of(p);
  if (syms.size() != 1 || !syms.begin()->is_main())
    throw InvalidArgument("denomination needs a polynomial in exactly one main variable");
  std::vector<Monomial::Factor> fs;
  for (const Var v : p.variables()) fs.emplace_back(v, p.degree(v));
  return Monomial(std::move(fs));
}

Poly substitute_fraction(const Poly& p, const std::map<Var, Poly>& numerators, const Poly& den) {
  if (den.is_zero()) throw InvalidArgument("zero denominator in substitution");
  // m_k per shift.
  std::map<std::uint32_t, std::uint32_t> m;
  for (const auto& t : p.terms()) {
    std::map<std::uint32_t, std::uint32_t> here;
    for (const auto& [v, e] : t.mono.factors())
      if (numerators.count(v.symbol())) here[v.shift()] += e;
    for (const auto& [k, e] : here) m[k] = std::max(m[k], e);
  }
  std::map<std::uint32_t, Poly> den_k;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> den_pow;
  auto den_power = [&](std::uint32_t k, std::uint32_t e) -> const Poly& {
    auto key = std::make_pair(k, e);
    auto it = den_pow.find(key);
    if (it != den_pow.end()) return it->second;
    auto dk = den_k.find(k);
    if (dk == den_k.end()) dk = den_k.emplace(k, den.transform(k)).first;
    return den_pow.emplace(key, dk->second.pow(e)).first->second;
  };
  std::map<std::pair<Var, std::uint32_t>, Poly> num_pow;
  auto num_power = [&](Var v, std::uint32_t e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = num_pow.find(key);
    if (it != num_pow.end()) return it->second;
    return num_pow.emplace(key, numerators.at(v.symbol()).transform(v.shift()).pow(e)).first->second;
  };

  Poly result;
  for (const auto& t : p.terms()) {
    std::map<std::uint32_t, std::uint32_t> here;
    std::vector<Monomial::Factor> kept;
    Poly acc(t.coeff);
    for (const auto& [v, e] : t.mono.factors()) {
      if (numerators.count(v.symbol())) {
        here[v.shift()] += e;
        acc = acc * num_power(v, e);
      } else {
        kept.emplace_back(v, e);
      }
    }
    for (const auto& [k, mk] : m) {
      const std::uint32_t used = here.count(k) ? here[k] : 0;
      if (mk > used) acc = acc * den_power(k, mk - used);
    }
    result += acc.times_monomial(Monomial(std::move(kept)));
  }
  return result;
}

}  // namespace diffchow
