#include "diffchow/polyalg.hpp"

#include <algorithm>

#include "diffchow/errors.hpp"

namespace diffchow {

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("exact division by zero polynomial");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a.scaled(b.constant_term().inverse());
  const Term& lb = b.leading_term();
  const Coeff inv = lb.coeff.inverse();
  Poly r = a;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term& lr = r.leading_term();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Term t{lb.mono.quotient_of(lr.mono), lr.coeff * inv};
    r -= b.times_monomial(t.mono).scaled(t.coeff);
    q.push_back(std::move(t));
  }
  return Poly::from_terms(std::move(q));
}

namespace {

Poly divide_or_throw(const Poly& a, const Poly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw InvariantViolation("expected exact polynomial division");
  return *std::move(q);
}

Var max_var(const Poly& a, const Poly& b) {
  Var best;
  bool have = false;
  for (const Poly* p : {&a, &b})
    for (const auto& t : p->terms())
      if (!t.mono.is_one() && (!have || t.mono.max_var() > best)) {
        best = t.mono.max_var();
        have = true;
      }
  return best;
}

}  // namespace

Poly content_in(const Poly& p, Var v) {
  Poly c;
  for (const auto& k : p.coefficients_in(v)) {
    if (k.is_zero()) continue;
    c = gcd(c, k);
    if (c.is_constant()) return Poly(1);
  }
  return c;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  const Poly na = a.primitive(), nb = b.primitive();
  if (na == nb) return na;
  const Var v = max_var(a, b);
  if (!a.contains(v)) return gcd(a, content_in(b, v));
  if (!b.contains(v)) return gcd(content_in(a, v), b);

  const Poly ca = content_in(na, v), cb = content_in(nb, v);
  Poly pa = divide_or_throw(na, ca), pb = divide_or_throw(nb, cb);
  const Poly c = gcd(ca, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  Poly g;
  while (true) {
    Poly r = pseudo_divide(pa, pb, v).remainder;
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree(v) == 0) {
      g = Poly(1);
      break;
    }
    pa = std::move(pb);
    pb = divide_or_throw(r, content_in(r, v));
  }
  return (c * g).primitive();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) return {};
  if (p.is_constant()) return Poly(1);
  const Poly q = p.primitive();
  const Var top = *q.variables().rbegin();
  const Poly c = content_in(q, top);
  const Poly pp = divide_or_throw(q, c);
  const Poly g = gcd(pp, pp.partial(top));
  const Poly s = divide_or_throw(pp, g);
  return (s * squarefree_part(c)).primitive();
}

Poly remove_common_factors(const Poly& p, const Poly& q) {
  Poly r = p.primitive();
  while (true) {
    const Poly g = gcd(r, q);
    if (g.is_constant()) return r;
    r = divide_or_throw(r, g).primitive();
  }
}

PseudoDivision pseudo_divide(const Poly& f, const Poly& g, Var v) {
  const std::uint32_t dg = g.degree(v);
  const Poly init = g.coefficient(v, dg);
  PseudoDivision out{Poly(), f, Poly(1), 0};
  if (f.is_zero()) return out;
  Poly& r = out.remainder;
  while (!r.is_zero() && r.degree(v) >= dg) {
    const std::uint32_t dr = r.degree(v);
    const Poly lc = r.coefficient(v, dr);
    const Monomial m(v, dr - dg);
    if (init.is_constant()) {
      const Poly t = lc.scaled(init.constant_term().inverse()).times_monomial(m);
      out.quotient += t;
      r -= t * g;
      continue;
    }
    if (auto q = exact_divide(lc, init)) {
      const Poly t = q->times_monomial(m);
      out.quotient += t;
      r -= t * g;
      continue;
    }
    const Poly t = lc.times_monomial(m);
    r = init * r - t * g;
    out.quotient = init * out.quotient + t;
    out.multiplier = out.multiplier * init;
    ++out.power;
  }
  return out;
}

Poly determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(1);
  int sign = 1;
  Poly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return Poly();
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_or_throw(num, prev);
      }
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

Poly resultant(const Poly& a, const Poly& b, Var v) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const std::uint32_t da = a.degree(v), db = b.degree(v);
  if (da == 0) return a.pow(db);
  if (db == 0) return b.pow(da);
  const auto ca = a.coefficients_in(v), cb = b.coefficients_in(v);
  const std::size_t n = da + db;
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j <= da; ++j) m[i][i + j] = ca[da - j];
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j <= db; ++j) m[db + i][i + j] = cb[db - j];
  return determinant(std::move(m));
}

}  // namespace diffchow
