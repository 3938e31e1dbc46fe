#include "diffchow/poly.hpp"

#include <algorithm>
#include <sstream>

#include "diffchow/errors.hpp"

namespace diffchow {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, std::uint32_t e) {
  if (e > 0) f_.emplace_back(v, e);
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first > b.first; });
  for (auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!f_.empty() && f_.back().first == v)
      f_.back().second += e;
    else
      f_.emplace_back(v, e);
  }
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : f_) d += f.second;
  return d;
}

std::uint32_t Monomial::degree(Var v) const {
  for (const auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0, j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    if (j == o.f_.size() || (i < f_.size() && f_[i].first > o.f_[j].first)) {
      r.f_.push_back(f_[i++]);
    } else if (i == f_.size() || o.f_[j].first > f_[i].first) {
      r.f_.push_back(o.f_[j++]);
    } else {
      r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (const auto& [v, e] : f_) {
    while (j < o.f_.size() && o.f_[j].first > v) ++j;
    if (j == o.f_.size() || o.f_[j].first != v || o.f_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0;
  for (const auto& [v, e] : o.f_) {
    std::uint32_t sub = 0;
    if (i < f_.size() && f_[i].first == v) sub = f_[i++].second;
    if (e > sub) r.f_.emplace_back(v, e - sub);
  }
  return r;
}

Monomial Monomial::shifted(std::uint32_t k) const {
  if (k == 0) return *this;
  Monomial r = *this;
  for (auto& f : r.f_) f.first = f.first.shifted(k);
  return r;  // shifting preserves the key order within a symbol and across symbols
}

Monomial Monomial::without(Var v) const {
  Monomial r;
  for (const auto& f : f_)
    if (f.first != v) r.f_.push_back(f);
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  const std::size_t n = std::min(a.f_.size(), b.f_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.f_[i].first != b.f_[i].first) return a.f_[i].first <=> b.f_[i].first;
    if (a.f_[i].second != b.f_[i].second) return a.f_[i].second <=> b.f_[i].second;
  }
  return a.f_.size() <=> b.f_.size();
}

std::string Monomial::to_string() const {
  if (f_.empty()) return "1";
  std::string s;
  // Print in ascending variable order: y1*y1@1 rather than y1@1*y1.
  for (auto it = f_.rbegin(); it != f_.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += it->first.to_string();
    if (it->second > 1) s += "^" + std::to_string(it->second);
  }
  return s;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(long c) : Poly(Coeff(c)) {}

Poly::Poly(const Coeff& c) {
  if (!c.is_zero()) t_.push_back({Monomial(), c});
}

Poly::Poly(Var v) { t_.push_back({Monomial(v), Coeff(1)}); }

Poly::Poly(const Coeff& c, Monomial m) {
  if (!c.is_zero()) t_.push_back({std::move(m), c});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Poly p;
  p.t_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().mono == t.mono) {
      p.t_.back().coeff += t.coeff;
      if (p.t_.back().coeff.is_zero()) p.t_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

Coeff Poly::constant_term() const {
  if (!t_.empty() && t_.back().mono.is_one()) return t_.back().coeff;
  return Coeff();
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.mono.degree());
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.coeff = -t.coeff;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  std::size_t i = 0, j = 0;
  while (i < a.t_.size() || j < b.t_.size()) {
    if (j == b.t_.size()) {
      r.t_.push_back(a.t_[i++]);
      continue;
    }
    if (i == a.t_.size()) {
      r.t_.push_back(b.t_[j++]);
      continue;
    }
    const auto c = a.t_[i].mono <=> b.t_[j].mono;
    if (c > 0) {
      r.t_.push_back(a.t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(b.t_[j++]);
    } else {
      Coeff s = a.t_[i].coeff + b.t_[j].coeff;
      if (!s.is_zero()) r.t_.push_back({a.t_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.t_.size() == 1 && b.t_[0].mono.is_one()) return a.scaled(b.t_[0].coeff);
  if (a.t_.size() == 1 && a.t_[0].mono.is_one()) return b.scaled(a.t_[0].coeff);
  std::vector<Term> out;
  out.reserve(a.t_.size() * b.t_.size());
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) out.push_back({x.mono * y.mono, x.coeff * y.coeff});
  return Poly::from_terms(std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (!(a.t_[i].mono == b.t_[i].mono) || a.t_[i].coeff != b.t_[i].coeff) return false;
  return true;
}

bool canonical_less(const Poly& a, const Poly& b) {
  const std::size_t n = std::min(a.t_.size(), b.t_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = a.t_[i].mono <=> b.t_[i].mono;
    if (c != 0) return c < 0;
  }
  if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.t_[i].coeff == b.t_[i].coeff) continue;
    return a.t_[i].coeff.to_string() < b.t_[i].coeff.to_string();
  }
  return false;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::scaled(const Coeff& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.t_) t.coeff *= c;
  return r;
}

Poly Poly::times_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.t_) t.mono = t.mono * m;
  return r;  // multiplying by a monomial preserves a monomial order
}

std::set<Var> Poly::variables() const {
  std::set<Var> vs;
  for (const auto& t : t_)
    for (const auto& f : t.mono.factors()) vs.insert(f.first);
  return vs;
}

bool Poly::contains(Var v) const {
  for (const auto& t : t_)
    if (t.mono.degree(v) > 0) return true;
  return false;
}

std::uint32_t Poly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& t : t_) d = std::max(d, t.mono.degree(v));
  return d;
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : t_) {
    const auto e = t.mono.degree(v);
    buckets[e].push_back({t.mono.without(v), t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Poly Poly::coefficient(Var v, std::uint32_t e) const {
  std::vector<Term> out;
  for (const auto& t : t_)
    if (t.mono.degree(v) == e) out.push_back({t.mono.without(v), t.coeff});
  return from_terms(std::move(out));
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& coeffs) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Monomial vi(v, static_cast<std::uint32_t>(i));
    for (const auto& t : coeffs[i].t_) out.push_back({t.mono * vi, t.coeff});
  }
  return from_terms(std::move(out));
}

Poly Poly::transform(std::uint32_t k) const {
  if (k == 0) return *this;
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const auto& t : t_) out.push_back({t.mono.shifted(k), t.coeff.shifted(static_cast<long>(k))});
  return from_terms(std::move(out));
}

Poly Poly::partial(Var v) const {
  std::vector<Term> out;
  for (const auto& t : t_) {
    const auto e = t.mono.degree(v);
    if (e == 0) continue;
    std::vector<Monomial::Factor> fs = t.mono.factors();
    for (auto& f : fs)
      if (f.first == v) f.second = e - 1;
    out.push_back({Monomial(std::move(fs)), t.coeff * Coeff(static_cast<long>(e))});
  }
  return from_terms(std::move(out));
}

Poly Poly::substitute_vars(const std::map<Var, Poly>& bindings) const {
  if (bindings.empty()) return *this;
  std::map<std::pair<Var, std::uint32_t>, Poly> powers;
  auto power_of = [&](Var v, std::uint32_t e, const Poly& q) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, q.pow(e)).first;
    return it->second;
  };
  Poly result;
  for (const auto& t : t_) {
    std::vector<Monomial::Factor> kept;
    Poly factor(t.coeff);
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end())
        kept.emplace_back(v, e);
      else
        factor = factor * power_of(v, e, it->second);
    }
    result += factor.times_monomial(Monomial(std::move(kept)));
  }
  return result;
}

Poly Poly::substitute(const std::map<Var, Poly>& symbol_bindings) const {
  if (symbol_bindings.empty()) return *this;
  std::map<Var, Poly> expanded;
  for (const Var v : variables()) {
    auto it = symbol_bindings.find(v.symbol());
    if (it != symbol_bindings.end()) expanded.emplace(v, it->second.transform(v.shift()));
  }
  return substitute_vars(expanded);
}

Coeff Poly::evaluate(const std::map<Var, Coeff>& values) const {
  Coeff acc;
  for (const auto& t : t_) {
    Coeff term = t.coeff;
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw InvalidArgument("no value for " + v.to_string());
      for (std::uint32_t i = 0; i < e; ++i) term *= it->second;
    }
    acc += term;
  }
  return acc;
}

bool Poly::has_rational_coefficients() const {
  for (const auto& t : t_)
    if (!t.coeff.is_rational()) return false;
  return true;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return scaled(t_.front().coeff.inverse());
}

Poly Poly::primitive() const {
  if (is_zero()) return {};
  Poly r = *this;
  if (has_rational_coefficients()) {
    Integer den = 1, num = 0;
    for (const auto& t : r.t_) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.rational().get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.rational().get_num_mpz_t());
    }
    Rational scale(den, num);
    scale.canonicalize();
    if (r.t_.front().coeff.rational() < 0) scale = -scale;
    return r.scaled(Coeff(scale));
  }
  // Q(x): clear polynomial denominators, divide by the gcd of numerators,
  // then normalize the rational content of the resulting Q[x] coefficients.
  UPoly l(Rational(1));
  for (const auto& t : r.t_) {
    const UPoly d = t.coeff.denominator();
    UPoly g = UPoly::gcd(l, d), q, rem;
    UPoly::divrem(l * d, g, q, rem);
    l = q;
  }
  std::vector<UPoly> nums;
  UPoly g;
  for (const auto& t : r.t_) {
    UPoly q, rem;
    UPoly::divrem(l, t.coeff.denominator(), q, rem);
    nums.push_back(t.coeff.numerator() * q);
    g = UPoly::gcd(g, nums.back());
  }
  Integer den = 1, num = 0;
  for (auto& n : nums) {
    UPoly q, rem;
    UPoly::divrem(n, g, q, rem);
    n = q;
    for (const auto& c : n.coeffs()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (nums.front().leading() < 0) scale = -scale;
  for (std::size_t i = 0; i < r.t_.size(); ++i) r.t_[i].coeff = Coeff(nums[i] * scale, UPoly(Rational(1)));
  return r;
}

std::string Poly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    const bool rat = t.coeff.is_rational();
    const bool neg = rat && t.coeff.rational() < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string c;
    if (rat) {
      Rational mag = abs(t.coeff.rational());
      c = mag.get_str();
    } else {
      c = t.coeff.to_string();
    }
    if (t.mono.is_one()) {
      os << c;
    } else {
      if (c != "1") os << c << "*";
      os << t.mono.to_string();
    }
  }
  return os.str();
}

}  // namespace diffchow
