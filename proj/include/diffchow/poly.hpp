#pragma once

// Sparse difference polynomials over Q or Q(x).

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diffchow/coeff.hpp"
#include "diffchow/var.hpp"

namespace diffchow {

/// Power product of shifted variables. Factors are kept sorted by variable
/// key, largest first, with positive exponents only.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Var v, std::uint32_t e = 1);
  /// Factors in any order; repeated variables are merged, zero exponents dropped.
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t degree(Var v) const;
  /// Largest variable (by key) present; requires !is_one().
  Var max_var() const { return f_.front().first; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;
  Monomial shifted(std::uint32_t k) const;
  /// Removes v from the monomial.
  Monomial without(Var v) const;

  /// Canonical monomial order: total degree, then lexicographic with larger
  /// variable keys more significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

  std::string to_string() const;

 private:
  std::vector<Factor> f_;
};

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Difference polynomial. Terms are kept in decreasing canonical monomial order
/// with nonzero coefficients, so structural equality is mathematical equality.
class Poly {
 public:
  Poly() = default;
  Poly(long c);                // NOLINT(google-explicit-constructor)
  Poly(const Coeff& c);        // NOLINT
  Poly(const Rational& c) : Poly(Coeff(c)) {}  // NOLINT
  explicit Poly(Var v);
  Poly(const Coeff& c, Monomial m);
  /// Terms in any order; like terms are combined.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  /// True when no variable occurs.
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one()); }
  /// Constant term (zero if none).
  Coeff constant_term() const;
  const Term& leading_term() const { return t_.front(); }
  std::uint32_t total_degree() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Total order used for deterministic sorting of polynomial sets.
  friend bool canonical_less(const Poly& a, const Poly& b);

  Poly pow(unsigned e) const;
  Poly scaled(const Coeff& c) const;
  Poly times_monomial(const Monomial& m) const;

  /// All variables occurring, ascending by key.
  std::set<Var> variables() const;
  bool contains(Var v) const;
  std::uint32_t degree(Var v) const;
  /// Coefficients as a univariate polynomial in v: result[i] multiplies v^i.
  std::vector<Poly> coefficients_in(Var v) const;
  /// Leading coefficient in v.
  Poly coefficient(Var v, std::uint32_t e) const;
  static Poly from_coefficients(Var v, const std::vector<Poly>& coeffs);

  /// sigma^k applied to variables and coefficients.
  Poly transform(std::uint32_t k) const;
  /// Formal partial derivative in one shifted variable.
  Poly partial(Var v) const;
  /// Algebraic substitution of individual shifted variables (simultaneous).
  Poly substitute_vars(const std::map<Var, Poly>& bindings) const;
  /// Difference substitution: each symbol s maps to q, s^(k) maps to q.transform(k).
  Poly substitute(const std::map<Var, Poly>& symbol_bindings) const;
  /// Renames variables through f (must be injective on the variables present).
  template <class F>
  Poly rename(F&& f) const {
    std::vector<Term> out;
    out.reserve(t_.size());
    for (const auto& t : t_) {
      std::vector<Monomial::Factor> fs;
      for (const auto& [v, e] : t.mono.factors()) fs.emplace_back(f(v), e);
      out.push_back({Monomial(std::move(fs)), t.coeff});
    }
    return from_terms(std::move(out));
  }

  /// Evaluates every variable; missing variables throw.
  Coeff evaluate(const std::map<Var, Coeff>& values) const;

  /// Content-free representative: leading coefficient (canonical order)
  /// positive, coefficients integral polynomials in x with trivial content.
  Poly primitive() const;
  /// Divides by the leading coefficient.
  Poly monic() const;
  /// True when every coefficient lies in Q.
  bool has_rational_coefficients() const;

  std::string to_string() const;

 private:
  std::vector<Term> t_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }
inline std::ostream& operator<<(std::ostream& os, Var v) { return os << v.to_string(); }

}  // namespace diffchow
