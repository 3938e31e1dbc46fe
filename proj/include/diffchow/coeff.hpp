#pragma once

// Exact coefficient fields: Q and Q(x) with the shift x -> x + 1.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace diffchow {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no stored coefficients and degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Rational c);
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& s);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on a zero divisor.
  static void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  /// Monic gcd (zero only when both inputs are zero).
  static UPoly gcd(const UPoly& a, const UPoly& b);

  UPoly monic() const;
  /// p(x) -> p(x + k).
  UPoly shifted(long k) const;
  Rational evaluate(const Rational& at) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Element of Q or Q(x). Rational constants are stored inline; genuine rational
/// functions live in an immutable shared fraction num/den with den monic and
/// gcd(num, den) = 1.
class Coeff {
 public:
  Coeff() : q_(0) {}
  Coeff(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Coeff(Rational v) : q_(std::move(v)) { q_.canonicalize(); }  // NOLINT
  Coeff(const UPoly& num, const UPoly& den);

  static Coeff x();

  bool is_zero() const { return !fn_ && q_ == 0; }
  bool is_one() const { return !fn_ && q_ == 1; }
  bool is_rational() const { return !fn_; }
  const Rational& rational() const { return q_; }
  UPoly numerator() const;
  UPoly denominator() const;

  /// Sign of the leading coefficient of the numerator.
  int sign() const;

  /// sigma^k: x -> x + k. Constants are fixed.
  Coeff shifted(long k) const;

  Coeff operator-() const;
  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator/(const Coeff& a, const Coeff& b);
  Coeff& operator+=(const Coeff& b) { return *this = *this + b; }
  Coeff& operator-=(const Coeff& b) { return *this = *this - b; }
  Coeff& operator*=(const Coeff& b) { return *this = *this * b; }
  friend bool operator==(const Coeff& a, const Coeff& b);
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  Coeff inverse() const;

  /// Value at x = at (throws if the denominator vanishes there).
  Rational evaluate(const Rational& at) const;

  std::string to_string() const;

 private:
  struct Fraction {
    UPoly num;
    UPoly den;
  };
  static Coeff from_fraction(UPoly num, UPoly den);

  Rational q_;
  std::shared_ptr<const Fraction> fn_;
};

}  // namespace diffchow
