#pragma once

// Elements of Q[a]/(m(a)) for a monic m. m is not checked for irreducibility;
// with a reducible m the ring has zero divisors, and only zero tests remain
// meaningful.

#include <memory>
#include <string>

#include "diffchow/coeff.hpp"

namespace diffchow {

class AlgebraicNumber {
 public:
  /// The class of `value` modulo m. m must have degree >= 1.
  AlgebraicNumber(const UPoly& modulus, const UPoly& value);
  AlgebraicNumber(const UPoly& modulus, const Rational& value);

  /// The generator a.
  static AlgebraicNumber generator(const UPoly& modulus);

  const UPoly& modulus() const { return *m_; }
  const UPoly& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }

  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.v_ == b.v_; }

  AlgebraicNumber pow(unsigned e) const;
  std::string to_string() const { return v_.to_string("a"); }

 private:
  AlgebraicNumber(std::shared_ptr<const UPoly> m, UPoly v);
  void check_same(const AlgebraicNumber& o) const;
  std::shared_ptr<const UPoly> m_;
  UPoly v_;
};

}  // namespace diffchow
