#include "diffchow/algebraic_number.hpp"

#include "diffchow/errors.hpp"

namespace diffchow {

namespace {

UPoly reduce_mod(const UPoly& v, const UPoly& m) {
  UPoly q, r;
  UPoly::divrem(v, m, q, r);
  return r;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(std::shared_ptr<const UPoly> m, UPoly v) : m_(std::move(m)), v_(std::move(v)) {}

AlgebraicNumber::AlgebraicNumber(const UPoly& modulus, const UPoly& value) {
  if (modulus.degree() < 1) throw InvalidArgument("algebraic modulus must have degree >= 1");
  m_ = std::make_shared<const UPoly>(modulus.monic());
  v_ = reduce_mod(value, *m_);
}

AlgebraicNumber::AlgebraicNumber(const UPoly& modulus, const Rational& value)
    : AlgebraicNumber(modulus, UPoly(value)) {}

AlgebraicNumber AlgebraicNumber::generator(const UPoly& modulus) { return AlgebraicNumber(modulus, UPoly::x()); }

void AlgebraicNumber::check_same(const AlgebraicNumber& o) const {
  if (m_ != o.m_ && !(*m_ == *o.m_)) throw InvalidArgument("algebraic numbers over different moduli");
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  a.check_same(b);
  return AlgebraicNumber(a.m_, a.v_ + b.v_);
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  a.check_same(b);
  return AlgebraicNumber(a.m_, a.v_ - b.v_);
}

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  a.check_same(b);
  return AlgebraicNumber(a.m_, reduce_mod(a.v_ * b.v_, *a.m_));
}

AlgebraicNumber AlgebraicNumber::pow(unsigned e) const {
  AlgebraicNumber result(m_, UPoly(Rational(1)));
  AlgebraicNumber base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace diffchow
