#include "diffchow/coeff.hpp"

#include <algorithm>
#include <sstream>

#include "diffchow/errors.hpp"

namespace diffchow {

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(Rational c) {
  if (c != 0) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x() { return UPoly(std::vector<Rational>{0, 1}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.c_.size()) out[i] += a.c_[i];
    if (i < b.c_.size()) out[i] += b.c_[i];
  }
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const Rational& s) {
  if (s == 0) return {};
  UPoly r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

void UPoly::divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw InvalidArgument("univariate division by zero");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  const int da = a.degree();
  std::vector<Rational> quo(da >= db ? static_cast<std::size_t>(da - db + 1) : 0);
  for (int i = da; i >= db; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / b.leading();
    if (factor == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = factor;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= factor * b.c_[static_cast<std::size_t>(j)];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly u = a, v = b;
  while (!v.is_zero()) {
    UPoly q, r;
    divrem(u, v, q, r);
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

UPoly UPoly::shifted(long k) const {
  if (k == 0 || is_constant()) return *this;
  // Horner in (x + k).
  const UPoly xk(std::vector<Rational>{Rational(k), 1});
  UPoly out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * xk + UPoly(*it);
  return out;
}

Rational UPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ---------------------------------------------------------------- Coeff

Coeff::Coeff(const UPoly& num, const UPoly& den) {
  *this = from_fraction(num, den);
}

Coeff Coeff::x() { return from_fraction(UPoly::x(), UPoly(Rational(1))); }

Coeff Coeff::from_fraction(UPoly num, UPoly den) {
  if (den.is_zero()) throw InvalidArgument("rational function with zero denominator");
  if (num.is_zero()) return Coeff();
  if (!den.is_constant()) {
    UPoly g = UPoly::gcd(num, den);
    if (!g.is_constant()) {
      UPoly q, r;
      UPoly::divrem(num, g, q, r);
      num = std::move(q);
      UPoly::divrem(den, g, q, r);
      den = std::move(q);
    }
  }
  const Rational lead = den.leading();
  if (lead != 1) {
    num = num * (Rational(1) / lead);
    den = den.monic();
  }
  if (den.is_constant() && num.is_constant()) return Coeff(num.leading());
  Coeff out;
  out.q_ = 0;
  out.fn_ = std::make_shared<const Fraction>(Fraction{std::move(num), std::move(den)});
  return out;
}

UPoly Coeff::numerator() const { return fn_ ? fn_->num : UPoly(q_); }
UPoly Coeff::denominator() const { return fn_ ? fn_->den : UPoly(Rational(1)); }

int Coeff::sign() const {
  if (!fn_) return sgn(q_);
  return sgn(fn_->num.leading());
}

Coeff Coeff::shifted(long k) const {
  if (!fn_ || k == 0) return *this;
  return from_fraction(fn_->num.shifted(k), fn_->den.shifted(k));
}

Coeff Coeff::operator-() const {
  if (!fn_) return Coeff(Rational(-q_));
  Coeff out;
  out.fn_ = std::make_shared<const Fraction>(Fraction{-fn_->num, fn_->den});
  return out;
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  if (!a.fn_ && !b.fn_) return Coeff(Rational(a.q_ + b.q_));
  const UPoly an = a.numerator(), ad = a.denominator();
  const UPoly bn = b.numerator(), bd = b.denominator();
  if (ad == bd) return Coeff::from_fraction(an + bn, ad);
  return Coeff::from_fraction(an * bd + bn * ad, ad * bd);
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff operator*(const Coeff& a, const Coeff& b) {
  if (!a.fn_ && !b.fn_) return Coeff(Rational(a.q_ * b.q_));
  if (a.is_zero() || b.is_zero()) return Coeff();
  if (!a.fn_) {
    Coeff out;
    out.fn_ = std::make_shared<const Coeff::Fraction>(
        Coeff::Fraction{b.fn_->num * a.q_, b.fn_->den});
    return out;
  }
  if (!b.fn_) return b * a;
  return Coeff::from_fraction(a.fn_->num * b.fn_->num, a.fn_->den * b.fn_->den);
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero coefficient");
  if (!fn_) return Coeff(Rational(1 / q_));
  return from_fraction(fn_->den, fn_->num);
}

Coeff operator/(const Coeff& a, const Coeff& b) {
  if (!a.fn_ && !b.fn_) {
    if (b.q_ == 0) throw InvalidArgument("division by zero coefficient");
    return Coeff(Rational(a.q_ / b.q_));
  }
  return a * b.inverse();
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (!a.fn_ && !b.fn_) return a.q_ == b.q_;
  if (!a.fn_ || !b.fn_) return false;
  return a.fn_->num == b.fn_->num && a.fn_->den == b.fn_->den;
}

Rational Coeff::evaluate(const Rational& at) const {
  if (!fn_) return q_;
  const Rational d = fn_->den.evaluate(at);
  if (d == 0) throw InvalidArgument("coefficient denominator vanishes at evaluation point");
  return fn_->num.evaluate(at) / d;
}

std::string Coeff::to_string() const {
  if (!fn_) return q_.get_str();
  std::string s = "(" + fn_->num.to_string() + ")";
  if (!(fn_->den.is_constant() && fn_->den.leading() == 1)) s += "/(" + fn_->den.to_string() + ")";
  return s;
}

}  // namespace diffchow
