#include "quatprym/ratfunc.hpp"

#include <stdexcept>

namespace quatprym {

UPoly::UPoly(const Rational& c) {
  if (!quatprym::is_zero(c)) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

UPoly UPoly::variable() { return UPoly(std::vector<Rational>{0, 1}); }

void UPoly::trim() {
  while (!c_.empty() && quatprym::is_zero(c_.back())) c_.pop_back();
}

const Rational& UPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> quot(std::max(0, a.degree() - b.degree() + 1), Rational(0));
  std::vector<Rational> rem = a.c_;
  const Rational lead = b.leading();
  for (int d = a.degree() - b.degree(); d >= 0; --d) {
    const Rational f = rem[d + b.degree()] / lead;
    quot[d] = f;
    if (quatprym::is_zero(f)) continue;
    for (std::size_t i = 0; i < b.c_.size(); ++i) rem[d + i] -= f * b.c_[i];
  }
  q = UPoly(std::move(quot));
  r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational lead = a.leading();
  for (auto& x : a.c_) x /= lead;
  return a;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Rational& x = c_[d];
    if (quatprym::is_zero(x)) continue;
    const bool neg = sgn(x) < 0;
    const Rational mag = neg ? Rational(-x) : x;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = (mag == 1);
    if (d == 0 || !unit) out += to_display_string(mag);
    if (d > 0) out += (d == 0 || unit ? "" : "*") + var + (d > 1 ? "^" + std::to_string(d) : "");
  }
  return out;
}

RatFunc::RatFunc(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num.is_zero()) {
    num_ = UPoly();
    den_ = UPoly(1);
    return;
  }
  const UPoly g = UPoly::gcd(num, den);
  UPoly r;
  UPoly::divmod(num, g, num_, r);
  UPoly::divmod(den, g, den_, r);
  const Rational lead = den_.leading();
  const UPoly inv(Rational(1) / lead);
  num_ = num_ * inv;
  den_ = den_ * inv;
}

RatFunc RatFunc::alpha() { return RatFunc(UPoly::variable(), UPoly(1)); }

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("RatFunc: not a constant: " + to_string());
  return num_.is_zero() ? Rational(0) : Rational(num_.leading() / den_.leading());
}

Rational RatFunc::evaluate(const Rational& a) const {
  const Rational d = den_.evaluate(a);
  if (quatprym::is_zero(d)) throw std::domain_error("RatFunc: pole at " + to_display_string(a));
  return num_.evaluate(a) / d;
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.den_ == y.den_) return RatFunc(x.num_ + y.num_, x.den_);
  return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
  if (x.is_constant() && y.is_constant()) return RatFunc(x.constant_value() * y.constant_value());
  return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
}

RatFunc operator/(const RatFunc& x, const RatFunc& y) {
  if (is_zero(y)) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
}

std::string RatFunc::to_string() const {
  if (is_constant()) return to_fraction_string(constant_value());
  const std::string n = "(" + num_.to_string("a") + ")";
  if (den_ == UPoly(1)) return n;
  return n + "/(" + den_.to_string("a") + ")";
}

}  // namespace quatprym
