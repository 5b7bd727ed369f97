#ifndef QUATPRYM_RATFUNC_HPP
#define QUATPRYM_RATFUNC_HPP

#include <string>
#include <vector>

#include "quatprym/arith.hpp"

namespace quatprym {

/// Polynomial in one variable over Q, coefficients low degree first, with
/// no trailing zeros. The zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  UPoly(int c) : UPoly(Rational(c)) {}
  UPoly(const Rational& c);
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly variable();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const;
  Rational evaluate(const Rational& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// a = q*b + r with deg r < deg b. Throws on b = 0.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  /// Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b);

  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Element of Q(alpha) as num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(UPoly num, UPoly den);

  static RatFunc alpha();

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Throws std::logic_error unless is_constant().
  Rational constant_value() const;
  /// Throws std::domain_error at a pole.
  Rational evaluate(const Rational& a) const;

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend bool operator==(const RatFunc& x, const RatFunc& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
  friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }

  /// "p/q" for constants, "(num)/(den)" in the variable "a" otherwise.
  std::string to_string() const;

 private:
  UPoly num_, den_;
};

inline bool is_zero(const RatFunc& x) { return x.num().is_zero(); }

}  // namespace quatprym

#endif
