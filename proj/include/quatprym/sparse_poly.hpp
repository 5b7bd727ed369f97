#ifndef QUATPRYM_SPARSE_POLY_HPP
#define QUATPRYM_SPARSE_POLY_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "quatprym/arith.hpp"

namespace quatprym {

namespace detail {
// Outside the class so the member is_zero() does not hide it.
template <typename T>
bool coeff_is_zero(const T& c) {
  return is_zero(c);
}
}  // namespace detail

/// Multivariate polynomial in a fixed number of variables. Terms are keyed
/// by exponent vector; zero coefficients are never stored.
/// T needs +, -, *, ==, construction from int, and is_zero(T).
template <typename T>
class SparsePoly {
 public:
  using Exponent = std::vector<int>;

  explicit SparsePoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const T& c) {
    SparsePoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static SparsePoly variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::out_of_range("SparsePoly::variable");
    Exponent e(nvars, 0);
    e[i] = 1;
    SparsePoly p(nvars);
    p.add_term(e, T(1));
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponent, T>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const T& c) {
    if (e.size() != nvars_) throw std::invalid_argument("SparsePoly: exponent length mismatch");
    if (coeff_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (coeff_zero(it->second)) terms_.erase(it);
  }

  T coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total(e));
    return d;
  }

  SparsePoly homogeneous_part(int d) const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_)
      if (total(e) == d) out.terms_.emplace(e, c);
    return out;
  }

  SparsePoly derivative(std::size_t i) const {
    SparsePoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponent f = e;
      --f[i];
      out.add_term(f, c * T(e[i]));
    }
    return out;
  }

  T evaluate(const std::vector<T>& x) const {
    if (x.size() != nvars_) throw std::invalid_argument("SparsePoly::evaluate: wrong number of values");
    T acc(0);
    for (const auto& [e, c] : terms_) {
      T m = c;
      for (std::size_t i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) m = m * x[i];
      acc = acc + m;
    }
    return acc;
  }

  /// Replaces variable i by images[i]; all images share one variable count.
  SparsePoly substitute(const std::vector<SparsePoly>& images) const {
    if (images.size() != nvars_) throw std::invalid_argument("SparsePoly::substitute: wrong number of images");
    const std::size_t m = images.empty() ? 0 : images.front().nvars();
    for (const auto& p : images)
      if (p.nvars() != m) throw std::invalid_argument("SparsePoly::substitute: images differ in variables");
    std::vector<std::vector<SparsePoly>> powers(nvars_);
    SparsePoly out(m);
    for (const auto& [e, c] : terms_) {
      SparsePoly term = constant(m, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(m, T(1)));
        while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
        term = term * pw[e[i]];
      }
      out = out + term;
    }
    return out;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) {
    a.check_same(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) {
    a.check_same(b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, T(0) - c);
    return a;
  }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_same(b);
    SparsePoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  friend SparsePoly operator*(const T& s, const SparsePoly& a) {
    SparsePoly out(a.nvars_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
    return out;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  static int total(const Exponent& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
  }
  static bool coeff_zero(const T& c) { return detail::coeff_is_zero(c); }
  void check_same(const SparsePoly& b) const {
    if (nvars_ != b.nvars_) throw std::invalid_argument("SparsePoly: variable count mismatch");
  }

  std::size_t nvars_;
  std::map<Exponent, T> terms_;
};

}  // namespace quatprym

#endif
