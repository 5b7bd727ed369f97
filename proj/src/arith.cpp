#include "quatprym/arith.hpp"

#include <cctype>
#include <stdexcept>

namespace quatprym {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(s[0] == '+' ? s.substr(1) : s);
  };
  Rational r;
  r.get_num() = Integer(strip_plus(num));
  r.get_den() = Integer(strip_plus(den));
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_display_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

Integer lcm_of_denominators(const Rational* first, const Rational* last) {
  Integer l = 1;
  for (; first != last; ++first) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), first->get_den_mpz_t());
  }
  return l;
}

}  // namespace quatprym
