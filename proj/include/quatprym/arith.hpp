#ifndef QUATPRYM_ARITH_HPP
#define QUATPRYM_ARITH_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quatprym {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q" form; integers are written as "p/1".
std::string to_fraction_string(const Rational& r);

/// Shorter form for human-readable output: "p" for integers, else "p/q".
std::string to_display_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

Integer lcm_of_denominators(const Rational* first, const Rational* last);

}  // namespace quatprym

#endif
