#ifndef QUATPRYM_TEST_SUPPORT_HPP
#define QUATPRYM_TEST_SUPPORT_HPP

#include <cstdlib>
#include <random>

#include "quatprym/matrix.hpp"

namespace testsupport {

inline std::mt19937_64 rng() {
  const char* env = std::getenv("QUATPRYM_SEED");
  return std::mt19937_64(env ? std::strtoull(env, nullptr, 10) : 1);
}

inline quatprym::IntMatrix random_int_matrix(std::mt19937_64& g, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  quatprym::IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(g);
  return m;
}

inline quatprym::Rational random_small_rational(std::mt19937_64& g) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  quatprym::Rational r(num(g), den(g));
  r.canonicalize();
  return r;
}

}  // namespace testsupport

#endif
