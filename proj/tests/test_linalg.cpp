#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quatprym/linalg.hpp"
#include "quatprym/zlattice.hpp"
#include "test_support.hpp"

using namespace quatprym;

namespace {

// Brute-force F_2 rank by counting the row span.
std::size_t f2_rank_bruteforce(const IntMatrix& m) {
  std::vector<unsigned> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    unsigned bits = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (mpz_odd_p(m(i, j).get_mpz_t())) bits |= 1u << j;
    rows.push_back(bits);
  }
  std::vector<bool> seen(1u << m.cols(), false);
  std::size_t count = 0;
  for (unsigned mask = 0; mask < (1u << rows.size()); ++mask) {
    unsigned v = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (mask >> i & 1) v ^= rows[i];
    if (!seen[v]) {
      seen[v] = true;
      ++count;
    }
  }
  std::size_t r = 0;
  while ((std::size_t{1} << r) < count) ++r;
  return r;
}

// Cofactor expansion, for small matrices only.
Integer det_cofactor(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, cc++) = m(i, j);
      }
    }
    const Integer term = m(0, c) * det_cofactor(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

}  // namespace

TEST_CASE("smith form of small examples") {
  auto s = smith_form(IntMatrix{{2, 0}, {0, 3}});
  REQUIRE(s.divisors.size() == 2);
  CHECK(s.divisors[0] == 1);
  CHECK(s.divisors[1] == 6);

  auto z = smith_form(IntMatrix(3, 4));
  CHECK(z.divisors.empty());
}

TEST_CASE("smith form round trip on random matrices") {
  auto g = testsupport::rng();
  std::uniform_int_distribution<int> dim(1, 20);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = testsupport::random_int_matrix(g, dim(g), dim(g), -9, 9);
    const auto s = smith_form(m);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    CHECK(s.left * m * s.right == s.diag);
    CHECK(inverse_unimodular(s.left) * s.diag * inverse_unimodular(s.right) == m);
    for (std::size_t t = 1; t < s.divisors.size(); ++t) CHECK(s.divisors[t] % s.divisors[t - 1] == 0);
    CHECK(s.divisors.size() == field_rank(to_rational(m)));
  }
}

TEST_CASE("hermite form invariants") {
  auto g = testsupport::rng();
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = testsupport::random_int_matrix(g, 7, 5, -6, 6);
    const auto hf = hermite_form(m);
    CHECK(hf.transform * m == hf.h);
    CHECK(abs(determinant(hf.transform)) == 1);
    for (std::size_t r = 0; r < hf.rank; ++r) {
      const auto c = hf.pivot_cols[r];
      CHECK(hf.h(r, c) > 0);
      for (std::size_t above = 0; above < r; ++above) {
        CHECK(hf.h(above, c) >= 0);
        CHECK(hf.h(above, c) < hf.h(r, c));
      }
    }
    // Left kernel is annihilating and of the right size.
    const auto k = integer_left_kernel(m);
    CHECK(k.rows() == m.rows() - hf.rank);
    CHECK((k * m).is_zero());
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  auto g = testsupport::rng();
  for (int n = 0; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto m = testsupport::random_int_matrix(g, n, n, -5, 5);
      CHECK(determinant(m) == det_cofactor(m));
    }
  }
  CHECK(determinant(RatMatrix{{Rational(1, 2), 0}, {0, Rational(2, 3)}}) == Rational(1, 3));
}

TEST_CASE("F_2 rank and nullspace") {
  auto g = testsupport::rng();
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = testsupport::random_int_matrix(g, 6, 7, -3, 3);
    CHECK(f2_rank(m) == f2_rank_bruteforce(m));
    const auto ns = f2_nullspace(m);
    CHECK(ns.rows() == 7 - f2_rank(m));
    const auto prod = m * ns.transpose();
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(mpz_even_p(prod(i, j).get_mpz_t()));
  }
}

TEST_CASE("lattice sum, intersection and index") {
  const auto a = ZLattice(2, RatMatrix{{1, 0}, {0, 1}});
  const auto b = ZLattice(2, RatMatrix{{2, 0}, {0, 3}});
  const auto ops = lattice_ops(a, b);
  REQUIRE(ops.index.has_value());
  CHECK(*ops.index == 6);
  CHECK(ops.sum == a);
  CHECK(ops.intersection == b);
  CHECK_FALSE(ops.equal);

  // 2Z ∩ 3Z = 6Z, 2Z + 3Z = Z, in one coordinate.
  const auto two = ZLattice(1, RatMatrix{{2}});
  const auto three = ZLattice(1, RatMatrix{{3}});
  CHECK(two.intersection(three) == ZLattice(1, RatMatrix{{6}}));
  CHECK(two.sum(three) == ZLattice(1, RatMatrix{{1}}));

  // Canonical form does not depend on the generating set.
  const auto c = ZLattice(2, RatMatrix{{Rational(1, 2), 1}, {0, 1}, {1, 2}});
  const auto d = ZLattice(2, RatMatrix{{Rational(1, 2), 0}, {0, 1}});
  CHECK(c == d);

  const auto self = lattice_ops(a, a);
  CHECK(self.equal);
  CHECK(*self.index == 1);

  const auto line = ZLattice(2, RatMatrix{{1, 1}});
  CHECK_FALSE(lattice_ops(a, line).index.has_value());
  CHECK_THROWS(lattice_index(a, line));
}

TEST_CASE("intersection with a subspace") {
  const auto z3 = ZLattice(3, RatMatrix::identity(3));
  const RatMatrix plane{{1, 1, 0}, {0, 0, 2}};
  const auto cut = z3.intersect_subspace(plane);
  CHECK(cut == ZLattice(3, RatMatrix{{1, 1, 0}, {0, 0, 1}}));
  const auto half = ZLattice(3, RatMatrix{{Rational(1, 2), Rational(1, 2), 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(half.intersect_subspace(RatMatrix{{1, 1, 0}}) == ZLattice(3, RatMatrix{{Rational(1, 2), Rational(1, 2), 0}}));
}
