#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "quatprym/quaternion.hpp"
#include "test_support.hpp"

using namespace quatprym;

namespace {

// Hurwitz criterion: all coordinates integral, or all in 1/2 + Z.
bool hurwitz_oracle(const Quaternion& q) {
  const auto cs = q.coords();
  const bool all_int = std::all_of(cs.begin(), cs.end(), [](const Rational& x) { return x.get_den() == 1; });
  const bool all_half = std::all_of(cs.begin(), cs.end(), [](const Rational& x) { return x.get_den() == 2; });
  return all_int || all_half;
}

Quaternion random_quaternion(std::mt19937_64& g) {
  return Quaternion(testsupport::random_small_rational(g), testsupport::random_small_rational(g),
                    testsupport::random_small_rational(g), testsupport::random_small_rational(g));
}

}  // namespace

TEST_CASE("multiplication table") {
  const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k(), one = Quaternion::one();
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(i * i == -one);
  CHECK(j * j == -one);
  CHECK(k * k == -one);
  auto g = testsupport::rng();
  const auto q = random_quaternion(g);
  CHECK(one * q == q);
  CHECK(q * one == q);
}

TEST_CASE("involution data") {
  const auto d = involution_data(Quaternion(1, 2, 0, 0));
  CHECK(d.trace == 2);
  CHECK(involution_data(Quaternion::i()).conjugate == -Quaternion::i());
  CHECK(involution_data(Quaternion::u()).norm == 1);
}

TEST_CASE("algebra axioms on random triples") {
  auto g = testsupport::rng();
  for (int trial = 0; trial < 10000; ++trial) {
    const auto p = random_quaternion(g), q = random_quaternion(g), r = random_quaternion(g);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q).trace() == (q * p).trace());
    CHECK((p * q).conj() == q.conj() * p.conj());
    CHECK((p * q).norm() == p.norm() * q.norm());
  }
}

TEST_CASE("order membership") {
  CHECK(order_membership(Quaternion::u(), OrderName::Hurwitz_M));
  CHECK_FALSE(order_membership(Quaternion::u(), OrderName::Lipschitz_Mprime));
  CHECK(order_membership(Quaternion::one(), OrderName::Lipschitz_Mprime));
  CHECK_FALSE(order_membership(Quaternion(Rational(1, 2), Rational(1, 2), 0, 0), OrderName::Hurwitz_M));

  // Against the coordinate criterion on half-integral samples.
  auto g = testsupport::rng();
  std::uniform_int_distribution<int> half(-6, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    auto h = [&] {
      Rational x(half(g), 2);
      x.canonicalize();
      return x;
    };
    Quaternion q(h(), h(), h(), h());
    CHECK(order_membership(q, OrderName::Hurwitz_M) == hurwitz_oracle(q));
    const auto cs = q.coords();
    const bool lip = std::all_of(cs.begin(), cs.end(), [](const Rational& x) { return x.get_den() == 1; });
    CHECK(order_membership(q, OrderName::Lipschitz_Mprime) == lip);
  }
}

TEST_CASE("order bases are closed under multiplication") {
  for (auto o : {OrderName::Lipschitz_Mprime, OrderName::Hurwitz_M}) {
    const auto b = order_basis(o);
    for (const auto& x : b)
      for (const auto& y : b) CHECK(order_membership(x * y, o));
  }
  // P is a two-sided ideal of M.
  for (const auto& m : order_basis(OrderName::Hurwitz_M))
    for (const auto& p : order_basis(OrderName::Ideal_P)) {
      CHECK(order_membership(m * p, OrderName::Ideal_P));
      CHECK(order_membership(p * m, OrderName::Ideal_P));
    }
}

TEST_CASE("unit groups") {
  const auto lip = unit_group(OrderName::Lipschitz_Mprime);
  const auto hur = unit_group(OrderName::Hurwitz_M);
  CHECK(lip.size() == 8);
  CHECK(hur.size() == 24);
  CHECK_THROWS(unit_group(OrderName::Ideal_P));

  for (const auto* units : {&lip, &hur}) {
    const std::set<Quaternion> s(units->begin(), units->end());
    for (const auto& x : *units) {
      CHECK(x * x.conj() == Quaternion::one());
      CHECK(s.count(x.inverse()) == 1);
      for (const auto& y : *units) CHECK(s.count(x * y) == 1);
    }
  }
  for (const auto& g : lip) CHECK(g.inverse() == g.conj());
}

TEST_CASE("ideal P") {
  const auto p = ideal_p_data();
  CHECK(p.index_in_M == 4);
  CHECK(p.index_in_Mprime == 2);
  CHECK(p.matches_product_basis);
  CHECK(p.two_sided);
  CHECK(p.trace_even);
  CHECK(p.square_is_2M);
}

TEST_CASE("M'/2M' quotient") {
  const auto one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j();
  CHECK(mod2_image((one + i) * (one + i)) == 0);
  CHECK(mod2_image(i * j) == mod2_image(j * i));
  const auto t = mod2_quotient_table();
  CHECK(t.entries.size() == 16);
  CHECK(t.table_matches);
  CHECK(t.homomorphism_on_all_residues);
  CHECK(t.commutative);
  CHECK(mod2_label(t.image_of_2u) == "ee'");
  CHECK(mod2_multiply(0b0010, 0b0100) == 0b1000);
  CHECK(mod2_multiply(0b0010, 0b0010) == 0);
}
