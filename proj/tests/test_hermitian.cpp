#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "quatprym/hermitian.hpp"
#include "test_support.hpp"

using namespace quatprym;

namespace {

Quaternion random_quaternion(std::mt19937_64& g) {
  return Quaternion(testsupport::random_small_rational(g), testsupport::random_small_rational(g),
                    testsupport::random_small_rational(g), testsupport::random_small_rational(g));
}

QuatVector2 random_vector(std::mt19937_64& g) { return {random_quaternion(g), random_quaternion(g)}; }

const std::array<Quaternion, 4> kHamilton = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};

// Pairing expanded by hand over coordinates: Tr(x) = 2 * real part, and the
// real part of a product p*q is p.a q.a - p.b q.b - p.c q.c - p.d q.d.
Rational pairing_oracle(const SkewHermitianForm& f, const QuatVector2& u, const QuatVector2& w) {
  auto re = [](const Quaternion& p, const Quaternion& q) -> Rational { return p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d; };
  Rational t = 0;
  const Quaternion us[] = {u.c1, u.c2}, ws[] = {w.c1, w.c2};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      // Re(v conj(u) w) = Re((w v) conj(u)) by cyclicity of the real part.
      t += re(ws[j] * f.v(i + 1, j + 1), us[i].conj());
    }
  return 2 * f.scale * t;
}

}  // namespace

TEST_CASE("pairing values from the cycle computation") {
  const auto form = prym_cycle_form();
  const auto l1 = QuatVector2::first(), l2 = QuatVector2::second();
  CHECK(pairing_eval(form, l1, Quaternion::i() * l1) == -2);
  CHECK(pairing_eval(form, l2, l2) == 0);
  CHECK(pairing_eval(form, l1, l2) == -1);
  const Rational same[] = {0, -2, -2, 0}, cross[] = {-1, 1, 0, 0};
  for (int t = 0; t < 4; ++t) {
    CHECK(pairing_eval(form, l1, kHamilton[t] * l1) == same[t]);
    CHECK(pairing_eval(form, l1, kHamilton[t] * l2) == cross[t]);
  }
}

TEST_CASE("pairing matches a coordinate oracle and is antisymmetric") {
  auto g = testsupport::rng();
  const auto form = prym_cycle_form();
  for (int trial = 0; trial < 500; ++trial) {
    const auto u = random_vector(g), w = random_vector(g);
    CHECK(pairing_eval(form, u, w) == pairing_oracle(form, u, w));
    CHECK(pairing_eval(form, u, w) == -pairing_eval(form, w, u));
  }
}

TEST_CASE("solve_form_matrix") {
  const auto form = prym_cycle_form();
  CHECK(solve_form_matrix(form, {QuatVector2::first(), QuatVector2::second()}) == form);

  const Quaternion one = Quaternion::one(), i = Quaternion::i(), k = Quaternion::k();
  const QuatVector2 minus{-(one + i), -(i + k)}, plus{-(one + i), i + k};
  const auto v = solve_form_matrix(form, {minus, QuatVector2::second()});
  CHECK(v == standard_form(1));
  const auto w = solve_form_matrix(form, {plus, QuatVector2::second()});
  CHECK(w.v11 == (i + k) * Rational(4));
  CHECK(w.is_skew_hermitian());

  CHECK_THROWS_AS(solve_form_matrix(form, {QuatVector2::first(), Quaternion::i() * QuatVector2::first()}),
                  std::invalid_argument);

  // Re-evaluating in the new basis reproduces every Q-basis pair.
  auto g = testsupport::rng();
  for (int trial = 0; trial < 5; ++trial) {
    const std::pair<QuatVector2, QuatVector2> nb{random_vector(g), random_vector(g)};
    const auto vn = solve_form_matrix(form, nb);
    CHECK(vn.is_skew_hermitian());
    const QuatVector2 xs[] = {nb.first, nb.second};
    const QuatVector2 es[] = {QuatVector2::first(), QuatVector2::second()};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (const auto& p : kHamilton)
          for (const auto& q : kHamilton)
            CHECK(pairing_eval(vn, p * es[a], q * es[b]) == pairing_eval(form, p * xs[a], q * xs[b]));
  }
}

TEST_CASE("lattice index of P inside M on one coordinate") {
  const auto e = QuatVector2::first();
  const auto m = lattice_of(module_span(order_basis(OrderName::Hurwitz_M), e));
  const auto p = lattice_of(module_span(order_basis(OrderName::Ideal_P), e));
  const auto ops = lattice_ops(m, p);
  REQUIRE(ops.index.has_value());
  CHECK(*ops.index == 4);
}

TEST_CASE("Gram determinants") {
  const auto e = QuatVector2::first(), f = QuatVector2::second();
  const auto b_alpha = module_lattice(OrderName::Hurwitz_M, e, OrderName::Ideal_P, f);
  const auto half = gram_matrix(standard_form(Rational(1, 2)), b_alpha);
  CHECK(half.integral);
  CHECK(half.det == 1);
  CHECK(gram_matrix(standard_form(1), b_alpha).det == 256);
  CHECK(gram_matrix(standard_form(Rational(1, 2)), b_alpha.scaled(2)).det == 65536);

  const auto a_e = module_lattice(OrderName::Lipschitz_Mprime, e, OrderName::Lipschitz_Mprime, f);
  CHECK(gram_matrix(standard_form(Rational(1, 2)), a_e).det == 1);

  // The raw generators are another basis of the same lattice.
  std::vector<QuatVector2> raw = module_span(order_basis(OrderName::Hurwitz_M), e);
  for (const auto& v : module_span(order_basis(OrderName::Ideal_P), f)) raw.push_back(v);
  RatMatrix g(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) g(r, c) = pairing_eval(standard_form(Rational(1, 2)), raw[r], raw[c]);
  CHECK(determinant(g) == 1);
}

TEST_CASE("W2") {
  const auto b_alpha =
      module_lattice(OrderName::Hurwitz_M, QuatVector2::first(), OrderName::Ideal_P, QuatVector2::second());
  for (const auto& v : lattice_vectors(b_alpha)) {
    CHECK(w2(w2(v)) == v.right_mul(-Quaternion::i()));
    CHECK(b_alpha.contains(w2(v).coords()));
  }
  CHECK(order_membership(-Quaternion::i(), OrderName::Hurwitz_M));
}

TEST_CASE("lemma on the kernel of chi") {
  const Quaternion one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j();
  const QuatVector2 z{i + one, -(j + one)};
  const auto mprime2 = module_lattice(OrderName::Lipschitz_Mprime, QuatVector2::first(), OrderName::Lipschitz_Mprime,
                                      QuatVector2::second());
  CHECK(mprime2.contains((Quaternion::u() * z).coords()));
  const auto mz = lattice_of(module_span(order_basis(OrderName::Hurwitz_M), z));
  CHECK(mprime2.intersection(mz).rank() == 4);
}

TEST_CASE("report suites pass") {
  for (const auto& rep : {verify_pairing(), verify_named_lattices(), lemma_LA_check()}) {
    for (const auto& c : rep.checks) {
      INFO(c.id << ": " << c.details);
      CHECK(c.status != Status::fail);
    }
  }
  const auto p = verify_pairing();
  CHECK(p.find("lattice.change_of_basis.plus")->status == Status::flagged);
  CHECK(p.find("lattice.change_of_basis.minus")->status == Status::pass);
}
