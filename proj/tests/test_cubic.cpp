#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "quatprym/cubic.hpp"
#include "quatprym/linalg.hpp"
#include "test_support.hpp"

using namespace quatprym;

namespace {

Rational random_alpha(std::mt19937_64& g) {
  for (;;) {
    const Rational a = testsupport::random_small_rational(g);
    if (!is_zero(a) && a != 1) return a;
  }
}

// Singularity tested straight from the partials of x1x2x3 + a x4x5x6.
bool direct_singular(const Rational& a, const std::array<Rational, 6>& x) {
  Rational sum = 0;
  for (const auto& v : x) sum += v;
  if (sum != 0 || x[0] * x[1] * x[2] + a * x[3] * x[4] * x[5] != 0) return false;
  const std::array<Rational, 6> g = {x[1] * x[2],     x[0] * x[2],     x[0] * x[1],
                                     a * x[4] * x[5], a * x[3] * x[5], a * x[3] * x[4]};
  for (const auto& v : g)
    if (v != g[0]) return false;
  return true;
}

// Rank of the Hessian of F at p restricted to {L = 0}.
std::size_t hessian_rank(const Rational& a, const std::array<Rational, 6>& x) {
  RatMatrix h(6, 6);
  h(0, 1) = h(1, 0) = x[2];
  h(0, 2) = h(2, 0) = x[1];
  h(1, 2) = h(2, 1) = x[0];
  h(3, 4) = h(4, 3) = a * x[5];
  h(3, 5) = h(5, 3) = a * x[4];
  h(4, 5) = h(5, 4) = a * x[3];
  RatMatrix basis(5, 6);  // e_i - e_6
  for (std::size_t i = 0; i < 5; ++i) {
    basis(i, i) = 1;
    basis(i, 5) = -1;
  }
  return field_rank(RatMatrix(basis * h * basis.transpose()));
}

std::array<Rational, 6> as_rational(const Point6& p) {
  std::array<Rational, 6> x;
  for (std::size_t i = 0; i < 6; ++i) x[i] = p[i].constant_value();
  return x;
}

}  // namespace

TEST_CASE("rational functions") {
  const RatFunc a = RatFunc::alpha();
  const RatFunc x = (a * a - RatFunc(1)) / (a - RatFunc(1));
  CHECK(x == a + RatFunc(1));
  CHECK(x.den() == UPoly(1));
  CHECK(RatFunc(1) / a * a == RatFunc(1));
  CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), std::domain_error);
  CHECK_THROWS_AS((RatFunc(1) / a).evaluate(0), std::domain_error);

  auto g = testsupport::rng();
  auto random_rf = [&] {
    const RatFunc n = RatFunc(testsupport::random_small_rational(g)) * a + RatFunc(testsupport::random_small_rational(g));
    RatFunc d = a * a + RatFunc(testsupport::random_small_rational(g)) * a + RatFunc(1);
    return n / d;
  };
  for (int t = 0; t < 200; ++t) {
    const RatFunc p = random_rf(), q = random_rf();
    const Rational v = testsupport::random_small_rational(g);
    Rational pv, qv;
    try {
      pv = p.evaluate(v);
      qv = q.evaluate(v);
    } catch (const std::domain_error&) {
      continue;
    }
    CHECK((p + q).evaluate(v) == pv + qv);
    CHECK((p * q).evaluate(v) == pv * qv);
    CHECK((p - q).evaluate(v) == pv - qv);
    CHECK(p * (q + RatFunc(1)) == p * q + p);
    if (qv != 0) CHECK((p / q).evaluate(v) == pv / qv);
  }
}

TEST_CASE("sparse polynomials") {
  using QPoly = SparsePoly<Rational>;
  const QPoly x = QPoly::variable(2, 0), y = QPoly::variable(2, 1);
  const QPoly f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  CHECK(f.degree() == 2);
  CHECK(f.derivative(0) == Rational(2) * x);
  CHECK((f - f).is_zero());
  CHECK(f.evaluate({3, 1}) == 8);
  const QPoly s = QPoly::variable(1, 0);
  CHECK(f.substitute({s, s}).is_zero());
}

TEST_CASE("family and singular points") {
  const auto X = family_member(2);
  CHECK(X.F.terms().size() == 2);
  CHECK_THROWS_AS(family_member(0), std::invalid_argument);
  CHECK(is_singular_point(X, node_point(3, 6)));
  CHECK_FALSE(is_singular_point(X, make_point({1, -1, 0, 1, -1, 0})));
  CHECK_FALSE(is_singular_point(X, tenth_node()));
  CHECK(is_singular_point(family_member(1), tenth_node()));
  CHECK_THROWS_AS(is_singular_point(X, make_point({0, 0, 0, 0, 0, 0})), std::invalid_argument);

  const auto S = family_member(RatFunc::alpha());
  for (int a = 1; a <= 3; ++a)
    for (int b = 4; b <= 6; ++b) CHECK(is_singular_point(S, node_point(a, b)));
  CHECK_FALSE(is_singular_point(S, tenth_node()));
}

TEST_CASE("singular locus against a rational grid search") {
  // Every singular point has coordinates in {0, +-1} after scaling, so a
  // grid of small integers catches all of them.
  for (const Rational a : {Rational(2), Rational(1), Rational(-1), Rational(3, 7)}) {
    std::vector<std::array<Rational, 6>> found;
    std::array<int, 5> c{};
    for (int code = 0; code < 3 * 3 * 3 * 3 * 3; ++code) {
      int k = code;
      for (int i = 0; i < 5; ++i) {
        c[i] = k % 3 - 1;
        k /= 3;
      }
      std::array<Rational, 6> x;
      Rational sum = 0;
      for (int i = 0; i < 5; ++i) {
        x[i] = c[i];
        sum += c[i];
      }
      x[5] = -sum;
      if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; })) continue;
      const auto lead = std::find_if(x.begin(), x.end(), [](const Rational& v) { return v != 0; });
      if (*lead < 0) continue;
      if (direct_singular(a, x)) found.push_back(x);
    }
    const auto locus = singular_locus(a);
    CHECK(locus.size() == found.size());
    for (const auto& p : locus) CHECK(std::find(found.begin(), found.end(), as_rational(p)) != found.end());
  }
}

TEST_CASE("finite field scan") {
  CHECK(good_prime(2, 11) == 11);
  CHECK(good_prime(Rational(11, 2), 11) == 13);
  CHECK(good_prime(12, 11) == 13);  // 11 divides 12 - 1
  CHECK(good_prime(1, 2) == 5);
  const auto scan = finite_field_singular_points(2, 11);
  CHECK(scan.points_scanned == 16105);
  CHECK(scan.singular.size() == 9);
  CHECK(finite_field_singular_points(1, 11).singular.size() == 10);
  // alpha = 12 is 1 mod 11, so the bad prime sees the tenth point.
  CHECK(finite_field_singular_points(12, 11).singular.size() == 10);
  CHECK(finite_field_singular_points(12, 13).singular.size() == 9);
}

TEST_CASE("tangent cone rank against the restricted Hessian") {
  auto g = testsupport::rng();
  for (int t = 0; t < 10; ++t) {
    const Rational a = t == 0 ? Rational(1) : random_alpha(g);
    const auto X = family_member(a);
    for (const auto& p : singular_locus(a)) {
      CHECK(node_rank(X, p) == 4);
      CHECK(hessian_rank(a, as_rational(p)) == 4);
      const auto [c, e] = second_chart(p);
      CHECK(tangent_cone(X.F, p, c, e).rank() == 4);
    }
  }
  const Poly f = Poly::variable(6, 0) * Poly::variable(6, 1) * Poly::variable(6, 2);
  const auto p = make_point({0, 0, 1, 0, 0, -1});
  const auto [c, e] = default_chart(p);
  CHECK(tangent_cone(f, p, c, e).rank() == 2);
  CHECK_THROWS_AS(node_rank(family_member(2), make_point({1, -1, 0, 1, -1, 0})), std::invalid_argument);
}

TEST_CASE("planes") {
  const auto X = family_member(RatFunc::alpha());
  CHECK(plane_membership(X, coordinate_plane_span(0, 3)));
  CHECK_FALSE(plane_membership(X, coordinate_plane_span(0, 1)));
  const auto o = node_point(1, 4);
  CHECK_THROWS_AS(plane_membership(X, {o, o, node_point(2, 5)}), std::invalid_argument);

  std::vector<Point6> nodes;
  for (const auto& pl : all_planes_ab()) nodes.push_back(node_point(pl.a, pl.b));
  const auto planes = enumerate_planes(X, nodes);
  CHECK(planes.size() == 9);
  for (const auto& inc : planes) CHECK(inc.nodes.size() == 4);

  // Oracle: F vanishes at random points of each plane for a random alpha.
  auto g = testsupport::rng();
  const Rational a = random_alpha(g);
  const auto Xa = family_member(a);
  for (const auto& pl : all_planes_ab()) {
    for (int t = 0; t < 5; ++t) {
      std::vector<RatFunc> x(6, RatFunc(0));
      RatFunc sum = 0;
      for (int i = 0; i < 6; ++i) {
        if (i == pl.a - 1 || i == pl.b - 1 || i == 5 || (pl.b == 6 && i == 4)) continue;
        x[i] = RatFunc(testsupport::random_small_rational(g));
        sum = sum + x[i];
      }
      x[pl.b == 6 ? 4 : 5] = -sum;
      CHECK(is_zero(Xa.F.evaluate(x)));
    }
  }

  CHECK(plane_intersection_dim({1, 4}, {2, 5}) == 0);
  CHECK(plane_intersection_dim({1, 4}, {1, 5}) == 1);
  CHECK(plane_intersection_dim({1, 4}, {1, 4}) == 2);
  const auto systems = plane_systems();
  CHECK(systems.size() == 6);
}

TEST_CASE("lines") {
  const auto X = family_member(2);
  const auto o14 = node_point(1, 4);
  CHECK(line_in_cubic(X, o14, node_point(2, 5)));
  CHECK(line_in_cubic(X, o14, node_point(1, 5)));
  CHECK(line_in_cubic(X, o14, make_point({1, -1, 0, 1, -1, 0})));
  CHECK_FALSE(line_in_cubic(X, o14, make_point({1, -1, 0, 0, 1, -1})));
  CHECK_THROWS_AS(line_in_cubic(X, o14, o14), std::invalid_argument);

  std::vector<Point6> nodes;
  for (const auto& pl : all_planes_ab()) nodes.push_back(node_point(pl.a, pl.b));
  const auto nc = lines_through_node(X, node_point(3, 6), nodes);
  std::set<std::string> names;
  for (const auto& c : nc.components) {
    names.insert(c.plane.name());
    CHECK(c.on_cone);
    CHECK(c.singular_directions == 3);
  }
  CHECK(names == std::set<std::string>{"Pi_14", "Pi_15", "Pi_24", "Pi_25"});
  CHECK(nc.other_directions_on_cone);
}

TEST_CASE("segre change and moduli") {
  const auto s = segre_change_check();
  CHECK(s.sums_agree);
  REQUIRE(s.lambda);
  CHECK(*s.lambda == -24);
  // Numerical oracle at random points of {L = 0}.
  auto g = testsupport::rng();
  for (int t = 0; t < 20; ++t) {
    std::array<Rational, 6> x;
    Rational sum = 0;
    for (int i = 0; i < 5; ++i) {
      x[i] = testsupport::random_small_rational(g);
      sum += x[i];
    }
    x[5] = -sum;
    Rational cubes = 0;
    for (int i = 0; i < 6; ++i) {
      const int base = i < 3 ? 0 : 3;
      const Rational y = x[base + (i - base + 1) % 3] + x[base + (i - base + 2) % 3] - x[i];
      cubes += y * y * y;
    }
    CHECK(cubes == *s.lambda * (x[0] * x[1] * x[2] + x[3] * x[4] * x[5]));
  }

  const auto r = iso_invariant(2, Rational(1, 2));
  CHECK(r.isomorphic);
  CHECK(r.b_alpha == Rational(5, 2));
  CHECK_FALSE(iso_invariant(2, 3).isomorphic);
  CHECK_THROWS_AS(iso_invariant(0, 1), std::invalid_argument);
  CHECK(theta_check(RatFunc::alpha()));
  CHECK(symmetry_count(RatFunc::alpha()) == 36);
}

TEST_CASE("reports") {
  for (const std::optional<Rational> a : {std::optional<Rational>(2), std::optional<Rational>(1),
                                          std::optional<Rational>(Rational(-3, 5)), std::optional<Rational>()}) {
    const auto rep = verify_cubic(a, 11);
    for (const auto& c : rep.checks) {
      INFO(c.id << ": " << c.details);
      CHECK(c.status != Status::fail);
    }
  }
  CHECK(verify_cubic(Rational(1), 11).data["singular_points"].size() == 10);
  CHECK_THROWS_AS(verify_cubic(Rational(0), 11), std::invalid_argument);
}
