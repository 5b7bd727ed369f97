#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <set>

#include "quatprym/quaternion.hpp"
#include "quatprym/tower.hpp"
#include "test_support.hpp"

using namespace quatprym;

namespace {

int parity(unsigned x) { return std::popcount(x) & 1; }

// Genus of X/H as a sum over the double covers P^1 <- X/K, K of index 2
// containing H: each is given by a character c with c(H) = 0 and has genus
// r/2 - 1, r = number of branch points where c is odd.
int character_genus(const AbelianCoverSpec& spec, const std::vector<unsigned>& h) {
  int genus = 0;
  for (unsigned c = 1; c < (1u << spec.k); ++c) {
    bool kills = true;
    for (unsigned x : h) kills = kills && parity(c & x) == 0;
    if (!kills) continue;
    int r = 0;
    for (unsigned e : spec.inertia) r += parity(c & e);
    genus += r / 2 - 1;
  }
  return genus;
}

const std::vector<Quaternion>& q8_elements() {
  static const std::vector<Quaternion> e = {Quaternion::one(), -Quaternion::one(), Quaternion::i(), -Quaternion::i(),
                                            Quaternion::j(),   -Quaternion::j(),   Quaternion::k(), -Quaternion::k()};
  return e;
}

// Direct count over all of Q8^4 using quaternion arithmetic.
int brute_lifts(const std::array<int, 4>& psi_pm) {
  const auto& e = q8_elements();
  int count = 0;
  for (int a1 = 0; a1 < 8; ++a1)
    for (int b1 = 0; b1 < 8; ++b1)
      for (int a2 = 0; a2 < 8; ++a2)
        for (int b2 = 0; b2 < 8; ++b2) {
          const std::array<int, 4> psi = {a1, b1, a2, b2};
          bool projects = true;
          for (int x = 0; x < 4; ++x) projects = projects && psi[x] / 2 == psi_pm[x];
          if (!projects) continue;
          const Quaternion r = e[a1] * e[b1] * e[a1].inverse() * e[b1].inverse() * e[a2] * e[b2] *
                               e[a2].inverse() * e[b2].inverse();
          if (r == Quaternion::one()) ++count;
        }
  return count;
}

// Lifts differ by characters chi of pi1 into {+-1}; two give the same cover
// iff chi factors through psi_pm. Counts those chi.
int characters_through(const std::array<int, 4>& psi_pm) {
  int n = 0;
  for (unsigned chi = 0; chi < 16; ++chi) {
    bool ok = false;
    for (unsigned f = 0; f < 4 && !ok; ++f) {  // f: V4 -> +-1, f(v) = parity(f & v)
      bool match = true;
      for (int x = 0; x < 4; ++x) match = match && parity(f & psi_pm[x]) == static_cast<int>(chi >> x & 1);
      ok = match;
    }
    n += ok;
  }
  return n;
}

}  // namespace

TEST_CASE("spec parsing") {
  const auto s = TowerSpec::parse("2:0.1.1.1");
  CHECK(s == TowerSpec{2, 0, 1, 1, 1});
  CHECK(s.to_string() == "2:0.1.1.1");
  CHECK_THROWS_AS(TowerSpec::parse("2:0.1.1"), std::invalid_argument);
  CHECK_THROWS_AS(TowerSpec::parse("-1:0.0.0.0"), std::invalid_argument);
  CHECK_THROWS_AS(TowerSpec::parse("x"), std::invalid_argument);
}

TEST_CASE("invariants") {
  const auto t = tower_invariants({2, 0, 0, 0, 0});
  CHECK(t.g_pm == 5);
  CHECK(t.g_tilde == 9);
  CHECK(t.dim_P == 4);
  CHECK(t.dim_M == 3);
  CHECK(t.dim_Shim == 1);

  // Riemann-Hurwitz for the V4 cover C_pm -> C (ramified over a_i+a_j+a_k
  // points with index-2 inertia) and the unramified-over-a' double cover.
  for (const auto& s : enumerate_admissible()) {
    const auto v = tower_invariants(s);
    const int a = s.a();
    CHECK(2 * v.g_pm - 2 == 4 * (2 * s.g - 2) + 2 * a);
    CHECK(2 * v.g_tilde - 2 == 2 * (2 * v.g_pm - 2) + 2 * a);
    CHECK(v.dim_P == v.g_tilde - v.g_pm);
  }
  CHECK_THROWS_AS(tower_invariants({0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("admissible scan") {
  const auto c = dimension_candidates();
  CHECK(c.size() == 6);
  const auto adm = enumerate_admissible();
  CHECK(adm.size() == 5);
  for (const auto& s : adm) {
    CHECK(s.a_i >= s.a_j);
    CHECK(s.a_j >= s.a_k);
    CHECK(s.same_parity());
  }
  CHECK(enumerate_unfiltered().size() > adm.size());
}

TEST_CASE("subgroups of F2^k") {
  // Gaussian binomial sums: 2, 5, 16, 67.
  CHECK(all_subgroups(1).size() == 2);
  CHECK(all_subgroups(2).size() == 5);
  CHECK(all_subgroups(3).size() == 16);
  CHECK(all_subgroups(4).size() == 67);
  for (const auto& h : all_subgroups(4)) {
    CHECK(std::has_single_bit(h.size()));
    for (unsigned x : h)
      for (unsigned y : h) CHECK(std::binary_search(h.begin(), h.end(), x ^ y));
  }
}

TEST_CASE("quotient genera agree with the character oracle") {
  for (const auto& spec : {five_point_cover(), three_pair_cover()}) {
    for (const auto& q : abelian_quotient_genera(spec)) CHECK(q.genus == character_genus(spec, q.subgroup));
  }
  // Random branch data in (Z/2)^3.
  auto g = testsupport::rng();
  std::uniform_int_distribution<unsigned> pick(1, 7);
  for (int trial = 0; trial < 50; ++trial) {
    AbelianCoverSpec spec{3, {}};
    unsigned total = 0;
    for (int n = 0; n < 5; ++n) {
      spec.inertia.push_back(pick(g));
      total ^= spec.inertia.back();
    }
    if (total != 0) spec.inertia.push_back(total);
    for (const auto& q : abelian_quotient_genera(spec)) CHECK(q.genus == character_genus(spec, q.subgroup));
  }
  CHECK_THROWS_AS(abelian_quotient_genera({2, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(abelian_quotient_genera({2, {0, 0}}), std::invalid_argument);
}

TEST_CASE("lift counts agree with brute force") {
  for (int m = 0; m < 256; ++m) {
    const std::array<int, 4> psi_pm = {m & 3, m >> 2 & 3, m >> 4 & 3, m >> 6 & 3};
    const auto c = count_quaternion_lifts(psi_pm);
    CHECK(c.lifts == brute_lifts(psi_pm));
    if (c.lifts == 0) continue;
    CHECK(c.lifts == 16);
    CHECK(c.torsor);
    CHECK(c.distinct_covers == 16 / characters_through(psi_pm));
  }
  const auto nf = count_quaternion_lifts({1, 0, 2, 0});
  CHECK(nf.lifts == 16);
  CHECK(nf.distinct_covers == 4);
  CHECK(nf.actions_per_cover == 4);
  CHECK(nf.conjugation_orbits_per_cover == 1);
  CHECK(count_quaternion_lifts({1, 2, 0, 0}).lifts == 0);
}

TEST_CASE("report") {
  const auto rep = verify_tower({TowerSpec::parse("1:0.1.1.1")});
  for (const auto& c : rep.checks) {
    INFO(c.id << ": " << c.details);
    CHECK(c.status != Status::fail);
  }
  CHECK(rep.find("tower.lifts.case2_reading")->status == Status::flagged);
}
