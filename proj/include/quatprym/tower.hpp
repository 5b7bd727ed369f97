#ifndef QUATPRYM_TOWER_HPP
#define QUATPRYM_TOWER_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "quatprym/report.hpp"

namespace quatprym {

/// Branch data (g; a', a_i, a_j, a_k) of a quaternion tower.
struct TowerSpec {
  int g = 0;
  int a_prime = 0;
  int a_i = 0, a_j = 0, a_k = 0;

  int a() const { return a_prime + a_i + a_j + a_k; }
  bool same_parity() const { return (a_i % 2 == a_j % 2) && (a_j % 2 == a_k % 2); }

  /// "g:a'.ai.aj.ak", e.g. "2:0.0.0.0".
  static TowerSpec parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const TowerSpec& x, const TowerSpec& y) {
    return x.g == y.g && x.a_prime == y.a_prime && x.a_i == y.a_i && x.a_j == y.a_j && x.a_k == y.a_k;
  }
};

struct TowerInvariants {
  int g_pm = 0;
  int g_tilde = 0;
  int dim_P = 0;
  int dim_M = 0;
  int dim_Shim = 0;
};

/// Throws std::invalid_argument on negative counts or a negative genus or
/// dimension in the output.
TowerInvariants tower_invariants(const TowerSpec& spec);

/// (g, a) with n = 2g - 2 + a >= 2 and dim M >= dim Shim.
std::vector<std::pair<int, int>> dimension_candidates();

/// a' = 0, a <= 4, equal parity of the a_t, n >= 2, dim M >= dim Shim, and
/// the monodromy onto V4 can be surjective (g >= 1, or two different t with
/// a_t > 0). Sorted, with a_i >= a_j >= a_k.
std::vector<TowerSpec> enumerate_admissible();

/// Same scan without the parity and generation filters.
std::vector<TowerSpec> enumerate_unfiltered();

// ---------------------------------------------------------------------------
// (Z/2)^k covers of P^1

struct AbelianCoverSpec {
  int k = 0;
  std::vector<unsigned> inertia;  // nonzero elements of F_2^k as bitmasks
};

struct QuotientGenus {
  std::vector<unsigned> subgroup;  // all elements of H, sorted
  int level = 0;                   // |G / H| = 2^level
  int genus = 0;
};

/// Every subgroup H of F_2^k (as its sorted element list).
std::vector<std::vector<unsigned>> all_subgroups(int k);

/// Genus of the quotient of the full cover by every subgroup H. Throws if
/// an inertia element is zero or the inertia elements do not sum to zero.
std::vector<QuotientGenus> abelian_quotient_genera(const AbelianCoverSpec& spec);

/// level -> genus -> number of quotients
std::map<int, std::map<int, int>> level_table(const std::vector<QuotientGenus>& q);

/// Five points with inertia e1, e2, e3, e4, e1+e2+e3+e4 in (Z/2)^4.
AbelianCoverSpec five_point_cover();
/// Three pairs of points with inertia e1, e1, e2, e2, e3, e3 in (Z/2)^3.
AbelianCoverSpec three_pair_cover();

// ---------------------------------------------------------------------------
// Lifts of V4-valued monodromy to the quaternion group, genus 2

struct LiftCount {
  int lifts = 0;
  int distinct_covers = 0;
  int actions_per_cover = 0;         // 0 if covers carry different numbers
  int conjugation_orbits_per_cover = 0;
  bool torsor = false;               // lifts = psi0 * chi, chi in Hom(pi1, +-1)
};

/// psi_pm gives klein4 indices for alpha1, beta1, alpha2, beta2.
LiftCount count_quaternion_lifts(const std::array<int, 4>& psi_pm);

VerificationReport verify_tower(const std::vector<TowerSpec>& extra_specs);

}  // namespace quatprym

#endif
