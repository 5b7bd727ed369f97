#ifndef QUATPRYM_CUBIC_HPP
#define QUATPRYM_CUBIC_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quatprym/matrix.hpp"
#include "quatprym/ratfunc.hpp"
#include "quatprym/report.hpp"
#include "quatprym/sparse_poly.hpp"

namespace quatprym {

// X(alpha) = {x1 x2 x3 + alpha x4 x5 x6 = x1 + ... + x6 = 0} in P^5.
// Coordinates are 0-based in code: x1 is index 0.

using Poly = SparsePoly<RatFunc>;
using Point6 = std::array<RatFunc, 6>;

struct CubicPair {
  Poly F;  // the cubic
  Poly L;  // the hyperplane
};

/// Throws std::invalid_argument for alpha = 0.
CubicPair family_member(const RatFunc& alpha);

Point6 make_point(const std::array<int, 6>& x);
/// e_a - e_b for 1 <= a <= 3 < b <= 6 (1-based, as in O_ab).
Point6 node_point(int a, int b);
/// (1,1,1,-1,-1,-1)
Point6 tenth_node();
bool same_projective_point(const Point6& p, const Point6& q);
std::string point_string(const Point6& p);

/// F(p) = L(p) = 0 and grad F, grad L are dependent at p. Throws for p = 0.
bool is_singular_point(const CubicPair& X, const Point6& p);

/// Candidates from the support case split, each confirmed singular.
/// Throws std::invalid_argument for alpha = 0.
std::vector<Point6> singular_locus(const Rational& alpha);

// ---------------------------------------------------------------------------
// Finite-field cross-check

/// Smallest prime q >= at_least with q > 3 that divides none of num(alpha),
/// den(alpha) and, unless alpha = 1, num(alpha - 1).
long good_prime(const Rational& alpha, long at_least);

struct FiniteFieldScan {
  long prime = 0;
  long points_scanned = 0;
  std::vector<std::array<long, 6>> singular;  // first nonzero coordinate 1
};

/// Every point of {L = 0} = P^4(F_p) where X(alpha mod p) is singular.
FiniteFieldScan finite_field_singular_points(const Rational& alpha, long prime);

/// Reduction mod p normalized like FiniteFieldScan entries; nullopt if the
/// point reduces to 0 or has p in a denominator.
std::optional<std::array<long, 6>> reduce_point(const Point6& p, long prime);

// ---------------------------------------------------------------------------
// Tangent cones

/// Affine chart x_chart = 1 of {L = 0}, with x_eliminated solved from L and
/// the remaining four coordinates shifted so the point sits at the origin.
struct TangentCone {
  std::size_t chart = 0, eliminated = 0;
  std::vector<std::size_t> vars;  // the four chart coordinates, in order
  Poly q, c;                      // degree 2 and 3 parts in those coordinates
  Matrix<RatFunc> quadric() const;  // symmetric matrix of q
  std::size_t rank() const;
};

/// Throws if p is not a singular point of {F = 0} restricted to {L = 0}, or
/// the chart is not valid for p.
TangentCone tangent_cone(const Poly& F, const Point6& p, std::size_t chart, std::size_t eliminated);

/// Chart at the largest-magnitude coordinate m of p, eliminating x6 (x5
/// when m is x6).
std::pair<std::size_t, std::size_t> default_chart(const Point6& p);
/// Another nonzero coordinate for the chart, eliminating a different one.
std::pair<std::size_t, std::size_t> second_chart(const Point6& p);

std::size_t node_rank(const CubicPair& X, const Point6& p);

// ---------------------------------------------------------------------------
// Planes and lines

/// {x_a = x_b = 0} inside {L = 0}, with 1 <= a <= 3 < b <= 6.
struct PlaneAB {
  int a = 1, b = 4;
  std::string name() const;
  friend bool operator==(const PlaneAB& x, const PlaneAB& y) { return x.a == y.a && x.b == y.b; }
};

std::vector<PlaneAB> all_planes_ab();
bool plane_contains_point(const PlaneAB& plane, const Point6& p);

/// Three independent points spanning {x_i = x_j = 0} inside {L = 0}
/// (0-based i < j).
std::array<Point6, 3> coordinate_plane_span(std::size_t i, std::size_t j);

/// F and L vanish identically on the plane spanned by three points. Throws
/// when they span less than a plane.
bool plane_membership(const CubicPair& X, const std::array<Point6, 3>& span);

struct PlaneIncidence {
  PlaneAB plane;
  std::vector<std::size_t> nodes;  // indices into the node list
};

/// Scans all fifteen planes {x_i = x_j = 0} and keeps those on X. Throws if
/// a contained plane is not of the form PlaneAB.
std::vector<PlaneIncidence> enumerate_planes(const CubicPair& X, const std::vector<Point6>& nodes);

/// Line through p and q lies on X. Throws when p and q agree projectively.
bool line_in_cubic(const CubicPair& X, const Point6& p, const Point6& q);

/// Projective dimension of the intersection of two planes: 2 if equal,
/// 1 for a line, 0 for a point.
int plane_intersection_dim(const PlaneAB& x, const PlaneAB& y);

struct PlaneSystem {
  char kind = 'A';  // 'A': a fixed; 'B': b fixed
  int index = 1;
  std::array<PlaneAB, 3> planes;
  std::string name() const;
};

std::vector<PlaneSystem> plane_systems();

struct ConeComponent {
  PlaneAB plane;
  Matrix<RatFunc> directions;  // 2 x 4 in tangent-cone coordinates
  bool on_cone = false;  // q and c vanish on the whole line
  std::size_t singular_directions = 0;
};

struct NodeCone {
  TangentCone cone;
  std::vector<ConeComponent> components;  // one per plane through the node
  bool other_directions_on_cone = false;  // every other node direction has q = c = 0
};

/// Throws if `node` is not singular on X.
NodeCone lines_through_node(const CubicPair& X, const Point6& node, const std::vector<Point6>& nodes);

// ---------------------------------------------------------------------------
// Coordinate changes and moduli

struct SegreCheck {
  bool sums_agree = false;
  std::optional<Rational> lambda;  // set when sum y^3 = lambda F_1 mod L
};

/// y_i = x_j + x_k - x_i within {1,2,3} and within {4,5,6}.
SegreCheck segre_change_check();

struct IsoResult {
  bool isomorphic = false;
  Rational b_alpha, b_beta;
};

/// Throws std::invalid_argument for zero input.
IsoResult iso_invariant(const Rational& alpha, const Rational& beta);

/// x_i <-> x_{3+i} sends F_alpha to alpha F_{1/alpha} and fixes L.
bool theta_check(const RatFunc& alpha);

/// Number of sigma in S3 x S3 (permuting {1,2,3} and {4,5,6}) fixing F and L.
int symmetry_count(const RatFunc& alpha);

nlohmann::ordered_json poly_to_json(const Poly& p);

/// alpha = nullopt runs the checks over Q(alpha). Throws
/// std::invalid_argument for alpha = 0.
VerificationReport verify_cubic(const std::optional<Rational>& alpha, long prime);

}  // namespace quatprym

#endif
