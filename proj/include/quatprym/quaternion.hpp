#ifndef QUATPRYM_QUATERNION_HPP
#define QUATPRYM_QUATERNION_HPP

#include <array>
#include <string>
#include <vector>

#include "quatprym/arith.hpp"

namespace quatprym {

/// a + b*i + c*j + d*k with rational coordinates.
struct Quaternion {
  Rational a, b, c, d;

  Quaternion() : a(0), b(0), c(0), d(0) {}
  Quaternion(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
  explicit Quaternion(const Rational& scalar) : a(scalar), b(0), c(0), d(0) {}

  static Quaternion one() { return Quaternion(1, 0, 0, 0); }
  static Quaternion i() { return Quaternion(0, 1, 0, 0); }
  static Quaternion j() { return Quaternion(0, 0, 1, 0); }
  static Quaternion k() { return Quaternion(0, 0, 0, 1); }
  /// (1 + i + j + k) / 2
  static Quaternion u();

  std::array<Rational, 4> coords() const { return {a, b, c, d}; }
  static Quaternion from_coords(const std::vector<Rational>& v, std::size_t offset = 0);

  Quaternion conj() const { return Quaternion(a, -b, -c, -d); }
  Rational trace() const { return 2 * a; }
  Rational norm() const { return a * a + b * b + c * c + d * d; }
  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0 && sgn(d) == 0; }
  Quaternion inverse() const;

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Rational& s);

  friend Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
  friend Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
  friend Quaternion operator-(const Quaternion& p) { return Quaternion(-p.a, -p.b, -p.c, -p.d); }
  friend Quaternion operator*(const Rational& s, Quaternion q) { return q *= s; }
  friend Quaternion operator*(Quaternion q, const Rational& s) { return q *= s; }
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);

  friend bool operator==(const Quaternion& p, const Quaternion& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
  }
  friend bool operator!=(const Quaternion& p, const Quaternion& q) { return !(p == q); }
  friend bool operator<(const Quaternion& p, const Quaternion& q);

  /// "1/2 + 1/2i + ..." style, for messages.
  std::string to_string() const;
  /// The four lowest-terms "p/q" strings in the order (1, i, j, k).
  std::array<std::string, 4> to_fraction_strings() const;
};

inline Quaternion multiply(const Quaternion& p, const Quaternion& q) { return p * q; }

struct InvolutionData {
  Quaternion conjugate;
  Rational trace;
  Rational norm;
};

InvolutionData involution_data(const Quaternion& q);

// ---------------------------------------------------------------------------
// Orders

enum class OrderName { Lipschitz_Mprime, Hurwitz_M, Ideal_P };

std::string order_label(OrderName o);

/// The fixed Z-basis: M' = {1,i,j,k}, M = {1,i,j,u}, P = (1+i){1,i,j,u}.
std::array<Quaternion, 4> order_basis(OrderName o);

/// Coordinates of q in order_basis(o) (rational in general).
std::array<Rational, 4> order_coordinates(const Quaternion& q, OrderName o);

bool order_membership(const Quaternion& q, OrderName o);

/// All norm-one elements, sorted. Throws std::invalid_argument for Ideal_P.
std::vector<Quaternion> unit_group(OrderName o);

struct IdealPData {
  std::array<Quaternion, 4> basis;  // {1+i, i-1, j+k, i+k}
  Integer index_in_M = 0;
  Integer index_in_Mprime = 0;
  bool matches_product_basis = false;  // same lattice as (1+i)*{1,i,j,u}
  bool two_sided = false;              // (1+i)M == M(1+i)
  bool trace_even = false;
  bool square_is_2M = false;           // P*P == 2M
};

IdealPData ideal_p_data();

// ---------------------------------------------------------------------------
// M'/2M' as F_2[e,e']/(e^2, e'^2).
//
// Residues are 4-bit masks over the monomials {1, e, e', ee'} (bit 0 = 1).

using Mod2Residue = unsigned;

Mod2Residue mod2_multiply(Mod2Residue x, Mod2Residue y);

/// Image of an element of M' under 1 -> 1, 1+i -> e, 1+j -> e'.
/// Throws if q is not in M'.
Mod2Residue mod2_image(const Quaternion& q);

std::string mod2_label(Mod2Residue r);

struct Mod2Entry {
  std::string left, right;  // preimage labels
  Mod2Residue expected;     // product in F_2[e,e']
  Mod2Residue computed;     // image of the quaternion product
};

struct Mod2Table {
  std::vector<Mod2Entry> entries;  // 16 products of {1, 1+i, 1+j, 2u}
  bool table_matches = false;
  bool homomorphism_on_all_residues = false;  // all 256 pairs
  bool commutative = false;
  Mod2Residue image_of_2u = 0;
};

Mod2Table mod2_quotient_table();

}  // namespace quatprym

#endif
