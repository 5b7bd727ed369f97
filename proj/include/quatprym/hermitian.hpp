#ifndef QUATPRYM_HERMITIAN_HPP
#define QUATPRYM_HERMITIAN_HPP

#include <array>
#include <utility>
#include <vector>

#include "quatprym/quaternion.hpp"
#include "quatprym/report.hpp"
#include "quatprym/zlattice.hpp"

namespace quatprym {

/// c1*x1 + c2*x2 in a free left B-module with basis x1, x2. Its Q^8
/// coordinates are those of c1 followed by those of c2.
struct QuatVector2 {
  Quaternion c1, c2;

  static QuatVector2 first() { return {Quaternion::one(), Quaternion()}; }
  static QuatVector2 second() { return {Quaternion(), Quaternion::one()}; }

  std::vector<Rational> coords() const;
  static QuatVector2 from_coords(const std::vector<Rational>& v);

  QuatVector2 right_mul(const Quaternion& q) const { return {c1 * q, c2 * q}; }

  friend QuatVector2 operator*(const Quaternion& m, const QuatVector2& v) { return {m * v.c1, m * v.c2}; }
  friend QuatVector2 operator+(const QuatVector2& x, const QuatVector2& y) { return {x.c1 + y.c1, x.c2 + y.c2}; }
  friend QuatVector2 operator-(const QuatVector2& x, const QuatVector2& y) { return {x.c1 - y.c1, x.c2 - y.c2}; }
  friend bool operator==(const QuatVector2& x, const QuatVector2& y) { return x.c1 == y.c1 && x.c2 == y.c2; }
};

/// <u, w> = scale * Tr(sum_ij v_ij * conj(u_i) * w_j).
struct SkewHermitianForm {
  Quaternion v11, v12, v21, v22;
  Rational scale = 1;

  const Quaternion& v(int i, int j) const;
  bool is_skew_hermitian() const;
  friend bool operator==(const SkewHermitianForm& x, const SkewHermitianForm& y) {
    return x.v11 == y.v11 && x.v12 == y.v12 && x.v21 == y.v21 && x.v22 == y.v22 && x.scale == y.scale;
  }
};

/// v = [[i+j, (-1-i)/2], [(1-i)/2, 0]] at scale 1: the form on the Prym
/// lattice in the cycle basis lambda_1, lambda_2.
SkewHermitianForm prym_cycle_form();

/// v = [[0, 1], [-1, 0]].
SkewHermitianForm standard_form(const Rational& scale);

Rational pairing_eval(const SkewHermitianForm& form, const QuatVector2& u, const QuatVector2& w);

/// The matrix of `form` in the basis newbasis, found by solving the linear
/// system coming from evaluations on all Q-basis pairs. Throws
/// std::invalid_argument if newbasis is not a B-basis.
SkewHermitianForm solve_form_matrix(const SkewHermitianForm& form, const std::pair<QuatVector2, QuatVector2>& newbasis);

ZLattice lattice_of(const std::vector<QuatVector2>& generators);
std::vector<QuatVector2> lattice_vectors(const ZLattice& lat);

/// {b * x : b in basis}.
std::vector<QuatVector2> module_span(const std::array<Quaternion, 4>& basis, const QuatVector2& x);

/// A*x + B*y for order bases A, B.
ZLattice module_lattice(OrderName a, const QuatVector2& x, OrderName b, const QuatVector2& y);

struct GramInfo {
  RatMatrix gram;
  bool integral = false;
  Rational det;
};

GramInfo gram_matrix(const SkewHermitianForm& form, const ZLattice& lat);

/// (u1, u2) -> (-u2 r, 2 u1 r) with r = (1+i)/2.
QuatVector2 w2(const QuatVector2& u);

VerificationReport verify_pairing();
VerificationReport verify_named_lattices();
VerificationReport lemma_LA_check();

}  // namespace quatprym

#endif
