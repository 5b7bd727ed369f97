#include "quatprym/quaternion.hpp"

#include <algorithm>
#include <stdexcept>

#include "quatprym/zlattice.hpp"

namespace quatprym {

Quaternion Quaternion::u() { return Quaternion(Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)); }

Quaternion Quaternion::from_coords(const std::vector<Rational>& v, std::size_t offset) {
  if (v.size() < offset + 4) throw std::invalid_argument("Quaternion::from_coords: too short");
  return Quaternion(v[offset], v[offset + 1], v[offset + 2], v[offset + 3]);
}

Quaternion Quaternion::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw std::domain_error("Quaternion::inverse: zero");
  return conj() * Rational(1 / n);
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  a += o.a;
  b += o.b;
  c += o.c;
  d += o.d;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  a -= o.a;
  b -= o.b;
  c -= o.c;
  d -= o.d;
  return *this;
}

Quaternion& Quaternion::operator*=(const Rational& s) {
  a *= s;
  b *= s;
  c *= s;
  d *= s;
  return *this;
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return Quaternion(p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
                    p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
                    p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
                    p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a);
}

bool operator<(const Quaternion& p, const Quaternion& q) {
  if (p.a != q.a) return p.a < q.a;
  if (p.b != q.b) return p.b < q.b;
  if (p.c != q.c) return p.c < q.c;
  return p.d < q.d;
}

std::string Quaternion::to_string() const {
  static const char* units[] = {"", "i", "j", "k"};
  const auto cs = coords();
  std::string out;
  for (int t = 0; t < 4; ++t) {
    if (sgn(cs[t]) == 0) continue;
    Rational mag = abs(cs[t]);
    if (out.empty()) {
      if (sgn(cs[t]) < 0) out += "-";
    } else {
      out += sgn(cs[t]) < 0 ? " - " : " + ";
    }
    if (t == 0 || mag != 1) out += to_display_string(mag);
    out += units[t];
  }
  return out.empty() ? "0" : out;
}

std::array<std::string, 4> Quaternion::to_fraction_strings() const {
  return {to_fraction_string(a), to_fraction_string(b), to_fraction_string(c), to_fraction_string(d)};
}

InvolutionData involution_data(const Quaternion& q) {
  InvolutionData out;
  out.trace = q.trace();
  out.conjugate = Quaternion(out.trace) - q;
  const Quaternion n = q * out.conjugate;
  if (sgn(n.b) != 0 || sgn(n.c) != 0 || sgn(n.d) != 0) throw std::logic_error("norm is not scalar");
  out.norm = n.a;
  return out;
}

// ---------------------------------------------------------------------------

std::string order_label(OrderName o) {
  switch (o) {
    case OrderName::Lipschitz_Mprime: return "M'";
    case OrderName::Hurwitz_M: return "M";
    case OrderName::Ideal_P: return "P";
  }
  return "?";
}

std::array<Quaternion, 4> order_basis(OrderName o) {
  const Quaternion one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j();
  switch (o) {
    case OrderName::Lipschitz_Mprime: return {one, i, j, Quaternion::k()};
    case OrderName::Hurwitz_M: return {one, i, j, Quaternion::u()};
    case OrderName::Ideal_P: {
      const Quaternion g = one + i;
      return {g * one, g * i, g * j, g * Quaternion::u()};
    }
  }
  throw std::invalid_argument("order_basis: unknown order");
}

namespace {

RatMatrix basis_matrix(const std::array<Quaternion, 4>& b) {
  RatMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r) {
    const auto cs = b[r].coords();
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = cs[c];
  }
  return m;
}

ZLattice order_lattice(const std::array<Quaternion, 4>& b) { return ZLattice(4, basis_matrix(b)); }

}  // namespace

std::array<Rational, 4> order_coordinates(const Quaternion& q, OrderName o) {
  // q = x * B  =>  x = q * B^{-1}
  const auto inv = field_inverse(basis_matrix(order_basis(o)));
  const auto cs = q.coords();
  std::array<Rational, 4> x;
  for (std::size_t c = 0; c < 4; ++c) {
    x[c] = 0;
    for (std::size_t r = 0; r < 4; ++r) x[c] += cs[r] * (*inv)(r, c);
  }
  return x;
}

bool order_membership(const Quaternion& q, OrderName o) {
  const auto x = order_coordinates(q, o);
  return std::all_of(x.begin(), x.end(), [](const Rational& r) { return is_integral(r); });
}

std::vector<Quaternion> unit_group(OrderName o) {
  if (o == OrderName::Ideal_P) throw std::invalid_argument("unit_group: P is not a ring");
  // Norm one forces |coordinate| <= 1, and elements of M have coordinates in
  // (1/2)Z, so this range is exhaustive.
  const Rational range[] = {-1, Rational(-1, 2), 0, Rational(1, 2), 1};
  std::vector<Quaternion> units;
  for (const auto& a : range)
    for (const auto& b : range)
      for (const auto& c : range)
        for (const auto& d : range) {
          Quaternion q(a, b, c, d);
          if (q.norm() == 1 && order_membership(q, o)) units.push_back(q);
        }
  std::sort(units.begin(), units.end());
  return units;
}

IdealPData ideal_p_data() {
  const Quaternion one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  IdealPData out;
  out.basis = {one + i, i - one, j + k, i + k};

  const ZLattice p_published = order_lattice(out.basis);
  const ZLattice p_left = order_lattice(order_basis(OrderName::Ideal_P));
  const ZLattice m = order_lattice(order_basis(OrderName::Hurwitz_M));
  out.matches_product_basis = (p_published == p_left);

  // Covolume ratios.
  const Rational det_p = abs(determinant(basis_matrix(out.basis)));
  out.index_in_M = Rational(det_p / abs(determinant(basis_matrix(order_basis(OrderName::Hurwitz_M))))).get_num();
  out.index_in_Mprime =
      Rational(det_p / abs(determinant(basis_matrix(order_basis(OrderName::Lipschitz_Mprime))))).get_num();

  std::array<Quaternion, 4> right;
  const auto mb = order_basis(OrderName::Hurwitz_M);
  for (std::size_t t = 0; t < 4; ++t) right[t] = mb[t] * (one + i);
  out.two_sided = (order_lattice(right) == p_left);

  out.trace_even = std::all_of(out.basis.begin(), out.basis.end(), [](const Quaternion& q) {
    const Rational t = q.trace();
    return is_integral(t) && mpz_even_p(t.get_num_mpz_t());
  });

  RatMatrix products(0, 4);
  for (const auto& x : out.basis)
    for (const auto& y : out.basis) {
      const auto cs = (x * y).coords();
      products.append_row(std::vector<Rational>(cs.begin(), cs.end()));
    }
  out.square_is_2M = (ZLattice(4, products) == m.scaled(2));
  return out;
}

// ---------------------------------------------------------------------------

Mod2Residue mod2_multiply(Mod2Residue x, Mod2Residue y) {
  // Monomial bits: 0 -> 1, 1 -> e, 2 -> e', 3 -> ee'. A product of two
  // monomials vanishes iff they share a variable.
  Mod2Residue out = 0;
  for (unsigned s = 0; s < 4; ++s) {
    if (!(x >> s & 1)) continue;
    for (unsigned t = 0; t < 4; ++t) {
      if (!(y >> t & 1)) continue;
      if (s & t) continue;
      out ^= 1u << (s | t);
    }
  }
  return out;
}

Mod2Residue mod2_image(const Quaternion& q) {
  if (!order_membership(q, OrderName::Lipschitz_Mprime)) throw std::invalid_argument("mod2_image: not in M'");
  // Coordinates in the basis {1, 1+i, 1+j, 2u} of M', which maps to the
  // monomial basis {1, e, e', ee'}.
  const Quaternion one = Quaternion::one();
  const std::array<Quaternion, 4> basis = {one, one + Quaternion::i(), one + Quaternion::j(),
                                           Quaternion::u() * Rational(2)};
  const auto inv = field_inverse(basis_matrix(basis));
  const auto cs = q.coords();
  Mod2Residue out = 0;
  for (std::size_t c = 0; c < 4; ++c) {
    Rational x = 0;
    for (std::size_t r = 0; r < 4; ++r) x += cs[r] * (*inv)(r, c);
    if (mpz_odd_p(x.get_num_mpz_t())) out |= 1u << c;
  }
  return out;
}

std::string mod2_label(Mod2Residue r) {
  static const char* names[] = {"1", "e", "e'", "ee'"};
  std::string out;
  for (unsigned s = 0; s < 4; ++s) {
    if (!(r >> s & 1)) continue;
    if (!out.empty()) out += "+";
    out += names[s];
  }
  return out.empty() ? "0" : out;
}

Mod2Table mod2_quotient_table() {
  const Quaternion one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j();
  const std::array<Quaternion, 4> pre = {one, one + i, one + j, Quaternion::u() * Rational(2)};
  const char* labels[] = {"1", "1+i", "1+j", "2u"};

  Mod2Table out;
  out.table_matches = true;
  for (unsigned s = 0; s < 4; ++s)
    for (unsigned t = 0; t < 4; ++t) {
      Mod2Entry e;
      e.left = labels[s];
      e.right = labels[t];
      e.expected = mod2_multiply(1u << s, 1u << t);
      e.computed = mod2_image(pre[s] * pre[t]);
      if (e.expected != e.computed) out.table_matches = false;
      out.entries.push_back(std::move(e));
    }
  out.image_of_2u = mod2_image(pre[3]);

  // Representatives of M'/2M' with 0/1 coordinates in {1, i, j, k}.
  std::vector<Quaternion> reps;
  for (unsigned m = 0; m < 16; ++m) reps.emplace_back(m & 1, m >> 1 & 1, m >> 2 & 1, m >> 3 & 1);
  out.homomorphism_on_all_residues = true;
  out.commutative = true;
  for (const auto& x : reps)
    for (const auto& y : reps) {
      if (mod2_image(x * y) != mod2_multiply(mod2_image(x), mod2_image(y))) out.homomorphism_on_all_residues = false;
      if (mod2_image(x * y) != mod2_image(y * x)) out.commutative = false;
    }
  return out;
}

}  // namespace quatprym
