#include "quatprym/zlattice.hpp"

namespace quatprym {

ZLattice::ZLattice(std::size_t ambient_dim, const RatMatrix& generators) : ambient_dim_(ambient_dim) {
  if (generators.rows() > 0 && generators.cols() != ambient_dim) {
    throw std::invalid_argument("ZLattice: generator width differs from ambient dimension");
  }
  Integer d = 1;
  const IntMatrix scaled = generators.rows() ? clear_denominators(generators, &d) : IntMatrix(0, ambient_dim);
  const auto hf = hermite_form(scaled);
  basis_ = RatMatrix(hf.rank, ambient_dim);
  for (std::size_t i = 0; i < hf.rank; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      basis_(i, j) = Rational(hf.h(i, j), d);
      basis_(i, j).canonicalize();
    }
}

ZLattice ZLattice::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t ambient_dim) {
  return ZLattice(ambient_dim, RatMatrix::from_rows(rows, ambient_dim));
}

bool ZLattice::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_dim_) throw std::invalid_argument("ZLattice::contains: dimension mismatch");
  RatMatrix one(0, ambient_dim_);
  one.append_row(v);
  return contains(ZLattice(ambient_dim_, one));
}

bool ZLattice::contains(const ZLattice& other) const { return sum(other) == *this; }

ZLattice ZLattice::sum(const ZLattice& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("ZLattice::sum: ambient mismatch");
  return ZLattice(ambient_dim_, vstack(basis_, other.basis_));
}

ZLattice ZLattice::intersection(const ZLattice& other) const {
  if (other.ambient_dim_ != ambient_dim_) {
    throw std::invalid_argument("ZLattice::intersection: ambient mismatch");
  }
  if (rank() == 0 || other.rank() == 0) return ZLattice(ambient_dim_, RatMatrix(0, ambient_dim_));
  // x*A == y*B with x, y integral  <=>  (x, -y) in the left kernel of [A; B].
  const IntMatrix stacked = clear_denominators(vstack(basis_, other.basis_));
  const IntMatrix kernel = integer_left_kernel(stacked);
  const IntMatrix coeff = kernel.block(0, 0, kernel.rows(), rank());
  return ZLattice(ambient_dim_, to_rational(coeff) * basis_);
}

ZLattice ZLattice::scaled(const Rational& s) const {
  RatMatrix m = basis_;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= s;
  return ZLattice(ambient_dim_, m);
}

RatMatrix annihilator(const RatMatrix& span, std::size_t ambient_dim) {
  if (span.rows() == 0) return RatMatrix::identity(ambient_dim);
  return field_nullspace(span).transpose();
}

ZLattice ZLattice::intersect_subspace(const RatMatrix& span) const {
  const RatMatrix ann = annihilator(span, ambient_dim_);
  if (ann.cols() == 0 || rank() == 0) return *this;
  const IntMatrix coords = clear_denominators(basis_ * ann);
  const IntMatrix kernel = integer_left_kernel(coords);
  if (kernel.rows() == 0) return ZLattice(ambient_dim_, RatMatrix(0, ambient_dim_));
  return ZLattice(ambient_dim_, to_rational(kernel) * basis_);
}

ZLattice ZLattice::image(const RatMatrix& m) const {
  if (m.rows() != ambient_dim_) throw std::invalid_argument("ZLattice::image: shape mismatch");
  if (rank() == 0) return ZLattice(m.cols(), RatMatrix(0, m.cols()));
  return ZLattice(m.cols(), basis_ * m);
}

Integer lattice_index(const ZLattice& super, const ZLattice& sub) {
  if (super.rank() != sub.rank()) throw std::invalid_argument("lattice_index: rank mismatch");
  if (!super.contains(sub)) throw std::invalid_argument("lattice_index: not a sublattice");
  // Same rational span, so both canonical bases share pivot columns; the
  // index is the ratio of the products of pivots.
  Rational ratio = 1;
  for (std::size_t r = 0; r < super.rank(); ++r) {
    std::size_t c = 0;
    while (sgn(super.basis()(r, c)) == 0) ++c;
    ratio *= sub.basis()(r, c) / super.basis()(r, c);
  }
  if (!is_integral(ratio)) throw std::logic_error("lattice_index: non-integral index");
  return abs(ratio.get_num());
}

LatticeOps lattice_ops(const ZLattice& a, const ZLattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("lattice_ops: ambient mismatch");
  LatticeOps out;
  out.sum = a.sum(b);
  out.intersection = a.intersection(b);
  out.equal = (a == b);
  if (a.rank() == b.rank() && out.sum == a) out.index = lattice_index(a, b);
  return out;
}

}  // namespace quatprym
