#ifndef QUATPRYM_ZLATTICE_HPP
#define QUATPRYM_ZLATTICE_HPP

#include <optional>
#include <vector>

#include "quatprym/linalg.hpp"

namespace quatprym {

/// A finitely generated subgroup of Q^n. The stored basis is canonical:
/// with D the lcm of all denominators, it is HNF(D*L)/D. Two lattices are
/// equal iff their bases are identical.
class ZLattice {
 public:
  ZLattice() = default;
  ZLattice(std::size_t ambient_dim, const RatMatrix& generators);
  static ZLattice from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t rank() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const ZLattice& other) const;

  ZLattice sum(const ZLattice& other) const;
  ZLattice intersection(const ZLattice& other) const;
  ZLattice scaled(const Rational& s) const;

  /// this ∩ rowspace(span).
  ZLattice intersect_subspace(const RatMatrix& span) const;

  /// Image under x -> x * m (m has ambient_dim rows).
  ZLattice image(const RatMatrix& m) const;

  friend bool operator==(const ZLattice& x, const ZLattice& y) {
    return x.ambient_dim_ == y.ambient_dim_ && x.basis_ == y.basis_;
  }
  friend bool operator!=(const ZLattice& x, const ZLattice& y) { return !(x == y); }

 private:
  std::size_t ambient_dim_ = 0;
  RatMatrix basis_;
};

/// [super : sub]. Throws std::invalid_argument when the ranks differ or
/// sub is not contained in super.
Integer lattice_index(const ZLattice& super, const ZLattice& sub);

struct LatticeOps {
  ZLattice sum;
  ZLattice intersection;
  std::optional<Integer> index;  // [a : b] when b ⊆ a with equal rank
  bool equal = false;
};

/// Throws on ambient mismatch. An empty index means b has lower rank
/// (infinite index) or is not contained in a.
LatticeOps lattice_ops(const ZLattice& a, const ZLattice& b);

/// Basis (as columns) of the annihilator of rowspace(span): v is in the
/// span iff v * result == 0.
RatMatrix annihilator(const RatMatrix& span, std::size_t ambient_dim);

}  // namespace quatprym

#endif
