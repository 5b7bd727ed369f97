#ifndef QUATPRYM_FINITE_GROUP_HPP
#define QUATPRYM_FINITE_GROUP_HPP

#include <string>
#include <vector>

#include "quatprym/matrix.hpp"

namespace quatprym {

/// A finite group given by its multiplication table. Element 0 is the
/// identity. The group axioms are checked at construction.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<std::vector<int>> table);

  /// {1, -1, i, -i, j, -j, k, -k}
  static FiniteGroup quaternion8();
  /// {1, ibar, jbar, kbar}, the quotient of the quaternion group by -1.
  static FiniteGroup klein4();
  /// {1, t}
  static FiniteGroup cyclic2();
  static FiniteGroup trivial();

  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return 0; }
  const std::string& label(int a) const { return labels_[a]; }
  int find(const std::string& label) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

/// The projection of the quaternion group onto klein4 (element indices).
int quaternion_to_klein(int g);

/// A free abelian group of finite rank with a right action of a finite
/// group: the row vector v maps to v * action[h].
struct GroupModule {
  std::string name;
  const FiniteGroup* group = nullptr;
  std::size_t rank = 0;
  std::vector<IntMatrix> action;
  std::vector<std::string> basis_labels;

  /// Sum of c_h * action[h] for a group-ring element c.
  IntMatrix ring_element(const std::vector<Integer>& c) const;
};

GroupModule regular_module(const FiniteGroup& g);

/// Z[Q] through a homomorphism g -> Q given by `hom` (indices into q).
GroupModule permutation_module(const FiniteGroup& g, const FiniteGroup& q, const std::vector<int>& hom,
                               std::string name);

GroupModule trivial_module(const FiniteGroup& g);

/// (1 - e)Z[G] for the quaternion group, e = -1 central; basis
/// (1 - e){1, i, j, k}. As a ring it is the Lipschitz order M'.
GroupModule lipschitz_module(const FiniteGroup& q8);

/// Z-linear map lipschitz_module -> regular_module sending (1 - e)t to
/// t - (-t); rows are images of basis vectors.
IntMatrix lipschitz_embedding(const FiniteGroup& q8);

}  // namespace quatprym

#endif
