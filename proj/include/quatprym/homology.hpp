#ifndef QUATPRYM_HOMOLOGY_HPP
#define QUATPRYM_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "quatprym/finite_group.hpp"
#include "quatprym/linalg.hpp"
#include "quatprym/report.hpp"

namespace quatprym {

/// 0 -> C2 -> C1 -> C0 -> 0 with column-vector boundary matrices:
/// d2 is dim C1 x dim C2 and d1 is dim C0 x dim C1.
struct ChainComplex {
  IntMatrix d2, d1;
  std::vector<std::string> labels2, labels1, labels0;

  ChainComplex(IntMatrix d2_, IntMatrix d1_, std::vector<std::string> l2, std::vector<std::string> l1,
               std::vector<std::string> l0);

  std::size_t dim(int i) const;
  std::size_t row_of(const std::string& label) const;  // index into labels1
};

/// Generator order alpha1, beta1, ..., alpha_g, beta_g; psi gives the image
/// of each in the module's group.
std::vector<std::string> surface_generator_names(int genus);

/// Cellular chains of the cover of a genus-g surface given by psi, with
/// coefficients in `module`. One 2-cell F, 2g 1-cells, one 0-cell v. Cell
/// labels are "<module basis>⊗<cell>". Throws if psi does not kill the
/// surface relation.
ChainComplex build_surface_complex(int genus, const std::vector<int>& psi, const GroupModule& module);

/// Specialized Fox derivatives of prod [alpha_i, beta_i], one group-ring
/// element (coefficient vector over group indices) per generator.
std::vector<std::vector<Integer>> fox_derivatives(int genus, const std::vector<int>& psi, const FiniteGroup& g);

struct HomologyResult {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // elementary divisors > 1
  std::string to_string() const;
};

HomologyResult homology(const ChainComplex& c, int i);

/// Size of the kernel of H1(cover, F2) -> H1(base, F2) for the connected
/// unramified double cover of a genus-g surface.
Integer norm_kernel_count(int genus);

/// alpha1 -> i, alpha2 -> j, everything else -> 1 (needs genus >= 2).
std::vector<int> normal_form_psi(int genus, const FiniteGroup& q8);

VerificationReport verify_prym_basis();
VerificationReport verify_homology(int genus);

}  // namespace quatprym

#endif
