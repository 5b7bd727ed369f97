#include "quatprym/homology.hpp"

#include <stdexcept>

#include "quatprym/quaternion.hpp"
#include "quatprym/zlattice.hpp"

namespace quatprym {

ChainComplex::ChainComplex(IntMatrix d2_, IntMatrix d1_, std::vector<std::string> l2, std::vector<std::string> l1,
                           std::vector<std::string> l0)
    : d2(std::move(d2_)), d1(std::move(d1_)), labels2(std::move(l2)), labels1(std::move(l1)), labels0(std::move(l0)) {
  if (d2.cols() != labels2.size() || d2.rows() != labels1.size() || d1.cols() != labels1.size() ||
      d1.rows() != labels0.size()) {
    throw std::invalid_argument("ChainComplex: shape mismatch");
  }
  if (!(d1 * d2).is_zero()) throw std::invalid_argument("ChainComplex: d1 * d2 != 0");
}

std::size_t ChainComplex::dim(int i) const {
  switch (i) {
    case 0: return labels0.size();
    case 1: return labels1.size();
    case 2: return labels2.size();
  }
  return 0;
}

std::size_t ChainComplex::row_of(const std::string& label) const {
  for (std::size_t r = 0; r < labels1.size(); ++r)
    if (labels1[r] == label) return r;
  throw std::invalid_argument("ChainComplex: no 1-cell '" + label + "'");
}

std::vector<std::string> surface_generator_names(int genus) {
  std::vector<std::string> out;
  for (int t = 1; t <= genus; ++t) {
    out.push_back("alpha" + std::to_string(t));
    out.push_back("beta" + std::to_string(t));
  }
  return out;
}

std::vector<std::vector<Integer>> fox_derivatives(int genus, const std::vector<int>& psi, const FiniteGroup& g) {
  if (genus < 1) throw std::invalid_argument("fox_derivatives: genus must be positive");
  if (static_cast<int>(psi.size()) != 2 * genus) throw std::invalid_argument("fox_derivatives: psi has wrong length");
  for (int x : psi)
    if (x < 0 || x >= g.size()) throw std::invalid_argument("fox_derivatives: psi value out of range");

  std::vector<std::vector<Integer>> d(2 * genus, std::vector<Integer>(g.size(), Integer(0)));
  int prefix = g.identity();
  // d(x)/dx = 1 and d(x^-1)/dx = -x^-1, applied along the word with the
  // image of the prefix read so far.
  auto letter = [&](int x, bool positive) {
    if (positive) {
      d[x][prefix] += 1;
      prefix = g.mul(prefix, psi[x]);
    } else {
      prefix = g.mul(prefix, g.inv(psi[x]));
      d[x][prefix] -= 1;
    }
  };
  for (int t = 0; t < genus; ++t) {
    const int a = 2 * t, b = 2 * t + 1;
    letter(a, true);
    letter(b, true);
    letter(a, false);
    letter(b, false);
  }
  if (prefix != g.identity()) throw std::invalid_argument("psi does not satisfy the surface relation");
  return d;
}

ChainComplex build_surface_complex(int genus, const std::vector<int>& psi, const GroupModule& module) {
  const FiniteGroup& g = *module.group;
  const auto fox = fox_derivatives(genus, psi, g);
  const std::size_t n = module.rank;
  const std::size_t gens = 2 * genus;
  IntMatrix d2(gens * n, n), d1(n, gens * n);
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t x = 0; x < gens; ++x) {
    const IntMatrix block2 = module.ring_element(fox[x]).transpose();
    const IntMatrix block1 = (module.action[psi[x]] - id).transpose();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        d2(x * n + r, c) = block2(r, c);
        d1(r, x * n + c) = block1(r, c);
      }
  }
  const auto names = surface_generator_names(genus);
  std::vector<std::string> l2, l1, l0;
  for (const auto& b : module.basis_labels) {
    l2.push_back(b + "⊗F");
    l0.push_back(b + "⊗v");
  }
  for (const auto& x : names)
    for (const auto& b : module.basis_labels) l1.push_back(b + "⊗" + x);
  return ChainComplex(std::move(d2), std::move(d1), std::move(l2), std::move(l1), std::move(l0));
}

std::string HomologyResult::to_string() const {
  std::string out = "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) out += " + Z/" + t.get_str();
  return out;
}

HomologyResult homology(const ChainComplex& c, int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("homology: degree must be 0, 1 or 2");
  auto rank_of = [](const IntMatrix& m) { return smith_form(m).divisors.size(); };
  const std::size_t rank_in = (i == 1) ? rank_of(c.d1) : (i == 2) ? rank_of(c.d2) : 0;
  HomologyResult out;
  std::size_t rank_out = 0;
  if (i < 2) {
    const auto snf = smith_form(i == 0 ? c.d1 : c.d2);
    rank_out = snf.divisors.size();
    for (const auto& d : snf.divisors)
      if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = c.dim(i) - rank_in - rank_out;
  return out;
}

Integer norm_kernel_count(int genus) {
  if (genus < 1) throw std::invalid_argument("norm_kernel_count: genus must be at least 1");
  static const FiniteGroup z2 = FiniteGroup::cyclic2();
  std::vector<int> psi(2 * genus, 0);
  psi[0] = 1;
  const GroupModule cover_coeffs = regular_module(z2);
  const GroupModule base_coeffs = trivial_module(z2);
  const auto cover = build_surface_complex(genus, psi, cover_coeffs);
  const auto base = build_surface_complex(genus, psi, base_coeffs);

  // Push-forward on 1-chains: augmentation Z[Z/2] -> Z on every cell.
  const std::size_t gens = 2 * genus;
  IntMatrix push(gens, 2 * gens);
  for (std::size_t x = 0; x < gens; ++x) {
    push(x, 2 * x) = 1;
    push(x, 2 * x + 1) = 1;
  }
  // w * y = 0 for all w in null(d2_base^T) iff y is a mod-2 boundary.
  const IntMatrix base_functionals = f2_nullspace(base.d2.transpose());
  const IntMatrix conditions = vstack(cover.d1, base_functionals * push);
  const std::size_t dim_s = f2_nullspace(conditions).rows();
  const std::size_t dim_b = f2_rank(cover.d2);
  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), 2, dim_s - dim_b);
  return count;
}

std::vector<int> normal_form_psi(int genus, const FiniteGroup& q8) {
  if (genus < 2) throw std::invalid_argument("normal_form_psi: genus must be at least 2");
  std::vector<int> psi(2 * genus, q8.identity());
  psi[0] = q8.find("i");
  psi[2] = q8.find("j");
  return psi;
}

// ---------------------------------------------------------------------------

namespace {

const FiniteGroup& q8_group() {
  static const FiniteGroup g = FiniteGroup::quaternion8();
  return g;
}

const FiniteGroup& klein_group() {
  static const FiniteGroup g = FiniteGroup::klein4();
  return g;
}

std::vector<int> klein_projection() {
  std::vector<int> hom;
  for (int x = 0; x < 8; ++x) hom.push_back(quaternion_to_klein(x));
  return hom;
}

// x_1 [1] + x_i [i] + x_j [j] + x_k [k] in Z[Q8] for a quaternion with
// integral coordinates x.
std::vector<Integer> group_ring_of(const Quaternion& q) {
  std::vector<Integer> c(8, Integer(0));
  const auto cs = q.coords();
  for (int t = 0; t < 4; ++t) {
    if (!is_integral(cs[t])) throw std::invalid_argument("group_ring_of: non-integral");
    c[2 * t] = cs[t].get_num();
  }
  return c;
}

// A 1-chain with M' coefficients: one quaternion per 1-cell, coordinates in
// the module basis (1-e){1,i,j,k}.
std::vector<Rational> lipschitz_chain(const std::vector<Quaternion>& coeffs) {
  std::vector<Rational> y;
  for (const auto& q : coeffs) {
    const auto cs = q.coords();
    y.insert(y.end(), cs.begin(), cs.end());
  }
  return y;
}

}  // namespace

VerificationReport verify_prym_basis() {
  VerificationReport rep;
  rep.suite = "homology";
  const FiniteGroup& g = q8_group();
  const GroupModule mp = lipschitz_module(g);
  const auto c = build_surface_complex(2, normal_form_psi(2, g), mp);
  const Quaternion one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j();

  // Cells alpha1, beta1, alpha2, beta2 (also written alpha, beta, gamma, delta).
  auto lambda = [&](const Quaternion& b, int which) {
    std::vector<Quaternion> coeffs(4);
    if (which == 1) {
      coeffs[0] = b * (i + one);
      coeffs[2] = -(b * (j + one));
    } else {
      coeffs[1] = b;
    }
    return lipschitz_chain(coeffs);
  };
  const RatMatrix d1 = to_rational(c.d1);
  auto is_cycle = [&](const std::vector<Rational>& y) {
    for (std::size_t r = 0; r < d1.rows(); ++r) {
      Rational s = 0;
      for (std::size_t k = 0; k < y.size(); ++k) s += d1(r, k) * y[k];
      if (sgn(s) != 0) return false;
    }
    return true;
  };

  rep.run("homology.prym_basis.cycles", "homology/prym-basis", [&] {
    const bool c1 = is_cycle(lambda(one, 1)), c2 = is_cycle(lambda(one, 2));
    return outcome(c1 && c2, std::string("d1(lambda1) ") + (c1 ? "= 0" : "!= 0") + ", d1(lambda2) " +
                                 (c2 ? "= 0" : "!= 0"));
  });

  rep.run("homology.prym_basis.span", "homology/prym-basis", [&] {
    // H1 / torsion is the image of the cycles in C1 / (boundaries (x) Q).
    const RatMatrix ann = annihilator(to_rational(c.d2.transpose()), c.dim(1));
    const ZLattice cycles(c.dim(1), to_rational(integer_right_kernel(c.d1)));
    const ZLattice h1 = cycles.image(ann);
    RatMatrix gens(0, c.dim(1));
    for (const auto& b : order_basis(OrderName::Hurwitz_M))
      for (int which : {1, 2}) gens.append_row(lambda(b, which));
    const ZLattice span = ZLattice(c.dim(1), gens).image(ann);
    return outcome(h1.rank() == 8 && span == h1,
                   "H1/torsion has rank " + std::to_string(h1.rank()) + "; M-span of lambda1, lambda2 " +
                       (span == h1 ? "equals it" : "differs (rank " + std::to_string(span.rank()) + ")"));
  });
  return rep;
}

VerificationReport verify_homology(int genus) {
  if (genus < 2) throw std::invalid_argument("verify_homology: genus must be at least 2");
  VerificationReport rep;
  rep.suite = "homology";
  const FiniteGroup& g = q8_group();
  const GroupModule zg = regular_module(g);
  const GroupModule zv4 = permutation_module(g, klein_group(), klein_projection(), "ZV4");
  const GroupModule z = trivial_module(g);
  const GroupModule mp = lipschitz_module(g);
  const Quaternion one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j();

  rep.run("homology.fox.boundary2", "homology/chain-complex", [&] {
    const auto fox = fox_derivatives(2, normal_form_psi(2, g), g);
    const std::vector<Integer> zero(8, Integer(0));
    const bool ok = fox[0] == zero && fox[1] == group_ring_of(i - one) && fox[2] == zero &&
                    fox[3] == group_ring_of(j - one);
    return outcome(ok, "d2(F) = (i-1)beta + (j-1)delta at genus 2 with alpha1 -> i, alpha2 -> j");
  });

  rep.run("homology.fox.boundary1", "homology/chain-complex", [&] {
    const auto c = build_surface_complex(2, normal_form_psi(2, g), zg);
    const IntMatrix expected_alpha = zg.ring_element(group_ring_of(i - one)).transpose();
    bool alpha_ok = true, beta_ok = true;
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t k = 0; k < 8; ++k) {
        alpha_ok = alpha_ok && c.d1(r, k) == expected_alpha(r, k);
        beta_ok = beta_ok && c.d1(r, 8 + k) == 0;
      }
    return outcome(alpha_ok && beta_ok, "d1(alpha) = (i-1)v, d1(beta) = 0 over ZG");
  });

  rep.run("homology.trivial.zero", "homology/chain-complex", [&] {
    const auto c = build_surface_complex(2, normal_form_psi(2, g), z);
    return outcome(c.d2.is_zero() && c.d1.is_zero(), "trivial coefficients give d2 = 0 and d1 = 0");
  });

  const auto psi = normal_form_psi(genus, g);
  const auto czg = build_surface_complex(genus, psi, zg);
  const auto cv4 = build_surface_complex(genus, psi, zv4);
  const std::string gs = "genus " + std::to_string(genus);

  rep.run("homology.h0.zg", "homology/ranks", [&] {
    const auto h = homology(czg, 0);
    return outcome(h.free_rank == 1 && h.torsion.empty(), "H0 over ZG = " + h.to_string() + " (" + gs + ")");
  });

  rep.run("homology.h1.zg", "homology/ranks", [&] {
    const auto h = homology(czg, 1);
    const std::size_t want = 2 * (8 * genus - 7);
    return outcome(h.free_rank == want && h.torsion.empty(),
                   "H1 over ZG = " + h.to_string() + ", expected Z^" + std::to_string(want) + " (" + gs + ")");
  });

  rep.run("homology.h1.zv4", "homology/ranks", [&] {
    const auto h = homology(cv4, 1);
    const std::size_t want = 2 * (4 * genus - 3);
    return outcome(h.free_rank == want && h.torsion.empty(),
                   "H1 over ZV4 = " + h.to_string() + ", expected Z^" + std::to_string(want) + " (" + gs + ")");
  });

  rep.run("homology.h1.mprime", "homology/torsion", [&] {
    const auto c = build_surface_complex(2, normal_form_psi(2, g), mp);
    const auto h = homology(c, 1);
    const bool ok = h.free_rank == 8 && h.torsion == std::vector<Integer>{2};
    return outcome(ok, "H1 over M' = " + h.to_string() + " (genus 2)");
  });

  rep.run("homology.euler", "homology/ranks", [&] {
    long alt = 0;
    for (int d = 0; d <= 2; ++d) {
      const long r = static_cast<long>(homology(czg, d).free_rank);
      alt += (d % 2 == 0) ? r : -r;
    }
    const long cells = static_cast<long>(czg.dim(0)) - static_cast<long>(czg.dim(1)) + static_cast<long>(czg.dim(2));
    const long want = 8L * (2 - 2L * genus);
    return outcome(alt == want && cells == want, "chi = " + std::to_string(cells) + " from cells, " +
                                                     std::to_string(alt) + " from homology, |G|(2-2g) = " +
                                                     std::to_string(want));
  });

  rep.run("homology.mprime.embedding", "homology/chain-complex", [&] {
    const IntMatrix e = lipschitz_embedding(g);
    bool ok = true;
    for (int h = 0; h < g.size(); ++h) ok = ok && (mp.action[h] * e == e * zg.action[h]);
    return outcome(ok, "(1-e){1,i,j,k} -> ZG commutes with the right G-action");
  });

  rep.append(verify_prym_basis());

  std::vector<int> genera = {1, 2, 3};
  if (genus > 3) genera.push_back(genus);
  for (int gg : genera) {
    rep.run("homology.norm_kernel.g" + std::to_string(gg), "homology/norm-kernel", [gg] {
      const Integer count = norm_kernel_count(gg);
      Integer want;
      mpz_ui_pow_ui(want.get_mpz_t(), 2, 2 * gg - 1);
      return outcome(count == want, "kernel size " + count.get_str() + ", 2^(2g-1) = " + want.get_str());
    });
  }
  return rep;
}

}  // namespace quatprym
