#ifndef QUATPRYM_LINALG_HPP
#define QUATPRYM_LINALG_HPP

#include <optional>
#include <vector>

#include "quatprym/matrix.hpp"

namespace quatprym {

// ---------------------------------------------------------------------------
// Integer linear algebra

/// Row Hermite normal form: transform * input == h, transform unimodular.
/// The first `rank` rows of h are nonzero, in echelon form with positive
/// pivots, and entries above each pivot are reduced into [0, pivot).
struct HermiteForm {
  IntMatrix h;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

HermiteForm hermite_form(const IntMatrix& m);

/// Nonzero rows of the row Hermite form; canonical for the row lattice.
IntMatrix hermite_basis(const IntMatrix& m);

/// Basis (as rows) of {x integral : x * m == 0}. The basis is saturated.
IntMatrix integer_left_kernel(const IntMatrix& m);

/// Basis (as rows) of {x integral : m * x == 0}.
IntMatrix integer_right_kernel(const IntMatrix& m);

/// left * m * right == diag; diag has elementary divisors d_1 | d_2 | ...
/// on its leading diagonal (all positive), zeros elsewhere.
struct SmithForm {
  IntMatrix left;
  IntMatrix diag;
  IntMatrix right;
  std::vector<Integer> divisors;  // the nonzero diagonal entries
};

SmithForm smith_form(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Multiplies by the lcm of all denominators; `scale` receives that lcm.
IntMatrix clear_denominators(const RatMatrix& m, Integer* scale = nullptr);

IntMatrix inverse_unimodular(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Linear algebra over a field. T needs +, -, *, /, == and is_zero(T).

template <typename T>
struct RowEchelon {
  Matrix<T> reduced;  // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
};

template <typename T>
RowEchelon<T> row_reduce(Matrix<T> a) {
  RowEchelon<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    const T inv = T(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const T f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

template <typename T>
std::size_t field_rank(const Matrix<T>& a) {
  return row_reduce(a).pivot_cols.size();
}

/// Basis (as rows) of the right nullspace {x : a * x == 0}.
template <typename T>
Matrix<T> field_nullspace(const Matrix<T>& a) {
  const auto ech = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  Matrix<T> basis(0, a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(a.cols(), T(0));
    v[free] = T(1);
    for (std::size_t k = 0; k < ech.pivot_cols.size(); ++k) {
      v[ech.pivot_cols[k]] = T(0) - ech.reduced(k, free);
    }
    basis.append_row(v);
  }
  return basis;
}

/// Solves a * x == b. Returns nullopt when inconsistent; picks the solution
/// with free variables set to zero otherwise.
template <typename T>
std::optional<std::vector<T>> field_solve(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("field_solve: size mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto ech = row_reduce(aug);
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols(), T(0));
  for (std::size_t k = 0; k < ech.pivot_cols.size(); ++k) {
    x[ech.pivot_cols[k]] = ech.reduced(k, a.cols());
  }
  return x;
}

template <typename T>
std::optional<Matrix<T>> field_inverse(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("field_inverse: not square");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = T(1);
  }
  const auto ech = row_reduce(aug);
  if (ech.pivot_cols.size() < n || ech.pivot_cols[n - 1] != n - 1) return std::nullopt;
  return ech.reduced.block(0, n, n, n);
}

// ---------------------------------------------------------------------------
// Linear algebra over F_2 (entries are reduced mod 2 on entry).

std::size_t f2_rank(const IntMatrix& m);

/// Basis (as rows, entries 0/1) of the right nullspace over F_2.
IntMatrix f2_nullspace(const IntMatrix& m);

}  // namespace quatprym

#endif
