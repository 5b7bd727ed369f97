#include "quatprym/linalg.hpp"

#include <cstdint>

namespace quatprym {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

namespace {

// row_a <- s*row_a + t*row_b ; row_b <- u*row_a + v*row_b (simultaneously)
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& u, const Integer& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer x = m(a, j);
    Integer y = m(b, j);
    m(a, j) = s * x + t * y;
    m(b, j) = u * x + v * y;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteForm hermite_form(const IntMatrix& input) {
  HermiteForm out;
  out.h = input;
  out.transform = IntMatrix::identity(input.rows());
  IntMatrix& h = out.h;
  IntMatrix& u = out.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    std::size_t p = r;
    while (p < h.rows() && h(p, c) == 0) ++p;
    if (p == h.rows()) continue;
    h.swap_rows(p, r);
    u.swap_rows(p, r);
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      Integer g, s, t;
      const Integer a = h(r, c);
      const Integer b = h(i, c);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer ua = -b / g;
      const Integer va = a / g;
      combine_rows(h, r, i, s, t, ua, va);
      combine_rows(u, r, i, s, t, ua, va);
    }
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      add_row_multiple(h, i, r, -q);
      add_row_multiple(u, i, r, -q);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

IntMatrix hermite_basis(const IntMatrix& m) {
  const auto hf = hermite_form(m);
  return hf.h.block(0, 0, hf.rank, m.cols());
}

IntMatrix integer_left_kernel(const IntMatrix& m) {
  const auto hf = hermite_form(m);
  return hf.transform.block(hf.rank, 0, m.rows() - hf.rank, m.rows());
}

IntMatrix integer_right_kernel(const IntMatrix& m) { return integer_left_kernel(m.transpose()); }

SmithForm smith_form(const IntMatrix& m) {
  SmithForm out;
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t bound = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < bound; ++t) {
    bool found_any = true;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
          if (a(i, j) == 0) continue;
          if (!found || abs(a(i, j)) < abs(a(pi, pj))) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        found_any = false;
        break;
      }
      a.swap_rows(t, pi);
      left.swap_rows(t, pi);
      a.swap_cols(t, pj);
      right.swap_cols(t, pj);

      bool residue = false;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        const Integer q = a(i, t) / a(t, t);  // truncating
        add_row_multiple(a, i, t, -q);
        add_row_multiple(left, i, t, -q);
        if (a(i, t) != 0) residue = true;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        const Integer q = a(t, j) / a(t, t);
        add_col_multiple(a, j, t, -q);
        add_col_multiple(right, j, t, -q);
        if (a(t, j) != 0) residue = true;
      }
      if (residue) continue;

      bool fixed = false;
      for (std::size_t i = t + 1; i < a.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a(i, j) % a(t, t) != 0) {
            add_row_multiple(a, t, i, 1);
            add_row_multiple(left, t, i, 1);
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (!found_any) break;
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(left, t);
    }
    out.divisors.push_back(a(t, t));
  }
  out.left = std::move(left);
  out.diag = std::move(a);
  out.right = std::move(right);
  return out;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  IntMatrix scaled(m.rows(), m.cols());
  Integer denom = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational x = m(i, j) * l;
      scaled(i, j) = x.get_num();
    }
    denom *= l;
  }
  Rational out(determinant(scaled), denom);
  out.canonicalize();
  return out;
}

IntMatrix clear_denominators(const RatMatrix& m, Integer* scale) {
  Integer l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational x = m(i, j) * l;
      out(i, j) = x.get_num();
    }
  if (scale) *scale = l;
  return out;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const auto inv = field_inverse(to_rational(m));
  if (!inv) throw std::invalid_argument("inverse_unimodular: singular matrix");
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral((*inv)(i, j))) throw std::invalid_argument("inverse_unimodular: not unimodular");
      out(i, j) = (*inv)(i, j).get_num();
    }
  return out;
}

namespace {

using Bits = std::vector<std::vector<std::uint8_t>>;

Bits reduce_mod2(const IntMatrix& m) {
  Bits b(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) b[i][j] = mpz_odd_p(m(i, j).get_mpz_t()) ? 1 : 0;
  return b;
}

// Reduced row echelon form over F_2, in place. Returns pivot columns.
std::vector<std::size_t> f2_rref(Bits& b, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < b.size(); ++c) {
    std::size_t p = r;
    while (p < b.size() && !b[p][c]) ++p;
    if (p == b.size()) continue;
    std::swap(b[p], b[r]);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i != r && b[i][c]) {
        for (std::size_t j = c; j < cols; ++j) b[i][j] ^= b[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t f2_rank(const IntMatrix& m) {
  Bits b = reduce_mod2(m);
  return f2_rref(b, m.cols()).size();
}

IntMatrix f2_nullspace(const IntMatrix& m) {
  Bits b = reduce_mod2(m);
  const auto pivots = f2_rref(b, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  IntMatrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Integer> v(m.cols(), Integer(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (b[k][free]) v[pivots[k]] = 1;
    }
    basis.append_row(v);
  }
  return basis;
}

}  // namespace quatprym
