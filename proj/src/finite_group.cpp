#include "quatprym/finite_group.hpp"

#include <stdexcept>

#include "quatprym/quaternion.hpp"

namespace quatprym {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> labels, std::vector<std::vector<int>> table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
  const int n = size();
  if (n == 0 || static_cast<int>(table_.size()) != n) throw std::invalid_argument("FiniteGroup: bad table size");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("FiniteGroup: ragged table");
    for (int x : row)
      if (x < 0 || x >= n) throw std::invalid_argument("FiniteGroup: entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a) throw std::invalid_argument("FiniteGroup: element 0 is not neutral");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw std::invalid_argument("FiniteGroup: not associative");
        }
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) inverse_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0) throw std::invalid_argument("FiniteGroup: missing inverse");
}

int FiniteGroup::find(const std::string& label) const {
  for (int a = 0; a < size(); ++a)
    if (labels_[a] == label) return a;
  throw std::invalid_argument("FiniteGroup::find: no element '" + label + "' in " + name_);
}

FiniteGroup FiniteGroup::quaternion8() {
  const std::vector<Quaternion> elems = {Quaternion::one(), -Quaternion::one(), Quaternion::i(), -Quaternion::i(),
                                         Quaternion::j(),   -Quaternion::j(),   Quaternion::k(), -Quaternion::k()};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const Quaternion p = elems[a] * elems[b];
      int idx = 0;
      while (elems[idx] != p) ++idx;
      table[a][b] = idx;
    }
  return FiniteGroup("Q8", {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, table);
}

FiniteGroup FiniteGroup::klein4() {
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) table[a][b] = a ^ b;
  // Bit 0 is the image of i, bit 1 the image of j.
  return FiniteGroup("V4", {"1", "ibar", "jbar", "kbar"}, table);
}

FiniteGroup FiniteGroup::cyclic2() { return FiniteGroup("Z2", {"1", "t"}, {{0, 1}, {1, 0}}); }

FiniteGroup FiniteGroup::trivial() { return FiniteGroup("1", {"1"}, {{0}}); }

int quaternion_to_klein(int g) {
  // {1,-1} -> 1, {i,-i} -> ibar, {j,-j} -> jbar, {k,-k} -> kbar
  static const int image[] = {0, 0, 1, 1, 2, 2, 3, 3};
  return image[g];
}

IntMatrix GroupModule::ring_element(const std::vector<Integer>& c) const {
  IntMatrix out(rank, rank);
  for (std::size_t h = 0; h < c.size(); ++h) {
    if (c[h] == 0) continue;
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t s = 0; s < rank; ++s) out(r, s) += c[h] * action[h](r, s);
  }
  return out;
}

GroupModule regular_module(const FiniteGroup& g) {
  GroupModule m;
  m.name = "Z" + g.name();
  m.group = &g;
  m.rank = g.size();
  for (int h = 0; h < g.size(); ++h) {
    IntMatrix a(m.rank, m.rank);
    for (int x = 0; x < g.size(); ++x) a(x, g.mul(x, h)) = 1;
    m.action.push_back(a);
  }
  for (int x = 0; x < g.size(); ++x) m.basis_labels.push_back(g.label(x));
  return m;
}

GroupModule permutation_module(const FiniteGroup& g, const FiniteGroup& q, const std::vector<int>& hom,
                               std::string name) {
  if (static_cast<int>(hom.size()) != g.size()) throw std::invalid_argument("permutation_module: bad homomorphism");
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      if (hom[g.mul(a, b)] != q.mul(hom[a], hom[b])) {
        throw std::invalid_argument("permutation_module: not a homomorphism");
      }
  GroupModule m;
  m.name = std::move(name);
  m.group = &g;
  m.rank = q.size();
  for (int h = 0; h < g.size(); ++h) {
    IntMatrix a(m.rank, m.rank);
    for (int x = 0; x < q.size(); ++x) a(x, q.mul(x, hom[h])) = 1;
    m.action.push_back(a);
  }
  for (int x = 0; x < q.size(); ++x) m.basis_labels.push_back(q.label(x));
  return m;
}

GroupModule trivial_module(const FiniteGroup& g) {
  static const FiniteGroup one = FiniteGroup::trivial();
  return permutation_module(g, one, std::vector<int>(g.size(), 0), "Z");
}

GroupModule lipschitz_module(const FiniteGroup& q8) {
  // Basis b_t = (1-e)t for t in {1,i,j,k} (group indices 0,2,4,6). Then
  // b_t * h = (1-e)(t h), and t h = +-t', with (1-e)(-t') = -b_t'.
  GroupModule m;
  m.name = "M'";
  m.group = &q8;
  m.rank = 4;
  for (int h = 0; h < q8.size(); ++h) {
    IntMatrix a(4, 4);
    for (int t = 0; t < 4; ++t) {
      const int prod = q8.mul(2 * t, h);
      a(t, prod / 2) = (prod % 2 == 0) ? 1 : -1;
    }
    m.action.push_back(a);
  }
  m.basis_labels = {"1", "i", "j", "k"};
  return m;
}

IntMatrix lipschitz_embedding(const FiniteGroup& q8) {
  IntMatrix e(4, q8.size());
  for (int t = 0; t < 4; ++t) {
    e(t, 2 * t) = 1;
    e(t, 2 * t + 1) = -1;
  }
  return e;
}

}  // namespace quatprym
