#include "quatprym/tower.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "quatprym/finite_group.hpp"

namespace quatprym {

TowerSpec TowerSpec::parse(const std::string& text) {
  static const std::regex re(R"(^(\d+):(\d+)\.(\d+)\.(\d+)\.(\d+)$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) {
    throw std::invalid_argument("tower spec must look like g:a'.ai.aj.ak, got '" + text + "'");
  }
  TowerSpec s;
  s.g = std::stoi(m[1]);
  s.a_prime = std::stoi(m[2]);
  s.a_i = std::stoi(m[3]);
  s.a_j = std::stoi(m[4]);
  s.a_k = std::stoi(m[5]);
  return s;
}

std::string TowerSpec::to_string() const {
  std::ostringstream os;
  os << g << ":" << a_prime << "." << a_i << "." << a_j << "." << a_k;
  return os.str();
}

TowerInvariants tower_invariants(const TowerSpec& s) {
  if (s.g < 0 || s.a_prime < 0 || s.a_i < 0 || s.a_j < 0 || s.a_k < 0) {
    throw std::invalid_argument("tower_invariants: negative entry in " + s.to_string());
  }
  TowerInvariants t;
  const int a = s.a();
  t.g_pm = 4 * s.g - 3 + a - s.a_prime;
  t.g_tilde = 8 * s.g - 7 + 3 * a - s.a_prime;
  t.dim_P = 4 * (s.g - 1) + 2 * a;
  t.dim_M = 3 * s.g - 3 + a;
  const int n = t.dim_P / 2;
  t.dim_Shim = n * (n - 1) / 2;
  if (t.g_pm < 0 || t.g_tilde < 0 || t.dim_P < 0 || t.dim_M < 0) {
    throw std::invalid_argument("tower_invariants: negative genus or dimension for " + s.to_string());
  }
  return t;
}

namespace {

bool dimension_ok(int g, int a) {
  const int n = 2 * g - 2 + a;
  return n >= 2 && 3 * g - 3 + a >= n * (n - 1) / 2;
}

// n = 2g - 2 + a <= 4 forces g <= 3.
constexpr int kMaxGenus = 3;
constexpr int kMaxBranch = 4;

template <typename Keep>
std::vector<TowerSpec> scan(Keep keep) {
  std::vector<TowerSpec> out;
  for (int g = 0; g <= kMaxGenus; ++g)
    for (int a = 0; a <= kMaxBranch; ++a) {
      if (!dimension_ok(g, a)) continue;
      for (int ai = a; ai >= 0; --ai)
        for (int aj = std::min(ai, a - ai); aj >= 0; --aj) {
          const int ak = a - ai - aj;
          if (ak > aj) continue;
          TowerSpec s{g, 0, ai, aj, ak};
          if (keep(s)) out.push_back(s);
        }
    }
  return out;
}

}  // namespace

std::vector<std::pair<int, int>> dimension_candidates() {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; g <= kMaxGenus; ++g)
    for (int a = 0; a <= kMaxBranch; ++a)
      if (dimension_ok(g, a)) out.emplace_back(g, a);
  return out;
}

std::vector<TowerSpec> enumerate_unfiltered() {
  return scan([](const TowerSpec&) { return true; });
}

std::vector<TowerSpec> enumerate_admissible() {
  return scan([](const TowerSpec& s) {
    const int kinds = (s.a_i > 0) + (s.a_j > 0) + (s.a_k > 0);
    return s.same_parity() && (s.g >= 1 || kinds >= 2);
  });
}

// ---------------------------------------------------------------------------

std::vector<std::vector<unsigned>> all_subgroups(int k) {
  if (k < 0 || k > 8) throw std::invalid_argument("all_subgroups: k out of range");
  // Close every set of generators; collect distinct results.
  std::set<std::vector<unsigned>> found;
  std::vector<std::vector<unsigned>> frontier = {{0}};
  found.insert({0});
  const unsigned n = 1u << k;
  while (!frontier.empty()) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& h : frontier) {
      for (unsigned x = 1; x < n; ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        std::vector<unsigned> bigger = h;
        for (unsigned y : h) bigger.push_back(y ^ x);
        std::sort(bigger.begin(), bigger.end());
        if (found.insert(bigger).second) next.push_back(bigger);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<unsigned>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() > y.size(); });
  return out;
}

std::vector<QuotientGenus> abelian_quotient_genera(const AbelianCoverSpec& spec) {
  unsigned total = 0;
  for (unsigned e : spec.inertia) {
    if (e == 0 || e >= (1u << spec.k)) throw std::invalid_argument("inertia element must be nonzero and in range");
    total ^= e;
  }
  if (total != 0) throw std::invalid_argument("inertia elements do not sum to zero");

  std::vector<QuotientGenus> out;
  for (const auto& h : all_subgroups(spec.k)) {
    int level = 0;
    while ((1u << (spec.k - level)) > h.size()) ++level;
    const int q = 1 << level;
    // 2g - 2 = -2|Q| + sum |Q|(1 - 1/e), e = 2 unless the inertia lies in H.
    int ramified = 0;
    for (unsigned e : spec.inertia)
      if (!std::binary_search(h.begin(), h.end(), e)) ++ramified;
    const int twice_g_minus_2 = -2 * q + ramified * q / 2;
    out.push_back({h, level, twice_g_minus_2 / 2 + 1});
  }
  return out;
}

std::map<int, std::map<int, int>> level_table(const std::vector<QuotientGenus>& q) {
  std::map<int, std::map<int, int>> out;
  for (const auto& x : q) ++out[x.level][x.genus];
  return out;
}

AbelianCoverSpec five_point_cover() { return {4, {1, 2, 4, 8, 15}}; }

AbelianCoverSpec three_pair_cover() { return {3, {1, 1, 2, 2, 4, 4}}; }

// ---------------------------------------------------------------------------

namespace {

struct Letter {
  int gen;
  bool positive;
};
using Word = std::vector<Letter>;

int evaluate(const Word& w, const std::array<int, 4>& psi, const FiniteGroup& g) {
  int x = g.identity();
  for (const auto& l : w) x = g.mul(x, l.positive ? psi[l.gen] : g.inv(psi[l.gen]));
  return x;
}

Word inverse_word(Word w) {
  std::reverse(w.begin(), w.end());
  for (auto& l : w) l.positive = !l.positive;
  return w;
}

// Reidemeister-Schreier generators of ker(psi_pm), psi_pm: pi1 -> V4.
std::vector<Word> schreier_generators(const std::array<int, 4>& psi_pm, const FiniteGroup& v4) {
  std::map<int, Word> transversal;
  transversal[0] = {};
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (int x = 0; x < 4; ++x) {
      const int next = v4.mul(c, psi_pm[x]);
      if (transversal.count(next)) continue;
      Word w = transversal[c];
      w.push_back({x, true});
      transversal[next] = w;
      queue.push_back(next);
    }
  }
  std::vector<Word> gens;
  for (const auto& [c, t] : transversal)
    for (int x = 0; x < 4; ++x) {
      Word w = t;
      w.push_back({x, true});
      const Word back = inverse_word(transversal.at(v4.mul(c, psi_pm[x])));
      w.insert(w.end(), back.begin(), back.end());
      gens.push_back(w);
    }
  return gens;
}

}  // namespace

LiftCount count_quaternion_lifts(const std::array<int, 4>& psi_pm) {
  static const FiniteGroup q8 = FiniteGroup::quaternion8();
  static const FiniteGroup v4 = FiniteGroup::klein4();
  for (int v : psi_pm)
    if (v < 0 || v >= 4) throw std::invalid_argument("count_quaternion_lifts: value outside V4");

  // Lifts of v are the group elements 2v and 2v+1 (t and -t).
  std::vector<std::array<int, 4>> lifts;
  for (unsigned signs = 0; signs < 16; ++signs) {
    std::array<int, 4> psi;
    for (int x = 0; x < 4; ++x) psi[x] = 2 * psi_pm[x] + (signs >> x & 1);
    const Word relation = {{0, true}, {1, true}, {0, false}, {1, false},
                           {2, true}, {3, true}, {2, false}, {3, false}};
    if (evaluate(relation, psi, q8) == q8.identity()) lifts.push_back(psi);
  }

  LiftCount out;
  out.lifts = static_cast<int>(lifts.size());
  if (lifts.empty()) return out;

  // Two lifts give the same double cover of C_pm iff they agree on ker psi_pm.
  const auto gens = schreier_generators(psi_pm, v4);
  std::map<std::vector<int>, std::vector<std::array<int, 4>>> by_cover;
  for (const auto& psi : lifts) {
    std::vector<int> character;
    for (const auto& w : gens) {
      const int value = evaluate(w, psi, q8);
      if (value != 0 && value != 1) throw std::logic_error("lift does not map ker psi_pm into {+-1}");
      character.push_back(value);
    }
    by_cover[character].push_back(psi);
  }
  out.distinct_covers = static_cast<int>(by_cover.size());

  std::set<std::size_t> sizes, orbit_counts;
  for (const auto& [character, members] : by_cover) {
    sizes.insert(members.size());
    std::set<std::array<int, 4>> seen;
    std::size_t orbits = 0;
    for (const auto& psi : members) {
      if (seen.count(psi)) continue;
      ++orbits;
      for (int h = 0; h < q8.size(); ++h) {
        std::array<int, 4> conj;
        for (int x = 0; x < 4; ++x) conj[x] = q8.mul(q8.mul(h, psi[x]), q8.inv(h));
        seen.insert(conj);
      }
    }
    orbit_counts.insert(orbits);
  }
  out.actions_per_cover = sizes.size() == 1 ? static_cast<int>(*sizes.begin()) : 0;
  out.conjugation_orbits_per_cover = orbit_counts.size() == 1 ? static_cast<int>(*orbit_counts.begin()) : 0;

  std::set<std::array<int, 4>> all(lifts.begin(), lifts.end()), twisted;
  for (unsigned chi = 0; chi < 16; ++chi) {
    std::array<int, 4> psi = lifts.front();
    for (int x = 0; x < 4; ++x)
      if (chi >> x & 1) psi[x] = q8.mul(psi[x], 1);  // times -1
    twisted.insert(psi);
  }
  out.torsor = (all == twisted);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string table_string(const std::map<int, std::map<int, int>>& t) {
  std::ostringstream os;
  bool first_level = true;
  for (const auto& [level, genera] : t) {
    if (level == 0) continue;
    os << (first_level ? "" : "; ") << "level " << level << ":";
    first_level = false;
    for (const auto& [genus, count] : genera) os << " " << count << "xg" << genus;
  }
  return os.str();
}

std::string lift_string(const LiftCount& c) {
  return "lifts " + std::to_string(c.lifts) + ", covers " + std::to_string(c.distinct_covers) + ", actions/cover " +
         std::to_string(c.actions_per_cover) + ", conjugation orbits/cover " +
         std::to_string(c.conjugation_orbits_per_cover);
}

}  // namespace

VerificationReport verify_tower(const std::vector<TowerSpec>& extra_specs) {
  VerificationReport rep;
  rep.suite = "tower";

  struct Row {
    TowerSpec spec;
    int dim_P, dim_M, dim_Shim;
  };
  const std::vector<Row> table = {{{0, 0, 2, 2, 0}, 4, 1, 1},
                                  {{1, 0, 2, 0, 0}, 4, 2, 1},
                                  {{2, 0, 0, 0, 0}, 4, 3, 1},
                                  {{1, 0, 1, 1, 1}, 6, 3, 3},
                                  {{3, 0, 0, 0, 0}, 8, 6, 6}};

  rep.run("tower.invariants.genus2", "tower/riemann-hurwitz", [] {
    const auto t = tower_invariants({2, 0, 0, 0, 0});
    return outcome(t.g_pm == 5 && t.g_tilde == 9,
                   "(2;0,0,0,0): g(C+-) = " + std::to_string(t.g_pm) + ", g(C~) = " + std::to_string(t.g_tilde));
  });

  rep.run("tower.invariants.table", "tower/cases", [&] {
    std::ostringstream os;
    bool ok = true;
    for (const auto& r : table) {
      const auto t = tower_invariants(r.spec);
      const bool row_ok = t.dim_P == r.dim_P && t.dim_M == r.dim_M && t.dim_Shim == r.dim_Shim;
      ok = ok && row_ok;
      os << (os.tellp() > 0 ? "; " : "") << r.spec.to_string() << " -> (" << t.dim_P << "," << t.dim_M << "," << t.dim_Shim << ")"
         << (row_ok ? "" : " MISMATCH");
    }
    return outcome(ok, os.str());
  });

  rep.run("tower.types", "tower/cases", [] {
    const auto c = dimension_candidates();
    const std::vector<std::pair<int, int>> want = {{0, 4}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {3, 0}};
    std::ostringstream os;
    for (const auto& [g, a] : c) os << "(" << g << "," << a << ")";
    return outcome(c == want, "dimension-admissible (g,a): " + os.str());
  });

  rep.run("tower.admissible", "tower/cases", [&] {
    const auto adm = enumerate_admissible();
    bool ok = adm.size() == table.size();
    for (const auto& r : table)
      ok = ok && std::find(adm.begin(), adm.end(), r.spec) != adm.end();
    std::ostringstream os;
    for (const auto& s : adm) os << (os.tellp() > 0 ? " " : "") << s.to_string();
    return outcome(ok, std::to_string(adm.size()) + " admissible: " + os.str());
  });

  rep.run("tower.admissible.parity_exclusion", "tower/parity", [] {
    const TowerSpec s{1, 0, 3, 0, 0};
    const auto unf = enumerate_unfiltered();
    const auto adm = enumerate_admissible();
    const bool scanned = std::find(unf.begin(), unf.end(), s) != unf.end();
    const bool excluded = std::find(adm.begin(), adm.end(), s) == adm.end();
    return outcome(scanned && excluded && !s.same_parity(), "1:0.3.0.0 passes the dimension test and fails parity");
  });

  rep.run("tower.admissible.generation", "tower/cases", [] {
    const TowerSpec s{0, 0, 4, 0, 0};
    const auto adm = enumerate_admissible();
    const bool excluded = std::find(adm.begin(), adm.end(), s) == adm.end();
    return outcome(excluded && s.same_parity(),
                   "0:0.4.0.0 has equal parity but its monodromy cannot reach V4; excluded");
  });

  for (const auto& s : extra_specs) {
    rep.run("tower.invariants.requested", "tower/riemann-hurwitz", [s] {
      const auto t = tower_invariants(s);
      std::ostringstream os;
      os << s.to_string() << ": g(C+-) " << t.g_pm << ", g(C~) " << t.g_tilde << ", dim P " << t.dim_P
         << ", dim M " << t.dim_M << ", dim Shim " << t.dim_Shim << (s.same_parity() ? "" : " (parity fails)");
      return outcome(t.dim_P % 2 == 0, os.str());
    });
  }

  rep.data["admissible"] = nlohmann::ordered_json::array();
  for (const auto& s : enumerate_admissible()) {
    const auto t = tower_invariants(s);
    rep.data["admissible"].push_back({{"spec", s.to_string()},
                                      {"g_pm", t.g_pm},
                                      {"g_tilde", t.g_tilde},
                                      {"dim_P", t.dim_P},
                                      {"dim_M", t.dim_M},
                                      {"dim_Shim", t.dim_Shim}});
  }
  for (const auto& [name, spec] : {std::pair{"five_point", five_point_cover()}, std::pair{"three_pair", three_pair_cover()}}) {
    nlohmann::ordered_json levels = nlohmann::ordered_json::object();
    for (const auto& [level, genera] : level_table(abelian_quotient_genera(spec))) {
      nlohmann::ordered_json row = nlohmann::ordered_json::object();
      for (const auto& [genus, count] : genera) row["genus " + std::to_string(genus)] = count;
      levels["level " + std::to_string(level)] = row;
    }
    rep.data["quotients"][name] = levels;
  }

  rep.run("tower.quotients.five_point", "tower/quotient-table", [] {
    const auto t = level_table(abelian_quotient_genera(five_point_cover()));
    const std::map<int, std::map<int, int>> want = {
        {0, {{0, 1}}}, {1, {{0, 10}, {1, 5}}}, {2, {{0, 10}, {1, 15}, {2, 10}}}, {3, {{1, 5}, {3, 10}}}, {4, {{5, 1}}}};
    return outcome(t == want, table_string(t));
  });

  rep.run("tower.quotients.three_pair", "tower/quotient-table", [] {
    const auto t = level_table(abelian_quotient_genera(three_pair_cover()));
    const std::map<int, std::map<int, int>> want = {
        {0, {{0, 1}}}, {1, {{0, 3}, {1, 3}, {2, 1}}}, {2, {{1, 3}, {3, 4}}}, {3, {{5, 1}}}};
    return outcome(t == want, table_string(t));
  });

  rep.run("tower.quotients.character_sum", "tower/quotient-table", [] {
    // g(X/H) equals the sum of g(X/K) over index-2 subgroups K containing H.
    bool ok = true;
    std::size_t checked = 0;
    for (const auto& spec : {five_point_cover(), three_pair_cover()}) {
      const auto q = abelian_quotient_genera(spec);
      for (const auto& x : q) {
        int sum = 0;
        for (const auto& y : q) {
          if (y.level != 1) continue;
          if (std::includes(y.subgroup.begin(), y.subgroup.end(), x.subgroup.begin(), x.subgroup.end())) {
            sum += y.genus;
          }
        }
        ok = ok && (sum == x.genus);
        ++checked;
      }
    }
    return outcome(ok, std::to_string(checked) + " quotients match the character-wise sum");
  });

  // V4 indices: 1 = ibar, 2 = jbar.
  rep.run("tower.lifts.normal_form", "tower/lifts", [] {
    const auto c = count_quaternion_lifts({1, 0, 2, 0});
    return outcome(c.lifts == 16 && c.distinct_covers == 4 && c.actions_per_cover == 4 &&
                       c.conjugation_orbits_per_cover == 1,
                   lift_string(c));
  });

  rep.run("tower.lifts.torsor", "tower/lifts", [] {
    const auto c = count_quaternion_lifts({1, 0, 2, 0});
    return outcome(c.torsor, "lifts are psi0 * chi for the 16 characters chi: pi1 -> {+-1}");
  });

  rep.run("tower.lifts.non_isotropic", "tower/lifts", [] {
    const auto c = count_quaternion_lifts({1, 2, 0, 0});
    return outcome(c.lifts == 0, "alpha1 -> ibar, beta1 -> jbar: " + std::to_string(c.lifts) + " lifts");
  });

  rep.run("tower.lifts.case2_reading", "tower/lifts", [] {
    const auto beta1 = count_quaternion_lifts({1, 2, 0, 0});
    const auto beta2 = count_quaternion_lifts({1, 0, 0, 2});
    return CheckOutcome{Status::flagged, "read as beta1 -> jbar: " + std::to_string(beta1.lifts) +
                                             " lifts; read literally as beta2 -> jbar: " +
                                             std::to_string(beta2.lifts) + " lifts"};
  });

  rep.run("tower.lifts.trivial", "tower/lifts", [] {
    const auto c = count_quaternion_lifts({0, 0, 0, 0});
    return outcome(c.lifts == 16, "trivial psi_pm: " + lift_string(c));
  });
  return rep;
}

}  // namespace quatprym
