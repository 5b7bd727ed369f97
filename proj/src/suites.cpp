#include "quatprym/suites.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

#include "quatprym/cubic.hpp"
#include "quatprym/hermitian.hpp"
#include "quatprym/homology.hpp"
#include "quatprym/quaternion.hpp"

namespace quatprym {

std::uint64_t seed_from_env() {
  const char* env = std::getenv("QUATPRYM_SEED");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw std::invalid_argument(std::string("QUATPRYM_SEED is not a number: ") + env);
  return v;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"quaternion", "lattice", "homology", "tower", "cubic", "all"};
  return names;
}

namespace {

Quaternion random_quaternion(std::mt19937_64& g) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  auto r = [&] {
    Rational x(num(g), den(g));
    x.canonicalize();
    return x;
  };
  return Quaternion(r(), r(), r(), r());
}

}  // namespace

VerificationReport verify_quaternion(std::uint64_t seed, int samples) {
  VerificationReport rep;
  rep.suite = "quaternion";

  rep.run("quaternion.units.mprime", "orders/units", [] {
    const auto u = unit_group(OrderName::Lipschitz_Mprime);
    return outcome(u.size() == 8, std::to_string(u.size()) + " units in M'");
  });

  rep.run("quaternion.units.m", "orders/units", [] {
    const auto u = unit_group(OrderName::Hurwitz_M);
    return outcome(u.size() == 24, std::to_string(u.size()) + " units in M");
  });

  rep.run("quaternion.ideal_p.index", "orders/ideal-p", [] {
    const auto p = ideal_p_data();
    return outcome(p.index_in_M == 4 && p.index_in_Mprime == 2,
                   "[M:P] = " + p.index_in_M.get_str() + ", [M':P] = " + p.index_in_Mprime.get_str());
  });

  rep.run("quaternion.ideal_p.structure", "orders/ideal-p", [] {
    const auto p = ideal_p_data();
    return outcome(p.matches_product_basis && p.two_sided && p.trace_even && p.square_is_2M,
                   "P = (1+i)M is two-sided with even traces and P^2 = 2M; basis 1+i, i-1, j+k, i+k");
  });

  rep.run("quaternion.mod2.table", "orders/mod-2", [] {
    const auto t = mod2_quotient_table();
    return outcome(t.table_matches && t.homomorphism_on_all_residues && t.commutative,
                   std::to_string(t.entries.size()) + " products of {1, 1+i, 1+j, 2u} match F2[e,e']/(e^2,e'^2); 2u -> " +
                       mod2_label(t.image_of_2u));
  });

  rep.run("quaternion.axioms", "orders/algebra", [seed, samples] {
    std::mt19937_64 g(seed);
    int bad = 0;
    for (int t = 0; t < samples; ++t) {
      const Quaternion p = random_quaternion(g), q = random_quaternion(g), r = random_quaternion(g);
      const bool ok = (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r && (p + q) * r == p * r + q * r &&
                      (p * q).conj() == q.conj() * p.conj() && (p * q).norm() == p.norm() * q.norm() &&
                      (p * q).trace() == (q * p).trace();
      bad += !ok;
    }
    return outcome(bad == 0, std::to_string(samples) + " random triples, " + std::to_string(bad) + " violations");
  });
  return rep;
}

VerificationReport run_suite(const std::string& name, const SuiteParams& params) {
  auto cubic_alpha = [&](const std::string& text) -> std::optional<Rational> {
    if (text == "symbolic") return std::nullopt;
    const Rational a = parse_rational(text);
    if (is_zero(a)) throw std::invalid_argument("alpha must be nonzero");
    return a;
  };
  if (params.genus < 2) throw std::invalid_argument("--genus must be at least 2");
  if (params.prime <= 3) throw std::invalid_argument("--prime must be greater than 3");

  if (name == "quaternion") return verify_quaternion(params.seed);
  if (name == "lattice") {
    VerificationReport rep;
    rep.suite = "lattice";
    rep.append(verify_pairing());
    rep.append(verify_named_lattices());
    rep.append(lemma_LA_check());
    return rep;
  }
  if (name == "homology") return verify_homology(params.genus);
  if (name == "tower") return verify_tower(params.towers);
  if (name == "cubic") {
    if (!params.alpha) throw std::invalid_argument("the cubic suite needs --alpha p/q or --alpha symbolic");
    return verify_cubic(cubic_alpha(*params.alpha), params.prime);
  }
  if (name == "all") {
    SuiteParams sub = params;
    if (!sub.alpha) sub.alpha = "2";
    cubic_alpha(*sub.alpha);
    VerificationReport rep;
    rep.suite = "all";
    for (const auto& s : suite_names()) {
      if (s == "all") continue;
      auto part = run_suite(s, sub);
      rep.checks.insert(rep.checks.end(), part.checks.begin(), part.checks.end());
      if (!part.data.empty()) rep.data[s] = part.data;
    }
    return rep;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

// ---------------------------------------------------------------------------

std::string report_to_json(const VerificationReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = r.suite;
  const auto s = r.summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"flagged", s.flagged}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["anchor"] = c.anchor;
    e["status"] = status_name(c.status);
    e["details"] = c.details;
    if (timings && c.timing_ms) e["timing_ms"] = std::round(*c.timing_ms * 1000.0) / 1000.0;
    j["checks"].push_back(e);
  }
  j["data"] = r.data;
  return j.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& r, bool timings) {
  std::size_t wid = 2, wanchor = 6;
  for (const auto& c : r.checks) {
    wid = std::max(wid, c.id.size());
    wanchor = std::max(wanchor, c.anchor.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
  std::ostringstream os;
  const auto s = r.summary();
  os << "suite " << r.suite << " (schema " << kReportSchemaVersion << "): " << s.pass << " pass, " << s.fail
     << " fail, " << s.flagged << " flagged\n\n";
  os << pad("STATUS", 8) << "  " << pad("ID", wid) << "  " << pad("ANCHOR", wanchor) << "  ";
  if (timings) os << pad("MS", 9) << "  ";
  os << "DETAILS\n";
  for (const auto& c : r.checks) {
    os << pad(status_name(c.status), 8) << "  " << pad(c.id, wid) << "  " << pad(c.anchor, wanchor) << "  ";
    if (timings) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(2);
      ms << c.timing_ms.value_or(0.0);
      os << pad(ms.str(), 9) << "  ";
    }
    os << c.details << "\n";
  }
  if (!r.data.empty()) os << "\ndata:\n" << r.data.dump(2) << "\n";
  return os.str();
}

}  // namespace quatprym
