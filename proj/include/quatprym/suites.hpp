#ifndef QUATPRYM_SUITES_HPP
#define QUATPRYM_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quatprym/report.hpp"
#include "quatprym/tower.hpp"

namespace quatprym {

struct SuiteParams {
  std::optional<std::string> alpha;  // "p/q" or "symbolic"; cubic needs it
  int genus = 2;
  long prime = 11;
  std::vector<TowerSpec> towers;
  std::uint64_t seed = 1;
};

/// Seed from QUATPRYM_SEED, default 1. Throws on a malformed value.
std::uint64_t seed_from_env();

const std::vector<std::string>& suite_names();

/// `samples` random triples for the algebra axioms.
VerificationReport verify_quaternion(std::uint64_t seed, int samples = 10000);

/// quaternion | lattice | homology | tower | cubic | all. Throws
/// std::invalid_argument for an unknown suite or bad parameters. "all" uses
/// alpha = 2 when none is given.
VerificationReport run_suite(const std::string& name, const SuiteParams& params);

/// Byte-stable for fixed input; timings only when asked.
std::string report_to_json(const VerificationReport& r, bool timings);
std::string report_to_text(const VerificationReport& r, bool timings);

}  // namespace quatprym

#endif
