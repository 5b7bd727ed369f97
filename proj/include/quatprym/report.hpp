#ifndef QUATPRYM_REPORT_HPP
#define QUATPRYM_REPORT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace quatprym {

inline constexpr int kReportSchemaVersion = 1;

/// flagged: a known ambiguity in the source material; both readings are in
/// the details. It never counts as a failure.
enum class Status { pass, fail, flagged };

std::string status_name(Status s);

struct Check {
  std::string id;
  std::string anchor;  // topic tag, or "plumbing"
  Status status = Status::pass;
  std::string details;
  std::optional<double> timing_ms;
};

struct CheckOutcome {
  Status status;
  std::string details;
};

inline CheckOutcome outcome(bool ok, std::string details) {
  return {ok ? Status::pass : Status::fail, std::move(details)};
}

struct Summary {
  int pass = 0;
  int fail = 0;
  int flagged = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  /// Computed tables and polynomials, keyed by topic. Emitted as-is.
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  /// Runs body, times it and records the result. An exception escaping body
  /// is recorded as a failure with the message as details.
  void run(const std::string& id, const std::string& anchor, const std::function<CheckOutcome()>& body);
  void add(const std::string& id, const std::string& anchor, CheckOutcome o);
  void append(const VerificationReport& other);

  Summary summary() const;
  bool ok() const { return summary().fail == 0; }
  const Check* find(const std::string& id) const;
};

}  // namespace quatprym

#endif
