#include "quatprym/report.hpp"

#include <chrono>
#include <exception>

namespace quatprym {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::flagged: return "flagged";
  }
  return "fail";
}

void VerificationReport::run(const std::string& id, const std::string& anchor,
                             const std::function<CheckOutcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckOutcome o{Status::fail, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {Status::fail, std::string("exception: ") + e.what()};
  }
  const auto stop = std::chrono::steady_clock::now();
  Check c{id, anchor, o.status, std::move(o.details), std::nullopt};
  c.timing_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  checks.push_back(std::move(c));
}

void VerificationReport::add(const std::string& id, const std::string& anchor, CheckOutcome o) {
  checks.push_back(Check{id, anchor, o.status, std::move(o.details), std::nullopt});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const auto& [key, value] : other.data.items()) data[key] = value;
}

Summary VerificationReport::summary() const {
  Summary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::flagged: ++s.flagged; break;
    }
  }
  return s;
}

const Check* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace quatprym
