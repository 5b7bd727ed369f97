#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "quatprym/suites.hpp"

using namespace quatprym;

namespace {

VerificationReport full_run() {
  SuiteParams p;
  p.towers = {TowerSpec::parse("2:0.0.0.0")};
  return run_suite("all", p);
}

}  // namespace

TEST_CASE("suite parameters") {
  CHECK_THROWS_AS(run_suite("bogus", {}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("cubic", {}), std::invalid_argument);
  SuiteParams p;
  p.alpha = "0";
  CHECK_THROWS_AS(run_suite("cubic", p), std::invalid_argument);
  p.alpha = "x/2";
  CHECK_THROWS_AS(run_suite("cubic", p), std::invalid_argument);
  p.alpha = "2";
  p.genus = 1;
  CHECK_THROWS_AS(run_suite("homology", p), std::invalid_argument);
}

TEST_CASE("suites run clean") {
  for (const auto& name : {"quaternion", "lattice", "homology", "tower"}) {
    const auto rep = run_suite(name, {});
    CHECK(rep.ok());
    CHECK(rep.suite == name);
  }
  SuiteParams p;
  p.alpha = "1/1";
  const auto segre = run_suite("cubic", p);
  CHECK(segre.ok());
  CHECK(segre.data["singular_points"].size() == 10);
  p.alpha = "symbolic";
  CHECK(run_suite("cubic", p).ok());
  p.genus = 3;
  CHECK(run_suite("homology", p).find("homology.norm_kernel.g3"));
}

TEST_CASE("json report") {
  const auto rep = full_run();
  CHECK(rep.ok());
  const std::string a = report_to_json(rep, false);
  CHECK(a == report_to_json(full_run(), false));

  const auto j = nlohmann::json::parse(a);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["suite"] == "all");
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["checks"].size() == rep.checks.size());
  for (const auto& c : j["checks"]) {
    CHECK_FALSE(c.contains("timing_ms"));
    CHECK_FALSE(c["anchor"].get<std::string>().empty());
    const auto s = c["status"].get<std::string>();
    CHECK((s == "pass" || s == "flagged"));
  }
  const auto timed = nlohmann::json::parse(report_to_json(rep, true));
  CHECK(timed["checks"][0].contains("timing_ms"));
  CHECK(j["data"].contains("cubic"));
  CHECK(j["data"]["tower"]["admissible"].size() == 5);
}

TEST_CASE("text report") {
  const auto rep = run_suite("tower", {});
  const std::string t = report_to_text(rep, false);
  for (const auto& c : rep.checks) {
    CHECK(t.find(c.id) != std::string::npos);
    CHECK(t.find(c.anchor) != std::string::npos);
  }
  CHECK(t.find("MS") == std::string::npos);
  CHECK(report_to_text(rep, true).find("MS") != std::string::npos);
}

TEST_CASE("every check id is documented") {
  std::ifstream f(QUATPRYM_SOURCE_DIR "/README.md");
  REQUIRE(f);
  std::stringstream ss;
  ss << f.rdbuf();
  const std::string readme = ss.str();
  SuiteParams p;
  p.alpha = "symbolic";
  auto rep = full_run();
  rep.append(run_suite("cubic", p));
  p.genus = 4;
  rep.append(run_suite("homology", p));
  for (const auto& c : rep.checks) {
    INFO(c.id);
    CHECK(readme.find("| `" + c.id + "` | `" + c.anchor + "` |") != std::string::npos);
  }
}
