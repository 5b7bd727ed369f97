#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "quatprym/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for quaternion Prym lattices, covers and nodal cubics"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::string alpha;
  std::string format = "text";
  std::string out;
  std::vector<std::string> towers;
  bool timings = false;
  quatprym::SuiteParams params;

  verify->add_option("suite", suite, "quaternion | lattice | homology | tower | cubic | all")
      ->required()
      ->check(CLI::IsMember(quatprym::suite_names()));
  verify->add_option("--alpha", alpha, "Cubic parameter p/q, or 'symbolic'");
  verify->add_option("--genus", params.genus, "Base genus for the homology suite")->check(CLI::Range(2, 6));
  verify->add_option("--prime", params.prime, "Smallest prime tried by the finite-field scan")
      ->check(CLI::Range(5L, 101L));
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out, "Write the report here instead of stdout");
  verify->add_option("--tower", towers, "Extra branch data g:a'.ai.aj.ak for the tower suite");
  verify->add_flag("--timings", timings, "Include per-check timings");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!alpha.empty()) params.alpha = alpha;
    for (const auto& t : towers) params.towers.push_back(quatprym::TowerSpec::parse(t));
    params.seed = quatprym::seed_from_env();
    const auto report = quatprym::run_suite(suite, params);
    const std::string text =
        format == "json" ? quatprym::report_to_json(report, timings) : quatprym::report_to_text(report, timings);
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + out + " for writing");
      f << text;
      if (!f) throw std::runtime_error("failed writing " + out);
    }
    return report.ok() ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
