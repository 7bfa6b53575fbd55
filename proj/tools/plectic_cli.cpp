#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "plectic/appendixb.hpp"
#include "plectic/parse.hpp"
#include "plectic/scenario.hpp"

namespace {

int emit(const std::string& suite, const plectic::Scenario& sc,
         const std::vector<plectic::CheckResult>& results, const std::string& out_path, bool json) {
  bool pass = plectic::all_pass(results);
  if (json) {
    std::cout << plectic::report_json(suite, sc.seed, results) << "\n";
  } else {
    for (const auto& r : results)
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name
                << (r.pass || r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
    std::cout << (pass ? "all checks passed" : "CHECK FAILURES") << " (" << results.size()
              << " checks)\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << plectic::report_json(suite, sc.seed, results);
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for the multisymplectic observable embedding"};
  app.require_subcommand(1);

  std::string scenario_path, out_path;
  uint64_t seed = 1;
  int max_arity = 0, tuples = 20;
  bool json = false;
  bool seed_set = false, tuples_set = false, arity_set = false;
  app.add_option("--scenario", scenario_path, "scenario file");
  app.add_option("--seed", seed, "generator seed")->each([&](const std::string&) { seed_set = true; });
  app.add_option("--max-arity", max_arity, "arity bound (0 = per-model default)")
      ->each([&](const std::string&) { arity_set = true; });
  app.add_option("--tuples", tuples, "tuples per identity")
      ->each([&](const std::string&) { tuples_set = true; });
  app.add_option("--out", out_path, "write the JSON report to this path");
  app.add_flag("--json", json, "print the JSON report instead of one line per check");

  // global options may follow the subcommand, per the usual CLI ergonomics
  app.fallthrough();
  auto* tables = app.add_subcommand("tables", "Bernoulli and embedding coefficient tables");
  auto* identities = app.add_subcommand("identities", "Bernoulli + operator identity suites");
  auto* structures = app.add_subcommand("structures", "square-zero probes for both structures");
  auto* embedding = app.add_subcommand("embedding", "embedding defects and pushforward equality");
  auto* pentagon = app.add_subcommand("pentagon", "gauge-square commutativity");
  auto* appendixb = app.add_subcommand("appendixb", "the nested-commutator linear system");
  int ab_n = 0, ab_max = 0;
  appendixb->add_option("--n", ab_n, "single odd n >= 5");
  appendixb->add_option("--n-max", ab_max, "all odd n from 5 to this bound");
  for (auto* sub : {tables, identities, structures, embedding, pentagon, appendixb})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    plectic::Scenario sc;
    if (!scenario_path.empty()) sc = plectic::Scenario::load(scenario_path);
    if (seed_set || scenario_path.empty()) sc.seed = seed;
    if (tuples_set || scenario_path.empty()) sc.tuples = tuples;
    if (arity_set) sc.max_arity = max_arity;

    if (appendixb->parsed()) {
      int lo = ab_n ? ab_n : 5;
      int hi = ab_max ? ab_max : (ab_n ? ab_n : 15);
      if (hi > 25 || lo > 25) {
        std::cerr << "error: n is capped at 25\n";
        return 2;
      }
      bool pass = true;
      for (int n = lo; n <= hi; n += 2) {
        std::string report = plectic::system_report_json(n);
        auto sol = plectic::solve_system(plectic::build_system(n));
        pass = pass && sol.solvable && sol.unique && sol.bottom_orthogonal &&
               sol.top_orthogonal_v1 && sol.top_orthogonal_v2;
        if (json || !out_path.empty()) {
          if (json) std::cout << report << "\n";
          if (!out_path.empty()) {
            std::ofstream out(hi > lo ? out_path + "." + std::to_string(n) : out_path);
            out << report;
          }
        } else {
          std::cout << "n=" << n << (sol.solvable ? " solvable" : " INFEASIBLE")
                    << (sol.unique ? " unique" : "") << " a = [";
          for (size_t i = 0; i < sol.a.size(); ++i)
            std::cout << (i ? ", " : "") << sol.a[i].to_string();
          std::cout << "]\n";
        }
      }
      return pass ? 0 : 1;
    }

    std::string suite = tables->parsed()      ? "tables"
                        : identities->parsed() ? "identities"
                        : structures->parsed() ? "structures"
                        : embedding->parsed()  ? "embedding"
                                               : "pentagon";
    return emit(suite, sc, plectic::run_suite(suite, sc), out_path, json);
  } catch (const plectic::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
