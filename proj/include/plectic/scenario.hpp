#ifndef PLECTIC_SCENARIO_HPP
#define PLECTIC_SCENARIO_HPP

#include <optional>
#include <set>

#include "plectic/morphisms.hpp"
#include "plectic/suites.hpp"

namespace plectic {

/// Declarative batch-run description. The text format is line oriented:
/// `key value` / `key = value` pairs using the form and vector-field syntax;
/// canonical_text() is the normal form and re-serializes byte-identically.
struct Scenario {
  // model
  int dimension = 0;
  int n = 0;
  Form omega;
  std::vector<std::vector<Rational>> basepoints;
  bool degenerate_allowed = false;
  // optional gauge
  std::optional<Form> gauge_b;
  // optional comoment
  int comoment_dim = 0;
  std::map<std::pair<int, int>, std::vector<Rational>> structure_constants;  // [e_i,e_j]
  std::map<int, VectorField> rho;
  std::map<std::pair<int, IndexWord>, Form> comoment_f;  // (k, word) -> form
  // run parameters
  std::set<std::string> suites;
  uint64_t seed = 1;
  int tuples = 20;
  int max_arity = 0;
  int degree_cap = 2;

  bool has_model() const { return dimension > 0; }
  bool has_comoment() const { return comoment_dim > 0; }

  MultisymplecticModel model() const;
  GaugeData gauge() const;  // requires gauge_b
  ComomentMap comoment() const;

  static Scenario parse(const std::string& text);
  static Scenario load(const std::string& path);
  std::string canonical_text() const;

  SuiteOptions options() const;
};

/// Deterministic JSON report; `include_timing` controls the only
/// nondeterministic fields.
std::string report_json(const std::string& suite, uint64_t seed,
                        const std::vector<CheckResult>& results, bool include_timing = true);

/// Runs one named suite ("tables", "identities", "structures", "embedding",
/// "pentagon") against the scenario, or against the built-in desk models when
/// the scenario has none.
std::vector<CheckResult> run_suite(const std::string& suite, const Scenario& scenario);

}  // namespace plectic

#endif
