#ifndef PLECTIC_SUITES_HPP
#define PLECTIC_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "plectic/morphisms.hpp"
#include "plectic/sampler.hpp"

namespace plectic {

struct CheckResult {
  std::string name;
  std::string anchor;  // which identity or construction this pins
  bool pass = true;
  std::string detail;  // counterexample description on failure
  long long micros = 0;
};

struct SuiteOptions {
  uint64_t seed = 1;
  int tuples = 20;
  int max_arity = 0;  // 0: derive from the model (n + 1 or n + 2 where appropriate)
  int degree_cap = 2;
};

/// Number of worker threads: HC_THREADS when set (min 1), else the hardware count.
int thread_budget();

/// Runs the closures (possibly in parallel), collects results sorted by name.
std::vector<CheckResult> run_checks(std::vector<std::function<CheckResult()>> checks);

bool all_pass(const std::vector<CheckResult>& results);

/// Table of B_k (k <= 10) and c_k (1 <= k <= 10) against frozen values.
std::vector<CheckResult> table_suite();

/// Bernoulli identity suite at explicit bounds.
std::vector<CheckResult> bernoulli_identity_suite(int elezovic_max, int recursion_max, int euler_max);

/// Exterior-calculus laws on seeded polynomial data (the Lie derivative is
/// cross-checked against an independent coordinate-derivation oracle).
std::vector<CheckResult> cartan_suite(const MultisymplecticModel& model, const SuiteOptions& opt);

/// The commutator/associator identity suite for the shifted Rogers and
/// Vinogradov operators (the appendix lemmas), evaluated on seeded words.
std::vector<CheckResult> appendix_a_suite(const MultisymplecticModel& model, const SuiteOptions& opt);

/// Square-zero probes for both structures, word lengths up to n + 2.
std::vector<CheckResult> nilpotency_suite(const MultisymplecticModel& model, const SuiteOptions& opt);

/// Embedding defects, dual-route agreement, and mutation detection.
std::vector<CheckResult> embedding_suite(const MultisymplecticModel& model, const SuiteOptions& opt);

/// Pushforward of the Rogers structure along the Ansatz equals the Vinogradov
/// brackets; exp-morphism components match the Bernoulli closed form.
std::vector<CheckResult> pushforward_suite(const MultisymplecticModel& model, const SuiteOptions& opt);

/// Pentagon commutativity for a comoment + gauge pair, plus the binomial
/// right-hand-side lemma on basis tuples.
std::vector<CheckResult> pentagon_suite(const ComomentMap& f, const GaugeData& gauge,
                                        const SuiteOptions& opt);

}  // namespace plectic

#endif
