#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>

#include "plectic/appendixb.hpp"
#include "plectic/scenario.hpp"

using namespace plectic;

// Each criterion prints exactly one PASS/FAIL line; every tolerance is zero
// (all arithmetic is exact) and the stated runtime budgets are enforced.

namespace {

const MultisymplecticModel& r3() {
  static MultisymplecticModel m = make_volume_model(3);
  return m;
}
const MultisymplecticModel& r4() {
  static MultisymplecticModel m = make_volume_model(4);
  return m;
}

struct Outcome {
  bool pass = true;
  double seconds = 0;
  std::string detail;
};

Outcome run(const std::function<std::vector<CheckResult>()>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto results = body();
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& r : results)
    if (!r.pass) {
      o.pass = false;
      if (o.detail.empty()) o.detail = r.name + ": " + r.detail;
    }
  return o;
}

void report(int index, const char* label, const Outcome& o, double budget) {
  std::printf("criterion %d (%s): %s  [%.2fs < %.0fs]%s%s\n", index, label,
              o.pass && o.seconds < budget ? "PASS" : "FAIL", o.seconds, budget,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
  std::fflush(stdout);
  CHECK(o.pass);
  CHECK(o.seconds < budget);
}

}  // namespace

TEST_CASE("1: coefficient tables reproduce exactly") {
  Outcome o = run([] { return table_suite(); });
  report(1, "tables", o, 1.0);
}

TEST_CASE("2: Bernoulli identity suite") {
  Outcome o = run([] { return bernoulli_identity_suite(14, 40, 24); });
  report(2, "bernoulli identities", o, 5.0);
}

TEST_CASE("3: exterior calculus laws") {
  Outcome o = run([] {
    SuiteOptions opt;
    opt.seed = 1;
    opt.tuples = 100;
    auto a = cartan_suite(r3(), opt);
    auto b = cartan_suite(r4(), opt);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  });
  report(3, "cartan laws, 100 inputs per law per model", o, 10.0);
}

TEST_CASE("4: square-zero probes for both structures") {
  Outcome o = run([] {
    SuiteOptions opt;
    opt.seed = 1;
    opt.tuples = 50;
    auto a = nilpotency_suite(r3(), opt);
    auto b = nilpotency_suite(r4(), opt);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  });
  report(4, "nilpotency, 50 words per arity up to n+2", o, 120.0);
}

TEST_CASE("5: operator identity suite") {
  Outcome o = run([] {
    SuiteOptions opt;
    opt.seed = 1;
    opt.tuples = 20;
    auto a = appendix_a_suite(r3(), opt);
    auto b = appendix_a_suite(r4(), opt);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  });
  report(5, "identity suite, 20 tuples each, both models", o, 180.0);
}

TEST_CASE("6: the embedding is a morphism; both routes agree") {
  Outcome o = run([] {
    SuiteOptions opt;
    opt.seed = 1;
    opt.tuples = 30;
    auto a = embedding_suite(r3(), opt);
    auto b = embedding_suite(r4(), opt);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  });
  report(6, "embedding defect and dual routes, 30 tuples per arity", o, 120.0);
}

TEST_CASE("7: pushforward equals the twisted-bracket structure") {
  Outcome o = run([] {
    SuiteOptions opt;
    opt.seed = 1;
    opt.tuples = 20;
    auto a = pushforward_suite(r3(), opt);
    auto b = pushforward_suite(r4(), opt);
    a.insert(a.end(), b.begin(), b.end());
    return a;
  });
  report(7, "pushed brackets, arities <= n+1, plus the even vanishing", o, 120.0);
}

TEST_CASE("8: pentagon on the desk example") {
  Outcome o = run([] {
    SuiteOptions opt;
    opt.seed = 1;
    opt.tuples = 20;
    return pentagon_suite(desk_comoment_r3(), desk_gauge_r3(), opt);
  });
  report(8, "gauge square, m <= 3, scalar recursion to 20", o, 30.0);
}

TEST_CASE("9: nested-commutator linear systems") {
  Outcome o = run([]() -> std::vector<CheckResult> {
    std::vector<CheckResult> rs;
    auto add = [&rs](const std::string& name, bool pass, const std::string& detail = "") {
      CheckResult r;
      r.name = name;
      r.pass = pass;
      r.detail = detail;
      rs.push_back(std::move(r));
    };
    SystemSolution s5 = solve_system(build_system(5));
    add("b.n5", s5.solvable && s5.unique &&
                    s5.a == Vec{Rational(3, 4), Rational(3, 8)});
    SystemSolution s7 = solve_system(build_system(7));
    add("b.n7", s7.solvable && s7.unique &&
                    s7.a == Vec{Rational(1, 6), Rational(2, 3), Rational(3, 16), Rational(3, 8)});
    for (int n = 5; n <= 15; n += 2) {
      SystemSolution s = solve_system(build_system(n));
      add("b.solve.n" + std::to_string(n),
          s.solvable && s.unique && s.bottom_orthogonal && s.top_orthogonal_v1 &&
              s.top_orthogonal_v2,
          s.detail);
      CrossValidation cv = cross_validate_operator(n, s.a, nullptr);
      add("b.coeffs.n" + std::to_string(n),
          cv.coefficients_match && cv.coefficient_sum_ok && cv.a_consistent, cv.detail);
    }
    return rs;
  });
  report(9, "appendix systems, odd n in [5, 15]", o, 10.0);
}
