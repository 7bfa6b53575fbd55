#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "plectic/appendixb.hpp"
#include "plectic/bernoulli.hpp"
#include "plectic/parse.hpp"
#include "plectic/suites.hpp"

using namespace plectic;

static Rational Q(const char* s) { return Rational::from_string(s); }

TEST_CASE("system at n = 5 matches the displayed data") {
  CommutatorSystem sys = build_system(5);
  CHECK(sys.big_n == 2);
  CHECK(sys.d == Q("1/4"));
  REQUIRE(sys.b.size() == 1);
  CHECK(sys.b[0].first == 2);
  CHECK(sys.b[0].second == Q("5/8"));
  REQUIRE(sys.triple_labels.size() == 1);
  CHECK(sys.triple_labels[0] == std::pair<int, int>{2, 1});
  REQUIRE(sys.quad_labels.size() == 1);
  CHECK(sys.quad_labels[0] == std::pair<int, int>{1, 1});

  // first column (1,-2,0,2,-1)^T, second (1,-4,6,-4,1)^T
  Vec col0 = {sys.m[0][0], sys.m[1][0], sys.m[2][0], sys.m[3][0], sys.m[4][0]};
  CHECK(col0 == Vec{Q("1"), Q("-2"), Q("0"), Q("2"), Q("-1")});
  Vec col1 = {sys.m[0][1], sys.m[1][1], sys.m[2][1], sys.m[3][1], sys.m[4][1]};
  CHECK(col1 == Vec{Q("1"), Q("-4"), Q("6"), Q("-4"), Q("1")});
  // rhs (9/8, -3, 9/4, 0, -3/8)
  CHECK(sys.r == Vec{Q("9/8"), Q("-3"), Q("9/4"), Q("0"), Q("-3/8")});

  SystemSolution sol = solve_system(sys);
  CHECK(sol.solvable);
  CHECK(sol.unique);
  CHECK(sol.a == Vec{Q("3/4"), Q("3/8")});
  CHECK(sol.bottom_orthogonal);
  CHECK(sol.top_orthogonal_v1);
  CHECK(sol.top_orthogonal_v2);
}

TEST_CASE("system at n = 7 matches the displayed data") {
  CommutatorSystem sys = build_system(7);
  CHECK(sys.d == Q("1/6"));
  REQUIRE(sys.b.size() == 1);
  CHECK(sys.b[0].second == Q("7/16"));
  CHECK(sys.triple_labels == std::vector<std::pair<int, int>>{{3, 2}, {4, 1}});
  CHECK(sys.quad_labels == std::vector<std::pair<int, int>>{{2, 2}, {3, 1}});

  // full displayed 7x4 matrix
  Mat expected = {{Q("1"), Q("1"), Q("1"), Q("1")},   {Q("-1"), Q("-2"), Q("-2"), Q("-3")},
                  {Q("-1"), Q("1"), Q("-1"), Q("3")}, {Q("0"), Q("0"), Q("4"), Q("-2")},
                  {Q("1"), Q("-1"), Q("-1"), Q("3")}, {Q("1"), Q("2"), Q("-2"), Q("-3")},
                  {Q("-1"), Q("-1"), Q("1"), Q("1")}};
  CHECK(sys.m == expected);
  CHECK(sys.r == Vec{Q("67/48"), Q("-3"), Q("23/16"), Q("0"), Q("7/16"), Q("0"), Q("-13/48")});

  SplitSystem split = transform_and_split(sys);
  // displayed transformed rhs (9/16, -3/2, 15/16, 0 | 1/2, -3/2, 5/6)
  CHECK(split.r_prime ==
        Vec{Q("9/16"), Q("-3/2"), Q("15/16"), Q("0"), Q("1/2"), Q("-3/2"), Q("5/6")});
  // displayed bottom block rows (-1,1), (-1,-2), (1,1)
  CHECK(split.bottom == Mat{{Q("-1"), Q("1")}, {Q("-1"), Q("-2")}, {Q("1"), Q("1")}});
  CHECK(split.r_bottom == Vec{Q("1/2"), Q("-3/2"), Q("5/6")});

  SystemSolution sol = solve_system(sys);
  CHECK(sol.solvable);
  CHECK(sol.unique);
  CHECK(sol.a == Vec{Q("1/6"), Q("2/3"), Q("3/16"), Q("3/8")});
}

TEST_CASE("row transform is a scaled involution") {
  CommutatorSystem sys = build_system(9);
  SplitSystem once = transform_and_split(sys);
  // applying the same row operations to M' recovers M
  const int n = sys.n, bigN = sys.big_n;
  Mat again = once.m_prime;
  Vec ragain = once.r_prime;
  for (int k = 1; k <= bigN; ++k) {
    int a = k - 1, b = n - k;
    for (size_t c = 0; c < again[0].size(); ++c) {
      Rational top = once.m_prime[a][c] + once.m_prime[b][c];
      Rational bot = once.m_prime[a][c] - once.m_prime[b][c];
      again[a][c] = top;
      again[b][c] = bot;
    }
    ragain[a] = once.r_prime[a] + once.r_prime[b];
    ragain[b] = once.r_prime[a] - once.r_prime[b];
  }
  CHECK(again == sys.m);
  CHECK(ragain == sys.r);
}

TEST_CASE("n = 9 regression: the quoted second top column") {
  CommutatorSystem sys = build_system(9);
  SplitSystem split = transform_and_split(sys);
  REQUIRE(split.top[0].size() >= 2);
  Vec col(split.top.size());
  for (size_t r = 0; r < split.top.size(); ++r) col[r] = split.top[r][1];
  CHECK(col == Vec{Q("1"), Q("-2"), Q("0"), Q("2"), Q("-2")});
}

TEST_CASE("solvable with unique solutions and certificates for odd n <= 15") {
  for (int n = 5; n <= 15; n += 2) {
    CommutatorSystem sys = build_system(n);
    // bottom rhs pattern (0,...,0,1/2,-3/2,(n-2)/(n-1))
    SplitSystem split = transform_and_split(sys);
    int bn = sys.big_n;
    for (int r = 0; r < bn - 3; ++r) CHECK(split.r_bottom[r].is_zero());
    if (bn >= 3) CHECK(split.r_bottom[bn - 3] == Q("1/2"));
    CHECK(split.r_bottom[bn - 2] == Q("-3/2"));
    CHECK(split.r_bottom[bn - 1] == Rational(n - 2) / Rational(n - 1));

    SystemSolution sol = solve_system(sys);
    CHECK(sol.solvable);
    CHECK(sol.unique);
    CHECK(sol.bottom_orthogonal);
    CHECK(sol.top_orthogonal_v1);
    CHECK(sol.top_orthogonal_v2);

    CrossValidation cv = cross_validate_operator(n, sol.a, nullptr);
    CHECK(cv.coefficients_match);
    CHECK(cv.coefficient_sum_ok);
    CHECK(cv.a_consistent);
  }
}

TEST_CASE("operator-level cross-check on the 5-plectic desk model") {
  MultisymplecticModel r6 = make_volume_model(6);
  CHECK(validate_model(r6).nondegenerate);
  SystemSolution sol = solve_system(build_system(5));
  REQUIRE(sol.solvable);
  CrossValidation cv = cross_validate_operator(5, sol.a, &r6, 1, 2);
  CHECK(cv.operator_checked);
  INFO(cv.detail);
  CHECK(cv.operator_check);
}

TEST_CASE("higher Vinogradov bracket on the 5-plectic model") {
  // mu_5 carries the Bernoulli term and the c_5-weighted double contraction;
  // it must match 3 (2^4/4! B_4) S^2 . mu_3 and the pushforward route
  MultisymplecticModel r6 = make_volume_model(6);
  SuiteOptions opt;
  opt.seed = 19;
  opt.tuples = 2;
  opt.degree_cap = 1;
  MultiMap<VinVal> mu5 = decalage_map(vinogradov_mu_map(r6, 5));
  Rational coeff = Rational(3) * Rational(2).pow(4) / factorial(4) * bernoulli(4);
  MultiMap<VinVal> rhs =
      nr_product(iterated_power(bold_s_map(), 2), decalage_map(vinogradov_mu_map(r6, 3)))
          .scaled(coeff);
  Sampler sampler(r6);
  sampler.degree_cap = 1;
  SplitMix64 rng = check_stream(19, "mu5");
  for (int t = 0; t < 2; ++t) {
    auto word = sampler.seeded_word(rng, 5, t, true);
    for (auto& x : word) --x.degree;
    GradedSum<VinVal> diff(mu5(word));
    diff.add_scaled(Rational(-1), rhs(word));
    CHECK(diff.zero());
  }
}

TEST_CASE("invalid n rejected; JSON report shape") {
  CHECK_THROWS(build_system(4));
  CHECK_THROWS(build_system(3));
  auto j = nlohmann::json::parse(system_report_json(5));
  CHECK(j["n"] == 5);
  CHECK(j["d"] == "1/4");
  CHECK(j["solution"][0] == "3/4");
  CHECK(j["solution"][1] == "3/8");
  CHECK(j["solvable"] == true);
  CHECK(j["certificates"]["top_orthogonal_v2"] == true);
}
