#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <thread>

#include "plectic/bernoulli.hpp"
#include "plectic/rational.hpp"
#include "plectic/rng.hpp"
#include "plectic/unshuffle.hpp"

using namespace plectic;

static Rational Q(const char* s) { return Rational::from_string(s); }

TEST_CASE("BigInt arithmetic round trips") {
  SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    long long a = rng.next_int(-1000000, 1000000);
    long long b = rng.next_int(-1000000, 1000000);
    CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
    CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
    CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
    if (b != 0) {
      BigInt q, r;
      BigInt::divrem(BigInt(a), BigInt(b), q, r);
      CHECK(q == BigInt(a / b));
      CHECK(r == BigInt(a % b));
    }
  }
  CHECK(BigInt::from_string("-123456789012345678901234567890").to_string() ==
        "-123456789012345678901234567890");
  BigInt big = BigInt::from_string("123456789012345678901234567890");
  CHECK(big % BigInt::from_string("9999999999") == big - (big / BigInt::from_string("9999999999")) *
                                                             BigInt::from_string("9999999999"));
}

TEST_CASE("Rational reduction invariants") {
  CHECK(Rational(6, -4) == Q("-3/2"));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK((Q("1/3") + Q("1/6")) == Q("1/2"));
  CHECK((Q("-1/2") * Q("2/3")) == Q("-1/3"));
  CHECK(Q("5/66").to_string() == "5/66");
  CHECK(Rational(2).pow(-3) == Q("1/8"));
}

TEST_CASE("bernoulli matches the displayed table") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Q("-1/2"));
  CHECK(bernoulli(2) == Q("1/6"));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(4) == Q("-1/30"));
  CHECK(bernoulli(6) == Q("1/42"));
  CHECK(bernoulli(8) == Q("-1/30"));
  CHECK(bernoulli(10) == Q("5/66"));
  for (int k = 3; k <= 41; k += 2) CHECK(bernoulli(k) == Rational(0));
}

TEST_CASE("bernoulli memoization is safe under concurrent use") {
  std::vector<std::thread> ts;
  std::vector<Rational> results(8);
  for (int t = 0; t < 8; ++t)
    ts.emplace_back([t, &results] { results[t] = bernoulli(30 + (t % 3)); });
  for (auto& t : ts) t.join();
  for (int t = 0; t < 8; ++t) CHECK(results[t] == bernoulli(30 + (t % 3)));
}

TEST_CASE("coefficient_c matches the displayed table") {
  CHECK(coefficient_c(1) == Rational(-1));
  CHECK(coefficient_c(2) == Q("-1/6"));
  CHECK(coefficient_c(3) == Rational(0));
  CHECK(coefficient_c(4) == Q("1/180"));
  CHECK(coefficient_c(6) == Q("-1/2835"));
  CHECK(coefficient_c(8) == Q("1/37800"));
  CHECK(coefficient_c(10) == Q("-1/467775"));
  for (int k = 3; k <= 15; k += 2) CHECK(coefficient_c(k) == Rational(0));
}

TEST_CASE("sign_varsigma") {
  CHECK(sign_varsigma(1) == 1);
  CHECK(sign_varsigma(2) == 1);
  CHECK(sign_varsigma(3) == -1);
  CHECK(sign_varsigma(4) == -1);
  CHECK(sign_varsigma(5) == 1);
  // varsigma(k) varsigma(k+1) = (-1)^{k+1}
  for (int k = 1; k < 12; ++k) CHECK(sign_varsigma(k) * sign_varsigma(k + 1) == (k % 2 ? 1 : -1));
}

TEST_CASE("phi and d coefficients") {
  CHECK(phi_coefficient(1) == Rational(1));
  CHECK(phi_coefficient(2) == Rational(-1));
  CHECK(phi_coefficient(3) == Q("1/3"));
  CHECK(phi_coefficient(4) == Rational(0));
  CHECK(d_coefficient(2) == Rational(2));
  CHECK(d_coefficient(3) == Q("4/3"));
  for (int m = 1; m <= 10; ++m) CHECK(phi_coefficient(m) == d_coefficient(m - 1) * bernoulli(m - 1));
}

TEST_CASE("bernoulli identity suite") {
  auto rep = verify_bernoulli_identities(12);
  CHECK(rep.ok);
  CHECK(rep.failure.empty());
  // recursion at m = 2: B_0 + 2 B_1 = 0
  CHECK(bernoulli(0) + Rational(2) * bernoulli(1) == Rational(0));
  // Euler at r = 4: C(4,2) B_2^2 = 1/6 = -5 B_4
  CHECK(binomial(4, 2) * bernoulli(2) * bernoulli(2) == Q("1/6"));
  CHECK(Rational(-5) * bernoulli(4) == Q("1/6"));
}

TEST_CASE("unshuffle enumeration counts and invariants") {
  auto u21 = enumerate_unshuffles({2, 1});
  CHECK(u21.size() == 3);
  auto u1 = enumerate_unshuffles({1});
  REQUIRE(u1.size() == 1);
  CHECK(u1[0].perm == std::vector<int>{0});
  CHECK(u1[0].sign == 1);

  // brute-force oracle for (2,2): filter all 24 permutations of {0..3}
  std::vector<int> perm = {0, 1, 2, 3};
  std::set<std::vector<int>> expected;
  do {
    if (perm[0] < perm[1] && perm[2] < perm[3]) expected.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto u22 = enumerate_unshuffles({2, 2});
  CHECK(u22.size() == 6);
  CHECK(expected.size() == 6);
  std::set<std::vector<int>> got;
  for (const auto& u : u22) {
    got.insert(u.perm);
    CHECK(u.sign == permutation_sign(u.perm));
  }
  CHECK(got == expected);

  for (std::vector<int> shape : {std::vector<int>{3, 2}, {1, 1, 1, 1}, {2, 2, 2}, {4, 1}}) {
    auto us = enumerate_unshuffles(shape);
    CHECK(Rational(static_cast<long long>(us.size())) == multinomial(shape));
    std::set<std::vector<int>> dedup;
    for (const auto& u : us) {
      dedup.insert(u.perm);
      int pos = 0;
      for (int len : shape) {
        for (int t = 1; t < len; ++t) CHECK(u.perm[pos + t - 1] < u.perm[pos + t]);
        pos += len;
      }
    }
    CHECK(dedup.size() == us.size());
  }
}

TEST_CASE("koszul signs") {
  std::vector<int> swap01 = {1, 0};
  std::vector<int> deg11 = {1, 1};
  std::vector<int> deg00 = {0, 0};
  CHECK(koszul_sign(swap01, deg11) == -1);
  CHECK(koszul_sign(swap01, deg00) == 1);

  // cycle (1 2 3) acting on degrees (1,1,0): two adjacent odd transpositions
  std::vector<int> cyc = {2, 0, 1};
  std::vector<int> degs = {1, 1, 0};
  CHECK(koszul_sign(cyc, degs) == 1);

  // any permutation of degree-0 elements is Koszul-trivial
  std::vector<int> p = {3, 1, 0, 2};
  std::vector<int> zeros = {0, 0, 0, 0};
  CHECK(koszul_sign(p, zeros) == 1);
  CHECK(koszul_sign_odd(p, zeros) == permutation_sign(p));
}

TEST_CASE("koszul sign composes as a cocycle") {
  // eps(sigma tau) = eps_tau-permuted(sigma) * eps(tau) on explicit triples
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 4;
    std::vector<int> degs(n);
    for (auto& d : degs) d = static_cast<int>(rng.next_int(-2, 2));
    std::vector<int> sigma = {0, 1, 2, 3}, tau = {0, 1, 2, 3};
    for (int i = n - 1; i > 0; --i) std::swap(sigma[i], sigma[rng.next_index(i + 1)]);
    for (int i = n - 1; i > 0; --i) std::swap(tau[i], tau[rng.next_index(i + 1)]);
    // composite: first tau, then sigma acting on the tau-permuted word
    std::vector<int> comp(n), degs_tau(n);
    for (int i = 0; i < n; ++i) comp[i] = tau[sigma[i]];
    for (int i = 0; i < n; ++i) degs_tau[i] = degs[tau[i]];
    CHECK(koszul_sign(comp, degs) == koszul_sign(sigma, degs_tau) * koszul_sign(tau, degs));
  }
}
