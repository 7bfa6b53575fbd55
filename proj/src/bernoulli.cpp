#include "plectic/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace plectic {

namespace {
std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli_cache;  // g_bernoulli_cache[k] = B_k
}  // namespace

Rational bernoulli(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli: negative index");
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  if (g_bernoulli_cache.empty()) g_bernoulli_cache.push_back(Rational(1));
  while (static_cast<int>(g_bernoulli_cache.size()) <= k) {
    int m = static_cast<int>(g_bernoulli_cache.size()) + 1;
    // sum_{j=0}^{m-1} C(m,j) B_j = 0  solved for B_{m-1}
    Rational acc(0);
    for (int j = 0; j < m - 1; ++j) acc += binomial(m, j) * g_bernoulli_cache[j];
    g_bernoulli_cache.push_back(-acc / binomial(m, m - 1));
  }
  return g_bernoulli_cache[k];
}

Rational coefficient_c(int k) {
  if (k < 1) throw std::invalid_argument("coefficient_c: k must be >= 1");
  Rational sign = (k % 2 == 0) ? Rational(-1) : Rational(1);  // (-1)^{k+1}
  return sign * bernoulli(k) * Rational(2).pow(k) / (Rational(k) * factorial(k));
}

int sign_varsigma(int k) {
  if (k < 1) throw std::invalid_argument("sign_varsigma: k must be >= 1");
  long long e = static_cast<long long>(k) * (k + 1) / 2;
  return (e % 2 == 0) ? -1 : 1;
}

Rational phi_coefficient(int m) {
  if (m < 1) throw std::invalid_argument("phi_coefficient: m must be >= 1");
  return Rational(2).pow(m - 1) / factorial(m - 1) * bernoulli(m - 1);
}

Rational d_coefficient(int m) {
  if (m < 0) throw std::invalid_argument("d_coefficient: m must be >= 0");
  return Rational(2).pow(m) / factorial(m);
}

namespace {

// sum over compositions (k_1,...,k_n) of k, all parts >= 1, of prod c_{k_i} / n!
Rational elezovic_rhs(int k) {
  // dp[n][s] = sum over compositions of s into n parts of prod c
  std::vector<std::vector<Rational>> dp(k + 1, std::vector<Rational>(k + 1, Rational(0)));
  dp[0][0] = Rational(1);
  for (int n = 1; n <= k; ++n)
    for (int s = n; s <= k; ++s)
      for (int last = 1; last <= s - (n - 1); ++last)
        dp[n][s] += dp[n - 1][s - last] * coefficient_c(last);
  Rational acc(0);
  for (int n = 1; n <= k; ++n) acc += dp[n][k] / factorial(n);
  return acc;
}

}  // namespace

BernoulliReport verify_bernoulli_identities(int elezovic_max, int recursion_max, int euler_max) {
  BernoulliReport rep;
  for (int k = 1; k <= elezovic_max; ++k) {
    Rational lhs = Rational(2).pow(k) / factorial(k) * bernoulli(k);
    if (lhs != elezovic_rhs(k)) {
      rep.ok = false;
      rep.failure = "elezovic@" + std::to_string(k);
      return rep;
    }
  }
  for (int m = 2; m <= recursion_max; ++m) {
    Rational acc(0);
    for (int j = 0; j <= m - 1; ++j) acc += binomial(m, j) * bernoulli(j);
    if (!acc.is_zero()) {
      rep.ok = false;
      rep.failure = "recursion@" + std::to_string(m);
      return rep;
    }
  }
  for (int r = 4; r <= euler_max; ++r) {
    Rational acc(0);
    for (int i = 2; i <= r - 2; ++i) acc += binomial(r, i) * bernoulli(i) * bernoulli(r - i);
    if (acc != Rational(-(r + 1)) * bernoulli(r)) {
      rep.ok = false;
      rep.failure = "euler@" + std::to_string(r);
      return rep;
    }
  }
  return rep;
}

BernoulliReport verify_bernoulli_identities(int max_k) {
  if (max_k < 4) throw std::invalid_argument("verify_bernoulli_identities: max_k must be >= 4");
  return verify_bernoulli_identities(max_k, max_k, max_k);
}

}  // namespace plectic
