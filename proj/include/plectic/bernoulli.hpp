#ifndef PLECTIC_BERNOULLI_HPP
#define PLECTIC_BERNOULLI_HPP

#include <optional>
#include <string>

#include "plectic/rational.hpp"

namespace plectic {

/// k-th Bernoulli number, first-kind convention (B_1 = -1/2).
/// Computed by B_0 = 1 and sum_{j<m} C(m,j) B_j = 0; memoized, thread-safe.
Rational bernoulli(int k);

/// c_k = (-1)^{k+1} B_k 2^k / (k * k!), k >= 1.
Rational coefficient_c(int k);

/// varsigma(k) = -(-1)^{k(k+1)/2}, the Rogers bracket sign prefactor.
int sign_varsigma(int k);

/// varphi_m = 2^{m-1}/(m-1)! * B_{m-1}, m >= 1 (embedding component coefficient).
Rational phi_coefficient(int m);

/// d_m = 2^m / m!.
Rational d_coefficient(int m);

struct BernoulliReport {
  bool ok = true;
  std::string failure;  // "identity@index" of the first failure, empty on pass
};

/// Checks, exactly, up to max_k (>= 4):
///   (a) 2^k/k! B_k = sum over compositions (k_1..k_n) of k of c_{k_1}...c_{k_n}/n!
///   (b) sum_{j<m} C(m,j) B_j = 0 for 2 <= m <= max_k
///   (c) sum_{i=2}^{r-2} C(r,i) B_i B_{r-i} = -(r+1) B_r for 4 <= r <= max_k
BernoulliReport verify_bernoulli_identities(int max_k);
BernoulliReport verify_bernoulli_identities(int elezovic_max, int recursion_max, int euler_max);

}  // namespace plectic

#endif
