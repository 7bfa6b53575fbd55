#ifndef PLECTIC_UNSHUFFLE_HPP
#define PLECTIC_UNSHUFFLE_HPP

#include <functional>
#include <span>
#include <vector>

#include "plectic/rational.hpp"

namespace plectic {

/// One (i_1,...,i_l)-unshuffle: indices strictly increase inside each block,
/// blocks partition {0..n-1}. `perm[t]` is the source position fed to slot t.
struct SignedUnshuffle {
  std::vector<int> perm;
  int sign = 1;  // plain permutation sign (-1)^sigma
  std::vector<int> shape;
};

/// (-1)^sigma by inversion count.
int permutation_sign(std::span<const int> perm);

/// Koszul sign eps(sigma) for permuting homogeneous elements of the given degrees:
/// product over inversions (i<j, perm[i]>perm[j]) of (-1)^{deg[perm[i]] deg[perm[j]]}.
int koszul_sign(std::span<const int> perm, std::span<const int> degrees);

/// Odd Koszul sign chi(sigma) = (-1)^sigma eps(sigma).
int koszul_sign_odd(std::span<const int> perm, std::span<const int> degrees);

/// Streams every unshuffle of the given block shape, in lexicographic order of the
/// permutation word. Enumeration is lazy: nothing is materialized beyond one word.
void for_each_unshuffle(std::span<const int> shape, const std::function<void(std::span<const int>)>& fn);

/// Materialized list; length = multinomial(sum; shape).
std::vector<SignedUnshuffle> enumerate_unshuffles(const std::vector<int>& shape);

}  // namespace plectic

#endif
