#include "plectic/unshuffle.hpp"

#include <algorithm>
#include <stdexcept>

namespace plectic {

int permutation_sign(std::span<const int> perm) {
  int inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int koszul_sign(std::span<const int> perm, std::span<const int> degrees) {
  if (perm.size() != degrees.size()) throw std::invalid_argument("koszul_sign: length mismatch");
  int odd_inversions = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j] && (degrees[perm[i]] & 1) && (degrees[perm[j]] & 1)) ++odd_inversions;
  return odd_inversions % 2 == 0 ? 1 : -1;
}

int koszul_sign_odd(std::span<const int> perm, std::span<const int> degrees) {
  return permutation_sign(perm) * koszul_sign(perm, degrees);
}

namespace {

// Fill blocks left to right; each block takes a strictly increasing subsequence
// of the still-unused indices.
void recurse(std::span<const int> shape, size_t block, std::vector<int>& word, std::vector<bool>& used,
             const std::function<void(std::span<const int>)>& fn) {
  if (block == shape.size()) {
    fn(word);
    return;
  }
  int len = shape[block];
  std::vector<int> chosen;
  std::function<void(int, int)> pick = [&](int start, int remaining) {
    if (remaining == 0) {
      recurse(shape, block + 1, word, used, fn);
      return;
    }
    int n = static_cast<int>(used.size());
    for (int v = start; v <= n - remaining; ++v) {
      if (used[v]) continue;
      used[v] = true;
      word.push_back(v);
      pick(v + 1, remaining - 1);
      word.pop_back();
      used[v] = false;
    }
  };
  pick(0, len);
}

}  // namespace

void for_each_unshuffle(std::span<const int> shape, const std::function<void(std::span<const int>)>& fn) {
  int total = 0;
  for (int s : shape) {
    if (s < 1) throw std::invalid_argument("for_each_unshuffle: block sizes must be >= 1");
    total += s;
  }
  std::vector<int> word;
  word.reserve(total);
  std::vector<bool> used(total, false);
  recurse(shape, 0, word, used, fn);
}

std::vector<SignedUnshuffle> enumerate_unshuffles(const std::vector<int>& shape) {
  std::vector<SignedUnshuffle> out;
  for_each_unshuffle(shape, [&](std::span<const int> word) {
    SignedUnshuffle u;
    u.perm.assign(word.begin(), word.end());
    u.sign = permutation_sign(word);
    u.shape = shape;
    out.push_back(std::move(u));
  });
  return out;
}

}  // namespace plectic
