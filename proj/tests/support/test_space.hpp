#ifndef PLECTIC_TESTS_TEST_SPACE_HPP
#define PLECTIC_TESTS_TEST_SPACE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "plectic/graded.hpp"
#include "plectic/rng.hpp"

// Finite-dimensional abstract graded vector space over the rationals, used as a
// neutral carrier for engine property tests (symmetry probes, pre-Lie law,
// decalage round trips, composition associativity).

namespace plectic::testing {

/// Sparse coordinates of a homogeneous element: basis index -> coefficient.
struct TVal {
  std::map<int, Rational> coords;
};

inline TVal operator+(const TVal& a, const TVal& b) {
  TVal r = a;
  for (const auto& [i, c] : b.coords) {
    auto it = r.coords.find(i);
    if (it == r.coords.end()) {
      r.coords.emplace(i, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.coords.erase(it);
    }
  }
  return r;
}

inline TVal scale(const Rational& c, const TVal& a) {
  TVal r;
  if (c.is_zero()) return r;
  for (const auto& [i, v] : a.coords) r.coords.emplace(i, c * v);
  return r;
}

inline bool is_zero(const TVal& a) { return a.coords.empty(); }

/// Degrees -kMaxAbsDegree..kMaxAbsDegree carry kDim basis vectors each.
class TestSpace {
public:
  static constexpr int kMaxAbsDegree = 4;
  static constexpr int kDim = 2;

  static int dim(int degree) { return degree >= -kMaxAbsDegree && degree <= kMaxAbsDegree ? kDim : 0; }

  static Graded<TVal> basis(int degree, int index) {
    Graded<TVal> g;
    g.degree = degree;
    g.value.coords.emplace(index, Rational(1));
    return g;
  }

  static Graded<TVal> random_element(SplitMix64& rng, int degree) {
    Graded<TVal> g;
    g.degree = degree;
    for (int i = 0; i < dim(degree); ++i) {
      long long c = rng.next_int(-3, 3);
      if (c) g.value.coords.emplace(i, Rational(c));
    }
    return g;
  }

  /// Multilinear map defined by pseudorandom values on basis tuples, then
  /// explicitly (anti)symmetrized so the declared tag holds by construction.
  static MultiMap<TVal> random_map(uint64_t key, int arity, int weight, Symmetry sym, Convention conv) {
    auto raw = [key, weight](std::span<const Graded<TVal>> xs) {
      TVal out;
      std::vector<std::pair<int, Rational>> factors;  // flattened basis expansion
      std::function<void(size_t, Rational, uint64_t)> expand = [&](size_t slot, Rational coeff,
                                                                   uint64_t h) {
        if (slot == xs.size()) {
          int d = weight;
          for (const auto& x : xs) d += x.degree;
          if (dim(d) == 0) return;
          SplitMix64 s(h);
          s.next();
          for (int i = 0; i < dim(d); ++i) {
            Rational c = coeff * Rational(s.next_int(-2, 2));
            if (c.is_zero()) continue;
            auto it = out.coords.find(i);
            if (it == out.coords.end()) {
              out.coords.emplace(i, c);
            } else {
              it->second += c;
              if (it->second.is_zero()) out.coords.erase(it);
            }
          }
          return;
        }
        for (const auto& [idx, c] : xs[slot].value.coords) {
          uint64_t h2 = h * 0x9E3779B97F4A7C15ull ^ (static_cast<uint64_t>(xs[slot].degree + 64) << 8) ^
                        static_cast<uint64_t>(idx + 1);
          expand(slot + 1, coeff * c, h2);
        }
      };
      expand(0, Rational(1), key);
      return out;
    };
    if (sym == Symmetry::none) return MultiMap<TVal>(arity, weight, sym, conv, raw);
    bool want_skew = sym == Symmetry::skew;
    return MultiMap<TVal>(arity, weight, sym, conv,
                          [raw, arity, weight, want_skew](std::span<const Graded<TVal>> xs) {
                            std::vector<int> degs(xs.size());
                            for (size_t i = 0; i < xs.size(); ++i) degs[i] = xs[i].degree;
                            std::vector<int> perm(arity);
                            for (int i = 0; i < arity; ++i) perm[i] = i;
                            GradedSum<TVal> acc;
                            int d = weight;
                            for (int g : degs) d += g;
                            do {
                              int sgn = koszul_sign(perm, degs);
                              if (want_skew) sgn *= permutation_sign(perm);
                              std::vector<Graded<TVal>> t(arity);
                              for (int i = 0; i < arity; ++i) t[i] = xs[perm[i]];
                              acc.add_scaled(Rational(sgn), Graded<TVal>{d, raw(t)});
                            } while (std::next_permutation(perm.begin(), perm.end()));
                            return acc.part(d);
                          });
  }
};

}  // namespace plectic::testing

#endif
