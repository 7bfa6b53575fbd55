#ifndef PLECTIC_NR_HPP
#define PLECTIC_NR_HPP

#include <map>
#include <vector>

#include "plectic/graded.hpp"

namespace plectic {

enum class NrFlavor { symmetric, skew };

inline NrFlavor flavor_of(Convention c) {
  return c == Convention::shifted ? NrFlavor::symmetric : NrFlavor::skew;
}

/// Nijenhuis-Richardson product a cs b (symmetric flavor, shifted maps) or
/// a ca b (skew flavor, unshifted maps): insertion of b into the first slot of a,
/// summed over (arity(b), arity(a)-1)-unshuffles. Arity adds as A+B-1.
/// The skew flavor carries the prefactor (-1)^{|b| (arity(a)-1)} with |b| the weight.
template <class X>
MultiMap<X> nr_product(const MultiMap<X>& a, const MultiMap<X>& b, NrFlavor flavor) {
  if (flavor_of(a.convention()) != flavor || flavor_of(b.convention()) != flavor)
    throw std::invalid_argument("nr_product: flavor does not match the maps' convention");
  const int A = a.arity(), B = b.arity();
  const bool odd = flavor == NrFlavor::skew;
  const int prefactor = odd && ((b.weight() * (A - 1)) % 2 != 0) ? -1 : 1;
  return MultiMap<X>(
      A + B - 1, a.weight() + b.weight(), Symmetry::none, a.convention(),
      [a, b, A, B, odd, prefactor](std::span<const Graded<X>> xs) {
        std::vector<int> degs(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) degs[i] = xs[i].degree;
        const std::vector<int> shape = A > 1 ? std::vector<int>{B, A - 1} : std::vector<int>{B};
        GradedSum<X> acc;
        for_each_unshuffle(shape, [&](std::span<const int> perm) {
          int sgn = koszul_sign(perm, degs);
          if (odd) sgn *= permutation_sign(perm);
          std::vector<Graded<X>> inner(B);
          for (int t = 0; t < B; ++t) inner[t] = xs[perm[t]];
          Graded<X> y = b(inner);
          std::vector<Graded<X>> outer(A);
          outer[0] = y;
          for (int t = 0; t < A - 1; ++t) outer[t + 1] = xs[perm[B + t]];
          acc.add_scaled(Rational(sgn * prefactor), a(outer));
        });
        int d = a.weight() + b.weight();
        for (int g : degs) d += g;
        return homogeneous_part_checked(acc, d, "nr_product");
      });
}

/// Convenience: product in the flavor dictated by the maps' convention.
template <class X>
MultiMap<X> nr_product(const MultiMap<X>& a, const MultiMap<X>& b) {
  return nr_product(a, b, flavor_of(a.convention()));
}

/// Graded commutator [a,b] = a.b - (-1)^{|a||b|} b.a with NR degrees.
template <class X>
MultiMap<X> graded_commutator(const MultiMap<X>& a, const MultiMap<X>& b) {
  if (a.convention() != b.convention())
    throw std::invalid_argument("graded_commutator: convention mismatch");
  int s = (a.nr_degree() * b.nr_degree()) % 2 != 0 ? -1 : 1;
  return nr_product(a, b) - nr_product(b, a).scaled(Rational(s));
}

/// Associator (a.b).c - a.(b.c); identically zero when arity(a) = 1.
template <class X>
MultiMap<X> associator(const MultiMap<X>& a, const MultiMap<X>& b, const MultiMap<X>& c) {
  return nr_product(nr_product(a, b), c) - nr_product(a, nr_product(b, c));
}

/// Explicit double-insertion form of the symmetric-flavor associator:
/// a o (b x c x 1) o B_{arity(b), arity(c), arity(a)-2}, with the Koszul factor
/// for moving c past the first block.
template <class X>
MultiMap<X> associator_explicit(const MultiMap<X>& a, const MultiMap<X>& b, const MultiMap<X>& c) {
  if (flavor_of(a.convention()) != NrFlavor::symmetric)
    throw std::invalid_argument("associator_explicit: symmetric flavor only");
  const int A = a.arity(), B = b.arity(), C = c.arity();
  if (A < 2) return MultiMap<X>::zero(A + B + C - 2, a.weight() + b.weight() + c.weight(),
                                      Symmetry::none, a.convention());
  return MultiMap<X>(
      A + B + C - 2, a.weight() + b.weight() + c.weight(), Symmetry::none, a.convention(),
      [a, b, c, A, B, C](std::span<const Graded<X>> xs) {
        std::vector<int> degs(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) degs[i] = xs[i].degree;
        const std::vector<int> shape = A > 2 ? std::vector<int>{B, C, A - 2} : std::vector<int>{B, C};
        GradedSum<X> acc;
        for_each_unshuffle(shape, [&](std::span<const int> perm) {
          int sgn = koszul_sign(perm, degs);
          int first_block_deg = 0;
          for (int t = 0; t < B; ++t) first_block_deg += degs[perm[t]];
          if ((c.weight() * first_block_deg) % 2 != 0) sgn = -sgn;
          std::vector<Graded<X>> bb(B), cc(C);
          for (int t = 0; t < B; ++t) bb[t] = xs[perm[t]];
          for (int t = 0; t < C; ++t) cc[t] = xs[perm[B + t]];
          std::vector<Graded<X>> outer(A);
          outer[0] = b(bb);
          outer[1] = c(cc);
          for (int t = 0; t < A - 2; ++t) outer[t + 2] = xs[perm[B + C + t]];
          acc.add_scaled(Rational(sgn), a(outer));
        });
        int d = a.weight() + b.weight() + c.weight();
        for (int g : degs) d += g;
        return homogeneous_part_checked(acc, d, "associator_explicit");
      });
}

/// Right pre-Lie defect alpha(a,b,c) - (-1)^{|b||c|} alpha(a,c,b); must vanish.
template <class X>
MultiMap<X> pre_lie_defect(const MultiMap<X>& a, const MultiMap<X>& b, const MultiMap<X>& c) {
  int s = (b.nr_degree() * c.nr_degree()) % 2 != 0 ? -1 : 1;
  return associator(a, b, c) - associator(a, c, b).scaled(Rational(s));
}

/// Left-nested power a . a . ... . a (k factors). For graded symmetric maps this
/// equals the corestriction of the k-th power of the coderivation of a.
template <class X>
MultiMap<X> iterated_power(const MultiMap<X>& a, int k) {
  if (k < 1) throw std::invalid_argument("iterated_power: k must be >= 1");
  MultiMap<X> r = a;
  for (int i = 1; i < k; ++i) r = nr_product(r, a);
  return r;
}

/// Arity-indexed family of maps sharing weight and convention.
template <class X>
struct MapFamily {
  Convention conv = Convention::shifted;
  int weight = 1;
  std::map<int, MultiMap<X>> by_arity;

  const MultiMap<X>* at(int arity) const {
    auto it = by_arity.find(arity);
    return it == by_arity.end() ? nullptr : &it->second;
  }
  void set(MultiMap<X> m) {
    if (m.convention() != conv || m.weight() != weight)
      throw std::invalid_argument("MapFamily: component convention/weight mismatch");
    by_arity.insert_or_assign(m.arity(), std::move(m));
  }
  int max_arity() const { return by_arity.empty() ? 0 : by_arity.rbegin()->first; }
};

/// Componentwise family NR product: (a.b)_r = sum_{i+j=r+1} a_i . b_j.
template <class X>
MapFamily<X> family_nr(const MapFamily<X>& a, const MapFamily<X>& b, int max_arity) {
  if (a.conv != Convention::shifted || b.conv != Convention::shifted)
    throw std::invalid_argument("family_nr: families live in the shifted convention");
  MapFamily<X> out;
  out.conv = a.conv;
  out.weight = a.weight + b.weight;
  for (int r = 1; r <= max_arity; ++r) {
    MultiMap<X> acc;
    for (const auto& [i, ai] : a.by_arity) {
      int j = r + 1 - i;
      const MultiMap<X>* bj = b.at(j);
      if (!bj) continue;
      MultiMap<X> term = nr_product(ai, *bj);
      acc = acc.valid() ? acc + term : term;
    }
    if (acc.valid()) out.by_arity.emplace(r, std::move(acc));
  }
  return out;
}

template <class X>
MapFamily<X> family_commutator(const MapFamily<X>& a, const MapFamily<X>& b, int max_arity) {
  // NR degrees agree with weights in the shifted convention, where families live.
  int s = (a.weight * b.weight) % 2 != 0 ? -1 : 1;
  MapFamily<X> ab = family_nr(a, b, max_arity);
  MapFamily<X> ba = family_nr(b, a, max_arity);
  MapFamily<X> out;
  out.conv = ab.conv;
  out.weight = ab.weight;
  for (int r = 1; r <= max_arity; ++r) {
    const MultiMap<X>* p = ab.at(r);
    const MultiMap<X>* q = ba.at(r);
    if (!p && !q) continue;
    if (p && q)
      out.by_arity.emplace(r, *p - q->scaled(Rational(s)));
    else if (p)
      out.by_arity.emplace(r, *p);
    else
      out.by_arity.emplace(r, q->scaled(Rational(-s)));
  }
  return out;
}

/// L-infinity[1] structure: brackets of weight 1 in the shifted convention.
template <class X>
struct LinftyStructure {
  MapFamily<X> brackets;  // conv = shifted, weight = 1
};

/// Formal word with a rational coefficient (tensor-coalgebra element).
template <class X>
struct Word {
  Rational coeff;
  std::vector<Graded<X>> letters;
};

/// The coderivation of the family applied to a word:
/// sum_i sum_{sigma in Ush(i, n-i)} eps(sigma) m_i(block) (.) rest.
template <class X>
std::vector<Word<X>> coderivation_apply(const MapFamily<X>& m, std::span<const Graded<X>> word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> degs(n);
  for (int i = 0; i < n; ++i) degs[i] = word[i].degree;
  std::vector<Word<X>> out;
  for (int i = 1; i <= n; ++i) {
    const MultiMap<X>* mi = m.at(i);
    if (!mi) continue;
    std::vector<int> shape = i == n ? std::vector<int>{i} : std::vector<int>{i, n - i};
    for_each_unshuffle(shape, [&](std::span<const int> perm) {
      int sgn = koszul_sign(perm, degs);
      std::vector<Graded<X>> block(i);
      for (int t = 0; t < i; ++t) block[t] = word[perm[t]];
      Graded<X> head = (*mi)(block);
      if (is_zero(head.value)) return;
      Word<X> w;
      w.coeff = Rational(sgn);
      w.letters.reserve(n - i + 1);
      w.letters.push_back(head);
      for (int t = i; t < n; ++t) w.letters.push_back(word[perm[t]]);
      out.push_back(std::move(w));
    });
  }
  return out;
}

/// pr_V([Q,Q]/2 (word)) for the coderivation Q of the family: exact zero on every
/// word iff the family is an L-infinity[1] structure (on the spanned inputs).
template <class X>
GradedSum<X> nilpotency_defect(const MapFamily<X>& m, std::span<const Graded<X>> word) {
  GradedSum<X> acc;
  for (const Word<X>& w : coderivation_apply(m, word)) {
    const MultiMap<X>* top = m.at(static_cast<int>(w.letters.size()));
    if (!top) continue;
    acc.add_scaled(w.coeff, (*top)(w.letters));
  }
  return acc;
}

/// m' = m + [p,m] + 1/2! [p,[p,m]] + ..., truncated exactly: nesting depth j
/// contributes to arity r only for j <= r - 1 because p has no unary part.
template <class X>
MapFamily<X> pushforward_structure(const MapFamily<X>& m, const MapFamily<X>& p, int max_arity) {
  if (p.conv != Convention::shifted || p.weight != 0)
    throw std::invalid_argument("pushforward_structure: p must be a degree-0 shifted family");
  if (p.at(1)) throw std::invalid_argument("pushforward_structure: p must vanish on V (unary part)");
  MapFamily<X> result = m;
  MapFamily<X> nested = m;
  Rational inv_fact(1);
  for (int depth = 1; depth <= max_arity - 1; ++depth) {
    nested = family_commutator(p, nested, max_arity);
    inv_fact /= Rational(depth);
    for (const auto& [r, comp] : nested.by_arity) {
      MultiMap<X> term = comp.scaled(inv_fact);
      const MultiMap<X>* cur = result.at(r);
      result.by_arity.insert_or_assign(r, cur ? *cur + term : term);
    }
  }
  return result;
}

/// Components of pr_V(e^{C_p}): Phi_1 = id, Phi_k = sum_{n>=1} (1/n!) p^{.n}|_{arity k}.
/// Requires p|_V = 0 (finiteness); powers are left-nested family products.
template <class X>
std::vector<MultiMap<X>> exp_morphism(const MapFamily<X>& p, int max_arity) {
  if (p.conv != Convention::shifted || p.weight != 0)
    throw std::invalid_argument("exp_morphism: p must be a degree-0 shifted family");
  if (p.at(1)) throw std::invalid_argument("exp_morphism: p must vanish on V (unary part)");
  std::vector<MultiMap<X>> phi(max_arity + 1);
  phi[1] = MultiMap<X>::identity(Convention::shifted);
  for (int k = 2; k <= max_arity; ++k) phi[k] = MultiMap<X>::zero(k, 0, Symmetry::none, Convention::shifted);
  MapFamily<X> power = p;
  Rational inv_fact(1);
  for (int n = 1; n <= max_arity - 1; ++n) {
    if (n > 1) {
      power = family_nr(power, p, max_arity);
      inv_fact /= Rational(n);
    }
    for (const auto& [r, comp] : power.by_arity)
      if (r >= 2 && r <= max_arity) phi[r] = phi[r] + comp.scaled(inv_fact);
  }
  return phi;
}

/// L-infinity[1] morphism data: weight-0 shifted components f_k, k = 1..size-1.
/// Missing components are treated as zero.
template <class VX, class WX>
struct MorphismComponents {
  std::vector<MultiMap<VX, WX>> f;  // f[k] = arity-k component; f[0] unused

  const MultiMap<VX, WX>* at(int k) const {
    if (k < 1 || k >= static_cast<int>(f.size()) || !f[k].valid()) return nullptr;
    return &f[k];
  }
};

namespace detail {

// Ascending partitions k_1 <= ... <= k_l of m, driven through a callback.
inline void for_each_partition(int m, const std::function<void(std::span<const int>)>& fn) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int minimum) {
    if (remaining == 0) {
      fn(parts);
      return;
    }
    for (int next = minimum; next <= remaining; ++next) {
      parts.push_back(next);
      rec(remaining - next, next);
      parts.pop_back();
    }
  };
  rec(m, 1);
}

}  // namespace detail

/// The component S_{l,m}(f): V^{(x)m} -> W^{(x)l} of the coalgebra lift of f,
/// evaluated on a word, as a list of weighted l-letter words. `odd` selects the
/// tensor (P^<, odd Koszul) or symmetric (B^<, Koszul) conventions; `signed_weights`
/// adds the prefactor (-1)^{sum_i |f_{k_i}| (l - i)} of the tensor-world formula.
template <class VX, class WX>
std::vector<Word<WX>> coalgebra_lift_component(const MorphismComponents<VX, WX>& f, int ell,
                                               std::span<const Graded<VX>> word, bool odd,
                                               bool signed_weights) {
  const int m = static_cast<int>(word.size());
  std::vector<int> degs(m);
  for (int i = 0; i < m; ++i) degs[i] = word[i].degree;
  std::vector<Word<WX>> out;
  detail::for_each_partition(m, [&](std::span<const int> parts) {
    if (static_cast<int>(parts.size()) != ell) return;
    std::vector<const MultiMap<VX, WX>*> comps(ell);
    for (int j = 0; j < ell; ++j) {
      comps[j] = f.at(parts[j]);
      if (!comps[j]) return;
    }
    long long sw = 0;
    if (signed_weights)
      for (int j = 0; j < ell - 1; ++j) sw += static_cast<long long>(comps[j]->weight()) * (ell - 1 - j);
    int outer = (sw % 2 != 0) ? -1 : 1;
    std::vector<int> shape(parts.begin(), parts.end());
    for (const auto& [sgn, tuple] :
         apply_block_operator(odd ? BlockKind::PStrict : BlockKind::BStrict,
                              std::span<const int>(shape), word)) {
      // Koszul sign for threading f_{k_j} past the letters of earlier blocks.
      long long interchange = 0;
      int offset = 0;
      int before_deg = 0;
      std::vector<Graded<WX>> letters(ell);
      for (int j = 0; j < ell; ++j) {
        interchange += static_cast<long long>(comps[j]->weight()) * before_deg;
        std::span<const Graded<VX>> block(tuple.data() + offset, parts[j]);
        letters[j] = (*comps[j])(block);
        for (int t = 0; t < parts[j]; ++t) before_deg += tuple[offset + t].degree;
        offset += parts[j];
      }
      int inner = (interchange % 2 != 0) ? -1 : 1;
      Word<WX> w;
      w.coeff = sgn * Rational(outer * inner);
      w.letters = std::move(letters);
      out.push_back(std::move(w));
    }
  });
  return out;
}

/// Morphism defect pr_W(F(Q_V(word))) - pr_W(Q_W(F(word))) at one word; exact zero
/// on every word iff f intertwines the two structures there. Components are
/// weight-0 shifted maps; the source word must carry shifted degrees.
template <class VX, class WX>
GradedSum<WX> verify_morphism(const MorphismComponents<VX, WX>& f, const MapFamily<VX>& mv,
                              const MapFamily<WX>& mw, std::span<const Graded<VX>> word) {
  GradedSum<WX> defect;
  for (const Word<VX>& w : coderivation_apply(mv, word)) {
    const MultiMap<VX, WX>* comp = f.at(static_cast<int>(w.letters.size()));
    if (!comp) continue;
    defect.add_scaled(w.coeff, (*comp)(w.letters));
  }
  const int m = static_cast<int>(word.size());
  for (int ell = 1; ell <= m; ++ell) {
    const MultiMap<WX>* top = mw.at(ell);
    if (!top) continue;
    for (const Word<WX>& w : coalgebra_lift_component(f, ell, word, /*odd=*/false,
                                                      /*signed_weights=*/false))
      defect.add_scaled(-w.coeff, (*top)(w.letters));
  }
  return defect;
}

/// Composition of unshifted (skew-world) morphism component families:
/// (g o f)_m = sum_l g_l o S_{l,m}(f) with P^< unshuffles and the sign
/// (-1)^{sum_i |f_{k_i}| (l - i)}. Component weights must follow the morphism grading w(f_k) = 1-k.
template <class VX, class WX, class ZX>
MorphismComponents<VX, ZX> compose_morphisms(const MorphismComponents<WX, ZX>& g,
                                             const MorphismComponents<VX, WX>& f, int max_arity) {
  for (int k = 1; k < static_cast<int>(f.f.size()); ++k)
    if (f.at(k) && f.f[k].weight() != 1 - k)
      throw std::invalid_argument("compose_morphisms: f_k must have weight 1-k");
  for (int k = 1; k < static_cast<int>(g.f.size()); ++k)
    if (g.at(k) && g.f[k].weight() != 1 - k)
      throw std::invalid_argument("compose_morphisms: g_l must have weight 1-l");
  MorphismComponents<VX, ZX> out;
  out.f.resize(max_arity + 1);
  for (int m = 1; m <= max_arity; ++m) {
    auto fcopy = f;
    auto gcopy = g;
    out.f[m] = MultiMap<VX, ZX>(
        m, 1 - m, Symmetry::none, Convention::unshifted,
        [fcopy, gcopy, m](std::span<const Graded<VX>> xs) {
          GradedSum<ZX> acc;
          for (int ell = 1; ell <= m; ++ell) {
            const MultiMap<WX, ZX>* gl = gcopy.at(ell);
            if (!gl) continue;
            for (const Word<WX>& w : coalgebra_lift_component(fcopy, ell, xs, /*odd=*/true,
                                                              /*signed_weights=*/true))
              acc.add_scaled(w.coeff, (*gl)(w.letters));
          }
          int d = 1 - m;
          for (const auto& x : xs) d += x.degree;
          return homogeneous_part_checked(acc, d, "compose_morphisms");
        });
  }
  return out;
}

}  // namespace plectic

#endif
