#ifndef PLECTIC_GRADED_HPP
#define PLECTIC_GRADED_HPP

#include <cassert>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plectic/rational.hpp"
#include "plectic/unshuffle.hpp"

namespace plectic {

// A payload type X models a rational vector space through ADL free functions:
//   X operator+(X, X); X scale(const Rational&, const X&); bool is_zero(const X&).
// Default-constructed X is the zero vector.

/// Homogeneous element of a graded carrier.
template <class X>
struct Graded {
  int degree = 0;
  X value{};
};

/// Formal sum of homogeneous elements, one slot per degree, zero parts dropped.
template <class X>
class GradedSum {
public:
  GradedSum() = default;
  GradedSum(const Graded<X>& g) { add(g); }

  void add(const Graded<X>& g) {
    if (is_zero(g.value)) return;
    auto it = parts_.find(g.degree);
    if (it == parts_.end()) {
      parts_.emplace(g.degree, g.value);
    } else {
      it->second = it->second + g.value;
      if (is_zero(it->second)) parts_.erase(it);
    }
  }
  void add_scaled(const Rational& c, const Graded<X>& g) {
    if (c.is_zero()) return;
    add(Graded<X>{g.degree, scale(c, g.value)});
  }
  void add(const GradedSum& o) {
    for (const auto& [d, v] : o.parts_) add(Graded<X>{d, v});
  }
  void add_scaled(const Rational& c, const GradedSum& o) {
    for (const auto& [d, v] : o.parts_) add_scaled(c, Graded<X>{d, v});
  }
  void subtract(const GradedSum& o) { add_scaled(Rational(-1), o); }

  bool zero() const { return parts_.empty(); }
  const std::map<int, X>& parts() const { return parts_; }

  /// Homogeneous component (zero if absent).
  X part(int degree) const {
    auto it = parts_.find(degree);
    return it == parts_.end() ? X{} : it->second;
  }

private:
  std::map<int, X> parts_;
};

/// Extracts the degree-d part, insisting nothing else is present.
template <class X>
X homogeneous_part_checked(const GradedSum<X>& s, int d, const char* who) {
  for (const auto& [deg, v] : s.parts())
    if (deg != d) throw std::logic_error(std::string(who) + ": inhomogeneous result");
  return s.part(d);
}

enum class Symmetry { symmetric, skew, none };
enum class Convention { shifted, unshifted };

/// Graded multilinear map of fixed arity and weight with a declared symmetry.
/// Evaluation takes homogeneous elements; mixed elements are handled by
/// distributing over homogeneous parts (eval_on_sums).
template <class In, class Out = In>
class MultiMap {
public:
  using EvalFn = std::function<Out(std::span<const Graded<In>>)>;

  MultiMap() = default;
  MultiMap(int arity, int weight, Symmetry sym, Convention conv, EvalFn eval)
      : arity_(arity), weight_(weight), sym_(sym), conv_(conv), eval_(std::move(eval)) {
    if (arity_ < 1) throw std::invalid_argument("MultiMap: arity must be >= 1");
  }

  static MultiMap zero(int arity, int weight, Symmetry sym, Convention conv) {
    return MultiMap(arity, weight, sym, conv, [](std::span<const Graded<In>>) { return Out{}; });
  }

  int arity() const { return arity_; }
  int weight() const { return weight_; }
  Symmetry symmetry() const { return sym_; }
  Convention convention() const { return conv_; }
  bool valid() const { return static_cast<bool>(eval_); }

  /// Degree inside the Nijenhuis-Richardson algebra: the weight in the shifted
  /// convention, weight + arity - 1 in the unshifted one.
  int nr_degree() const { return conv_ == Convention::shifted ? weight_ : weight_ + arity_ - 1; }

  Graded<Out> operator()(std::span<const Graded<In>> xs) const {
    assert(static_cast<int>(xs.size()) == arity_);
    int d = weight_;
    for (const auto& x : xs) d += x.degree;
    return Graded<Out>{d, eval_(xs)};
  }
  Graded<Out> operator()(const std::vector<Graded<In>>& xs) const {
    return (*this)(std::span<const Graded<In>>(xs));
  }

  MultiMap scaled(const Rational& c) const {
    auto self = *this;
    return MultiMap(arity_, weight_, sym_, conv_,
                    [self, c](std::span<const Graded<In>> xs) { return scale(c, self.eval_(xs)); });
  }

  MultiMap operator+(const MultiMap& o) const {
    if (!valid()) return o;
    if (!o.valid()) return *this;
    if (arity_ != o.arity_ || weight_ != o.weight_ || conv_ != o.conv_)
      throw std::invalid_argument("MultiMap: sum of incompatible maps");
    Symmetry s = sym_ == o.sym_ ? sym_ : Symmetry::none;
    auto a = *this;
    auto b = o;
    return MultiMap(arity_, weight_, s, conv_,
                    [a, b](std::span<const Graded<In>> xs) { return a.eval_(xs) + b.eval_(xs); });
  }
  MultiMap operator-(const MultiMap& o) const { return *this + o.scaled(Rational(-1)); }

  static MultiMap identity(Convention conv) {
    return MultiMap(1, 0, Symmetry::symmetric, conv,
                    [](std::span<const Graded<In>> xs) { return xs[0].value; });
  }

private:
  int arity_ = 1;
  int weight_ = 0;
  Symmetry sym_ = Symmetry::none;
  Convention conv_ = Convention::shifted;
  EvalFn eval_;
};

/// Multilinear extension to formal sums: expands over homogeneous parts.
template <class In, class Out>
GradedSum<Out> eval_on_sums(const MultiMap<In, Out>& f, std::span<const GradedSum<In>> xs) {
  assert(static_cast<int>(xs.size()) == f.arity());
  GradedSum<Out> out;
  std::vector<Graded<In>> tuple(xs.size());
  std::function<void(size_t)> expand = [&](size_t slot) {
    if (slot == xs.size()) {
      out.add(f(tuple));
      return;
    }
    for (const auto& [d, v] : xs[slot].parts()) {
      tuple[slot] = Graded<In>{d, v};
      expand(slot + 1);
    }
  };
  expand(0);
  return out;
}

/// Sign of the decalage isomorphism on an n-tuple of unshifted degrees:
/// (-1)^{(n-1)|u_1| + (n-2)|u_2| + ... + |u_{n-1}|}.
inline int decalage_sign(std::span<const int> unshifted_degrees) {
  long long e = 0;
  int n = static_cast<int>(unshifted_degrees.size());
  for (int i = 0; i < n - 1; ++i) e += static_cast<long long>(n - 1 - i) * unshifted_degrees[i];
  return (e % 2 == 0) ? 1 : -1;
}

/// Shifts a tuple into the [1] convention (degrees drop by one) and returns the
/// decalage sign computed from the unshifted degrees.
template <class X>
std::pair<std::vector<Graded<X>>, int> decalage_element(std::span<const Graded<X>> xs) {
  std::vector<int> degs(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) degs[i] = xs[i].degree;
  std::vector<Graded<X>> shifted(xs.begin(), xs.end());
  for (auto& g : shifted) --g.degree;
  return {std::move(shifted), decalage_sign(degs)};
}

/// Dec: skew map on V (unshifted) -> graded symmetric map on V[1]; also applies
/// componentwise to maps between different carriers (morphism components).
/// Shifted weight is weight + arity - 1.
template <class In, class Out>
MultiMap<In, Out> decalage_map(const MultiMap<In, Out>& m) {
  if (m.convention() != Convention::unshifted)
    throw std::invalid_argument("decalage_map: expects an unshifted map");
  if (m.symmetry() == Symmetry::symmetric)
    throw std::invalid_argument("decalage_map: expects a skew (or untagged) map");
  int k = m.arity();
  Symmetry sym = m.symmetry() == Symmetry::skew ? Symmetry::symmetric : Symmetry::none;
  return MultiMap<In, Out>(k, m.weight() + k - 1, sym, Convention::shifted,
                           [m](std::span<const Graded<In>> xs) {
                             std::vector<Graded<In>> unshifted(xs.begin(), xs.end());
                             std::vector<int> degs(xs.size());
                             for (size_t i = 0; i < xs.size(); ++i) {
                               ++unshifted[i].degree;
                               degs[i] = unshifted[i].degree;
                             }
                             int s = decalage_sign(degs);
                             Graded<Out> y = m(unshifted);
                             return scale(Rational(s), y.value);
                           });
}

/// Dec^{-1}: graded symmetric map on V[1] -> skew map on V.
template <class In, class Out>
MultiMap<In, Out> decalage_map_inverse(const MultiMap<In, Out>& m) {
  if (m.convention() != Convention::shifted)
    throw std::invalid_argument("decalage_map_inverse: expects a shifted map");
  if (m.symmetry() == Symmetry::skew)
    throw std::invalid_argument("decalage_map_inverse: expects a symmetric (or untagged) map");
  int k = m.arity();
  Symmetry sym = m.symmetry() == Symmetry::symmetric ? Symmetry::skew : Symmetry::none;
  return MultiMap<In, Out>(k, m.weight() - k + 1, sym, Convention::unshifted,
                           [m](std::span<const Graded<In>> xs) {
                             std::vector<Graded<In>> shifted(xs.begin(), xs.end());
                             std::vector<int> degs(xs.size());
                             for (size_t i = 0; i < xs.size(); ++i) {
                               degs[i] = xs[i].degree;
                               --shifted[i].degree;
                             }
                             int s = decalage_sign(degs);
                             Graded<Out> y = m(shifted);
                             return scale(Rational(s), y.value);
                           });
}

enum class BlockKind { B, P, BStrict, PStrict };

/// Signed sum over the unshuffle family of the given block shape.
/// B uses the Koszul sign, P the odd Koszul sign; the Strict variants keep only
/// unshuffles whose equal-size consecutive blocks have increasing leading entries.
template <class X>
std::vector<std::pair<Rational, std::vector<Graded<X>>>> apply_block_operator(
    BlockKind kind, std::span<const int> shape, std::span<const Graded<X>> xs) {
  int total = 0;
  for (int s : shape) total += s;
  if (total != static_cast<int>(xs.size())) throw std::invalid_argument("apply_block_operator: shape mismatch");
  std::vector<int> degs(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) degs[i] = xs[i].degree;

  bool strict = kind == BlockKind::BStrict || kind == BlockKind::PStrict;
  bool odd = kind == BlockKind::P || kind == BlockKind::PStrict;

  std::vector<std::pair<Rational, std::vector<Graded<X>>>> out;
  for_each_unshuffle(shape, [&](std::span<const int> perm) {
    if (strict) {
      int pos = 0;
      for (size_t j = 1; j < shape.size(); ++j) {
        int prev_start = pos;
        pos += shape[j - 1];
        if (shape[j - 1] == shape[j] && !(perm[prev_start] < perm[pos])) return;
      }
    }
    int sgn = koszul_sign(perm, degs);
    if (odd) sgn *= permutation_sign(perm);
    std::vector<Graded<X>> permuted(xs.size());
    for (size_t t = 0; t < xs.size(); ++t) permuted[t] = xs[perm[t]];
    out.emplace_back(Rational(sgn), std::move(permuted));
  });
  return out;
}

/// Checks the declared symmetry of `f` at `xs` under every adjacent transposition:
/// symmetric maps change by the Koszul sign, skew maps by minus the Koszul sign.
template <class In, class Out>
bool probe_symmetry(const MultiMap<In, Out>& f, std::span<const Graded<In>> xs) {
  if (f.symmetry() == Symmetry::none || f.arity() == 1) return true;
  Graded<Out> base = f(xs);
  for (int i = 0; i + 1 < f.arity(); ++i) {
    std::vector<Graded<In>> swapped(xs.begin(), xs.end());
    std::swap(swapped[i], swapped[i + 1]);
    int eps = (xs[i].degree & 1) && (xs[i + 1].degree & 1) ? -1 : 1;
    if (f.symmetry() == Symmetry::skew) eps = -eps;
    Graded<Out> other = f(swapped);
    GradedSum<Out> diff(base);
    diff.add_scaled(Rational(-eps), other);
    if (!diff.zero()) return false;
  }
  return true;
}

}  // namespace plectic

#endif
