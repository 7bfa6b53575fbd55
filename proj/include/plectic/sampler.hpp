#ifndef PLECTIC_SAMPLER_HPP
#define PLECTIC_SAMPLER_HPP

#include "plectic/rng.hpp"
#include "plectic/vin.hpp"

namespace plectic {

/// Deterministic generators for test data: sparse polynomial coefficients of
/// bounded total degree with small integer coefficients, seeded via splitmix64.
struct Sampler {
  const MultisymplecticModel* model = nullptr;
  int degree_cap = 2;   // max total degree of polynomial coefficients
  int coeff_bound = 3;  // coefficients drawn from [-bound, bound] \ {0}

  explicit Sampler(const MultisymplecticModel& m) : model(&m) {}

  Rational random_coeff(SplitMix64& rng) const;
  Monomial random_monomial(SplitMix64& rng) const;
  PolyScalar random_poly(SplitMix64& rng, int terms = 2) const;
  Form random_form(SplitMix64& rng, int degree, int terms = 2) const;
  VectorField random_field(SplitMix64& rng, int terms = 2) const;

  /// Degree-0 element with independent field and (n-1)-form.
  VinElem random_section(SplitMix64& rng) const;
  /// Degree-0 Hamiltonian pair (volume models: every (n-1)-form qualifies).
  VinElem random_ham(SplitMix64& rng) const;
  /// Homogeneous element of the requested carrier degree; degree-0 entries are
  /// Hamiltonian pairs when `ham` is set, arbitrary sections otherwise.
  VinElem random_element(SplitMix64& rng, int degree, bool ham) const;

  /// Word of `len` homogeneous elements with `negatives` entries pushed below
  /// degree 0 (at deterministic slots), the rest at degree 0.
  std::vector<VinElem> random_word(SplitMix64& rng, int len, int negatives, bool ham) const;

  /// Unshifted degree pattern for a word: degree-0 slots and rotating negative
  /// depths in [-(n-1), -1].
  std::vector<VinElem> seeded_word(SplitMix64& rng, int len, int pattern, bool ham) const;
};

}  // namespace plectic

#endif
