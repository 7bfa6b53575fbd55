#include "plectic/sampler.hpp"

#include <algorithm>

namespace plectic {

Rational Sampler::random_coeff(SplitMix64& rng) const {
  long long c = 0;
  while (c == 0) c = rng.next_int(-coeff_bound, coeff_bound);
  return Rational(c);
}

Monomial Sampler::random_monomial(SplitMix64& rng) const {
  Monomial m(model->dimension, 0);
  int total = static_cast<int>(rng.next_index(degree_cap + 1));
  for (int t = 0; t < total; ++t) m[rng.next_index(model->dimension)] += 1;
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

PolyScalar Sampler::random_poly(SplitMix64& rng, int terms) const {
  PolyScalar p;
  for (int t = 0; t < terms; ++t) p.add_term(random_monomial(rng), random_coeff(rng));
  return p;
}

Form Sampler::random_form(SplitMix64& rng, int degree, int terms) const {
  Form f(degree);
  if (degree < 0 || degree > model->dimension) return f;
  for (int t = 0; t < terms; ++t) {
    // random strictly increasing word
    std::vector<int> idx(model->dimension);
    for (int i = 0; i < model->dimension; ++i) idx[i] = i;
    for (int i = model->dimension - 1; i > 0; --i)
      std::swap(idx[i], idx[rng.next_index(i + 1)]);
    IndexWord w(idx.begin(), idx.begin() + degree);
    std::sort(w.begin(), w.end());
    f.add_term(std::move(w), PolyScalar::monomial(random_monomial(rng), random_coeff(rng)));
  }
  return f;
}

VectorField Sampler::random_field(SplitMix64& rng, int terms) const {
  VectorField v;
  for (int t = 0; t < terms; ++t)
    v.add_component(static_cast<int>(rng.next_index(model->dimension)),
                    PolyScalar::monomial(random_monomial(rng), random_coeff(rng)));
  return v;
}

VinElem Sampler::random_section(SplitMix64& rng) const {
  return vin_pair(*model, random_field(rng), random_form(rng, model->n - 1));
}

VinElem Sampler::random_ham(SplitMix64& rng) const {
  Form alpha = random_form(rng, model->n - 1);
  try {
    return ham_pair(*model, alpha);
  } catch (const NotHamiltonianError&) {
    // degenerate models: fall back to a closed form, Hamiltonian with field 0
    Form closed = model->n >= 2 ? exterior_d(random_form(rng, model->n - 2)) : Form(0);
    if (model->n == 1) closed = Form::function(PolyScalar(random_coeff(rng)));
    return vin_pair(*model, {}, closed);
  }
}

VinElem Sampler::random_element(SplitMix64& rng, int degree, bool ham) const {
  if (degree == 0) return ham ? random_ham(rng) : random_section(rng);
  return vin_form(*model, random_form(rng, model->n - 1 + degree));
}

std::vector<VinElem> Sampler::random_word(SplitMix64& rng, int len, int negatives, bool ham) const {
  std::vector<VinElem> w(len);
  for (int i = 0; i < len; ++i) {
    bool negative = i < negatives;
    int depth = negative ? -1 - static_cast<int>(rng.next_index(std::max(1, model->n - 1))) : 0;
    w[i] = random_element(rng, depth, ham);
  }
  // deterministic shuffle of slot order
  for (int i = len - 1; i > 0; --i) std::swap(w[i], w[rng.next_index(i + 1)]);
  return w;
}

std::vector<VinElem> Sampler::seeded_word(SplitMix64& rng, int len, int pattern, bool ham) const {
  int negatives = pattern % 3;  // 0, 1, or 2 non-top entries
  if (negatives >= len) negatives = len - 1;
  return random_word(rng, len, negatives, ham);
}

}  // namespace plectic
