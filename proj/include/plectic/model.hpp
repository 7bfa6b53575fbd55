#ifndef PLECTIC_MODEL_HPP
#define PLECTIC_MODEL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "plectic/cartan.hpp"
#include "plectic/linsolve.hpp"

namespace plectic {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotHamiltonianError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedOmegaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelReport {
  bool closed = false;
  bool nondegenerate = false;
  std::string detail;
  bool ok(bool degenerate_allowed) const { return closed && (nondegenerate || degenerate_allowed); }
};

/// Polynomial n-plectic model on R^m: a closed (n+1)-form with nondegeneracy
/// certified by exact rank computation at finitely many rational basepoints.
struct MultisymplecticModel {
  int dimension = 0;
  int n = 0;  // omega has degree n+1
  Form omega;
  std::vector<std::vector<Rational>> basepoints;
  bool degenerate_allowed = false;

  int top_form_degree() const { return n - 1; }  // degree of Hamiltonian forms
};

/// Closedness is exact; nondegeneracy means the contraction matrix has rank m
/// at every basepoint.
ModelReport validate_model(const MultisymplecticModel& model);

/// Throwing wrapper: ModelError unless the report passes (the degenerate flag
/// downgrades nondegeneracy failure to a warning recorded in the report).
void require_valid(const MultisymplecticModel& model);

/// The unique polynomial v with d(alpha) = -iota_v omega, solved exactly
/// monomial by monomial. Requires constant-coefficient omega
/// (UnsupportedOmegaError otherwise); NotHamiltonianError when no polynomial
/// solution exists.
VectorField hamiltonian_vf(const Form& alpha, const MultisymplecticModel& model);

/// Exact check of d(alpha) + iota_v omega = 0.
bool is_hamiltonian_pair(const MultisymplecticModel& model, const VectorField& v, const Form& alpha);

/// Built-in desk models: volume forms on R^3 (n=2), R^4 (n=3), R^6 (n=5).
MultisymplecticModel make_volume_model(int dimension);

}  // namespace plectic

#endif
