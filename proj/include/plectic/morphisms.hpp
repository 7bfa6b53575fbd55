#ifndef PLECTIC_MORPHISMS_HPP
#define PLECTIC_MORPHISMS_HPP

#include "plectic/vin.hpp"

namespace plectic {

// --- the embedding --------------------------------------------------------

/// Closed-formula embedding component on Ham pairs (unshifted, skew):
/// psi_1 = id (the field is already attached), and for k >= 2
/// psi_k = B_{k-1} sum_j (-1)^{k-j} iota_{X_1}...hat iota_{X_j}...iota_{X_k} (f_j + alpha_j).
MultiMap<VinVal> embedding_component_map(const MultisymplecticModel& model, int k);

/// Independent route: phi_1 = id, phi_k = (2^{k-1}/(k-1)! B_{k-1}) <,>_-^{ca (k-1)}.
MultiMap<VinVal> embedding_pairing_route_map(int k);

/// <,>_-^{ca m} (arity m + 1), left-nested (self-associators vanish).
MultiMap<VinVal> pairing_power_map(int m);

/// Shifted morphism components Phi_k = (2^{k-1}/(k-1)! B_{k-1}) S^{k-1}, weight 0.
MorphismComponents<VinVal, VinVal> embedding_shifted_components(int max_arity);

// --- iterated pairing evaluations -----------------------------------------

/// Closed form of <,>_-^{ca m}(B, X_1, ..., X_m) = (-varsigma(m) m!/2^m) iota_{X_m}...iota_{X_1} B.
Form iterated_pairing_closed(const Form& b, std::span<const VectorField> fields);

// --- Lie algebras and comoment maps ----------------------------------------

/// Coordinates of a Lie algebra element in a fixed basis (degree-0 carrier).
struct LieVal {
  std::map<int, Rational> coords;
};
LieVal operator+(const LieVal& a, const LieVal& b);
LieVal scale(const Rational& c, const LieVal& a);
bool is_zero(const LieVal& a);
Graded<LieVal> lie_basis(int index);

/// Finite-dimensional Lie algebra by structure constants: [e_i, e_j] = sum_k c[i][j][k] e_k.
struct LieAlgebra {
  int dim = 0;
  std::vector<std::vector<std::vector<Rational>>> c;  // c[i][j][k]

  static LieAlgebra abelian(int dim);
  bool is_abelian() const;
  /// Skew bilinear bracket map (unshifted, weight 0).
  MultiMap<LieVal> bracket_map() const;
  /// Shifted one-component family for morphism checks.
  MapFamily<LieVal> shifted_family(int max_arity) const;
};

/// Homotopy comoment map for an omega-preserving action: components
/// f_k : wedge^k g -> Omega^{n-k}, stored by values on increasing basis words;
/// f_1 is paired with the action rho.
struct ComomentMap {
  MultisymplecticModel model;
  LieAlgebra algebra;
  std::vector<VectorField> rho;            // rho(e_i)
  std::vector<std::map<IndexWord, Form>> f;  // f[k][word] for k = 1..n, word ascending

  int max_component() const { return static_cast<int>(f.size()) - 1; }
  /// f_k as a skew multilinear map into the observables carrier; k = 1 attaches
  /// the action field, higher components are pure forms.
  MultiMap<LieVal, VinVal> component_map(int k) const;
  MorphismComponents<LieVal, VinVal> components(int max_arity) const;

  /// rho preserves omega and d f_1 = -iota_rho omega, exactly.
  bool action_compatible() const;
};

/// Builds the comoment for a family of commuting omega-preserving fields by
/// solving each arity's defect equation with the Euler homotopy primitive;
/// requires the volume-model situation where the primitives stay polynomial.
ComomentMap solve_abelian_comoment(const MultisymplecticModel& model,
                                   const std::vector<VectorField>& action);

/// Morphism defect of the comoment against the shifted Rogers structure at one
/// basis word; exact zero everywhere iff f is a homotopy comoment map.
GradedSum<VinVal> comoment_defect(const ComomentMap& f, std::span<const Graded<LieVal>> word,
                                  int max_arity);

// --- gauge transformations --------------------------------------------------

struct GaugeData {
  Form b;                           // the n-form B
  MultisymplecticModel base;        // omega
  MultisymplecticModel twisted;     // omega + dB
};

/// Validates omega + dB (nondegeneracy unless the base model allows degenerate).
GaugeData make_gauge(const MultisymplecticModel& model, Form b);

/// tau_B: strict isomorphism (X, alpha) -> (X, alpha + iota_X B), identity in
/// negative degrees (unshifted, arity 1, weight 0).
MultiMap<VinVal> gauge_tau_map(const GaugeData& gauge);

/// Twisted comoment f~_k = f_k + varsigma(k+1) iota_{rho(.)} B for omega + dB.
/// Requires L_{rho(e_i)} B = 0 for every basis field.
ComomentMap twist_comoment(const ComomentMap& f, const GaugeData& gauge);

/// b_k(xi_1..xi_k) = varsigma(k+1) iota_{rho(xi_k)}...iota_{rho(xi_1)} B.
Form twist_term(const ComomentMap& f, const Form& b, std::span<const int> basis_word);

// --- the pentagon ------------------------------------------------------------

struct PentagonReport {
  bool pass = true;
  std::string detail;  // first failing (arity, word) when not passing
};

/// Checks (tau_B o phi o f)_m = (phi o f~)_m exactly for m <= max_arity on all
/// increasing basis words, plus the scalar recursion
/// sum_{l=1}^m C(m, l-1) B_{l-1} = 0 for 2 <= m <= scalar_max.
PentagonReport pentagon_check(const ComomentMap& f, const GaugeData& gauge, int max_arity,
                              int scalar_max = 20);

/// Built-in desk examples: R^3 volume with the abelian translations in x0, x1
/// and B = x2 dx0^dx1; R^4 volume with translations in x0..x2 and
/// B = -x3 dx0^dx1^dx2.
ComomentMap desk_comoment_r3();
GaugeData desk_gauge_r3();
ComomentMap desk_comoment_r4();
GaugeData desk_gauge_r4();

}  // namespace plectic

#endif
