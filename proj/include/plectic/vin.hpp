#ifndef PLECTIC_VIN_HPP
#define PLECTIC_VIN_HPP

#include "plectic/graded.hpp"
#include "plectic/model.hpp"
#include "plectic/nr.hpp"

namespace plectic {

/// One homogeneous slice of the Vinogradov carrier (or its all-degrees extension):
/// a vector field plus a single exterior form. The field may be nonzero only in
/// carrier degree 0; the form degree is n-1 + carrier degree.
struct VinVal {
  VectorField field;
  Form form;  // zero forms act as wildcards under addition
};

VinVal operator+(const VinVal& a, const VinVal& b);
VinVal scale(const Rational& c, const VinVal& a);
bool is_zero(const VinVal& a);

using VinElem = Graded<VinVal>;

/// Degree-0 element (X, alpha).
VinElem vin_pair(const MultisymplecticModel& model, VectorField X, Form alpha);
/// Pure-form element; carrier degree = deg(form) - (n-1).
VinElem vin_form(const MultisymplecticModel& model, Form f);
/// Pure-field element of degree 0.
VinElem vin_field(VectorField X);
/// Degree-0 Hamiltonian pair (v_alpha, alpha); solves for the field.
VinElem ham_pair(const MultisymplecticModel& model, Form alpha);

/// <a,b>_- (sign = -1) and <a,b>_+ (sign = +1) on payloads:
/// (iota_{X_1} form_2 -+ iota_{X_2} form_1)/2.
Form pairing_payload(int sign, const VinVal& a, const VinVal& b);

/// Twisted higher Courant bracket of two degree-0 payloads:
/// ([X1,X2], L_{X1}a2 - L_{X2}a1 - d<e1,e2>_- + iota_{X1} iota_{X2} twist).
VinVal courant_payload(const VinVal& e1, const VinVal& e2, const Form* twist);

/// [w, Y1, Y2]_3 = -T_0(w, Y1, Y2): the untwisted ternary bracket with a pure-form
/// first slot (any degree) and two plain vector fields.
VinVal untwisted_ternary(const VinElem& w, const VectorField& y1, const VectorField& y2);

// --- unshifted skew-world operator suite -----------------------------------

/// <,>_- as an arity-2, weight -1, skew map on the all-degrees carrier.
MultiMap<VinVal> pairing_minus_map();
/// <,>_+ : arity 2, weight -1, graded symmetric.
MultiMap<VinVal> pairing_plus_map();

/// Rogers bracket pi_k transferred to Ham pairs: pi_1 = d on negative degrees,
/// pi_k = varsigma(k) iota_{X_k}...iota_{X_1} omega on all-degree-0 tuples
/// (with Hamiltonian field [X_1, X_2] attached at k = 2), zero otherwise.
MultiMap<VinVal> rogers_pi_map(const MultisymplecticModel& model, int k);

/// Vinogradov bracket mu_k (omega-twisted when `twisted`, else the T_0 family):
/// mu_1 = d, mu_2 by degree cases, mu_3 = -T, odd k >= 5 via the
/// Bernoulli-weighted contraction formula, even k >= 4 identically zero.
MultiMap<VinVal> vinogradov_mu_map(const MultisymplecticModel& model, int k, bool twisted = true);

// --- shifted symmetric-world suite ------------------------------------------

/// Bold S = Dec(<,>_-): arity 2, weight 0, graded symmetric on the shifted
/// carrier; vanishes whenever both entries have shifted degree <= -2.
MultiMap<VinVal> bold_s_map();

/// Shifted Rogers family {bold pi_k}, k = 1..max_arity.
MapFamily<VinVal> rogers_shifted_family(const MultisymplecticModel& model, int max_arity);

/// Shifted Vinogradov family {bold mu_k} (restricted to A when fed Ham pairs).
MapFamily<VinVal> vinogradov_shifted_family(const MultisymplecticModel& model, int max_arity);

/// The Ansatz p = sum_k c_k S^k with c_k = (-1)^{k+1} B_k 2^k/(k k!);
/// components up to arity max_arity (S^k has arity k+1).
MapFamily<VinVal> ansatz_p_family(int max_arity);

}  // namespace plectic

#endif
