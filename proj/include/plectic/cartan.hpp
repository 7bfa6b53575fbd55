#ifndef PLECTIC_CARTAN_HPP
#define PLECTIC_CARTAN_HPP

#include <map>
#include <vector>

#include "plectic/poly.hpp"

namespace plectic {

/// Strictly increasing word of coordinate indices (the basis covector dx_I).
using IndexWord = std::vector<int>;

/// Sparse exterior form on R^m with polynomial coefficients; homogeneous degree.
class Form {
public:
  Form() = default;
  explicit Form(int degree) : degree_(degree) {}
  static Form function(const PolyScalar& f) {
    Form r(0);
    r.add_term({}, f);
    return r;
  }
  static Form basis(IndexWord word);  // dx_I with coefficient 1

  int degree() const { return degree_; }
  bool zero() const { return terms_.empty(); }
  const std::map<IndexWord, PolyScalar>& terms() const { return terms_; }
  PolyScalar coefficient(const IndexWord& word) const;

  void add_term(IndexWord word, const PolyScalar& c);

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator-() const;
  Form scaled(const Rational& c) const;
  Form scaled(const PolyScalar& c) const;
  bool operator==(const Form& o) const {
    if (zero() && o.zero()) return true;  // zero forms compare equal across degree tags
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

  /// Constant-coefficient test (every stored polynomial is constant).
  bool is_constant() const;

  /// Evaluation of all coefficients at a rational point.
  std::map<IndexWord, Rational> evaluate(const std::vector<Rational>& point) const;

private:
  int degree_ = 0;
  std::map<IndexWord, PolyScalar> terms_;
};

/// Polynomial vector field on R^m: coordinate index -> coefficient.
class VectorField {
public:
  VectorField() = default;
  static VectorField basis(int index) {
    VectorField v;
    v.add_component(index, PolyScalar(Rational(1)));
    return v;
  }

  bool zero() const { return comps_.empty(); }
  const std::map<int, PolyScalar>& components() const { return comps_; }
  PolyScalar component(int index) const;
  void add_component(int index, const PolyScalar& c);

  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  VectorField scaled(const Rational& c) const;
  bool operator==(const VectorField& o) const { return comps_ == o.comps_; }

  /// Derivation action on functions.
  PolyScalar apply(const PolyScalar& f) const;

private:
  std::map<int, PolyScalar> comps_;
};

/// Exterior product; graded-commutative, associative.
Form wedge(const Form& a, const Form& b);

/// Exterior derivative.
Form exterior_d(const Form& a);

/// Interior product (contraction); graded derivation of degree -1.
Form contract(const VectorField& X, const Form& a);

/// Lie derivative via the Cartan magic formula d iota + iota d.
Form lie_derivative(const VectorField& X, const Form& a);

/// Commutator of derivations.
VectorField vf_bracket(const VectorField& X, const VectorField& Y);

/// Primitive of a closed polynomial form via the Euler-field homotopy operator:
/// each piece of polynomial degree p and form degree k >= 1 contributes
/// iota_E / (p + k). Throws if the input is not closed (or has a constant
/// 0-form part, which has no primitive).
Form poincare_primitive(const Form& a);

}  // namespace plectic

#endif
