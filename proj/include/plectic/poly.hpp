#ifndef PLECTIC_POLY_HPP
#define PLECTIC_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "plectic/rational.hpp"

namespace plectic {

/// Exponent multi-index; trailing zeros trimmed, so x0^2 is {2} in any dimension.
using Monomial = std::vector<int>;

/// Multivariate polynomial over the rationals, sparse. No zero coefficients stored.
class PolyScalar {
public:
  PolyScalar() = default;
  PolyScalar(const Rational& c);
  static PolyScalar variable(int index, int exponent = 1);
  static PolyScalar monomial(Monomial m, const Rational& c);

  bool zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // valid when is_constant()
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  PolyScalar operator+(const PolyScalar& o) const;
  PolyScalar operator-(const PolyScalar& o) const;
  PolyScalar operator*(const PolyScalar& o) const;
  PolyScalar operator-() const;
  PolyScalar scaled(const Rational& c) const;
  bool operator==(const PolyScalar& o) const { return terms_ == o.terms_; }

  /// Partial derivative with respect to variable `index`.
  PolyScalar derivative(int index) const;

  /// Evaluation at a rational point (coordinates beyond point.size() read as 0).
  Rational evaluate(const std::vector<Rational>& point) const;

  int total_degree() const;  // -1 for the zero polynomial

  void add_term(Monomial m, const Rational& c);

private:
  std::map<Monomial, Rational> terms_;
};

}  // namespace plectic

#endif
