#include "plectic/poly.hpp"

#include <stdexcept>

namespace plectic {

namespace {
void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}
}  // namespace

PolyScalar::PolyScalar(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

PolyScalar PolyScalar::variable(int index, int exponent) {
  Monomial m(index + 1, 0);
  m[index] = exponent;
  return monomial(std::move(m), Rational(1));
}

PolyScalar PolyScalar::monomial(Monomial m, const Rational& c) {
  PolyScalar p;
  p.add_term(std::move(m), c);
  return p;
}

void PolyScalar::add_term(Monomial m, const Rational& c) {
  if (c.is_zero()) return;
  trim(m);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool PolyScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational PolyScalar::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("PolyScalar: not constant");
  return terms_.begin()->second;
}

PolyScalar PolyScalar::operator+(const PolyScalar& o) const {
  PolyScalar r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

PolyScalar PolyScalar::operator-(const PolyScalar& o) const { return *this + (-o); }

PolyScalar PolyScalar::operator-() const { return scaled(Rational(-1)); }

PolyScalar PolyScalar::scaled(const Rational& c) const {
  PolyScalar r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

PolyScalar PolyScalar::operator*(const PolyScalar& o) const {
  PolyScalar r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(std::max(ma.size(), mb.size()), 0);
      for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      r.add_term(std::move(m), ca * cb);
    }
  }
  return r;
}

PolyScalar PolyScalar::derivative(int index) const {
  PolyScalar r;
  for (const auto& [m, c] : terms_) {
    if (index >= static_cast<int>(m.size()) || m[index] == 0) continue;
    Monomial d = m;
    d[index] -= 1;
    r.add_term(std::move(d), c * Rational(m[index]));
  }
  return r;
}

Rational PolyScalar::evaluate(const std::vector<Rational>& point) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      Rational x = i < point.size() ? point[i] : Rational(0);
      t *= x.pow(m[i]);
    }
    acc += t;
  }
  return acc;
}

int PolyScalar::total_degree() const {
  int deg = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (int e : m) d += e;
    if (d > deg) deg = d;
  }
  return deg;
}

}  // namespace plectic
