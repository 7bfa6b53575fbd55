#include "plectic/cartan.hpp"

#include <algorithm>
#include <stdexcept>

namespace plectic {

Form Form::basis(IndexWord word) {
  Form r(static_cast<int>(word.size()));
  r.add_term(std::move(word), PolyScalar(Rational(1)));
  return r;
}

PolyScalar Form::coefficient(const IndexWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? PolyScalar() : it->second;
}

void Form::add_term(IndexWord word, const PolyScalar& c) {
  if (c.zero()) return;
  if (static_cast<int>(word.size()) != degree_) throw std::invalid_argument("Form: word/degree mismatch");
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] >= word[i + 1]) throw std::invalid_argument("Form: index word must strictly increase");
  auto it = terms_.find(word);
  if (it == terms_.end()) {
    terms_.emplace(std::move(word), c);
  } else {
    it->second = it->second + c;
    if (it->second.zero()) terms_.erase(it);
  }
}

Form Form::operator+(const Form& o) const {
  if (o.zero()) return *this;
  if (zero()) return o;
  if (degree_ != o.degree_) throw std::invalid_argument("Form: degree mismatch in sum");
  Form r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator-() const { return scaled(Rational(-1)); }

Form Form::scaled(const Rational& c) const {
  Form r(degree_);
  if (c.is_zero()) return r;
  for (const auto& [w, p] : terms_) r.terms_.emplace(w, p.scaled(c));
  return r;
}

Form Form::scaled(const PolyScalar& c) const {
  Form r(degree_);
  for (const auto& [w, p] : terms_) r.add_term(w, p * c);
  return r;
}

bool Form::is_constant() const {
  for (const auto& [w, p] : terms_)
    if (!p.is_constant()) return false;
  return true;
}

std::map<IndexWord, Rational> Form::evaluate(const std::vector<Rational>& point) const {
  std::map<IndexWord, Rational> r;
  for (const auto& [w, p] : terms_) {
    Rational v = p.evaluate(point);
    if (!v.is_zero()) r.emplace(w, v);
  }
  return r;
}

PolyScalar VectorField::component(int index) const {
  auto it = comps_.find(index);
  return it == comps_.end() ? PolyScalar() : it->second;
}

void VectorField::add_component(int index, const PolyScalar& c) {
  if (c.zero()) return;
  auto it = comps_.find(index);
  if (it == comps_.end()) {
    comps_.emplace(index, c);
  } else {
    it->second = it->second + c;
    if (it->second.zero()) comps_.erase(it);
  }
}

VectorField VectorField::operator+(const VectorField& o) const {
  VectorField r = *this;
  for (const auto& [i, c] : o.comps_) r.add_component(i, c);
  return r;
}

VectorField VectorField::operator-(const VectorField& o) const { return *this + o.scaled(Rational(-1)); }

VectorField VectorField::scaled(const Rational& c) const {
  VectorField r;
  if (c.is_zero()) return r;
  for (const auto& [i, p] : comps_) r.comps_.emplace(i, p.scaled(c));
  return r;
}

PolyScalar VectorField::apply(const PolyScalar& f) const {
  PolyScalar r;
  for (const auto& [i, c] : comps_) r = r + c * f.derivative(i);
  return r;
}

namespace {

// Merge two strictly increasing words; returns false on a common index,
// otherwise fills `out` and the sign of the shuffle that sorts a..b.
bool merge_words(const IndexWord& a, const IndexWord& b, IndexWord& out, int& sign) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  int inversions = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  sign = inversions % 2 == 0 ? 1 : -1;
  return true;
}

}  // namespace

Form wedge(const Form& a, const Form& b) {
  Form r(a.degree() + b.degree());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      IndexWord w;
      int sign;
      if (!merge_words(wa, wb, w, sign)) continue;
      r.add_term(std::move(w), (ca * cb).scaled(Rational(sign)));
    }
  }
  return r;
}

Form exterior_d(const Form& a) {
  Form r(a.degree() + 1);
  for (const auto& [w, c] : a.terms()) {
    // collect the variables the coefficient actually depends on
    int nvars = 0;
    for (const auto& [m, v] : c.terms()) nvars = std::max<int>(nvars, static_cast<int>(m.size()));
    for (int q = 0; q < nvars; ++q) {
      PolyScalar dq = c.derivative(q);
      if (dq.zero()) continue;
      // dx_q ^ dx_w : skip if q appears; sign = (-1)^{#(indices < q)}
      if (std::binary_search(w.begin(), w.end(), q)) continue;
      IndexWord nw = w;
      auto pos = std::lower_bound(nw.begin(), nw.end(), q);
      int before = static_cast<int>(pos - nw.begin());
      nw.insert(pos, q);
      r.add_term(std::move(nw), dq.scaled(Rational(before % 2 ? -1 : 1)));
    }
  }
  return r;
}

Form contract(const VectorField& X, const Form& a) {
  if (a.degree() == 0) return Form(0);
  Form r(a.degree() - 1);
  for (const auto& [w, c] : a.terms()) {
    for (size_t t = 0; t < w.size(); ++t) {
      PolyScalar xc = X.component(w[t]);
      if (xc.zero()) continue;
      IndexWord nw = w;
      nw.erase(nw.begin() + t);
      r.add_term(std::move(nw), (c * xc).scaled(Rational(t % 2 ? -1 : 1)));
    }
  }
  return r;
}

Form lie_derivative(const VectorField& X, const Form& a) {
  return exterior_d(contract(X, a)) + contract(X, exterior_d(a));
}

Form poincare_primitive(const Form& a) {
  if (!exterior_d(a).zero()) throw std::invalid_argument("poincare_primitive: form is not closed");
  Form r(a.degree() - 1);
  if (a.zero()) return r;
  if (a.degree() == 0) throw std::invalid_argument("poincare_primitive: 0-form has no primitive");
  for (const auto& [w, c] : a.terms()) {
    for (const auto& [mono, coeff] : c.terms()) {
      int p = 0;
      for (int e : mono) p += e;
      Rational inv = Rational(1) / Rational(p + a.degree());
      // iota_E (x^mono dx_w) with E the Euler field
      for (size_t t = 0; t < w.size(); ++t) {
        Monomial m2 = mono;
        if (static_cast<int>(m2.size()) <= w[t]) m2.resize(w[t] + 1, 0);
        m2[w[t]] += 1;
        IndexWord nw = w;
        nw.erase(nw.begin() + t);
        r.add_term(std::move(nw), PolyScalar::monomial(std::move(m2), coeff * inv * Rational(t % 2 ? -1 : 1)));
      }
    }
  }
  return r;
}

VectorField vf_bracket(const VectorField& X, const VectorField& Y) {
  VectorField r;
  for (const auto& [q, yc] : Y.components()) r.add_component(q, X.apply(yc));
  for (const auto& [q, xc] : X.components()) r.add_component(q, -Y.apply(xc));
  return r;
}

}  // namespace plectic
