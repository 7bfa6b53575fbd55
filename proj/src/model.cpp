#include "plectic/model.hpp"

#include <functional>

namespace plectic {

namespace {

// All strictly increasing words of length k in {0..m-1}.
std::vector<IndexWord> all_words(int m, int k) {
  std::vector<IndexWord> out;
  IndexWord w;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(w.size()) == k) {
      out.push_back(w);
      return;
    }
    for (int v = start; v < m; ++v) {
      w.push_back(v);
      rec(v + 1);
      w.pop_back();
    }
  };
  rec(0);
  return out;
}

// Columns iota_{d/dx_q} omega in the basis of n-words, with polynomial entries
// evaluated at `point` (empty point allowed for constant omega).
Mat contraction_matrix(const MultisymplecticModel& model, const std::vector<Rational>& point) {
  auto rows = all_words(model.dimension, model.n);
  Mat m(rows.size(), Vec(model.dimension, Rational(0)));
  for (int q = 0; q < model.dimension; ++q) {
    Form col = contract(VectorField::basis(q), model.omega);
    for (size_t r = 0; r < rows.size(); ++r) m[r][q] = col.coefficient(rows[r]).evaluate(point);
  }
  return m;
}

}  // namespace

ModelReport validate_model(const MultisymplecticModel& model) {
  ModelReport rep;
  if (model.omega.degree() != model.n + 1) {
    rep.detail = "omega degree " + std::to_string(model.omega.degree()) + " != n+1";
    return rep;
  }
  rep.closed = exterior_d(model.omega).zero();
  if (!rep.closed) {
    rep.detail = "d omega != 0";
    return rep;
  }
  rep.nondegenerate = true;
  auto points = model.basepoints;
  if (points.empty()) points.push_back(std::vector<Rational>(model.dimension, Rational(0)));
  for (const auto& p : points) {
    if (rank(contraction_matrix(model, p)) != model.dimension) {
      rep.nondegenerate = false;
      rep.detail = "contraction map drops rank at a basepoint";
      break;
    }
  }
  return rep;
}

void require_valid(const MultisymplecticModel& model) {
  ModelReport rep = validate_model(model);
  if (!rep.ok(model.degenerate_allowed)) throw ModelError("invalid model: " + rep.detail);
}

VectorField hamiltonian_vf(const Form& alpha, const MultisymplecticModel& model) {
  if (!model.omega.is_constant())
    throw UnsupportedOmegaError("hamiltonian_vf: omega has nonconstant coefficients; supply the pair explicitly");
  if (alpha.degree() != model.n - 1)
    throw NotHamiltonianError("hamiltonian_vf: alpha must have degree n-1");
  Form beta = -exterior_d(alpha);  // target: iota_v omega = beta
  Mat m = contraction_matrix(model, {});
  auto rows = all_words(model.dimension, model.n);

  // collect every monomial appearing in beta
  std::vector<Monomial> monos;
  for (const auto& [w, p] : beta.terms())
    for (const auto& [mono, c] : p.terms())
      if (std::find(monos.begin(), monos.end(), mono) == monos.end()) monos.push_back(mono);

  VectorField v;
  for (const auto& mono : monos) {
    Vec rhs(rows.size(), Rational(0));
    for (size_t r = 0; r < rows.size(); ++r) {
      PolyScalar c = beta.coefficient(rows[r]);
      auto it = c.terms().find(mono);
      if (it != c.terms().end()) rhs[r] = it->second;
    }
    SolveResult sol = solve_linear(m, rhs);
    if (!sol.consistent) throw NotHamiltonianError("hamiltonian_vf: no polynomial solution");
    for (int q = 0; q < model.dimension; ++q)
      if (!sol.solution[q].is_zero()) v.add_component(q, PolyScalar::monomial(mono, sol.solution[q]));
  }
  if (!is_hamiltonian_pair(model, v, alpha))
    throw NotHamiltonianError("hamiltonian_vf: solution failed the defining identity");
  return v;
}

bool is_hamiltonian_pair(const MultisymplecticModel& model, const VectorField& v, const Form& alpha) {
  return (exterior_d(alpha) + contract(v, model.omega)).zero();
}

MultisymplecticModel make_volume_model(int dimension) {
  MultisymplecticModel m;
  m.dimension = dimension;
  m.n = dimension - 1;
  IndexWord all(dimension);
  for (int i = 0; i < dimension; ++i) all[i] = i;
  m.omega = Form::basis(all);
  m.basepoints = {std::vector<Rational>(dimension, Rational(0))};
  return m;
}

}  // namespace plectic
