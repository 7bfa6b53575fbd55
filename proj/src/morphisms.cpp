#include "plectic/morphisms.hpp"

#include <algorithm>
#include <functional>

#include "plectic/bernoulli.hpp"
#include "plectic/parse.hpp"

namespace plectic {

MultiMap<VinVal> embedding_component_map(const MultisymplecticModel& model, int k) {
  (void)model;
  if (k < 1) throw std::invalid_argument("embedding_component_map: k >= 1");
  if (k == 1) return MultiMap<VinVal>::identity(Convention::unshifted);
  Rational bk = bernoulli(k - 1);
  return MultiMap<VinVal>(
      k, 1 - k, Symmetry::skew, Convention::unshifted,
      [k, bk](std::span<const Graded<VinVal>> xs) {
        VinVal out;
        if (bk.is_zero()) return out;
        Form acc(0);
        bool have = false;
        for (int j = 1; j <= k; ++j) {
          // iota_{X_1} ... hat j ... iota_{X_k} (f_j + alpha_j), rightmost first
          Form str = xs[j - 1].value.form;
          if (str.zero()) continue;
          for (int i = k; i >= 1 && !str.zero(); --i) {
            if (i == j) continue;
            str = contract(xs[i - 1].value.field, str);
          }
          if (str.zero()) continue;
          int sgn = (k - j) % 2 ? -1 : 1;
          acc = have ? acc + str.scaled(Rational(sgn)) : str.scaled(Rational(sgn));
          have = true;
        }
        if (have) out.form = acc.scaled(bk);
        return out;
      });
}

MultiMap<VinVal> pairing_power_map(int m) {
  if (m < 1) throw std::invalid_argument("pairing_power_map: m >= 1");
  return iterated_power(pairing_minus_map(), m);
}

MultiMap<VinVal> embedding_pairing_route_map(int k) {
  if (k < 1) throw std::invalid_argument("embedding_pairing_route_map: k >= 1");
  if (k == 1) return MultiMap<VinVal>::identity(Convention::unshifted);
  return pairing_power_map(k - 1).scaled(phi_coefficient(k));
}

MorphismComponents<VinVal, VinVal> embedding_shifted_components(int max_arity) {
  MorphismComponents<VinVal, VinVal> f;
  f.f.resize(max_arity + 1);
  f.f[1] = MultiMap<VinVal>::identity(Convention::shifted);
  MultiMap<VinVal> s = bold_s_map();
  MultiMap<VinVal> power = s;
  for (int k = 2; k <= max_arity; ++k) {
    if (k > 2) power = nr_product(power, s);
    Rational coeff = phi_coefficient(k);
    f.f[k] = coeff.is_zero() ? MultiMap<VinVal>::zero(k, 0, Symmetry::symmetric, Convention::shifted)
                             : power.scaled(coeff);
  }
  return f;
}

Form iterated_pairing_closed(const Form& b, std::span<const VectorField> fields) {
  int m = static_cast<int>(fields.size());
  Form acc = b;
  for (int t = 0; t < m && !acc.zero(); ++t) acc = contract(fields[t], acc);
  Rational coeff = Rational(-sign_varsigma(m)) * factorial(m) / Rational(2).pow(m);
  return acc.scaled(coeff);
}

LieVal operator+(const LieVal& a, const LieVal& b) {
  LieVal r = a;
  for (const auto& [i, c] : b.coords) {
    auto it = r.coords.find(i);
    if (it == r.coords.end()) {
      r.coords.emplace(i, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.coords.erase(it);
    }
  }
  return r;
}

LieVal scale(const Rational& c, const LieVal& a) {
  LieVal r;
  if (c.is_zero()) return r;
  for (const auto& [i, v] : a.coords) r.coords.emplace(i, c * v);
  return r;
}

bool is_zero(const LieVal& a) { return a.coords.empty(); }

Graded<LieVal> lie_basis(int index) {
  Graded<LieVal> g;
  g.degree = 0;
  g.value.coords.emplace(index, Rational(1));
  return g;
}

LieAlgebra LieAlgebra::abelian(int dim) {
  LieAlgebra g;
  g.dim = dim;
  g.c.assign(dim, std::vector<std::vector<Rational>>(dim, std::vector<Rational>(dim, Rational(0))));
  return g;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& row : c)
    for (const auto& col : row)
      for (const auto& v : col)
        if (!v.is_zero()) return false;
  return true;
}

MultiMap<LieVal> LieAlgebra::bracket_map() const {
  auto cc = c;
  int d = dim;
  return MultiMap<LieVal>(2, 0, Symmetry::skew, Convention::unshifted,
                          [cc, d](std::span<const Graded<LieVal>> xs) {
                            LieVal out;
                            for (const auto& [i, a] : xs[0].value.coords)
                              for (const auto& [j, b] : xs[1].value.coords)
                                for (int k = 0; k < d; ++k) {
                                  Rational v = a * b * cc[i][j][k];
                                  if (v.is_zero()) continue;
                                  auto it = out.coords.find(k);
                                  if (it == out.coords.end()) {
                                    out.coords.emplace(k, v);
                                  } else {
                                    it->second += v;
                                    if (it->second.is_zero()) out.coords.erase(it);
                                  }
                                }
                            return out;
                          });
}

MapFamily<LieVal> LieAlgebra::shifted_family(int max_arity) const {
  (void)max_arity;
  MapFamily<LieVal> fam;
  fam.conv = Convention::shifted;
  fam.weight = 1;
  if (!is_abelian()) fam.set(decalage_map(bracket_map()));
  return fam;
}

MultiMap<LieVal, VinVal> ComomentMap::component_map(int k) const {
  if (k < 1) throw std::invalid_argument("ComomentMap: component index >= 1");
  std::map<IndexWord, Form> values =
      k <= max_component() ? f[k] : std::map<IndexWord, Form>{};
  auto action = rho;
  bool attach_field = k == 1;
  return MultiMap<LieVal, VinVal>(
      k, 1 - k, Symmetry::skew, Convention::unshifted,
      [values, action, attach_field, k](std::span<const Graded<LieVal>> xs) {
        GradedSum<VinVal> acc;
        // expand multilinearly over basis indices; all inputs are degree 0
        std::vector<int> pick(k);
        std::function<void(int, Rational)> rec = [&](int slot, Rational coeff) {
          if (slot == k) {
            std::vector<int> idx = pick;
            int sgn = 1;
            for (int a = 0; a < k; ++a)
              for (int b = a + 1; b < k; ++b) {
                if (idx[a] == idx[b]) return;
                if (idx[a] > idx[b]) {
                  std::swap(idx[a], idx[b]);
                  sgn = -sgn;
                }
              }
            VinVal v;
            auto it = values.find(idx);
            if (it != values.end()) v.form = it->second;
            if (attach_field) v.field = action[idx[0]];
            if (is_zero(v)) return;
            acc.add_scaled(coeff * Rational(sgn), Graded<VinVal>{1 - k, v});
            return;
          }
          for (const auto& [i, c] : xs[slot].value.coords) {
            pick[slot] = i;
            rec(slot + 1, coeff * c);
          }
        };
        rec(0, Rational(1));
        return acc.part(1 - k);
      });
}

MorphismComponents<LieVal, VinVal> ComomentMap::components(int max_arity) const {
  MorphismComponents<LieVal, VinVal> out;
  out.f.resize(max_arity + 1);
  for (int k = 1; k <= max_arity; ++k) out.f[k] = component_map(k);
  return out;
}

bool ComomentMap::action_compatible() const {
  for (int i = 0; i < algebra.dim; ++i) {
    if (!lie_derivative(rho[i], model.omega).zero()) return false;
    Form f1(model.n - 1);
    if (max_component() >= 1) {
      auto it = f[1].find(IndexWord{i});
      if (it != f[1].end()) f1 = it->second;
    }
    if (!(exterior_d(f1) + contract(rho[i], model.omega)).zero()) return false;
  }
  return true;
}

GradedSum<VinVal> comoment_defect(const ComomentMap& f, std::span<const Graded<LieVal>> word,
                                  int max_arity) {
  MorphismComponents<LieVal, VinVal> comps;
  comps.f.resize(max_arity + 1);
  for (int k = 1; k <= max_arity; ++k) comps.f[k] = decalage_map(f.component_map(k));
  MapFamily<LieVal> source = f.algebra.shifted_family(max_arity);
  MapFamily<VinVal> target = rogers_shifted_family(f.model, max_arity);
  return verify_morphism(comps, source, target, word);
}

namespace {

std::vector<IndexWord> ascending_words(int dim, int len) {
  std::vector<IndexWord> out;
  IndexWord w;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(w.size()) == len) {
      out.push_back(w);
      return;
    }
    for (int v = start; v < dim; ++v) {
      w.push_back(v);
      rec(v + 1);
      w.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Graded<LieVal>> shifted_basis_word(const IndexWord& w) {
  std::vector<Graded<LieVal>> word;
  for (int i : w) {
    Graded<LieVal> g = lie_basis(i);
    g.degree = -1;
    word.push_back(g);
  }
  return word;
}

void verify_comoment_or_throw(const ComomentMap& f, const char* who) {
  if (!f.action_compatible())
    throw std::logic_error(std::string(who) + ": action incompatible with omega");
  int top = std::min(f.model.n + 1, f.algebra.dim);
  for (int k = 1; k <= top; ++k)
    for (const IndexWord& w : ascending_words(f.algebra.dim, k)) {
      auto word = shifted_basis_word(w);
      if (!comoment_defect(f, word, k).zero())
        throw std::logic_error(std::string(who) + ": morphism defect does not vanish");
    }
}

}  // namespace

ComomentMap solve_abelian_comoment(const MultisymplecticModel& model,
                                   const std::vector<VectorField>& action) {
  ComomentMap f;
  f.model = model;
  f.algebra = LieAlgebra::abelian(static_cast<int>(action.size()));
  f.rho = action;
  f.f.resize(model.n + 1);
  for (int i = 0; i < f.algebra.dim; ++i)
    for (int j = i + 1; j < f.algebra.dim; ++j)
      if (!vf_bracket(action[i], action[j]).zero())
        throw std::invalid_argument("solve_abelian_comoment: fields do not commute");
  for (int i = 0; i < f.algebra.dim; ++i) {
    if (!lie_derivative(action[i], model.omega).zero())
      throw std::invalid_argument("solve_abelian_comoment: action does not preserve omega");
    f.f[1].emplace(IndexWord{i}, poincare_primitive(-contract(action[i], model.omega)));
  }
  // Solve f_k word by word: the arity-k defect with f_k = 0 equals d(f_k(word)).
  for (int k = 2; k <= std::min(model.n, f.algebra.dim); ++k) {
    for (const IndexWord& w : ascending_words(f.algebra.dim, k)) {
      auto word = shifted_basis_word(w);
      GradedSum<VinVal> defect = comoment_defect(f, word, k);
      if (defect.zero()) continue;
      VinVal d0 = homogeneous_part_checked(defect, 1 - k, "solve_abelian_comoment");
      if (!d0.field.zero()) throw std::logic_error("solve_abelian_comoment: unexpected field defect");
      f.f[k].emplace(w, poincare_primitive(d0.form));
    }
  }
  verify_comoment_or_throw(f, "solve_abelian_comoment");
  return f;
}

GaugeData make_gauge(const MultisymplecticModel& model, Form b) {
  if (b.degree() != model.n) throw std::invalid_argument("make_gauge: B must be an n-form");
  GaugeData g;
  g.b = std::move(b);
  g.base = model;
  g.twisted = model;
  g.twisted.omega = model.omega + exterior_d(g.b);
  require_valid(g.twisted);
  return g;
}

MultiMap<VinVal> gauge_tau_map(const GaugeData& gauge) {
  Form b = gauge.b;
  return MultiMap<VinVal>(1, 0, Symmetry::skew, Convention::unshifted,
                          [b](std::span<const Graded<VinVal>> xs) {
                            VinVal out = xs[0].value;
                            if (xs[0].degree == 0 && !out.field.zero()) {
                              Form extra = contract(out.field, b);
                              if (!extra.zero()) out.form = out.form.zero() ? extra : out.form + extra;
                            }
                            return out;
                          });
}

Form twist_term(const ComomentMap& f, const Form& b, std::span<const int> basis_word) {
  int k = static_cast<int>(basis_word.size());
  Form acc = b;
  for (int t = 0; t < k && !acc.zero(); ++t) acc = contract(f.rho[basis_word[t]], acc);
  return acc.scaled(Rational(sign_varsigma(k + 1)));
}

ComomentMap twist_comoment(const ComomentMap& f, const GaugeData& gauge) {
  for (int i = 0; i < f.algebra.dim; ++i)
    if (!lie_derivative(f.rho[i], gauge.b).zero())
      throw std::invalid_argument("twist_comoment: B is not invariant under the action");
  ComomentMap ft = f;
  ft.model = gauge.twisted;
  ft.f.resize(std::max<size_t>(ft.f.size(), gauge.twisted.n + 1));
  for (int k = 1; k <= std::min(gauge.twisted.n, f.algebra.dim); ++k) {
    for (const IndexWord& w : ascending_words(f.algebra.dim, k)) {
      Form extra = twist_term(f, gauge.b, w);
      if (extra.zero()) continue;
      auto it = ft.f[k].find(w);
      if (it == ft.f[k].end())
        ft.f[k].emplace(w, extra);
      else
        it->second = it->second + extra;
    }
  }
  verify_comoment_or_throw(ft, "twist_comoment");
  return ft;
}

PentagonReport pentagon_check(const ComomentMap& f, const GaugeData& gauge, int max_arity,
                              int scalar_max) {
  PentagonReport rep;
  for (int m = 2; m <= scalar_max; ++m) {
    Rational acc(0);
    for (int ell = 1; ell <= m; ++ell) acc += binomial(m, ell - 1) * bernoulli(ell - 1);
    if (!acc.is_zero()) {
      rep.pass = false;
      rep.detail = "scalar recursion fails at m=" + std::to_string(m);
      return rep;
    }
  }

  ComomentMap ft = twist_comoment(f, gauge);

  MorphismComponents<VinVal, VinVal> phi;
  phi.f.resize(max_arity + 1);
  for (int k = 1; k <= max_arity; ++k) phi.f[k] = embedding_pairing_route_map(k);
  MorphismComponents<VinVal, VinVal> tau;
  tau.f.resize(2);
  tau.f[1] = gauge_tau_map(gauge);

  auto left = compose_morphisms(tau, compose_morphisms(phi, f.components(max_arity), max_arity),
                                max_arity);
  auto right = compose_morphisms(phi, ft.components(max_arity), max_arity);

  for (int m = 1; m <= max_arity; ++m) {
    for (const IndexWord& w : ascending_words(f.algebra.dim, m)) {
      std::vector<Graded<LieVal>> word;
      for (int i : w) word.push_back(lie_basis(i));
      GradedSum<VinVal> diff(left.f[m](word));
      diff.add_scaled(Rational(-1), right.f[m](word));
      if (!diff.zero()) {
        rep.pass = false;
        rep.detail = "component mismatch at arity " + std::to_string(m);
        return rep;
      }
    }
  }
  return rep;
}

ComomentMap desk_comoment_r3() {
  MultisymplecticModel model = make_volume_model(3);
  ComomentMap f;
  f.model = model;
  f.algebra = LieAlgebra::abelian(2);
  f.rho = {VectorField::basis(0), VectorField::basis(1)};
  f.f.resize(model.n + 1);
  f.f[1].emplace(IndexWord{0}, parse_form("-1 x1 dx2"));
  f.f[1].emplace(IndexWord{1}, parse_form("x0 dx2"));
  // f_2 is solved from the arity-2 defect equation (a multiple of x2)
  {
    auto word = shifted_basis_word({0, 1});
    GradedSum<VinVal> defect = comoment_defect(f, word, 2);
    if (!defect.zero())
      f.f[2].emplace(IndexWord{0, 1},
                     poincare_primitive(
                         homogeneous_part_checked(defect, -1, "desk_comoment_r3").form));
  }
  verify_comoment_or_throw(f, "desk_comoment_r3");
  return f;
}

GaugeData desk_gauge_r3() { return make_gauge(make_volume_model(3), parse_form("x2 dx0^dx1")); }

ComomentMap desk_comoment_r4() {
  return solve_abelian_comoment(
      make_volume_model(4), {VectorField::basis(0), VectorField::basis(1), VectorField::basis(2)});
}

GaugeData desk_gauge_r4() {
  return make_gauge(make_volume_model(4), parse_form("-1 x3 dx0^dx1^dx2"));
}

}  // namespace plectic
