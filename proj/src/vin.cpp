#include "plectic/vin.hpp"

#include "plectic/bernoulli.hpp"

namespace plectic {

VinVal operator+(const VinVal& a, const VinVal& b) {
  VinVal r;
  r.field = a.field + b.field;
  if (a.form.zero())
    r.form = b.form;
  else if (b.form.zero())
    r.form = a.form;
  else
    r.form = a.form + b.form;
  return r;
}

VinVal scale(const Rational& c, const VinVal& a) { return {a.field.scaled(c), a.form.scaled(c)}; }

bool is_zero(const VinVal& a) { return a.field.zero() && a.form.zero(); }

VinElem vin_pair(const MultisymplecticModel& model, VectorField X, Form alpha) {
  if (!alpha.zero() && alpha.degree() != model.n - 1)
    throw std::invalid_argument("vin_pair: alpha must have degree n-1");
  return VinElem{0, {std::move(X), std::move(alpha)}};
}

VinElem vin_form(const MultisymplecticModel& model, Form f) {
  int degree = f.degree() - (model.n - 1);
  return VinElem{degree, {{}, std::move(f)}};
}

VinElem vin_field(VectorField X) { return VinElem{0, {std::move(X), Form(0)}}; }

VinElem ham_pair(const MultisymplecticModel& model, Form alpha) {
  VectorField v = hamiltonian_vf(alpha, model);
  return vin_pair(model, std::move(v), std::move(alpha));
}

Form pairing_payload(int sign, const VinVal& a, const VinVal& b) {
  Form left = contract(a.field, b.form);
  Form right = contract(b.field, a.form);
  Form r = sign > 0 ? left + right : left - right;
  return r.scaled(Rational(1, 2));
}

VinVal courant_payload(const VinVal& e1, const VinVal& e2, const Form* twist) {
  VinVal r;
  r.field = vf_bracket(e1.field, e2.field);
  r.form = lie_derivative(e1.field, e2.form) - lie_derivative(e2.field, e1.form) -
           exterior_d(pairing_payload(-1, e1, e2));
  if (twist) r.form = r.form + contract(e1.field, contract(e2.field, *twist));
  return r;
}

namespace {

void require_observable(std::span<const Graded<VinVal>> xs) {
  for (const auto& x : xs)
    if (x.degree > 0) throw std::domain_error("bracket applied outside the carrier (degree > 0)");
}

// -T(e1,e2,e3) = -1/3 ( <[e1,e2]_twist, e3>_+ + cyc ) on degree-0 payloads.
Form minus_t_all_zero(const VinVal& a, const VinVal& b, const VinVal& c, const Form* twist) {
  const VinVal* e[3] = {&a, &b, &c};
  Form acc(0);
  for (int t = 0; t < 3; ++t) {
    VinVal br = courant_payload(*e[t], *e[(t + 1) % 3], twist);
    Form term = pairing_payload(+1, br, *e[(t + 2) % 3]);
    acc = t == 0 ? term : acc + term;
  }
  return acc.scaled(Rational(-1, 3));
}

// -T(f, e1, e2) = -1/6 ( iota_{X1} L_{X2} f / 2 - iota_{X2} L_{X1} f / 2 + iota_{[X1,X2]} f ).
Form minus_t_one_negative(const Form& f, const VectorField& x1, const VectorField& x2) {
  Form a = contract(x1, lie_derivative(x2, f)).scaled(Rational(1, 2));
  Form b = contract(x2, lie_derivative(x1, f)).scaled(Rational(1, 2));
  Form c = contract(vf_bracket(x1, x2), f);
  return (a - b + c).scaled(Rational(-1, 6));
}

// mu_3 on homogeneous slices (degrees <= 0 assumed), twisted or not.
VinVal mu3_payload(std::span<const Graded<VinVal>> xs, const Form* twist) {
  int negatives = 0, where = -1;
  for (int i = 0; i < 3; ++i)
    if (xs[i].degree < 0) {
      ++negatives;
      where = i;
    }
  VinVal out;
  if (negatives == 0) {
    out.form = minus_t_all_zero(xs[0].value, xs[1].value, xs[2].value, twist);
  } else if (negatives == 1) {
    // cycle the negative entry to the front; the two degree-0 entries keep their
    // relative order, Koszul signs are trivial, parity gives (-1)^where
    int sgn = where % 2 ? -1 : 1;
    std::vector<const VinVal*> rest;
    for (int i = 0; i < 3; ++i)
      if (i != where) rest.push_back(&xs[i].value);
    out.form = minus_t_one_negative(xs[where].value.form, rest[0]->field, rest[1]->field)
                   .scaled(Rational(sgn));
  }
  return out;
}

}  // namespace

VinVal untwisted_ternary(const VinElem& w, const VectorField& y1, const VectorField& y2) {
  std::vector<Graded<VinVal>> xs = {w, vin_field(y1), vin_field(y2)};
  return mu3_payload(xs, nullptr);
}

MultiMap<VinVal> pairing_minus_map() {
  return MultiMap<VinVal>(2, -1, Symmetry::skew, Convention::unshifted,
                          [](std::span<const Graded<VinVal>> xs) {
                            VinVal r;
                            r.form = pairing_payload(-1, xs[0].value, xs[1].value);
                            return r;
                          });
}

MultiMap<VinVal> pairing_plus_map() {
  return MultiMap<VinVal>(2, -1, Symmetry::symmetric, Convention::unshifted,
                          [](std::span<const Graded<VinVal>> xs) {
                            VinVal r;
                            r.form = pairing_payload(+1, xs[0].value, xs[1].value);
                            return r;
                          });
}

MultiMap<VinVal> rogers_pi_map(const MultisymplecticModel& model, int k) {
  if (k < 1) throw std::invalid_argument("rogers_pi_map: k >= 1");
  if (k == 1) {
    return MultiMap<VinVal>(1, 1, Symmetry::skew, Convention::unshifted,
                            [](std::span<const Graded<VinVal>> xs) {
                              require_observable(xs);
                              VinVal r;
                              if (xs[0].degree < 0) r.form = exterior_d(xs[0].value.form);
                              return r;
                            });
  }
  Form omega = model.omega;
  return MultiMap<VinVal>(
      k, 2 - k, Symmetry::skew, Convention::unshifted, [omega, k](std::span<const Graded<VinVal>> xs) {
        require_observable(xs);
        VinVal r;
        for (const auto& x : xs)
          if (x.degree != 0) return r;
        Form acc = omega;
        for (int t = 0; t < k; ++t) acc = contract(xs[t].value.field, acc);
        r.form = acc.scaled(Rational(sign_varsigma(k)));
        if (k == 2) r.field = vf_bracket(xs[0].value.field, xs[1].value.field);
        return r;
      });
}

MultiMap<VinVal> vinogradov_mu_map(const MultisymplecticModel& model, int k, bool twisted) {
  if (k < 1) throw std::invalid_argument("vinogradov_mu_map: k >= 1");
  Form omega = model.omega;
  if (k == 1) {
    return MultiMap<VinVal>(1, 1, Symmetry::skew, Convention::unshifted,
                            [](std::span<const Graded<VinVal>> xs) {
                              require_observable(xs);
                              VinVal r;
                              if (xs[0].degree < 0) r.form = exterior_d(xs[0].value.form);
                              return r;
                            });
  }
  if (k == 2) {
    return MultiMap<VinVal>(
        2, 0, Symmetry::skew, Convention::unshifted,
        [omega, twisted](std::span<const Graded<VinVal>> xs) {
          require_observable(xs);
          VinVal r;
          int negatives = (xs[0].degree < 0) + (xs[1].degree < 0);
          if (negatives == 2) return r;
          if (negatives == 0) return courant_payload(xs[0].value, xs[1].value, twisted ? &omega : nullptr);
          if (xs[1].degree < 0)
            r.form = lie_derivative(xs[0].value.field, xs[1].value.form).scaled(Rational(1, 2));
          else
            r.form = lie_derivative(xs[1].value.field, xs[0].value.form).scaled(Rational(-1, 2));
          return r;
        });
  }
  if (k == 3) {
    return MultiMap<VinVal>(3, -1, Symmetry::skew, Convention::unshifted,
                            [omega, twisted](std::span<const Graded<VinVal>> xs) {
                              require_observable(xs);
                              return mu3_payload(xs, twisted ? &omega : nullptr);
                            });
  }
  if (k % 2 == 0) return MultiMap<VinVal>::zero(k, 2 - k, Symmetry::skew, Convention::unshifted);

  // odd k >= 5: sum over hatted entries of the c_k-weighted double-contraction
  // expansion, plus the Bernoulli top term on all-degree-0 tuples
  return MultiMap<VinVal>(
      k, 2 - k, Symmetry::skew, Convention::unshifted,
      [omega, k, twisted](std::span<const Graded<VinVal>> xs) {
        require_observable(xs);
        VinVal out;
        int negatives = 0;
        for (const auto& x : xs)
          if (x.degree < 0) ++negatives;
        if (negatives >= 2) return out;

        std::vector<VectorField> fields(k);
        for (int i = 0; i < k; ++i) fields[i] = xs[i].value.field;

        const Rational ck = coefficient_c(k);
        Form acc(0);
        bool have_acc = false;
        for (int i = 0; i < k; ++i) {
          if (xs[i].value.form.zero()) continue;
          std::vector<const VectorField*> y;  // Y_1..Y_{k-1} = X_0..hat X_i..X_{k-1}
          for (int t = 0; t < k; ++t)
            if (t != i) y.push_back(&fields[t]);
          VinElem w{xs[i].degree, {{}, xs[i].value.form}};
          Form inner(0);
          bool have_inner = false;
          for (int a = 1; a <= k - 1; ++a) {
            for (int b = a + 1; b <= k - 1; ++b) {
              Form str = untwisted_ternary(w, *y[a - 1], *y[b - 1]).form;
              if (str.zero()) continue;
              for (int t = 1; t <= k - 1; ++t) {
                if (t == a || t == b) continue;
                str = contract(*y[t - 1], str);
              }
              int sgn = (a + b + 1) % 2 ? -1 : 1;
              inner = have_inner ? inner + str.scaled(Rational(sgn)) : str.scaled(Rational(sgn));
              have_inner = true;
            }
          }
          if (!have_inner) continue;
          int outer_sign = (i % 2 == 0) ? -1 : 1;  // (-1)^{i-1}
          Form summand = inner.scaled(ck * Rational(outer_sign));
          acc = have_acc ? acc + summand : summand;
          have_acc = true;
        }
        if (twisted && negatives == 0) {
          Form str = omega;
          for (int t = 0; t < k; ++t) str = contract(fields[t], str);
          if (!str.zero()) {
            int e = ((k + 1) / 2) % 2 ? -1 : 1;
            Form summand = str.scaled(Rational(e) * Rational(k) * bernoulli(k - 1));
            acc = have_acc ? acc + summand : summand;
            have_acc = true;
          }
        }
        if (have_acc) out.form = acc;
        return out;
      });
}

MultiMap<VinVal> bold_s_map() { return decalage_map(pairing_minus_map()); }

MapFamily<VinVal> rogers_shifted_family(const MultisymplecticModel& model, int max_arity) {
  MapFamily<VinVal> fam;
  fam.conv = Convention::shifted;
  fam.weight = 1;
  for (int k = 1; k <= max_arity; ++k) fam.set(decalage_map(rogers_pi_map(model, k)));
  return fam;
}

MapFamily<VinVal> vinogradov_shifted_family(const MultisymplecticModel& model, int max_arity) {
  MapFamily<VinVal> fam;
  fam.conv = Convention::shifted;
  fam.weight = 1;
  for (int k = 1; k <= max_arity; ++k) fam.set(decalage_map(vinogradov_mu_map(model, k)));
  return fam;
}

MapFamily<VinVal> ansatz_p_family(int max_arity) {
  MapFamily<VinVal> fam;
  fam.conv = Convention::shifted;
  fam.weight = 0;
  MultiMap<VinVal> s = bold_s_map();
  MultiMap<VinVal> power = s;
  for (int k = 1; k + 1 <= max_arity; ++k) {
    if (k > 1) power = nr_product(power, s);
    Rational ck = coefficient_c(k);
    if (!ck.is_zero()) fam.set(power.scaled(ck));
  }
  return fam;
}

}  // namespace plectic
