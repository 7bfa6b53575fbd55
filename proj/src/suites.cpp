#include "plectic/suites.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

#include "plectic/bernoulli.hpp"
#include "plectic/parse.hpp"

namespace plectic {

int thread_budget() {
  if (const char* env = std::getenv("HC_THREADS")) {
    int v = std::atoi(env);
    return v >= 1 ? v : 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::vector<CheckResult> run_checks(std::vector<std::function<CheckResult()>> checks) {
  std::vector<CheckResult> results(checks.size());
  int workers = std::min<int>(thread_budget(), static_cast<int>(checks.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < checks.size(); ++i) results[i] = checks[i]();
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < checks.size(); i = next.fetch_add(1))
          results[i] = checks[i]();
      });
    for (auto& t : pool) t.join();
  }
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

namespace {

CheckResult timed(const std::string& name, const std::string& anchor,
                  const std::function<bool(std::string&)>& body) {
  CheckResult r;
  r.name = name;
  r.anchor = anchor;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.pass = body(r.detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.micros =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

std::string describe_word(std::span<const VinElem> word) {
  std::string s = "degrees (shifted):";
  for (const auto& x : word) s += " " + std::to_string(x.degree);
  return s;
}

// Seeded shifted word for an arity-A operator probe; Hamiltonian degree-0 slots.
std::vector<VinElem> shifted_word(const Sampler& sampler, SplitMix64& rng, int arity, int pattern) {
  auto word = sampler.seeded_word(rng, arity, pattern, /*ham=*/true);
  for (auto& x : word) --x.degree;
  return word;
}

// Exact equality of two shifted operators on `tuples` seeded words.
bool operators_agree(const MultisymplecticModel& model, const MultiMap<VinVal>& a,
                     const MultiMap<VinVal>& b, const SuiteOptions& opt, const std::string& tag,
                     std::string& detail) {
  Sampler sampler(model);
  sampler.degree_cap = opt.degree_cap;
  SplitMix64 rng = check_stream(opt.seed, tag);
  for (int t = 0; t < opt.tuples; ++t) {
    auto word = shifted_word(sampler, rng, a.arity(), t);
    GradedSum<VinVal> diff(a(word));
    diff.add_scaled(Rational(-1), b(word));
    if (!diff.zero()) {
      detail = tag + " differs on tuple " + std::to_string(t) + ", " + describe_word(word);
      return false;
    }
  }
  return true;
}

bool operator_vanishes(const MultisymplecticModel& model, const MultiMap<VinVal>& a,
                       const SuiteOptions& opt, const std::string& tag, std::string& detail) {
  Sampler sampler(model);
  sampler.degree_cap = opt.degree_cap;
  SplitMix64 rng = check_stream(opt.seed, tag);
  for (int t = 0; t < opt.tuples; ++t) {
    auto word = shifted_word(sampler, rng, a.arity(), t);
    if (!is_zero(a(word).value)) {
      detail = tag + " nonzero on tuple " + std::to_string(t) + ", " + describe_word(word);
      return false;
    }
  }
  return true;
}

// Independent coordinate oracle for the Lie derivative:
// L_X(f dx_I) = X(f) dx_I + f sum_t dx_{I_1} ^ ... ^ d(X^{I_t}) ^ ... ^ dx_{I_k}.
Form lie_derivative_oracle(const VectorField& x, const Form& a) {
  Form out(a.degree());
  for (const auto& [w, f] : a.terms()) {
    out.add_term(w, x.apply(f));
    for (size_t t = 0; t < w.size(); ++t) {
      PolyScalar comp = x.component(w[t]);
      Form dxt = exterior_d(Form::function(comp));
      if (dxt.zero()) continue;
      IndexWord left(w.begin(), w.begin() + t);
      IndexWord right(w.begin() + t + 1, w.end());
      Form term = wedge(Form::basis(left), wedge(dxt, Form::basis(right))).scaled(f);
      if (!term.zero()) out = out + term;
    }
  }
  return out;
}

}  // namespace

std::vector<CheckResult> table_suite() {
  std::vector<std::function<CheckResult()>> checks;
  static const char* bvals[] = {"1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66"};
  static const char* cvals[] = {"",  "-1",   "-1/6", "0", "1/180", "0", "-1/2835",
                                "0", "1/37800", "0", "-1/467775"};
  for (int k = 0; k <= 10; ++k) {
    checks.push_back([k] {
      return timed("table.b" + std::to_string(k), "bernoulli table", [&](std::string& detail) {
        bool ok = bernoulli(k) == Rational::from_string(bvals[k]);
        if (!ok) detail = "B_" + std::to_string(k) + " = " + bernoulli(k).to_string();
        return ok;
      });
    });
  }
  for (int k = 1; k <= 10; ++k) {
    checks.push_back([k] {
      return timed("table.c" + std::to_string(k), "coefficient table", [&](std::string& detail) {
        bool ok = coefficient_c(k) == Rational::from_string(cvals[k]);
        if (!ok) detail = "c_" + std::to_string(k) + " = " + coefficient_c(k).to_string();
        return ok;
      });
    });
  }
  return run_checks(std::move(checks));
}

std::vector<CheckResult> bernoulli_identity_suite(int elezovic_max, int recursion_max, int euler_max) {
  std::vector<std::function<CheckResult()>> checks;
  checks.push_back([=] {
    return timed("bernoulli.elezovic", "composition summation formula", [&](std::string& detail) {
      auto rep = verify_bernoulli_identities(elezovic_max, 2, 4);
      detail = rep.failure;
      return rep.ok;
    });
  });
  checks.push_back([=] {
    return timed("bernoulli.recursion", "binomial recursion", [&](std::string& detail) {
      auto rep = verify_bernoulli_identities(1, recursion_max, 4);
      detail = rep.failure;
      return rep.ok;
    });
  });
  checks.push_back([=] {
    return timed("bernoulli.euler", "product sum identity", [&](std::string& detail) {
      auto rep = verify_bernoulli_identities(1, 2, euler_max);
      detail = rep.failure;
      return rep.ok;
    });
  });
  return run_checks(std::move(checks));
}

std::vector<CheckResult> cartan_suite(const MultisymplecticModel& model, const SuiteOptions& opt) {
  std::vector<std::function<CheckResult()>> checks;
  std::string dim = "r" + std::to_string(model.dimension);
  auto make = [&](const std::string& name, const std::string& anchor,
                  std::function<bool(SplitMix64&, Sampler&, std::string&)> law) {
    checks.push_back([=] {
      return timed(name, anchor, [&](std::string& detail) {
        Sampler sampler(model);
        sampler.degree_cap = opt.degree_cap;
        SplitMix64 rng = check_stream(opt.seed, name);
        for (int t = 0; t < opt.tuples; ++t) {
          Sampler s2 = sampler;
          if (!law(rng, s2, detail)) {
            detail += " (tuple " + std::to_string(t) + ")";
            return false;
          }
        }
        return true;
      });
    });
  };
  make("cartan." + dim + ".d-squared", "d o d = 0",
       [&model](SplitMix64& rng, Sampler& s, std::string&) {
         Form a = s.random_form(rng, static_cast<int>(rng.next_index(model.dimension)));
         return exterior_d(exterior_d(a)).zero();
       });
  make("cartan." + dim + ".iota-squared", "iota_X o iota_X = 0",
       [&model](SplitMix64& rng, Sampler& s, std::string&) {
         Form a = s.random_form(rng, 1 + static_cast<int>(rng.next_index(model.dimension)));
         VectorField x = s.random_field(rng);
         return contract(x, contract(x, a)).zero();
       });
  make("cartan." + dim + ".magic-formula", "d iota + iota d vs coordinate derivation",
       [&model](SplitMix64& rng, Sampler& s, std::string&) {
         Form a = s.random_form(rng, static_cast<int>(rng.next_index(model.dimension + 1)));
         VectorField x = s.random_field(rng);
         return lie_derivative(x, a) == lie_derivative_oracle(x, a);
       });
  make("cartan." + dim + ".iota-bracket", "iota_[X,Y] = [L_X, iota_Y]",
       [&model](SplitMix64& rng, Sampler& s, std::string&) {
         Form a = s.random_form(rng, 1 + static_cast<int>(rng.next_index(model.dimension)));
         VectorField x = s.random_field(rng);
         VectorField y = s.random_field(rng);
         Form lhs = contract(vf_bracket(x, y), a);
         Form rhs = lie_derivative(x, contract(y, a)) - contract(y, lie_derivative(x, a));
         return lhs == rhs;
       });
  return run_checks(std::move(checks));
}

std::vector<CheckResult> appendix_a_suite(const MultisymplecticModel& model, const SuiteOptions& opt) {
  const int n = model.n;
  const int top = opt.max_arity > 0 ? opt.max_arity : n + 2;
  std::string mp = "r" + std::to_string(model.dimension) + ".";
  std::vector<std::function<CheckResult()>> checks;

  auto agree = [&checks, &model, opt](const std::string& name, const std::string& anchor,
                                      std::function<MultiMap<VinVal>()> lhs,
                                      std::function<MultiMap<VinVal>()> rhs) {
    checks.push_back([=, &model] {
      return timed(name, anchor, [&](std::string& detail) {
        return operators_agree(model, lhs(), rhs(), opt, name, detail);
      });
    });
  };
  auto vanish = [&checks, &model, opt](const std::string& name, const std::string& anchor,
                                       std::function<MultiMap<VinVal>()> map) {
    checks.push_back([=, &model] {
      return timed(name, anchor, [&](std::string& detail) {
        return operator_vanishes(model, map(), opt, name, detail);
      });
    });
  };

  auto S = [&model]() { return bold_s_map(); };
  auto Pi = [&model](int k) { return decalage_map(rogers_pi_map(model, k)); };
  auto Mu = [&model](int k) { return decalage_map(vinogradov_mu_map(model, k)); };

  // [S, pi_{k-1}] = (k/2) pi_k for k >= 4
  for (int k = 4; k <= top; ++k) {
    agree(mp + "rogers-recursion.k" + std::to_string(k), "higher bracket recursion",
          [=] { return graded_commutator(S(), Pi(k - 1)); },
          [=] { return Pi(k).scaled(Rational(k, 2)); });
  }
  // [S,[S,pi_1]] = [S, pi_2]
  agree(mp + "ternary-commutator", "iterated commutator, arity 3",
        [=] { return graded_commutator(S(), graded_commutator(S(), Pi(1))); },
        [=] { return graded_commutator(S(), Pi(2)); });
  // [S,[S,[S,pi_1]]] = 3 pi_4
  agree(mp + "quaternary-commutator", "iterated commutator, arity 4",
        [=] { return graded_commutator(S(), graded_commutator(S(), graded_commutator(S(), Pi(1)))); },
        [=] { return Pi(4).scaled(Rational(3)); });
  // alpha(S,S,pi_2) = ([S^2, pi_2] - 3 pi_4)/2
  agree(mp + "recurrent-associator", "associator of the pairing with pi_2",
        [=] { return associator(S(), S(), Pi(2)); },
        [=] {
          return (graded_commutator(iterated_power(S(), 2), Pi(2)) - Pi(4).scaled(Rational(3)))
              .scaled(Rational(1, 2));
        });
  // [S^p, [S, pi_1]] = [S^p, pi_2]
  for (int p = 1; p + 2 <= top; ++p) {
    agree(mp + "pair-pi2.p" + std::to_string(p), "powers against the unary bracket",
          [=] { return graded_commutator(iterated_power(S(), p), graded_commutator(S(), Pi(1))); },
          [=] { return graded_commutator(iterated_power(S(), p), Pi(2)); });
  }
  // pi_q = (2^{q-3} 3!/q!) S^{q-3} . pi_3 for q >= 4
  for (int q = 4; q <= top; ++q) {
    agree(mp + "higher-pi.q" + std::to_string(q), "brackets from the ternary one",
          [=] { return Pi(q); },
          [=] {
            Rational coeff = Rational(2).pow(q - 3) * factorial(3) / factorial(q);
            return nr_product(iterated_power(S(), q - 3), Pi(3)).scaled(coeff);
          });
  }
  // nested commutators [S^{k_1},...[S^{k_m}, pi_q]] = (N!/(2^{N-q} q!)) pi_N, q + m >= 4
  for (int target = 4; target <= std::min(top, n + 1); ++target) {
    for (int q = 1; q < target; ++q) {
      int total = target - q;
      std::vector<std::vector<int>> comps;
      std::function<void(int, std::vector<int>&)> gen = [&](int rem, std::vector<int>& cur) {
        if (rem == 0) {
          if (static_cast<int>(cur.size()) + q >= 4 && !cur.empty()) comps.push_back(cur);
          return;
        }
        for (int next = 1; next <= rem; ++next) {
          cur.push_back(next);
          gen(rem - next, cur);
          cur.pop_back();
        }
      };
      std::vector<int> cur;
      gen(total, cur);
      for (const auto& ks : comps) {
        std::string name = mp + "nested.q" + std::to_string(q) + ".k";
        for (int k : ks) name += std::to_string(k);
        agree(name, "iterated commutators collapse",
              [=] {
                MultiMap<VinVal> acc = Pi(q);
                for (auto it = ks.rbegin(); it != ks.rend(); ++it)
                  acc = graded_commutator(iterated_power(S(), *it), acc);
                return acc;
              },
              [=] {
                Rational coeff = factorial(target) / (Rational(2).pow(target - q) * factorial(q));
                return Pi(target).scaled(coeff);
              });
      }
    }
  }
  // mu_2 = pi_2 - [S, pi_1]
  agree(mp + "mu2", "binary Vinogradov bracket",
        [=] { return Mu(2); }, [=] { return Pi(2) - graded_commutator(S(), Pi(1)); });
  // mu_3 = pi_3 - [S,[S,pi_1]]/2 - [S^2,pi_1]/6
  agree(mp + "mu3", "ternary Vinogradov bracket",
        [=] { return Mu(3); },
        [=] {
          return Pi(3) -
                 graded_commutator(S(), graded_commutator(S(), Pi(1))).scaled(Rational(1, 2)) -
                 graded_commutator(iterated_power(S(), 2), Pi(1)).scaled(Rational(1, 6));
        });
  // mu_q = 3 (2^{q-1}/(q-1)! B_{q-1}) S^{q-3} . mu_3 for q >= 4
  for (int q = 4; q <= top; ++q) {
    agree(mp + "mun.q" + std::to_string(q), "higher Vinogradov brackets from the ternary one",
          [=] { return Mu(q); },
          [=] {
            Rational coeff = Rational(3) * Rational(2).pow(q - 1) / factorial(q - 1) * bernoulli(q - 1);
            MultiMap<VinVal> base = nr_product(iterated_power(S(), q - 3), Mu(3));
            return coeff.is_zero()
                       ? MultiMap<VinVal>::zero(base.arity(), base.weight(), Symmetry::none,
                                                Convention::shifted)
                       : base.scaled(coeff);
          });
  }
  // even brackets vanish
  for (int q = 4; q <= top; q += 2)
    vanish(mp + "mu-even.q" + std::to_string(q), "even Vinogradov brackets vanish",
           [=] { return Mu(q); });

  // insertions as pairing: <,>^{ca m}(B, X_1..X_m) closed form, and its
  // contraction-operator corollary
  checks.push_back([=, &model] {
    return timed(mp + "insertions-as-pairing", "iterated pairing on a form and fields",
                 [&](std::string& detail) {
                   Sampler sampler(model);
                   sampler.degree_cap = opt.degree_cap;
                   SplitMix64 rng = check_stream(opt.seed, mp + "insertions-as-pairing");
                   for (int t = 0; t < opt.tuples; ++t) {
                     int m = 1 + static_cast<int>(rng.next_index(std::min(4, model.dimension)));
                     int bdeg = std::max(0, model.n - 1 + static_cast<int>(rng.next_index(3)) - 1);
                     if (bdeg > model.dimension) bdeg = model.dimension;
                     Form b = sampler.random_form(rng, bdeg);
                     std::vector<VectorField> fields(m);
                     std::vector<VinElem> tuple = {vin_form(model, b)};
                     for (int i = 0; i < m; ++i) {
                       fields[i] = sampler.random_field(rng);
                       tuple.push_back(vin_field(fields[i]));
                     }
                     Graded<VinVal> lhs = pairing_power_map(m)(tuple);
                     Form rhs = iterated_pairing_closed(b, fields);
                     if (!(lhs.value.form == rhs) || !lhs.value.field.zero()) {
                       detail = "m=" + std::to_string(m) + " |B|=" + std::to_string(bdeg);
                       return false;
                     }
                   }
                   return true;
                 });
  });
  checks.push_back([=, &model] {
    return timed(
        mp + "pairing-contraction-operator", "unary pairing against the full power",
        [&](std::string& detail) {
          Sampler sampler(model);
          sampler.degree_cap = opt.degree_cap;
          SplitMix64 rng = check_stream(opt.seed, mp + "pairing-contraction-operator");
          for (int t = 0; t < opt.tuples; ++t) {
            int m = 1 + static_cast<int>(rng.next_index(std::min(4, model.dimension)));
            int bdeg = std::max(0, model.n - 1 + static_cast<int>(rng.next_index(3)) - 1);
            if (bdeg > model.dimension) bdeg = model.dimension;
            Form b = sampler.random_form(rng, bdeg);
            // unary operator <B, .>_-
            VinElem belem = vin_form(model, b);
            MultiMap<VinVal> unary(1, belem.degree - 1, Symmetry::skew, Convention::unshifted,
                                   [belem](std::span<const Graded<VinVal>> xs) {
                                     VinVal r;
                                     r.form = pairing_payload(-1, belem.value, xs[0].value);
                                     return r;
                                   });
            MultiMap<VinVal> lhs =
                m == 1 ? unary : nr_product(pairing_power_map(m - 1), unary, NrFlavor::skew);
            std::vector<VinElem> fields_tuple;
            std::vector<VinElem> full_tuple = {belem};
            for (int i = 0; i < m; ++i) {
              VectorField x = sampler.random_field(rng);
              fields_tuple.push_back(vin_field(x));
              full_tuple.push_back(fields_tuple.back());
            }
            Graded<VinVal> left = lhs(fields_tuple);
            Graded<VinVal> right = pairing_power_map(m)(full_tuple);
            // sign (-1)^{(m-1)(|B|-n) + m + 1}; the form-degree shift |B|-n is the
            // weight of the unary operator <B, .>_-
            long long e = static_cast<long long>(m - 1) * (belem.degree - 1) + m + 1;
            GradedSum<VinVal> diff(left);
            diff.add_scaled(Rational(e % 2 ? -1 : 1) * Rational(-1), right);
            if (!diff.zero()) {
              detail = "m=" + std::to_string(m) + " |B|=" + std::to_string(bdeg);
              return false;
            }
          }
          return true;
        });
  });
  // evaluated expression for the iterated pairing on mixed elements
  checks.push_back([=, &model] {
    return timed(
        mp + "pairing-evaluated-expression", "iterated pairing on mixed sections",
        [&](std::string& detail) {
          Sampler sampler(model);
          sampler.degree_cap = opt.degree_cap;
          SplitMix64 rng = check_stream(opt.seed, mp + "pairing-evaluated-expression");
          for (int t = 0; t < opt.tuples; ++t) {
            int m = 1 + static_cast<int>(rng.next_index(3));
            std::vector<VectorField> fields(m + 1);
            std::vector<std::vector<Form>> betas(m + 1);
            std::vector<GradedSum<VinVal>> inputs(m + 1);
            for (int i = 0; i <= m; ++i) {
              fields[i] = sampler.random_field(rng);
              int d1 = static_cast<int>(rng.next_index(model.dimension + 1));
              int d2 = static_cast<int>(rng.next_index(model.dimension + 1));
              betas[i] = {sampler.random_form(rng, d1)};
              if (d2 != d1) betas[i].push_back(sampler.random_form(rng, d2));
              GradedSum<VinVal> e;
              e.add(vin_field(fields[i]));
              for (const Form& beta : betas[i])
                if (!beta.zero()) e.add(vin_form(model, beta));
              inputs[i] = e;
            }
            GradedSum<VinVal> lhs = eval_on_sums(pairing_power_map(m), std::span<const GradedSum<VinVal>>(inputs));
            // rhs: (m!/2^m) sum_j (-1)^{j+m+1} iota_{X_1}..hat j..iota_{X_{m+1}} beta_j
            GradedSum<VinVal> rhs;
            Rational coeff = factorial(m) / Rational(2).pow(m);
            for (int j = 0; j <= m; ++j) {
              for (const Form& beta : betas[j]) {
                Form str = beta;
                for (int i = m; i >= 0 && !str.zero(); --i) {
                  if (i == j) continue;
                  str = contract(fields[i], str);
                }
                if (str.zero()) continue;
                int sgn = (j + m) % 2 ? -1 : 1;  // (-1)^{(j+1)+m+1} with 0-based j
                rhs.add(Graded<VinVal>{str.degree() - (model.n - 1),
                                       {{}, str.scaled(coeff * Rational(sgn))}});
              }
            }
            rhs.add_scaled(Rational(-1), lhs);
            if (!rhs.zero()) {
              detail = "m=" + std::to_string(m) + " tuple " + std::to_string(t);
              return false;
            }
          }
          return true;
        });
  });
  // <,>_+ ca pi_2 = <,>_- ca pi_2 - 3 pi_3 (unshifted world)
  checks.push_back([=, &model] {
    return timed(mp + "pi3-pairing", "symmetric vs skew pairing against pi_2",
                 [&](std::string& detail) {
                   Sampler sampler(model);
                   sampler.degree_cap = opt.degree_cap;
                   SplitMix64 rng = check_stream(opt.seed, mp + "pi3-pairing");
                   MultiMap<VinVal> pi2 = rogers_pi_map(model, 2);
                   MultiMap<VinVal> pi3 = rogers_pi_map(model, 3);
                   MultiMap<VinVal> lhs = nr_product(pairing_plus_map(), pi2, NrFlavor::skew);
                   MultiMap<VinVal> rhs =
                       nr_product(pairing_minus_map(), pi2, NrFlavor::skew) - pi3.scaled(Rational(3));
                   for (int t = 0; t < opt.tuples; ++t) {
                     auto word = sampler.seeded_word(rng, 3, t % 2, true);  // 0 or 1 negatives
                     GradedSum<VinVal> diff(lhs(word));
                     diff.add_scaled(Rational(-1), rhs(word));
                     if (!diff.zero()) {
                       detail = "tuple " + std::to_string(t);
                       return false;
                     }
                   }
                   return true;
                 });
  });
  return run_checks(std::move(checks));
}

std::vector<CheckResult> nilpotency_suite(const MultisymplecticModel& model, const SuiteOptions& opt) {
  const int n = model.n;
  const int top = opt.max_arity > 0 ? opt.max_arity : n + 2;
  std::string mp = "r" + std::to_string(model.dimension) + ".";
  std::vector<std::function<CheckResult()>> checks;
  for (int len = 1; len <= top; ++len) {
    checks.push_back([=, &model] {
      return timed(mp + "nilpotent.rogers.len" + std::to_string(len), "square-zero probe",
                   [&](std::string& detail) {
                     MapFamily<VinVal> fam = rogers_shifted_family(model, len);
                     Sampler sampler(model);
                     sampler.degree_cap = opt.degree_cap;
                     SplitMix64 rng = check_stream(opt.seed, mp + "nil.rogers" + std::to_string(len));
                     for (int t = 0; t < opt.tuples; ++t) {
                       auto word = shifted_word(sampler, rng, len, t);
                       if (!nilpotency_defect(fam, std::span<const VinElem>(word)).zero()) {
                         detail = "word " + std::to_string(t) + ", " + describe_word(word);
                         return false;
                       }
                     }
                     return true;
                   });
    });
    checks.push_back([=, &model] {
      return timed(mp + "nilpotent.vinogradov.len" + std::to_string(len), "square-zero probe",
                   [&](std::string& detail) {
                     MapFamily<VinVal> fam = vinogradov_shifted_family(model, len);
                     Sampler sampler(model);
                     sampler.degree_cap = opt.degree_cap;
                     SplitMix64 rng = check_stream(opt.seed, mp + "nil.vin" + std::to_string(len));
                     for (int t = 0; t < opt.tuples; ++t) {
                       auto word = shifted_word(sampler, rng, len, t);
                       if (!nilpotency_defect(fam, std::span<const VinElem>(word)).zero()) {
                         detail = "word " + std::to_string(t) + ", " + describe_word(word);
                         return false;
                       }
                     }
                     return true;
                   });
    });
  }
  return run_checks(std::move(checks));
}

std::vector<CheckResult> embedding_suite(const MultisymplecticModel& model, const SuiteOptions& opt) {
  const int n = model.n;
  const int top = opt.max_arity > 0 ? opt.max_arity : n + 1;
  std::string mp = "r" + std::to_string(model.dimension) + ".";
  std::vector<std::function<CheckResult()>> checks;

  for (int len = 1; len <= top; ++len) {
    checks.push_back([=, &model] {
      return timed(mp + "embedding.defect.len" + std::to_string(len),
                   "the embedding intertwines the structures", [&](std::string& detail) {
                     MorphismComponents<VinVal, VinVal> phi = embedding_shifted_components(len);
                     MapFamily<VinVal> src = rogers_shifted_family(model, len);
                     MapFamily<VinVal> dst = vinogradov_shifted_family(model, len);
                     Sampler sampler(model);
                     sampler.degree_cap = opt.degree_cap;
                     SplitMix64 rng = check_stream(opt.seed, mp + "emb.defect" + std::to_string(len));
                     for (int t = 0; t < opt.tuples; ++t) {
                       auto word = shifted_word(sampler, rng, len, t);
                       if (!verify_morphism(phi, src, dst, std::span<const VinElem>(word)).zero()) {
                         detail = "word " + std::to_string(t) + ", " + describe_word(word);
                         return false;
                       }
                     }
                     return true;
                   });
    });
  }
  for (int k = 2; k <= top; ++k) {
    checks.push_back([=, &model] {
      return timed(mp + "embedding.routes.k" + std::to_string(k),
                   "closed formula vs pairing powers", [&](std::string& detail) {
                     MultiMap<VinVal> closed = embedding_component_map(model, k);
                     MultiMap<VinVal> route = embedding_pairing_route_map(k);
                     Sampler sampler(model);
                     sampler.degree_cap = opt.degree_cap;
                     SplitMix64 rng = check_stream(opt.seed, mp + "emb.routes" + std::to_string(k));
                     for (int t = 0; t < opt.tuples; ++t) {
                       auto word = sampler.seeded_word(rng, k, t, true);  // unshifted
                       GradedSum<VinVal> diff(closed(word));
                       diff.add_scaled(Rational(-1), route(word));
                       if (!diff.zero()) {
                         detail = "tuple " + std::to_string(t);
                         return false;
                       }
                       // and the shifted component is the decalage of either route
                       auto [shifted, sign] = decalage_element(std::span<const VinElem>(word));
                       MorphismComponents<VinVal, VinVal> phi = embedding_shifted_components(k);
                       GradedSum<VinVal> diff2(phi.f[k](shifted));
                       Graded<VinVal> viaDec = decalage_map(route)(shifted);
                       diff2.add_scaled(Rational(-1), viaDec);
                       if (!diff2.zero()) {
                         detail = "decalage mismatch, tuple " + std::to_string(t);
                         return false;
                       }
                     }
                     return true;
                   });
    });
  }
  checks.push_back([=, &model] {
    return timed(mp + "embedding.mutation", "perturbed second component is detected",
                 [&](std::string& detail) {
                   MorphismComponents<VinVal, VinVal> phi = embedding_shifted_components(2);
                   phi.f[2] = phi.f[2] + bold_s_map();
                   MapFamily<VinVal> src = rogers_shifted_family(model, 2);
                   MapFamily<VinVal> dst = vinogradov_shifted_family(model, 2);
                   Sampler sampler(model);
                   sampler.degree_cap = opt.degree_cap;
                   SplitMix64 rng = check_stream(opt.seed, mp + "emb.mutation");
                   for (int t = 0; t < std::max(5, opt.tuples); ++t) {
                     auto word = shifted_word(sampler, rng, 2, 0);
                     if (!verify_morphism(phi, src, dst, std::span<const VinElem>(word)).zero())
                       return true;  // defect detected, as it must be
                   }
                   detail = "no defect detected for the perturbed morphism";
                   return false;
                 });
  });
  return run_checks(std::move(checks));
}

std::vector<CheckResult> pushforward_suite(const MultisymplecticModel& model, const SuiteOptions& opt) {
  const int n = model.n;
  const int top = opt.max_arity > 0 ? opt.max_arity : n + 1;
  std::string mp = "r" + std::to_string(model.dimension) + ".";
  std::vector<std::function<CheckResult()>> checks;

  for (int k = 1; k <= top; ++k) {
    checks.push_back([=, &model] {
      return timed(mp + "pushforward.bpi.k" + std::to_string(k),
                   "pushed Rogers brackets equal the Vinogradov ones", [&](std::string& detail) {
                     MapFamily<VinVal> pushed =
                         pushforward_structure(rogers_shifted_family(model, top), ansatz_p_family(top), top);
                     const MultiMap<VinVal>* got = pushed.at(k);
                     MultiMap<VinVal> want = decalage_map(vinogradov_mu_map(model, k));
                     MultiMap<VinVal> lhs = got ? *got
                                                : MultiMap<VinVal>::zero(k, 1, Symmetry::none,
                                                                         Convention::shifted);
                     return operators_agree(model, lhs, want, opt,
                                            mp + "push.bpi" + std::to_string(k), detail);
                   });
    });
  }
  checks.push_back([=, &model] {
    return timed(mp + "pushforward.pi4-even", "pushed arity-4 bracket vanishes",
                 [&](std::string& detail) {
                   int reach = std::max(top, 4);
                   MapFamily<VinVal> pushed = pushforward_structure(
                       rogers_shifted_family(model, reach), ansatz_p_family(reach), reach);
                   const MultiMap<VinVal>* got = pushed.at(4);
                   if (!got) return true;
                   return operator_vanishes(model, *got, opt, mp + "push.pi4", detail);
                 });
  });
  for (int k = 2; k <= top; ++k) {
    checks.push_back([=, &model] {
      return timed(mp + "pushforward.exp.k" + std::to_string(k),
                   "exp-morphism components have Bernoulli coefficients", [&](std::string& detail) {
                     auto phi = exp_morphism(ansatz_p_family(top), top);
                     Rational coeff = phi_coefficient(k);
                     MultiMap<VinVal> want =
                         coeff.is_zero()
                             ? MultiMap<VinVal>::zero(k, 0, Symmetry::none, Convention::shifted)
                             : iterated_power(bold_s_map(), k - 1).scaled(coeff);
                     return operators_agree(model, phi[k], want, opt,
                                            mp + "push.exp" + std::to_string(k), detail);
                   });
    });
  }
  return run_checks(std::move(checks));
}

std::vector<CheckResult> pentagon_suite(const ComomentMap& f, const GaugeData& gauge,
                                        const SuiteOptions& opt) {
  std::vector<std::function<CheckResult()>> checks;
  const int n = f.model.n;
  const int top = opt.max_arity > 0 ? opt.max_arity : n + 1;
  std::string mp = "r" + std::to_string(f.model.dimension) + ".";

  checks.push_back([=, &f, &gauge] {
    return timed(mp + "pentagon.commutes", "gauge square commutes strictly",
                 [&](std::string& detail) {
                   PentagonReport rep = pentagon_check(f, gauge, top, 20);
                   detail = rep.detail;
                   return rep.pass;
                 });
  });
  checks.push_back([=, &f] {
    return timed(mp + "pentagon.scalar", "binomial Bernoulli recursion", [&](std::string& detail) {
      for (int m = 2; m <= 20; ++m) {
        Rational acc(0);
        for (int ell = 1; ell <= m; ++ell) acc += binomial(m, ell - 1) * bernoulli(ell - 1);
        if (!acc.is_zero()) {
          detail = "m=" + std::to_string(m);
          return false;
        }
      }
      return true;
    });
  });
  checks.push_back([=, &f, &gauge] {
    return timed(mp + "pentagon.m1-hand", "unary case by direct expansion",
                 [&](std::string& detail) {
                   MultiMap<VinVal> tau = gauge_tau_map(gauge);
                   for (int i = 0; i < f.algebra.dim; ++i) {
                     std::vector<Graded<LieVal>> xi = {lie_basis(i)};
                     Graded<VinVal> via_tau = tau({f.component_map(1)(xi)});
                     ComomentMap ft = twist_comoment(f, gauge);
                     Graded<VinVal> direct = ft.component_map(1)(xi);
                     GradedSum<VinVal> diff(via_tau);
                     diff.add_scaled(Rational(-1), direct);
                     if (!diff.zero()) {
                       detail = "basis " + std::to_string(i);
                       return false;
                     }
                   }
                   return true;
                 });
  });
  // rhs lemma: <,>^{ca(l-1)} o (f_1^{(l-1)} x b_{m-l+1}) o P_{l-1,m-l+1} = C(m,l-1)(l-1)!/2^{l-1} b_m
  for (int m = 1; m <= std::min(4, n + 1); ++m) {
    checks.push_back([=, &f, &gauge] {
      return timed(mp + "pentagon.rhs-binomial.m" + std::to_string(m),
                   "twist insertion collapses to a binomial multiple", [&](std::string& detail) {
                     std::vector<IndexWord> words;
                     {
                       // all ascending words of length m (vacuous when dim < m)
                       IndexWord w;
                       std::function<void(int)> rec = [&](int start) {
                         if (static_cast<int>(w.size()) == m) {
                           words.push_back(w);
                           return;
                         }
                         for (int v = start; v < f.algebra.dim; ++v) {
                           w.push_back(v);
                           rec(v + 1);
                           w.pop_back();
                         }
                       };
                       rec(0);
                     }
                     for (int ell = 1; ell <= m; ++ell) {
                       for (const IndexWord& w : words) {
                         // assemble the tuple of A-elements: f1-images of the xi's
                         std::vector<VinElem> f1img(m);
                         for (int t = 0; t < m; ++t) {
                           std::vector<Graded<LieVal>> xi = {lie_basis(w[t])};
                           f1img[t] = f.component_map(1)(xi);
                         }
                         std::vector<int> shape;
                         if (ell > 1) shape.push_back(ell - 1);
                         shape.push_back(m - ell + 1);
                         GradedSum<VinVal> acc;
                         for_each_unshuffle(std::span<const int>(shape), [&](std::span<const int> perm) {
                           int sgn = permutation_sign(perm);  // degree-0 inputs
                           std::vector<VinElem> first;
                           IndexWord rest;
                           for (int t = 0; t < ell - 1; ++t) first.push_back(f1img[perm[t]]);
                           for (int t = ell - 1; t < m; ++t) rest.push_back(w[perm[t]]);
                           Form bterm = twist_term(f, gauge.b, rest);
                           if (bterm.zero()) return;
                           std::vector<VinElem> tuple = first;
                           tuple.push_back(vin_form(f.model, bterm));
                           Graded<VinVal> val = ell == 1
                                                    ? tuple[0]
                                                    : pairing_power_map(ell - 1)(tuple);
                           acc.add_scaled(Rational(sgn), val);
                         });
                         Form bm = twist_term(f, gauge.b, w);
                         Rational coeff = binomial(m, ell - 1) * factorial(ell - 1) / Rational(2).pow(ell - 1);
                         GradedSum<VinVal> rhs;
                         if (!bm.zero())
                           rhs.add(Graded<VinVal>{bm.degree() - (f.model.n - 1), {{}, bm.scaled(coeff)}});
                         acc.subtract(rhs);
                         if (!acc.zero()) {
                           detail = "m=" + std::to_string(m) + " l=" + std::to_string(ell);
                           return false;
                         }
                       }
                     }
                     return true;
                   });
    });
  }
  return run_checks(std::move(checks));
}

}  // namespace plectic
