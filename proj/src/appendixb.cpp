#include "plectic/appendixb.hpp"

#include <json.hpp>
#include <stdexcept>

#include "plectic/bernoulli.hpp"
#include "plectic/rng.hpp"
#include "plectic/sampler.hpp"
#include "plectic/vin.hpp"

namespace plectic {

namespace {

// Coefficient vectors in the basis E_{n-1}, ..., E_0 (index 0 <-> E_{n-1}).
Vec e_zero(int n) { return Vec(n, Rational(0)); }

void add_e(Vec& v, int n, int j, const Rational& c) { v[(n - 1) - j] += c; }

// [S^{n-1}, pi_1]
Vec expand_single(int n) {
  Vec v = e_zero(n);
  add_e(v, n, n - 1, Rational(1));
  add_e(v, n, 0, Rational(-1));
  return v;
}

// [S^k, [S^{n-1-k}, pi_1]]
Vec expand_double(int n, int k) {
  Vec v = e_zero(n);
  add_e(v, n, n - 1, Rational(1));
  add_e(v, n, k, Rational(-1));
  add_e(v, n, n - 1 - k, Rational(-1));
  add_e(v, n, 0, Rational(1));
  return v;
}

// [S^{k_3}, [S^{k_2}, [S^{k_1}, pi_1]]]
Vec expand_triple(int n, int k3, int k2, int k1) {
  Vec v = e_zero(n);
  add_e(v, n, n - 1, Rational(1));
  for (int k : {k1, k2, k3}) {
    add_e(v, n, n - 1 - k, Rational(-1));
    add_e(v, n, k, Rational(1));
  }
  add_e(v, n, 0, Rational(-1));
  return v;
}

// [S^{k_4}, [S^{k_3}, [S^{k_2}, [S^{k_1}, pi_1]]]]
Vec expand_quad(int n, int k4, int k3, int k2, int k1) {
  Vec v = e_zero(n);
  add_e(v, n, n - 1, Rational(1));
  int ks[4] = {k1, k2, k3, k4};
  for (int k : ks) {
    add_e(v, n, n - 1 - k, Rational(-1));
    add_e(v, n, k, Rational(-1));
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) add_e(v, n, ks[i] + ks[j], Rational(1));
  add_e(v, n, 0, Rational(1));
  return v;
}

Rational b_coefficient(int n, int k) {
  // b_k = -(1/B_{n-1}) C(n-1,k) B_k B_{n-1-k} / (k (n-1-k)), halved at k = N
  int bigN = (n - 1) / 2;
  Rational v = -(Rational(1) / bernoulli(n - 1)) * binomial(n - 1, k) * bernoulli(k) *
               bernoulli(n - 1 - k) / Rational(static_cast<long long>(k) * (n - 1 - k));
  if (k == bigN) v = v / Rational(2);
  return v;
}

}  // namespace

CommutatorSystem build_system(int n) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("build_system: n must be odd and >= 5");
  CommutatorSystem sys;
  sys.n = n;
  sys.big_n = (n - 1) / 2;
  // triple labels (k3, k2): k3 >= k2 >= 1, k3 + k2 = n - 2, ascending k3
  for (int k3 = (n - 2 + 1) / 2; k3 <= n - 3; ++k3) sys.triple_labels.emplace_back(k3, n - 2 - k3);
  // quad labels (k4, k3): k4 >= k3 >= 1, k4 + k3 = n - 3, ascending k4
  for (int k4 = (n - 3 + 1) / 2; k4 <= n - 4; ++k4) sys.quad_labels.emplace_back(k4, n - 3 - k4);

  sys.d = Rational(1, n - 1);
  for (int k = 2; k <= sys.big_n; k += 2) sys.b.emplace_back(k, b_coefficient(n, k));

  int cols = static_cast<int>(sys.triple_labels.size() + sys.quad_labels.size());
  if (cols != n - 3) throw std::logic_error("build_system: column count mismatch");
  sys.m.assign(n, Vec(cols, Rational(0)));
  int col = 0;
  for (auto [k3, k2] : sys.triple_labels) {
    Vec v = expand_triple(n, k3, k2, 1);
    for (int r = 0; r < n; ++r) sys.m[r][col] = v[r];
    ++col;
  }
  for (auto [k4, k3] : sys.quad_labels) {
    Vec v = expand_quad(n, k4, k3, 1, 1);
    for (int r = 0; r < n; ++r) sys.m[r][col] = v[r];
    ++col;
  }

  // rhs: (2 E_{n-1} - 3 E_{n-2} + E_{n-3}) - d [S^{n-1}, pi_1] - sum b_k [S^k,[S^{n-1-k},pi_1]]
  sys.r = e_zero(n);
  add_e(sys.r, n, n - 1, Rational(2));
  add_e(sys.r, n, n - 2, Rational(-3));
  add_e(sys.r, n, n - 3, Rational(1));
  Vec single = expand_single(n);
  for (int r = 0; r < n; ++r) sys.r[r] -= sys.d * single[r];
  for (auto& [k, bk] : sys.b) {
    Vec dbl = expand_double(n, k);
    for (int r = 0; r < n; ++r) sys.r[r] -= bk * dbl[r];
  }
  return sys;
}

SplitSystem transform_and_split(const CommutatorSystem& sys) {
  const int n = sys.n, bigN = sys.big_n;
  SplitSystem out;
  out.m_prime = sys.m;
  out.r_prime = sys.r;
  Rational half(1, 2);
  for (int k = 1; k <= bigN; ++k) {
    int a = k - 1, b = (n + 1 - k) - 1;  // row indices, 0-based
    for (size_t c = 0; c < sys.m[0].size(); ++c) {
      Rational top = (sys.m[a][c] + sys.m[b][c]) * half;
      Rational bot = (sys.m[a][c] - sys.m[b][c]) * half;
      out.m_prime[a][c] = top;
      out.m_prime[b][c] = bot;
    }
    out.r_prime[a] = (sys.r[a] + sys.r[b]) * half;
    out.r_prime[b] = (sys.r[a] - sys.r[b]) * half;
  }
  const int triples = static_cast<int>(sys.triple_labels.size());
  const int quads = static_cast<int>(sys.quad_labels.size());
  // triple columns must vanish in the first N+1 rows, quadruple columns in the last N
  for (int r = 0; r <= bigN; ++r)
    for (int c = 0; c < triples; ++c)
      if (!out.m_prime[r][c].is_zero())
        throw std::logic_error("transform_and_split: triple column leaks into the top block");
  for (int r = bigN + 1; r < n; ++r)
    for (int c = triples; c < triples + quads; ++c)
      if (!out.m_prime[r][c].is_zero())
        throw std::logic_error("transform_and_split: quadruple column leaks into the bottom block");

  out.top.assign(bigN + 1, Vec(quads, Rational(0)));
  out.r_top.assign(bigN + 1, Rational(0));
  for (int r = 0; r <= bigN; ++r) {
    for (int c = 0; c < quads; ++c) out.top[r][c] = out.m_prime[r][triples + c];
    out.r_top[r] = out.r_prime[r];
  }
  out.bottom.assign(bigN, Vec(triples, Rational(0)));
  out.r_bottom.assign(bigN, Rational(0));
  for (int r = 0; r < bigN; ++r) {
    for (int c = 0; c < triples; ++c) out.bottom[r][c] = out.m_prime[bigN + 1 + r][c];
    out.r_bottom[r] = out.r_prime[bigN + 1 + r];
  }
  return out;
}

SystemSolution solve_system(const CommutatorSystem& sys) {
  SystemSolution sol;
  SplitSystem split = transform_and_split(sys);
  const int bigN = sys.big_n;

  // orthogonality certificates
  Vec weights(bigN);
  for (int i = 0; i < bigN; ++i) weights[i] = Rational(i + 1);
  sol.bottom_orthogonal = true;
  for (size_t c = 0; c < split.bottom[0].size() && sol.bottom_orthogonal; ++c) {
    Vec col(bigN);
    for (int r = 0; r < bigN; ++r) col[r] = split.bottom[r][c];
    if (!dot(col, weights).is_zero()) sol.bottom_orthogonal = false;
  }
  if (!dot(split.r_bottom, weights).is_zero()) sol.bottom_orthogonal = false;

  Vec v1(bigN + 1, Rational(1));
  v1[bigN] = Rational(1, 2);
  Vec v2(bigN + 1);
  for (int i = 0; i <= bigN; ++i) v2[i] = Rational(static_cast<long long>(bigN - i) * (bigN - i));
  sol.top_orthogonal_v1 = true;
  sol.top_orthogonal_v2 = true;
  for (size_t c = 0; c < split.top[0].size(); ++c) {
    Vec col(bigN + 1);
    for (int r = 0; r <= bigN; ++r) col[r] = split.top[r][c];
    if (!dot(col, v1).is_zero()) sol.top_orthogonal_v1 = false;
    if (!dot(col, v2).is_zero()) sol.top_orthogonal_v2 = false;
  }
  if (!dot(split.r_top, v1).is_zero()) sol.top_orthogonal_v1 = false;
  if (!dot(split.r_top, v2).is_zero()) sol.top_orthogonal_v2 = false;

  SolveResult bottom = solve_linear(split.bottom, split.r_bottom);
  SolveResult top = solve_linear(split.top, split.r_top);
  if (!bottom.consistent || !top.consistent) {
    sol.solvable = false;
    sol.detail = "infeasible subsystem";
    return sol;
  }
  sol.solvable = true;
  sol.unique = bottom.unique && top.unique;
  sol.a = bottom.solution;
  sol.a.insert(sol.a.end(), top.solution.begin(), top.solution.end());

  // consistency against the untransformed system
  for (size_t r = 0; r < sys.m.size(); ++r) {
    Rational acc(0);
    for (size_t c = 0; c < sol.a.size(); ++c) acc += sys.m[r][c] * sol.a[c];
    if (acc != sys.r[r]) {
      sol.solvable = false;
      sol.detail = "solution fails the original system at row " + std::to_string(r);
      return sol;
    }
  }
  return sol;
}

CrossValidation cross_validate_operator(int n, const Vec& a, const MultisymplecticModel* model,
                                        uint64_t seed, int tuples) {
  CrossValidation cv;
  CommutatorSystem sys = build_system(n);
  if (a.size() != sys.triple_labels.size() + sys.quad_labels.size()) {
    cv.detail = "coefficient vector has the wrong length";
    return cv;
  }

  Vec lhs = e_zero(n);
  add_e(lhs, n, n - 1, Rational(2));
  add_e(lhs, n, n - 2, Rational(-3));
  add_e(lhs, n, n - 3, Rational(1));

  Vec rhs = e_zero(n);
  {
    Vec single = expand_single(n);
    for (int r = 0; r < n; ++r) rhs[r] += sys.d * single[r];
    for (auto& [k, bk] : sys.b) {
      Vec dbl = expand_double(n, k);
      for (int r = 0; r < n; ++r) rhs[r] += bk * dbl[r];
    }
    size_t idx = 0;
    for (auto [k3, k2] : sys.triple_labels) {
      Vec t = expand_triple(n, k3, k2, 1);
      for (int r = 0; r < n; ++r) rhs[r] += a[idx] * t[r];
      ++idx;
    }
    for (auto [k4, k3] : sys.quad_labels) {
      Vec q = expand_quad(n, k4, k3, 1, 1);
      for (int r = 0; r < n; ++r) rhs[r] += a[idx] * q[r];
      ++idx;
    }
  }
  cv.coefficients_match = lhs == rhs;

  Rational sum_b(0);
  for (auto& [k, bk] : sys.b) sum_b += bk;
  Rational sum_a(0);
  for (const auto& v : a) sum_a += v;
  cv.coefficient_sum_ok = sys.d + sum_b + sum_a == Rational(2);
  Rational a_formula = factorial(n) / Rational(2).pow(n - 1) * (Rational(2) - sys.d - sum_b);
  cv.a_consistent = factorial(n) / Rational(2).pow(n - 1) * sum_a == a_formula;

  if (model && model->n == n) {
    cv.operator_checked = true;
    cv.operator_check = true;
    MultiMap<VinVal> s = bold_s_map();
    MultiMap<VinVal> pi1 = decalage_map(rogers_pi_map(*model, 1));
    auto e_op = [&](int j) {
      MultiMap<VinVal> acc = j == 0 ? pi1 : nr_product(iterated_power(s, j), pi1);
      if (j < n - 1) acc = nr_product(acc, iterated_power(s, n - 1 - j));
      return acc;
    };
    auto column_op = [&](const Vec& coeffs) {
      MultiMap<VinVal> acc;
      for (int j = n - 1; j >= 0; --j) {
        const Rational& c = coeffs[(n - 1) - j];
        if (c.is_zero()) continue;
        MultiMap<VinVal> term = e_op(j).scaled(c);
        acc = acc.valid() ? acc + term : term;
      }
      return acc;
    };
    MultiMap<VinVal> lhs_op = column_op(lhs);
    MultiMap<VinVal> rhs_op = column_op(rhs);
    Sampler sampler(*model);
    sampler.degree_cap = 1;
    SplitMix64 rng = check_stream(seed, "appendixb.operator");
    for (int t = 0; t < tuples && cv.operator_check; ++t) {
      auto word = sampler.seeded_word(rng, n, t % 2, true);
      for (auto& x : word) --x.degree;
      GradedSum<VinVal> diff(lhs_op(word));
      diff.add_scaled(Rational(-1), rhs_op(word));
      if (!diff.zero()) {
        cv.operator_check = false;
        cv.detail = "operator sides differ on tuple " + std::to_string(t);
      }
    }
  }
  return cv;
}

std::string system_report_json(int n) {
  nlohmann::json j;
  CommutatorSystem sys = build_system(n);
  SplitSystem split = transform_and_split(sys);
  SystemSolution sol = solve_system(sys);

  auto mat_json = [](const Mat& m) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : m) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& v : row) r.push_back(v.to_string());
      out.push_back(r);
    }
    return out;
  };
  auto vec_json = [](const Vec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
  };

  j["n"] = n;
  j["N"] = sys.big_n;
  j["d"] = sys.d.to_string();
  nlohmann::json bk = nlohmann::json::object();
  for (auto& [k, v] : sys.b) bk["b" + std::to_string(k)] = v.to_string();
  j["b"] = bk;
  nlohmann::json labels = nlohmann::json::array();
  for (auto [k3, k2] : sys.triple_labels)
    labels.push_back({{"kind", "triple"}, {"k3", k3}, {"k2", k2}});
  for (auto [k4, k3] : sys.quad_labels)
    labels.push_back({{"kind", "quad"}, {"k4", k4}, {"k3", k3}});
  j["columns"] = labels;
  j["M"] = mat_json(sys.m);
  j["R"] = vec_json(sys.r);
  j["M_prime"] = mat_json(split.m_prime);
  j["R_prime"] = vec_json(split.r_prime);
  j["solvable"] = sol.solvable;
  j["unique"] = sol.unique;
  j["solution"] = vec_json(sol.a);
  j["certificates"] = {{"bottom_orthogonal_1..N", sol.bottom_orthogonal},
                       {"top_orthogonal_v1", sol.top_orthogonal_v1},
                       {"top_orthogonal_v2", sol.top_orthogonal_v2}};
  CrossValidation cv = cross_validate_operator(n, sol.a, nullptr);
  j["cross_validation"] = {{"coefficients_match", cv.coefficients_match},
                           {"coefficient_sum", cv.coefficient_sum_ok},
                           {"a_formula", cv.a_consistent}};
  return j.dump(2);
}

}  // namespace plectic
