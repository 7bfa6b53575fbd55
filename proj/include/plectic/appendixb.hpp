#ifndef PLECTIC_APPENDIXB_HPP
#define PLECTIC_APPENDIXB_HPP

#include <string>
#include <utility>
#include <vector>

#include "plectic/linsolve.hpp"
#include "plectic/model.hpp"

namespace plectic {

/// The linear system M a = R certifying that
///   2 S^{n-1}.pi_1 - 3 S^{n-2}.pi_1.S + S^{n-3}.pi_1.S^2
/// is a combination of d [S^{n-1}, pi_1], the b_k double commutators, and the
/// triple/quadruple nested commutators. Rows are the coefficients of
/// E_{n-1}..E_0 with E_j = S^j . pi_1 . S^{n-1-j}; columns are labelled by the
/// nested-commutator exponent pairs.
struct CommutatorSystem {
  int n = 0;  // odd, >= 5
  int big_n = 0;  // (n-1)/2
  std::vector<std::pair<int, int>> triple_labels;  // (k3, k2), k3 >= k2 >= 1, k3+k2 = n-2
  std::vector<std::pair<int, int>> quad_labels;    // (k4, k3), k4 >= k3 >= 1, k4+k3 = n-3
  Rational d;                                      // 1/(n-1)
  std::vector<std::pair<int, Rational>> b;         // (k, b_k) for even k in [2, N]
  Mat m;                                           // n x (n-3), triples then quads
  Vec r;                                           // length n
};

struct SplitSystem {
  Mat m_prime;       // after the row involution
  Vec r_prime;
  Mat top;           // (N+1) x (N-1): quadruple-commutator columns
  Vec r_top;
  Mat bottom;        // N x (N-1): triple-commutator columns
  Vec r_bottom;
};

struct SystemSolution {
  bool solvable = false;
  bool unique = false;
  Vec a;  // ordered as triple labels then quad labels
  // exact orthogonality certificates
  bool bottom_orthogonal = false;  // columns and rhs perpendicular to (1..N)
  bool top_orthogonal_v1 = false;  // ... to (1,...,1,1/2)
  bool top_orthogonal_v2 = false;  // ... to (N^2,...,1,0)
  std::string detail;
};

/// Exact assembly from the commutator expansions; the n = 5 and n = 7
/// systems are pinned entry by entry in the tests.
CommutatorSystem build_system(int n);

/// Row transform R_k -> (R_k + R_{n+1-k})/2, R_{n+1-k} -> (R_k - R_{n+1-k})/2,
/// then the split into the decoupled top and bottom systems (zero columns dropped).
SplitSystem transform_and_split(const CommutatorSystem& sys);

/// Exact elimination; verifies the orthogonality characterization of both
/// column spaces and right-hand sides.
SystemSolution solve_system(const CommutatorSystem& sys);

struct CrossValidation {
  bool coefficients_match = false;  // E_j expansion of both sides agrees
  bool coefficient_sum_ok = false;  // d + sum b_k + sum a_J = 2
  bool a_consistent = false;        // a = n!/2^{n-1} (2 - d - sum b_k)
  bool operator_check = false;      // optional evaluation on a desk model
  bool operator_checked = false;
  std::string detail;
};

/// Expands both sides in the formal E_j basis and compares coefficients; when a
/// model is supplied (odd n = model.n), also evaluates both operator sides on a
/// few sampled tuples.
CrossValidation cross_validate_operator(int n, const Vec& a, const MultisymplecticModel* model,
                                        uint64_t seed = 1, int tuples = 2);

/// JSON report of the system, its transform, the solution, and the certificates.
std::string system_report_json(int n);

}  // namespace plectic

#endif
