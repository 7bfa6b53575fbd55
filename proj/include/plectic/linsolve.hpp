#ifndef PLECTIC_LINSOLVE_HPP
#define PLECTIC_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "plectic/rational.hpp"

namespace plectic {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row major

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(Mat& m);

int rank(Mat m);

Rational dot(const Vec& a, const Vec& b);

struct SolveResult {
  bool consistent = false;
  bool unique = false;
  Vec solution;  // a particular solution when consistent (free variables at 0)
};

/// Exact Gaussian elimination for A x = b.
SolveResult solve_linear(const Mat& a, const Vec& b);

}  // namespace plectic

#endif
