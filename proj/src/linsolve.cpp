#include "plectic/linsolve.hpp"

#include <stdexcept>

namespace plectic {

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    Rational inv = Rational(1) / m[row][col];
    for (size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational r(0);
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

SolveResult solve_linear(const Mat& a, const Vec& b) {
  SolveResult res;
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
  if (a.empty()) {
    res.consistent = true;
    res.unique = true;
    return res;
  }
  const size_t cols = a[0].size();
  Mat aug = a;
  for (size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  std::vector<int> pivots = rref(aug);
  // a pivot in the augmented column means inconsistency
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) {
    res.consistent = false;
    return res;
  }
  res.consistent = true;
  res.unique = pivots.size() == cols;
  res.solution.assign(cols, Rational(0));
  for (size_t i = 0; i < pivots.size(); ++i) res.solution[pivots[i]] = aug[i][cols];
  return res;
}

}  // namespace plectic
