#include "cascade_kit/linalg.hpp"

#include <cassert>
#include <utility>

namespace cascade_kit::linalg {

namespace {

// Reduce to row echelon form in place; returns the pivot columns.
std::vector<std::size_t> echelonize(RatMat& m) {
  std::vector<std::size_t> pivot_cols;
  if (m.empty()) return pivot_cols;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    const Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

} // namespace

std::size_t rank(RatMat a) { return echelonize(a).size(); }

std::size_t rank(const IntMat& a) {
  RatMat q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q[i].assign(a[i].begin(), a[i].end());
  return rank(std::move(q));
}

Int det_bareiss(IntMat a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  assert(a[0].size() == n);
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev; // exact
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

LinearSolution solve(const RatMat& a, const RatVec& b) {
  LinearSolution out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  assert(b.size() == rows);

  RatMat aug(rows, RatVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  auto pivots = echelonize(aug);

  // Inconsistent iff a pivot lands in the augmented column.
  out.consistent = pivots.empty() || pivots.back() != cols;
  out.nullspace = nullspace(a);
  if (!out.consistent) return out;

  out.particular.assign(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    out.particular[pivots[r]] = aug[r][cols];
  return out;
}

std::vector<RatVec> nullspace(const RatMat& a) {
  std::vector<RatVec> basis;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (cols == 0) return basis;

  RatMat m = a;
  auto pivots = echelonize(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;

  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    RatVec v(cols, Rat(0));
    v[free_c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace cascade_kit::linalg
