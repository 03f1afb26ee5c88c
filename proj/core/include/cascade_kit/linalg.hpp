#pragma once

#include <cstddef>
#include <vector>

#include "cascade_kit/arith.hpp"

namespace cascade_kit::linalg {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Rank over Q by Gaussian elimination with exact pivots.
std::size_t rank(RatMat a);
std::size_t rank(const IntMat& a);

// Determinant of a square integer matrix by fraction-free (Bareiss)
// elimination; divisions are exact at every step.
Int det_bareiss(IntMat a);

// Full description of the solution set of A x = b over Q.
struct LinearSolution {
  bool consistent = false;
  RatVec particular;            // one solution (valid iff consistent)
  std::vector<RatVec> nullspace; // basis of ker A (always valid)

  bool unique() const { return consistent && nullspace.empty(); }
};

LinearSolution solve(const RatMat& a, const RatVec& b);
std::vector<RatVec> nullspace(const RatMat& a);

} // namespace cascade_kit::linalg
