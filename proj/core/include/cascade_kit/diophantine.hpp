#pragma once

#include <vector>

#include "cascade_kit/arith.hpp"

namespace cascade_kit {

// Homogeneous system: solutions are m ∈ ℕ^k with Σ m_i · vectors[i] = 0.
struct MonoidProblem {
  std::vector<std::vector<Int>> vectors; // k vectors of dimension d

  std::size_t k() const { return vectors.size(); }
  std::size_t d() const { return vectors.empty() ? 0 : vectors[0].size(); }
};

struct HilbertResult {
  std::vector<std::vector<int>> basis; // minimal nonzero solutions, lex-sorted
  bool budget_exceeded = false;        // hit the Σm cap before completing
  int budget = 0;
};

inline constexpr int kHilbertDegreeBudget = 64;

// Complete Hilbert basis by the Contejean–Devie completion procedure. The
// degree budget is a hard stop surfaced in the result, never a silent
// truncation (no instance in this project comes anywhere near it).
HilbertResult hilbert_basis(const MonoidProblem& problem, int budget = kHilbertDegreeBudget);

// Freeness of the solution monoid over its Hilbert basis: minimal generators
// admit no relation iff they are linearly independent. A bounded enumeration
// of monoid elements (twice the maximal basis degree, enough to expose a
// binomial relation among minimal generators) cross-checks the verdict.
bool is_free_monoid(const MonoidProblem& problem, const std::vector<std::vector<int>>& basis);

} // namespace cascade_kit
