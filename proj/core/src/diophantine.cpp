#include "cascade_kit/diophantine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cascade_kit/linalg.hpp"

namespace cascade_kit {

namespace {

// v(m) = Σ m_i a_i
std::vector<Int> value_of(const MonoidProblem& p, const std::vector<int>& m) {
  std::vector<Int> v(p.d(), 0);
  for (std::size_t i = 0; i < p.k(); ++i) {
    if (m[i] == 0) continue;
    for (std::size_t c = 0; c < p.d(); ++c) v[c] += Int(m[i]) * p.vectors[i][c];
  }
  return v;
}

bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

bool is_zero(const std::vector<Int>& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

} // namespace

HilbertResult hilbert_basis(const MonoidProblem& problem, int budget) {
  if (problem.k() == 0) throw std::invalid_argument("hilbert_basis: k must be at least 1");
  for (const auto& v : problem.vectors)
    if (v.size() != problem.d())
      throw std::invalid_argument("hilbert_basis: ragged vector dimensions");

  HilbertResult out;
  out.budget = budget;

  const std::size_t k = problem.k();
  std::deque<std::vector<int>> frontier;
  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<int> e(k, 0);
    e[i] = 1;
    frontier.push_back(e);
    seen.insert(std::move(e));
  }

  std::vector<std::vector<int>> found;
  while (!frontier.empty()) {
    std::vector<int> m = std::move(frontier.front());
    frontier.pop_front();

    // FIFO order visits level Σm before Σm+1, so every already-found solution
    // has degree ≤ deg(m) and domination pruning is sound.
    bool dominated = false;
    for (const auto& s : found)
      if (dominates(m, s) && m != s) {
        dominated = true;
        break;
      }
    if (dominated) continue;

    const auto v = value_of(problem, m);
    if (is_zero(v)) {
      found.push_back(std::move(m));
      continue;
    }
    const int deg = std::accumulate(m.begin(), m.end(), 0);
    if (deg >= budget) {
      out.budget_exceeded = true;
      continue;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (dot(v, problem.vectors[i]) >= 0) continue; // Contejean–Devie step rule
      std::vector<int> next = m;
      ++next[i];
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }

  // The step rule plus pruning already keeps non-minimal solutions out, but a
  // final minimality sweep costs nothing and guards the invariant directly.
  for (const auto& m : found) {
    bool minimal = true;
    for (const auto& s : found)
      if (s != m && dominates(m, s)) {
        minimal = false;
        break;
      }
    if (minimal) out.basis.push_back(m);
  }
  std::sort(out.basis.begin(), out.basis.end());
  return out;
}

bool is_free_monoid(const MonoidProblem& problem, const std::vector<std::vector<int>>& basis) {
  for (const auto& b : basis) {
    if (b.size() != problem.k())
      throw std::invalid_argument("is_free_monoid: basis element of wrong dimension");
    if (!is_zero(value_of(problem, b)))
      throw std::invalid_argument("is_free_monoid: basis element is not a solution");
  }

  // Minimal generators are relation-free iff linearly independent.
  linalg::RatMat m(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    m[i].assign(basis[i].begin(), basis[i].end());
  const bool independent = linalg::rank(std::move(m)) == basis.size();

  // Cross-check on bounded degrees: two distinct combinations of the basis
  // must never meet when the generators are independent.
  if (independent && !basis.empty()) {
    int max_deg = 0;
    for (const auto& b : basis)
      max_deg = std::max(max_deg, std::accumulate(b.begin(), b.end(), 0));
    const int bound = 2 * max_deg;

    std::map<std::vector<int>, std::vector<int>> rep; // element -> combination
    std::deque<std::pair<std::vector<int>, std::vector<int>>> queue;
    queue.push_back({std::vector<int>(problem.k(), 0), std::vector<int>(basis.size(), 0)});
    std::set<std::vector<int>> seen_combos;
    seen_combos.insert(std::vector<int>(basis.size(), 0));
    while (!queue.empty()) {
      auto [elem, combo] = std::move(queue.front());
      queue.pop_front();
      auto it = rep.find(elem);
      if (it != rep.end() && it->second != combo)
        throw std::logic_error("is_free_monoid: independent basis admits a relation");
      rep.emplace(elem, combo);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<int> ne = elem;
        for (std::size_t c = 0; c < ne.size(); ++c) ne[c] += basis[i][c];
        if (std::accumulate(ne.begin(), ne.end(), 0) > bound) continue;
        std::vector<int> nc = combo;
        ++nc[i];
        if (seen_combos.insert(nc).second) queue.push_back({std::move(ne), std::move(nc)});
      }
    }
  }
  return independent;
}

} // namespace cascade_kit
