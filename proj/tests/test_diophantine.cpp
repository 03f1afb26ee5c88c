#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "cascade_kit/diophantine.hpp"

using namespace cascade_kit;

namespace {

MonoidProblem problem_1d(std::vector<int> entries) {
  MonoidProblem p;
  for (int e : entries) p.vectors.push_back({Int(e)});
  return p;
}

// All minimal nonzero solutions with degree Σm ≤ cap, by plain enumeration.
std::set<std::vector<int>> brute_minimal(const MonoidProblem& p, int cap) {
  const std::size_t k = p.k();
  std::vector<std::vector<int>> sols;
  std::vector<int> m(k, 0);
  auto is_solution = [&]() {
    for (std::size_t j = 0; j < p.d(); ++j) {
      Int s = 0;
      for (std::size_t i = 0; i < k; ++i) s += Int(m[i]) * p.vectors[i][j];
      if (s != 0) return false;
    }
    return true;
  };
  // Odometer over {m : Σm ≤ cap}.
  for (;;) {
    if (std::accumulate(m.begin(), m.end(), 0) > 0 && is_solution()) sols.push_back(m);
    std::size_t i = 0;
    while (i < k) {
      ++m[i];
      if (std::accumulate(m.begin(), m.end(), 0) <= cap) break;
      m[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  std::set<std::vector<int>> minimal;
  for (const auto& a : sols) {
    bool dominated = false;
    for (const auto& b : sols) {
      if (b == a) continue;
      bool le = true;
      for (std::size_t i = 0; i < k; ++i)
        if (b[i] > a[i]) le = false;
      if (le) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.insert(a);
  }
  return minimal;
}

} // namespace

TEST_CASE("one-dimensional bases") {
  const MonoidProblem p = problem_1d({2, -1, -2});
  const HilbertResult r = hilbert_basis(p);
  CHECK_FALSE(r.budget_exceeded);
  CHECK(r.basis == std::vector<std::vector<int>>{{1, 0, 1}, {1, 2, 0}});
  CHECK(is_free_monoid(p, r.basis));

  const MonoidProblem q = problem_1d({-1, -2, 1, 1, 2});
  const HilbertResult rq = hilbert_basis(q);
  CHECK(rq.basis == std::vector<std::vector<int>>{{0, 1, 0, 0, 1},
                                                  {0, 1, 0, 2, 0},
                                                  {0, 1, 1, 1, 0},
                                                  {0, 1, 2, 0, 0},
                                                  {1, 0, 0, 1, 0},
                                                  {1, 0, 1, 0, 0},
                                                  {2, 0, 0, 0, 1}});
  CHECK_FALSE(is_free_monoid(q, rq.basis));
}

TEST_CASE("the six-generator two-coroot system") {
  MonoidProblem p;
  p.vectors = {{Int(2), Int(0)},  {Int(2), Int(1)},   {Int(2), Int(2)},
               {Int(-1), Int(0)}, {Int(-2), Int(0)},  {Int(-2), Int(-2)}};
  const HilbertResult r = hilbert_basis(p);
  CHECK_FALSE(r.budget_exceeded);
  CHECK(r.basis == std::vector<std::vector<int>>{{0, 0, 1, 0, 0, 1},
                                                 {0, 2, 0, 0, 1, 1},
                                                 {0, 2, 0, 2, 0, 1},
                                                 {1, 0, 0, 0, 1, 0},
                                                 {1, 0, 0, 2, 0, 0}});
  // (0,2,0,0,1,1) + (1,0,0,2,0,0) = (0,2,0,2,0,1) + (1,0,0,0,1,0): a relation.
  CHECK_FALSE(is_free_monoid(p, r.basis));
}

TEST_CASE("degenerate problems") {
  CHECK_THROWS_AS(hilbert_basis(MonoidProblem{}), std::invalid_argument);

  // No equation at all: the units are the minimal solutions.
  MonoidProblem no_eq;
  no_eq.vectors = {{}, {}, {}};
  const HilbertResult r = hilbert_basis(no_eq);
  CHECK(r.basis == std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(is_free_monoid(no_eq, r.basis));

  // Strictly positive row: only the trivial solution exists.
  const MonoidProblem pos = problem_1d({1, 1});
  CHECK(hilbert_basis(pos).basis.empty());
  CHECK(is_free_monoid(pos, {}));
}

TEST_CASE("budget reporting") {
  const MonoidProblem p = problem_1d({1, -2});
  const HilbertResult tight = hilbert_basis(p, 2);
  CHECK(tight.budget_exceeded);
  CHECK(tight.budget == 2);
  const HilbertResult ok = hilbert_basis(p);
  CHECK_FALSE(ok.budget_exceeded);
  CHECK(ok.budget == kHilbertDegreeBudget);
  CHECK(ok.basis == std::vector<std::vector<int>>{{2, 1}});
}

TEST_CASE("random problems against a bounded enumeration") {
  std::mt19937 gen(46117);
  std::uniform_int_distribution<int> k_d(1, 6), d_d(1, 3), e_d(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    MonoidProblem p;
    const int k = k_d(gen), d = d_d(gen);
    for (int i = 0; i < k; ++i) {
      std::vector<Int> v;
      for (int j = 0; j < d; ++j) v.push_back(Int(e_d(gen)));
      p.vectors.push_back(std::move(v));
    }
    // A few wide problems legitimately hit the degree budget; the comparison
    // below only looks at degrees ≤ 12, where the search is always complete.
    const HilbertResult r = hilbert_basis(p);
    CAPTURE(trial);

    std::set<std::vector<int>> low;
    for (const auto& b : r.basis)
      if (std::accumulate(b.begin(), b.end(), 0) <= 12) low.insert(b);
    CHECK(low == brute_minimal(p, 12));

    // Basis elements solve the system and are pairwise incomparable.
    for (const auto& a : r.basis) {
      for (std::size_t j = 0; j < p.d(); ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < p.k(); ++i) s += Int(a[i]) * p.vectors[i][j];
        CHECK(s == 0);
      }
      for (const auto& b : r.basis) {
        if (a == b) continue;
        bool le = true;
        for (std::size_t i = 0; i < p.k(); ++i)
          if (a[i] > b[i]) le = false;
        CHECK_FALSE(le);
      }
    }
  }
}
