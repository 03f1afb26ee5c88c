// Acceptance gate: eight end-to-end criteria, one PASS/FAIL line each.
// Known divergences of the computed data from the printed tables are
// surfaced as findings (with witnesses), never silently absorbed.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cascade_kit/biparabolic.hpp"
#include "cascade_kit/cascade.hpp"
#include "cascade_kit/checker.hpp"
#include "cascade_kit/diophantine.hpp"
#include "cascade_kit/frobenius.hpp"
#include "cascade_kit/integral_pairs.hpp"
#include "cascade_kit/weights.hpp"

using namespace cascade_kit;

namespace {

struct Criterion {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;
  std::vector<std::string> findings;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

std::vector<int> full_pi(const RootSystem& rs) {
  std::vector<int> all(rs.rank());
  std::iota(all.begin(), all.end(), 1);
  return all;
}

Biparabolic borel(const RootSystem& rs) { return make_biparabolic(rs, {}, full_pi(rs)); }

std::vector<int> subset_from_mask(unsigned mask, int max_index) {
  std::vector<int> v;
  for (int i = 1; i <= max_index; ++i)
    if (mask & (1u << (i - 1))) v.push_back(i);
  return v;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string label_of(Type t, int n) {
  const std::string s = to_string(t);
  return s.size() > 1 ? s : s + std::to_string(n);
}

WeightVec wv(const std::vector<int>& v) {
  WeightVec w;
  w.c.assign(v.begin(), v.end());
  return w;
}

// classical rank <= 6 plus every exceptional type
std::vector<std::pair<Type, int>> sweep_types() {
  std::vector<std::pair<Type, int>> out;
  for (int n = 1; n <= 6; ++n) out.emplace_back(Type::A, n);
  for (int n = 2; n <= 6; ++n) out.emplace_back(Type::B, n);
  for (int n = 2; n <= 6; ++n) out.emplace_back(Type::C, n);
  for (int n = 4; n <= 6; ++n) out.emplace_back(Type::D, n);
  out.emplace_back(Type::E6, 6);
  out.emplace_back(Type::E7, 7);
  out.emplace_back(Type::E8, 8);
  out.emplace_back(Type::F4, 4);
  out.emplace_back(Type::G2, 2);
  return out;
}

// ---------------------------------------------------------------- criterion 1

Criterion criterion1() {
  Criterion c;
  struct Row {
    Type t;
    int n;
    std::vector<int> h;
  };
  const std::vector<Row> rows = {
      {Type::B, 3, {1, -1, 1}},
      {Type::B, 4, {1, -1, 1, 0}},
      {Type::B, 5, {1, -1, 1, -1, 1}},
      {Type::B, 6, {1, -1, 1, -1, 1, 0}},
      {Type::C, 2, {0, 1}},
      {Type::C, 3, {0, 0, 1}},
      {Type::C, 4, {0, 0, 0, 1}},
      {Type::C, 5, {0, 0, 0, 0, 1}},
      {Type::C, 6, {0, 0, 0, 0, 0, 1}},
      {Type::D, 4, {1, -1, 1, 1}},
      {Type::D, 6, {1, -1, 1, -1, 1, 1}},
      {Type::G2, 2, {1, -1}},
      {Type::F4, 4, {-1, 1, 0, 0}},
      {Type::E7, 7, {-1, 1, 1, -1, 1, -1, 1}},
      {Type::E8, 8, {-1, 1, 1, -1, 1, -1, 1, -1}},
  };
  for (const auto& row : rows) {
    const RootSystem rs = RootSystem::build(row.t, row.n);
    const Biparabolic bp = borel(rs);
    c.require(is_frobenius(bp).frobenius, label_of(row.t, row.n) + " Borel is not Frobenius");
    if (!is_frobenius(bp).frobenius) continue;
    const FrobeniusH fh = frobenius_h(bp);
    bool match = fh.h.values_on_pi.size() == row.h.size();
    for (std::size_t i = 0; match && i < row.h.size(); ++i)
      match = fh.h.values_on_pi[i] == Rat(row.h[i]);
    c.require(match, label_of(row.t, row.n) + " Borel h-values differ from the table");
  }
  c.detail = std::to_string(rows.size()) + " Borel rows exact";
  return c;
}

// ---------------------------------------------------------------- criterion 2

Criterion criterion2() {
  Criterion c;
  auto solve_borel = [](const RootSystem& rs) {
    const FrobeniusTest ft = is_frobenius(borel(rs));
    std::vector<linalg::RatVec> cartan;
    for (int i = 0; i < rs.rank(); ++i) {
      linalg::RatVec e(rs.rank(), Rat(0));
      e[i] = 1;
      cartan.push_back(std::move(e));
    }
    return solve_h_on_support(rs, make_support_set(rs, ft.basis, cartan));
  };
  auto fixed_at = [](const RootSystem& rs, const SupportSolve& sol, int i) {
    for (const auto& dir : sol.kernel)
      if (adapted_h_from_coroots(rs, dir).values_on_pi[i - 1] != 0) return false;
    return true;
  };
  auto pair_sum_zero = [](const RootSystem& rs, const SupportSolve& sol, int i, int j) {
    for (const auto& dir : sol.kernel) {
      const AdaptedH k = adapted_h_from_coroots(rs, dir);
      if (k.values_on_pi[i - 1] + k.values_on_pi[j - 1] != 0) return false;
    }
    return sol.h.values_on_pi[i - 1] + sol.h.values_on_pi[j - 1] == 0;
  };

  const RootSystem d5 = RootSystem::build(Type::D, 5);
  const SupportSolve s5 = solve_borel(d5);
  c.require(s5.kind == SolutionKind::PositiveDimensional && s5.kernel.size() == 1,
            "D5 solution set is not a line");
  const std::vector<int> d5_vals = {1, -1, 1};
  for (int i = 1; i <= 3; ++i) {
    c.require(fixed_at(d5, s5, i), "D5 h(a" + std::to_string(i) + ") is not determined");
    c.require(s5.h.values_on_pi[i - 1] == Rat(d5_vals[i - 1]),
              "D5 h(a" + std::to_string(i) + ") differs from the table");
  }
  c.require(pair_sum_zero(d5, s5, 4, 5), "D5 h(a4)+h(a5) != 0");

  const RootSystem e6 = RootSystem::build(Type::E6, 6);
  const SupportSolve s6 = solve_borel(e6);
  c.require(s6.kind == SolutionKind::PositiveDimensional && s6.kernel.size() == 2,
            "E6 solution set is not a plane");
  c.require(fixed_at(e6, s6, 2) && s6.h.values_on_pi[1] == Rat(-1), "E6 h(a2) != -1");
  c.require(fixed_at(e6, s6, 4) && s6.h.values_on_pi[3] == Rat(1), "E6 h(a4) != 1");
  c.require(pair_sum_zero(e6, s6, 1, 6), "E6 h(a1)+h(a6) != 0");
  c.require(pair_sum_zero(e6, s6, 3, 5), "E6 h(a3)+h(a5) != 0");
  c.findings.push_back(
      "the printed E6 row swaps the two determined values; h(a4)=+1 is forced because a4 is "
      "itself a cascade root, and h(theta)=1 then pins h(a2)=-1 — the constraints above hold "
      "for the de-transposed values");

  c.detail = "D5/E6 determined values and orbit-pair sums hold";
  return c;
}

// ---------------------------------------------------------------- criterion 3

Criterion criterion3() {
  Criterion c;
  long long pairs = 0, violations = 0;
  std::string first_witness;
  for (auto [t, n] : sweep_types()) {
    const RootSystem rs = RootSystem::build(t, n);
    for (const auto& row : frobenius_sweep(rs)) {
      if (!row.frobenius) continue;
      ++pairs;
      const std::string where = label_of(t, n) + " pi1={" + join_ints(row.pi1) + "} pi2={" +
                                join_ints(row.pi2) + "}";
      c.require(row.integral, where + ": h is not integral");
      c.require(row.within_bound_safe, where + ": |h| exceeds even 1+m1+m2");
      if (!row.within_bound_m) {
        ++violations;
        c.require(t == Type::A,
                  where + ": bound-m exceedance outside the type-A discrepancy class");
        if (first_witness.empty())
          first_witness = where + ", max|h|=" + row.max_abs.str() +
                          " > m=" + std::to_string(1 + std::max(row.m1, row.m2));
      }
    }
  }
  c.require(pairs == 1944, "Frobenius pair count drifted: " + std::to_string(pairs));
  c.require(violations == 52, "bound-m exceedance count drifted: " + std::to_string(violations));
  if (violations > 0)
    c.findings.push_back(
        std::to_string(violations) +
        " pairs (all type A) exceed the printed bound m=1+max(m1,m2) while satisfying "
        "1+m1+m2; first witness: " +
        first_witness);

  // The quoted E7 pair: integral and within bound, but the printed value set
  // {0,+-1,2} misses the -2 that actually occurs.
  const RootSystem e7 = RootSystem::build(Type::E7, 7);
  const Biparabolic bp = make_biparabolic(e7, {1, 2, 3, 4, 6, 7}, {1, 2, 3, 4, 5, 6});
  c.require(is_frobenius(bp).frobenius, "E7 pi\\{a5}, pi\\{a7} is not Frobenius");
  const FrobeniusH fh = frobenius_h(bp);
  const std::vector<int> expect = {1, -1, -2, 1, 2, -1, 0};
  bool match = true;
  for (int i = 0; i < 7; ++i) match = match && fh.h.values_on_pi[i] == Rat(expect[i]);
  c.require(match, "E7 pair h-values drifted");
  const IntegralityReport iv = integrality_verdict(e7, fh.h, fh.bound_m);
  c.require(iv.integral && iv.within_bound, "E7 pair lost integrality or the bound");
  c.findings.push_back(
      "E7 pi1=pi\\{a5}, pi2=pi\\{a7}: h=(1,-1,-2,1,2,-1,0), so h(pi)={0,+-1,+-2} — the printed "
      "value set {0,+-1,2} omits -2");

  c.detail = std::to_string(pairs) + " Frobenius pairs integral, safe bound everywhere";
  return c;
}

// ---------------------------------------------------------------- criterion 4

Criterion criterion4() {
  Criterion c;
  const RootSystem c6 = RootSystem::build(Type::C, 6);
  const CheckReport rep = check_half_set(c6, {1, 2, 4, 5}, make_half_set(c6, {1, 3, 5}));

  const std::vector<RootVec> piz = {interval_root(c6, 1, 3), c6.simple_root(2),
                                    interval_root(c6, 3, 5), c6.simple_root(4),
                                    RootVec{{0, 0, 0, 0, 2, 1}}, c6.simple_root(6)};
  c.require(rep.pi_z == piz, "pi^Z differs from the quoted set");
  c.require(rep.pi1_z == std::vector<RootVec>{c6.simple_root(2), c6.simple_root(4)},
            "pi1^Z differs from the quoted set");
  c.require(rep.hg.coroot_basis == std::vector<RootVec>{c6.simple_root(1), c6.simple_root(5)},
            "h_Gamma is not {a1^, a5^}");
  c.require(rep.counts.rl == 4 && rep.counts.rl_z == 6 && rep.counts.dim_h_gamma == 2,
            "orbit counts drifted");

  const std::vector<std::vector<int>> weights = {{2, 2, 2, 2, 2, 1}, {2, 2, 2, 3, 4, 2},
                                                 {2, 2, 2, 4, 6, 3}, {0, 1, 2, 2, 2, 1},
                                                 {0, 2, 4, 4, 4, 2}, {0, 2, 4, 4, 4, 3}};
  const std::vector<std::vector<Int>> pairings = {{2, 0},  {2, 1},  {2, 2},
                                                  {-1, 0}, {-2, 0}, {-2, -2}};
  c.require(rep.gens.size() == 6, "generator count is not 6");
  for (std::size_t i = 0; i < rep.gens.size() && i < 6; ++i) {
    c.require(rep.gens[i].weight == wv(weights[i]),
              "weight of p" + std::to_string(i + 1) + " differs from the table");
    c.require(rep.gens[i].pairing_vector == pairings[i],
              "pairing column of p" + std::to_string(i + 1) + " differs from the table");
  }

  const std::vector<std::vector<int>> quoted = {
      {1, 0, 0, 0, 1, 0}, {1, 0, 0, 2, 0, 0}, {0, 0, 1, 0, 0, 1}, {0, 2, 0, 0, 1, 1}};
  for (const auto& m : quoted)
    c.require(std::find(rep.hilbert.begin(), rep.hilbert.end(), m) != rep.hilbert.end(),
              "quoted monomial missing from the Hilbert basis");
  c.require(rep.hilbert.size() == 5, "Hilbert basis size is not 5");
  c.require(std::find(rep.hilbert.begin(), rep.hilbert.end(),
                      std::vector<int>{0, 2, 0, 2, 0, 1}) != rep.hilbert.end(),
            "the fifth minimal element is not p2^2 p4^2 p6");
  c.findings.push_back(
      "the Hilbert basis has five minimal elements: the four quoted monomials plus p2^2p4^2p6 "
      "= (0,2,0,2,0,1), witnessing the relation p1p4^2 * p2^2p5p6 = p1p5 * p2^2p4^2p6");
  c.require(!rep.monoid_free, "weight monoid unexpectedly free");
  c.require(rep.excluded_by == Stage::NotPolynomial && rep.verdict_string() ==
            "ExcludedBy(NotPolynomial)", "verdict is not ExcludedBy(NotPolynomial)");

  c.detail = "C6 pi1={1,2,4,5} half={1,3,5}: sets, table, h_Gamma, basis, verdict";
  return c;
}

// ---------------------------------------------------------------- criterion 5

Criterion criterion5() {
  Criterion c;
  const RootSystem c3 = RootSystem::build(Type::C, 3);

  const CheckReport rep = check_half_set(c3, {1, 2}, make_half_set(c3, {1}));
  const std::vector<std::vector<int>> weights = {{2, 2, 1}, {0, 1, 1}, {0, 2, 2}};
  const std::vector<std::vector<Int>> pairings = {{2}, {-1}, {-2}};
  c.require(rep.gens.size() == 3, "generator count is not 3");
  for (std::size_t i = 0; i < rep.gens.size() && i < 3; ++i) {
    c.require(rep.gens[i].weight == wv(weights[i]), "Table V weight drifted");
    c.require(rep.gens[i].pairing_vector == pairings[i], "Table V pairing drifted");
  }
  c.require(rep.hilbert == std::vector<std::vector<int>>{{1, 0, 1}, {1, 2, 0}},
            "Hilbert basis is not {p1p3, p1p2^2}");
  c.require(rep.monoid_free, "the two-element basis should be free");
  c.require(rep.excluded_by == Stage::FactorizationFail,
            "verdict is not ExcludedBy(FactorizationFail)");
  c.require(!rep.fact.pass && rep.fact.traces.size() == 3,
            "factorization should fail on all three partitions");

  const std::vector<linalg::RatVec> span12 = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}};
  const RootVec s13{{1, 1, 1}};
  c.require(solve_h_on_support(c3, make_support_set(c3, {s13, RootVec{{0, 2, 1}}}, span12)).kind ==
                SolutionKind::NoSolution,
            "the inconsistent support set should have no solution");
  const SupportSolve sol =
      solve_h_on_support(c3, make_support_set(c3, {s13, c3.simple_root(2)}, span12));
  c.require(sol.kind == SolutionKind::Unique &&
                sol.h.coroot_coeffs == linalg::RatVec{Rat(3), Rat(2), Rat(0)},
            "the consistent support set should give h = 3a1^ + 2a2^");

  const SweepReport sweep = integrality_sweep(c3, {1, 2});
  c.require(sweep.certified && sweep.total_half_sets == 4 && sweep.cases.size() == 3,
            "C3 pi1={1,2} certification drifted");

  c.detail = "C3 pi1={1,2}: Table V, both solves, verdict, certification";
  return c;
}

// ---------------------------------------------------------------- criterion 6

Criterion criterion6() {
  Criterion c;
  const RootSystem c5 = RootSystem::build(Type::C, 5);
  const RootVec s14 = interval_root(c5, 1, 4);
  const RootVec b4 = beta_root_typeC(c5, 4);
  const SimpleSystem parent =
      SimpleSystem::make(c5, {s14, c5.simple_root(2), c5.simple_root(3), b4, c5.simple_root(5)});
  const SimpleSystem side1 = SimpleSystem::make(c5, {s14, c5.simple_root(2), c5.simple_root(3)});
  const SimpleSystem side2 = SimpleSystem::make(c5, {b4, c5.simple_root(5)});

  auto gens = generator_weights(c5, side1, side2, involution_orbits(c5, parent, side1, side2));
  c.require(gens.size() == 5, "generator count is not 5 (pair should split)");
  pairing_table(c5, gens, {c5.simple_root(4)});

  // The deterministic generator order differs from the printed row order, so
  // the comparison is by multiset of (weight, a4^-pairing).
  using Entry = std::pair<std::vector<Rat>, Int>;
  std::multiset<Entry> got, expect;
  for (const auto& g : gens) got.emplace(g.weight.c, g.pairing_vector.at(0));
  expect.emplace(wv({-1, -1, -1, -1, 0}).c, Int(-1)); // -(a1+a2+a3+a4)
  expect.emplace(wv({0, 0, 0, 0, 1}).c, Int(-2));     // a5
  expect.emplace(wv({0, -1, -1, 0, 0}).c, Int(1));    // -(a2+a3), twice
  expect.emplace(wv({0, -1, -1, 0, 0}).c, Int(1));
  expect.emplace(wv({0, 0, 0, 2, 1}).c, Int(2));      // 2a4+a5
  c.require(got == expect, "weights or a4^-pairings differ from the table");

  const ManualCheckReport manual =
      check_with_explicit_hgamma(c5, gens, HGamma{{c5.simple_root(4)}}, 4);
  c.require(manual.excluded_by == Stage::NotPolynomial,
            "explicit-h_Gamma check did not return NotPolynomial");
  c.require(manual.hilbert.size() == 7 && !manual.monoid_free,
            "the five weights should give seven minimal elements and no freeness");

  c.detail = "biparabolic C5 slice: 5 weights with a4^-pairings, NotPolynomial";
  return c;
}

// ---------------------------------------------------------------- criterion 7

Criterion criterion7() {
  Criterion c;
  long long sweeps = 0, cases = 0;
  for (int n = 2; n <= 6; ++n) {
    const RootSystem rs = RootSystem::build(Type::C, n);
    for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) { // every pi1 strictly inside pi
      const std::vector<int> pi1 = subset_from_mask(mask, n);
      const SweepReport sweep = integrality_sweep(rs, pi1);
      ++sweeps;
      cases += static_cast<long long>(sweep.cases.size());
      c.require(sweep.certified,
                "C" + std::to_string(n) + " pi1={" + join_ints(pi1) + "} is not certified");
      for (std::size_t idx : sweep.inconclusive_cases) {
        const auto& sc = sweep.cases[idx];
        c.findings.push_back("inconclusive: C" + std::to_string(n) + " pi1={" + join_ints(pi1) +
                             "} class {" + join_ints(sc.representative.indices) + "} (" +
                             std::to_string(sc.members.size()) + " members) verdict " +
                             sc.report.verdict_string());
      }
    }
  }
  c.detail = std::to_string(sweeps) + " parabolics certified (" + std::to_string(cases) +
             " reduced classes)";
  return c;
}

// ---------------------------------------------------------------- criterion 8

void cascade_properties(Criterion& c) {
  std::vector<std::pair<Type, int>> types;
  for (int n = 1; n <= 6; ++n) types.emplace_back(Type::A, n);
  for (int n = 2; n <= 6; ++n) types.emplace_back(Type::B, n);
  for (int n = 2; n <= 6; ++n) types.emplace_back(Type::C, n);
  for (int n = 4; n <= 6; ++n) types.emplace_back(Type::D, n);
  types.emplace_back(Type::G2, 2);
  types.emplace_back(Type::F4, 4);
  types.emplace_back(Type::E6, 6);

  for (auto [t, n] : types) {
    const std::string where = label_of(t, n);
    const RootSystem rs = RootSystem::build(t, n);
    const SimpleSystem full = sub_simple_system(rs, full_pi(rs));
    const auto& B = kostant_cascade(rs, full).ordered_roots;

    for (std::size_t i = 0; i < B.size(); ++i)
      for (std::size_t j = i + 1; j < B.size(); ++j)
        c.require(rs.bilinear(B[i], B[j]) == 0 && !rs.is_root(B[i] + B[j]) &&
                      !rs.is_root(B[i] - B[j]),
                  where + ": cascade is not strongly orthogonal");

    for (const auto& g : rs.positive_roots()) {
      std::size_t first = B.size();
      for (std::size_t i = 0; i < B.size(); ++i)
        if (rs.bilinear(g, B[i]) != 0) {
          first = i;
          break;
        }
      if (first == B.size()) {
        c.require(false, where + ": a positive root is orthogonal to the whole cascade");
        continue;
      }
      const Int p = rs.bilinear(g, B[first]);
      c.require(p > 0, where + ": first-met cascade root pairs nonpositively");
      if (g != B[first])
        c.require(2 * p == rs.norm2(B[first]), where + ": 2(beta,gamma) != (beta,beta)");

      RootVec img = g;
      for (const auto& b : B) img = rs.reflect(b, img);
      c.require(rs.is_root(img) && !rs.is_positive_root(img),
                where + ": cascade reflections miss the longest element");
    }

    const auto ipi = diagram_involution(rs, full);
    for (std::size_t bi = 0; bi < B.size(); ++bi) {
      std::vector<int> firsts;
      for (int i = 1; i <= n; ++i) {
        std::size_t first = B.size();
        for (std::size_t k = 0; k < B.size(); ++k)
          if (rs.bilinear(rs.simple_root(i), B[k]) != 0) {
            first = k;
            break;
          }
        if (first == bi) firsts.push_back(i);
      }
      c.require(firsts.size() >= 1 && firsts.size() <= 2,
                where + ": a cascade root is first met by more than two simples");
      if (firsts.size() == 2) {
        c.require(full.elements[ipi[firsts[0] - 1]] == rs.simple_root(firsts[1]),
                  where + ": a first-meeting pair is not an involution orbit");
        c.require(t == Type::A || t == Type::E6 || (t == Type::D && n % 2 == 1),
                  where + ": a pair appears outside ambient A/E6/D_odd");
      }
    }
  }
}

void pi_z_oracle(Criterion& c) {
  for (int n = 2; n <= 8; ++n) {
    const RootSystem rs = RootSystem::build(Type::C, n);
    std::vector<RootVec> betas;
    for (int i = 1; i <= n; ++i) betas.push_back(beta_root_typeC(rs, i));

    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      const HalfSet half{subset_from_mask(mask, n - 1)};
      const std::string where = "C" + std::to_string(n) + " half={" + join_ints(half.indices) + "}";
      const PiZ pz = compute_pi_z(rs, half);
      c.require(pz.admissible, where + ": inadmissible");
      if (!pz.admissible) continue;
      c.require(static_cast<int>(pz.roots.size()) == n, where + ": |pi^Z| != n");

      // Independent reconstruction: indecomposables among even-parity roots.
      std::set<RootVec> even;
      for (const auto& g : rs.positive_roots()) {
        int parity = 0;
        for (int i : half.indices) parity += g.c[i - 1];
        if (parity % 2 == 0) even.insert(g);
      }
      std::set<RootVec> indecomposable;
      for (const auto& g : even) {
        bool split = false;
        for (const auto& d : even) {
          if (!(d < g)) continue;
          RootVec rest = g;
          rest -= d;
          if (even.count(rest)) {
            split = true;
            break;
          }
        }
        if (!split) indecomposable.insert(g);
      }
      c.require(std::set<RootVec>(pz.roots.begin(), pz.roots.end()) == indecomposable,
                where + ": pi^Z differs from the extremality oracle");

      // Cascade partition: the two side cascades exhaust {beta_1..beta_n}.
      const SplitI split = split_I(rs, half);
      std::set<RootVec> got(split.cascade_left.begin(), split.cascade_left.end());
      got.insert(split.cascade_right.begin(), split.cascade_right.end());
      c.require(split.cascade_left.size() + split.cascade_right.size() ==
                        static_cast<std::size_t>(n) &&
                    got == std::set<RootVec>(betas.begin(), betas.end()),
                where + ": side cascades do not partition the betas");
    }
  }
}

void closed_forms(Criterion& c) {
  std::mt19937 gen(8155187);
  std::vector<std::pair<int, int>> runs;
  for (int done = 0; done < 500; ++done) {
    std::uniform_int_distribution<int> rank_d(2, 8);
    const int n = rank_d(gen);
    const RootSystem rs = RootSystem::build(Type::C, n);
    std::uniform_int_distribution<unsigned> mask_d(0, (1u << n) - 1);
    std::vector<int> pi1 = subset_from_mask(mask_d(gen) & ((1u << n) - 1), n);
    if (static_cast<int>(pi1.size()) == n) pi1.pop_back();
    const HalfSet half =
        reduce_half_set(rs, pi1, HalfSet{subset_from_mask(mask_d(gen) & ((1u << (n - 1)) - 1),
                                                          n - 1)});
    const std::string where =
        "C" + std::to_string(n) + " pi1={" + join_ints(pi1) + "} half={" +
        join_ints(half.indices) + "}";

    const IntegralPairData data = make_integral_pair_data(rs, pi1, half);
    const SimpleSystem piz_ss = SimpleSystem::make(rs, data.pi_z);
    const SimpleSystem pi1z_ss = SimpleSystem::make(rs, data.pi1_z.roots);
    auto gens = generator_weights(rs, pi1z_ss, piz_ss,
                                  involution_orbits(rs, piz_ss, pi1z_ss, piz_ss));

    auto side_of = [&](int k) {
      return side_of_index(half, k) == 1 ? data.split.I_left : data.split.I_right;
    };
    // Plus-part closed form, as a vector and through every coroot.
    for (const auto& g : data.pi_z) {
      const int k = g.support_min();
      WeightVec expect;
      expect.c.assign(n, Rat(0));
      for (int t : side_of(k))
        if (t <= k) expect += to_weight(beta_root_typeC(rs, t));
      const WeightVec got = Rat(2) * fundamental_weight(rs, piz_ss, g);
      c.require(got == expect, where + ": doubled weight does not telescope");
      const auto& I = side_of(k);
      for (int cc = 1; cc <= n; ++cc) {
        const bool c_in = std::find(I.begin(), I.end(), cc) != I.end() && cc <= k;
        const bool c1_in = std::find(I.begin(), I.end(), cc + 1) != I.end() && cc + 1 <= k;
        c.require(rs.coroot_pairing(rs.simple_root(cc), got) == Rat(2 * c_in - 2 * c1_in),
                  where + ": per-coroot closed form fails");
      }
    }

    // Minus parts vanish across pi1-runs.
    runs.clear();
    for (int i : pi1) {
      if (runs.empty() || i != runs.back().second + 1)
        runs.emplace_back(i, i);
      else
        runs.back().second = i;
    }
    auto run_of = [&](int x) {
      for (std::size_t r = 0; r < runs.size(); ++r)
        if (runs[r].first <= x && x <= runs[r].second) return static_cast<int>(r);
      return -1;
    };
    for (int cc : pi1)
      for (const auto& g : data.pi1_z.roots)
        if (run_of(cc) != run_of(g.support_min()))
          c.require(rs.coroot_pairing(rs.simple_root(cc),
                                      Rat(2) * fundamental_weight(rs, pi1z_ss, g)) == Rat(0),
                    where + ": cross-run minus part does not vanish");

    // h_Gamma pairing columns: integral, vanishing on (pi1^Z)^, and zero on
    // the alpha_{i_r} column when beta_{i_r} lands inside pi1^Z.
    std::vector<int> hg_idx;
    for (int i : data.pi1_z.bar_half.indices)
      if (std::find(pi1.begin(), pi1.end(), i) != pi1.end()) hg_idx.push_back(i);
    std::vector<RootVec> coroots;
    for (int i : hg_idx) coroots.push_back(rs.simple_root(i));
    if (data.pi1_z.beta_ir_in_pi1z) coroots.push_back(rs.simple_root(half.indices.back()));
    const auto table = pairing_table(rs, gens, coroots, &pi1z_ss);
    if (data.pi1_z.beta_ir_in_pi1z)
      for (const auto& row : table)
        c.require(row.back() == 0, where + ": beta_{i_r} column is nonzero");

    // Attached-orbit totals for each h_Gamma coroot.
    for (std::size_t u = 0; u < hg_idx.size(); ++u) {
      const int iu = hg_idx[u];
      const int run_u = run_of(iu);
      const auto [lu, ku] = runs[run_u];
      // The closed form covers generators up to the start of the next pi1 run
      // (not the next run carrying a half index).
      const int next_lo =
          run_u + 1 < static_cast<int>(runs.size()) ? runs[run_u + 1].first : n + 1;
      for (const auto& g : gens) {
        const int k = g.orbit.front().support_min();
        const bool fixed = g.orbit.size() == 1;
        const Rat got = rs.coroot_pairing(rs.simple_root(iu), g.weight);
        if (k < lu) {
          c.require(got == Rat(0), where + ": pairing below the run is nonzero");
        } else if (k < next_lo) {
          // Past the run the sign follows the side split (a half index in the
          // gap flips the generator back to i_u's side).
          const int expect =
              k < iu    ? (fixed ? 1 : 2)
              : k == iu ? 2
              : k <= ku ? (fixed ? -1 : -2)
                        : (side_of_index(half, k) == side_of_index(half, iu) ? 2 : -2);
          c.require(got == Rat(expect), where + ": in-range orbit total drifted");
        }
      }
    }
  }
}

void dimension_identity(Criterion& c) {
  for (auto [t, n] : sweep_types()) {
    const RootSystem rs = RootSystem::build(t, n);
    for (const auto& row : frobenius_sweep(rs)) {
      if (!row.frobenius) continue;
      const Biparabolic bp = make_biparabolic(rs, row.pi1, row.pi2);
      const AdaptedH h = adapted_h_from_values(rs, row.h_values);
      c.require(dimension_identities_check(bp, h).all_hold(),
                label_of(t, n) + " pi1={" + join_ints(row.pi1) + "} pi2={" + join_ints(row.pi2) +
                    "}: dimension identities fail");
    }
  }
}

void hilbert_oracle(Criterion& c) {
  std::mt19937 gen(271828);
  std::uniform_int_distribution<int> k_d(1, 6), d_d(1, 3), e_d(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    MonoidProblem p;
    const int k = k_d(gen), d = d_d(gen);
    for (int i = 0; i < k; ++i) {
      std::vector<Int> v;
      for (int j = 0; j < d; ++j) v.push_back(Int(e_d(gen)));
      p.vectors.push_back(std::move(v));
    }
    // Wide problems may hit the degree budget; the degree-ordered search is
    // still complete below the cap used for the comparison, so no skip.
    const HilbertResult r = hilbert_basis(p);

    // Brute force all minimal solutions of degree <= 12 and compare.
    const int cap = 12;
    std::vector<std::vector<int>> sols;
    std::vector<int> m(k, 0);
    auto solves = [&]() {
      for (int j = 0; j < d; ++j) {
        Int s = 0;
        for (int i = 0; i < k; ++i) s += Int(m[i]) * p.vectors[i][j];
        if (s != 0) return false;
      }
      return true;
    };
    for (;;) {
      if (std::accumulate(m.begin(), m.end(), 0) > 0 && solves()) sols.push_back(m);
      int i = 0;
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
        for (int i = 0; i < k; ++i)
          if (b[i] > a[i]) le = false;
        if (le) {
          dominated = true;
          break;
        }
      }
      if (!dominated) minimal.insert(a);
    }
    std::set<std::vector<int>> low;
    for (const auto& b : r.basis)
      if (std::accumulate(b.begin(), b.end(), 0) <= cap) low.insert(b);
    c.require(low == minimal, "trial " + std::to_string(trial) + ": basis != brute-force oracle");
  }
}

void reduction_stability(Criterion& c) {
  for (int n = 2; n <= 6; ++n) {
    const RootSystem rs = RootSystem::build(Type::C, n);
    for (unsigned pmask = 0; pmask + 1 < (1u << n); ++pmask) {
      const std::vector<int> pi1 = subset_from_mask(pmask, n);
      std::map<std::vector<int>, CheckReport> rep_cache;
      for (unsigned hmask = 0; hmask < (1u << (n - 1)); ++hmask) {
        const HalfSet half{subset_from_mask(hmask, n - 1)};
        const HalfSet red = reduce_half_set(rs, pi1, half);
        const std::string where = "C" + std::to_string(n) + " pi1={" + join_ints(pi1) +
                                  "} half={" + join_ints(half.indices) + "}";
        c.require(reduce_half_set(rs, pi1, red) == red, where + ": reduction not idempotent");

        const CheckReport direct = check_half_set(rs, pi1, half);
        auto it = rep_cache.find(red.indices);
        if (it == rep_cache.end())
          it = rep_cache.emplace(red.indices, check_half_set(rs, pi1, red)).first;
        const CheckReport& rep = it->second;
        c.require(direct.reduced_half == red, where + ": reported reduction drifted");
        c.require(direct.excluded_by == rep.excluded_by &&
                      direct.integral_trivially == rep.integral_trivially,
                  where + ": verdict is not constant on the reduction class");
      }
    }
  }
}

Criterion criterion8() {
  Criterion c;
  cascade_properties(c);
  pi_z_oracle(c);
  closed_forms(c);
  dimension_identity(c);
  hilbert_oracle(c);
  reduction_stability(c);
  c.detail =
      "cascade laws, pi^Z oracle + partition, 500 closed-form instances, dimension identity, "
      "200 Hilbert oracles, reduction stability";
  return c;
}

} // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Entry {
    int number;
    std::function<Criterion()> run;
    long long limit_ms; // 0 = no limit
  };
  const std::vector<Entry> entries = {
      {1, criterion1, 5000}, {2, criterion2, 0},   {3, criterion3, 120000},
      {4, criterion4, 1000}, {5, criterion5, 1000}, {6, criterion6, 0},
      {7, criterion7, 600000}, {8, criterion8, 0},
  };

  int failed = 0;
  for (const auto& e : entries) {
    const auto t0 = Clock::now();
    Criterion c;
    try {
      c = e.run();
    } catch (const std::exception& ex) {
      c.pass = false;
      c.failures.push_back(std::string("exception: ") + ex.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    if (e.limit_ms > 0 && ms >= e.limit_ms)
      c.require(false, "runtime " + std::to_string(ms) + " ms exceeds the " +
                           std::to_string(e.limit_ms) + " ms budget");
    std::cout << "criterion " << e.number << ": " << (c.pass ? "PASS" : "FAIL");
    if (!c.detail.empty()) std::cout << " — " << c.detail;
    std::cout << " (" << ms << " ms)\n";
    for (const auto& f : c.failures) std::cout << "  failure: " << f << "\n";
    for (const auto& f : c.findings) std::cout << "  finding: " << f << "\n";
    if (!c.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed;
}
