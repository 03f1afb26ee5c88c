#pragma once

#include <optional>
#include <vector>

#include "cascade_kit/biparabolic.hpp"
#include "cascade_kit/linalg.hpp"
#include "cascade_kit/rootsys.hpp"

namespace cascade_kit {

// h ∈ 𝔥 kept in the coroot basis; values on roots are always derived.
struct AdaptedH {
  linalg::RatVec coroot_coeffs; // over α_1^∨ … α_n^∨
  linalg::RatVec values_on_pi;  // h(α_i), consistent with coroot_coeffs

  // h(γ) = Σ c_i(γ)·h(α_i)
  Rat value_on(const RootVec& gamma) const;
};

AdaptedH adapted_h_from_values(const RootSystem& rs, linalg::RatVec values_on_pi);
AdaptedH adapted_h_from_coroots(const RootSystem& rs, linalg::RatVec coroot_coeffs);

struct FrobeniusH {
  AdaptedH h;
  Rat max_abs;     // max |h(α_i)|
  int m1 = 0;      // # components of π₁ of type A_{2m}, m > 0
  int m2 = 0;      // likewise for π₂
  int bound_m = 1; // 1 + max(m1, m2)
};

// Unique h with h(β) = 1 on B = −B_{π₁} ⊔ B_{π₂}; requires is_frobenius.
FrobeniusH frobenius_h(const Biparabolic& bp);

// S together with the Cartan subspace the solution is sought in.
struct SupportSet {
  std::vector<RootVec> roots;                   // signs included
  std::vector<linalg::RatVec> cartan_subspace;  // basis vectors over α_i^∨
  bool spans_dual = false;                      // S spans the dual of the subspace
};

SupportSet make_support_set(const RootSystem& rs, std::vector<RootVec> roots,
                            std::vector<linalg::RatVec> cartan_subspace);

enum class SolutionKind { NoSolution, Unique, PositiveDimensional };

struct SupportSolve {
  SolutionKind kind = SolutionKind::NoSolution;
  AdaptedH h;                              // a particular solution unless NoSolution
  std::vector<linalg::RatVec> kernel;      // coroot-basis directions of the solution set
};

// Solves h(γ) = 1 for all γ ∈ S over the given subspace. All outcomes are
// values, never errors.
SupportSolve solve_h_on_support(const RootSystem& rs, const SupportSet& support);

struct IntegralityReport {
  bool integral = false;
  std::vector<RootVec> offending;   // positive roots with h(γ) ∉ ℤ
  Rat max_abs_on_pi;
  std::optional<int> bound_m;       // echoed when supplied
  bool within_bound = false;        // |h(α)| ≤ bound_m for all α ∈ π
};

IntegralityReport integrality_verdict(const RootSystem& rs, const AdaptedH& h,
                                      std::optional<int> bound_m = std::nullopt);

// Prop 4.4-style bookkeeping for a Frobenius 𝔮 (Index 𝔞 = 0, dim 𝔷 = 0):
// eigenvalues of −ad h on 𝔞* are −h(γ) for γ ∈ Δ(𝔮) = Δ⁺_{π₂} ⊔ Δ⁻_{π₁},
// plus 0 with multiplicity n from the Cartan.
struct DimensionIdentities {
  long long dim_a = 0;
  long long dim_a0 = 0;        // #{γ | h(γ)=0} + n
  long long dim_star_neg1 = 0; // #{γ | h(γ)=1}
  long long dim_star_ge0 = 0;  // includes the Cartan block
  long long dim_star_lt0 = 0;
  long long dim_star_interval = 0; // eigenvalues in ]-1,0[
  bool identity_i = false;     // (dim 𝔞 + Index 𝔞)/2 = dim 𝔞*_{≥0} + dim 𝔞*_𝓘 /2
  bool identity_ii = false;    // (dim 𝔞 − Index 𝔞)/2 = dim 𝔞*_{<0} − dim 𝔞*_𝓘 /2
  bool identity_v = false;     // dim 𝔞₀ = dim 𝔷 + dim 𝔞*_{−1}

  bool all_hold() const { return identity_i && identity_ii && identity_v; }
};

DimensionIdentities dimension_identities_check(const Biparabolic& bp, const AdaptedH& h);

struct SweepRow {
  std::vector<int> pi1, pi2;
  bool frobenius = false;
  // Fields below are meaningful only when frobenius:
  linalg::RatVec h_values;
  std::vector<Rat> value_set; // sorted distinct h(α_i)
  bool integral = false;
  Rat max_abs;
  int m1 = 0, m2 = 0;
  bool within_bound_m = false;    // ≤ 1 + max(m1,m2)
  bool within_bound_safe = false; // ≤ 1 + m1 + m2
};

// All (π₁, π₂) under the standing hypothesis, in lex order of the two
// bitmask encodings (π₁ major). Guard: rank ≤ 9 (4^n pair scan).
std::vector<SweepRow> frobenius_sweep(const RootSystem& rs);

// # components of the sub-simple-system on `subset` that are chains of type
// A_{2m}, m > 0 (used by the Theorem 5.10 bounds).
int count_even_a_components(const RootSystem& rs, const std::vector<int>& subset);

} // namespace cascade_kit
