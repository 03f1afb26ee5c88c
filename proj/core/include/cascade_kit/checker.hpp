#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cascade_kit/biparabolic.hpp"
#include "cascade_kit/diophantine.hpp"
#include "cascade_kit/integral_pairs.hpp"
#include "cascade_kit/weights.hpp"

namespace cascade_kit {

// 𝔥_Γ as a list of roots α whose coroots α^∨ span it.
struct HGamma {
  std::vector<RootVec> coroot_basis;

  std::size_t dim() const { return coroot_basis.size(); }
};

// Parabolic rule: α^∨ for α_i with i ∈ π̄^½ ∩ π₁. Requires a reduced half set.
HGamma h_gamma_basis(const RootSystem& rs, const std::vector<int>& pi1, const HalfSet& half);

enum class Stage { RLEqual, CountFail, NotPolynomial, FactorizationFail };
std::string to_string(Stage s);
std::optional<Stage> parse_stage(const std::string& s);

struct CountReport {
  int rl = 0;          // orbit count for 𝔮
  int rl_z = 0;        // orbit count for 𝔮_Z
  int dim_h_gamma = 0;
  bool rl_equal_shortcut = false; // dim 𝔥_Γ = 0: the two counts must agree
  bool count_fail = false;        // rl_z − rl < dim 𝔥_Γ

  bool passed() const { return !rl_equal_shortcut && !count_fail; }
};

CountReport count_check(const RootSystem& rs, const std::vector<int>& pi1, const HalfSet& half);

// One row per candidate partition Q ⊔ P̂ tried (Q of size dim 𝔥_Γ with
// independent pairing vectors); a failing row carries the first Hilbert
// element violating the one-P̂-factor rule.
struct PartitionTrace {
  std::vector<std::size_t> q_indices;
  std::vector<int> violating_element; // empty on the passing partition
};

struct FactorizationReport {
  bool pass = false;
  std::vector<PartitionTrace> traces;
};

// Does some partition of the generators into Q (|Q| = dim 𝔥_Γ) and P̂
// (|P̂| = rl_q) put exactly one P̂-generator, with exponent 1, into every
// Hilbert-basis element? Requires |gens| = rl_q + dim 𝔥_Γ.
FactorizationReport factorization_test(const std::vector<GeneratorInfo>& gens, const HGamma& hg,
                                       int rl_q, const std::vector<std::vector<int>>& hilbert);

struct CheckReport {
  Type type{};
  int rank = 0;
  std::vector<int> pi1;
  HalfSet requested_half, reduced_half;

  bool integral_trivially = false;
  std::optional<Stage> excluded_by;

  std::vector<RootVec> pi_z, pi1_z;
  HGamma hg;
  CountReport counts;
  std::vector<GeneratorInfo> gens;
  std::vector<std::vector<int>> hilbert;
  bool hilbert_budget_exceeded = false;
  bool monoid_free = false;
  FactorizationReport fact;
  std::vector<std::string> notes;

  bool excluded() const { return excluded_by.has_value(); }
  std::string verdict_string() const;
};

// The full pipeline for one half set (type C parabolic, π₁ ⊊ π): trivial,
// reduce, π^Z/π₁^Z, 𝔥_Γ, counting, polynomiality, factorization.
CheckReport check_half_set(const RootSystem& rs, const std::vector<int>& pi1, const HalfSet& half);

struct SweepCase {
  HalfSet representative;
  std::vector<HalfSet> members; // every raw half set reducing to it
  CheckReport report;
};

struct SweepReport {
  bool certified = false; // every nonempty representative excluded
  int total_half_sets = 0;
  std::vector<SweepCase> cases;                // lex order by representative
  std::vector<std::size_t> inconclusive_cases; // indices into cases
};

// Theorem-style sweep over all 2^{n−1} half sets, deduplicated by reduction.
SweepReport integrality_sweep(const RootSystem& rs, const std::vector<int>& pi1,
                              int max_rank_guard = 8);

struct ShortcutReport {
  bool applicable = false; // every component of π₁ and π₂ is of type A
  std::string detail;
};

ShortcutReport type_a_shortcut(const RootSystem& rs, const std::vector<int>& pi1,
                               const std::vector<int>& pi2);

// Manual mode: caller supplies generators, 𝔥_Γ and rl_q; only the
// polynomiality and factorization stages run.
struct ManualCheckReport {
  std::optional<Stage> excluded_by;
  std::vector<GeneratorInfo> gens; // pairing vectors filled against hg
  std::vector<std::vector<int>> hilbert;
  bool hilbert_budget_exceeded = false;
  bool monoid_free = false;
  FactorizationReport fact;

  bool excluded() const { return excluded_by.has_value(); }
  std::string verdict_string() const;
};

ManualCheckReport check_with_explicit_hgamma(const RootSystem& rs, std::vector<GeneratorInfo> gens,
                                             const HGamma& hg, int rl_q);

} // namespace cascade_kit
