#pragma once

#include <string>
#include <vector>

#include "cascade_kit/rootsys.hpp"

namespace cascade_kit {

// π^½ = {α_{i₁}, …, α_{i_r}} by strictly increasing simple indices.
struct HalfSet {
  std::vector<int> indices;

  bool operator==(const HalfSet&) const = default;
  bool empty() const { return indices.empty(); }
  bool contains(int i) const;
};

HalfSet make_half_set(const RootSystem& rs, std::vector<int> indices);

// s[i,j] = α_i + α_{i+1} + … + α_j (empty sum not allowed).
RootVec interval_root(const RootSystem& rs, int i, int j);

// Type-C cascade element β_i = 2α_i + … + 2α_{n−1} + α_n (= 2ε_i); β_n = α_n.
RootVec beta_root_typeC(const RootSystem& rs, int i);

struct PiZ {
  bool admissible = false;
  std::string reason;         // set when inadmissible
  std::vector<RootVec> roots; // π^Z, |roots| = n, in root_order
};

// The §7.1 construction for classical types. Type A: empty half set → π,
// anything else admits no regular integral pair. All negative outcomes are
// values, never errors.
PiZ compute_pi_z(const RootSystem& rs, const HalfSet& half);

// 1 if x belongs to I^ℓ (an even number of half-set indices precede x),
// 2 for I^r.
int side_of_index(const HalfSet& half, int x);

struct SplitI {
  std::vector<int> I_left, I_right;          // partition of [1, n]
  std::vector<RootVec> cascade_left, cascade_right; // {β_t : t ∈ I^v}
};

// Type C only; the half set must be admissible (⊆ [1, n−1]).
SplitI split_I(const RootSystem& rs, const HalfSet& half);

// Canonical Lemma-7.2 representative: at most one π^½ index per
// π₁-component, obtained by iterating the pair-merge rule. Idempotent.
// Type C parabolic mode (π_∩ = π₁).
HalfSet reduce_half_set(const RootSystem& rs, const std::vector<int>& pi1, const HalfSet& half);

struct Pi1Z {
  std::vector<RootVec> roots; // π₁^Z in root_order
  bool beta_ir_in_pi1z = false;
  HalfSet bar_half; // π̄^½ (drops i_r exactly when β_{i_r} ∈ π₁^Z)
  struct ComponentSplit {
    std::vector<int> pi1_component;     // the π₁-component (simple indices)
    std::vector<RootVec> left, right;   // π^{Z,v} ∩ π₁^Z pieces of this component
  };
  std::vector<ComponentSplit> components;
};

// §8.2.2-style π₁^Z for a type-C parabolic. The half set must already be
// reduced; unreduced input is rejected with instruction to reduce first.
Pi1Z compute_pi1_z(const RootSystem& rs, const std::vector<int>& pi1, const HalfSet& half);

// Aggregate record for downstream consumers.
struct IntegralPairData {
  HalfSet half;
  std::vector<RootVec> pi_z;
  std::vector<RootVec> pi_z_left, pi_z_right; // the two components of π^Z
  SplitI split;
  Pi1Z pi1_z;
};

IntegralPairData make_integral_pair_data(const RootSystem& rs, const std::vector<int>& pi1,
                                         const HalfSet& reduced_half);

} // namespace cascade_kit
