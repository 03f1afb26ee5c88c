#pragma once

#include <string>
#include <vector>

#include "cascade_kit/rootsys.hpp"

namespace cascade_kit {

// Fundamental weight of α relative to the simple system ss: the unique λ in
// span(ss) with β^∨(λ) = δ_{αβ} for β ∈ ss, solved exactly from the Gram
// system; by convention 0 when α ∉ ss. Coordinates over the ambient simple
// roots.
WeightVec fundamental_weight(const RootSystem& rs, const SimpleSystem& ss, const RootVec& alpha);

struct GeneratorInfo {
  std::vector<RootVec> orbit;      // Γ, sorted by root_order
  WeightVec weight;                // δ_Γ (halved for a duplicated pair)
  std::vector<Int> pairing_vector; // filled by pairing_table
  std::string label;               // p1, p2, …; p_k' marks the second of a pair
};

// Orbits of ⟨ı̂₁, ı̂₂⟩ on parent, where ı̂ᵢ is the diagram involution of subᵢ
// extended by the identity. Orbits come back sorted by their least element.
std::vector<std::vector<RootVec>> involution_orbits(const RootSystem& rs,
                                                    const SimpleSystem& parent,
                                                    const SimpleSystem& sub1,
                                                    const SimpleSystem& sub2);

// One semi-invariant generator per orbit, weight δ_Γ = Σ_{α∈Γ} 2(ϖ_α^{π₂-side}
// − ϖ_α^{π₁-side}) — except that a two-element orbit lying entirely in a
// single side yields two generators of weight δ_Γ/2. Output order: by
// connected component of the union system, then by least orbit element.
std::vector<GeneratorInfo> generator_weights(const RootSystem& rs, const SimpleSystem& pi1_side,
                                             const SimpleSystem& pi2_side,
                                             const std::vector<std::vector<RootVec>>& orbits);

// γ^∨(δ) for every generator × every coroot γ; entries are verified to be
// integers and copied into each generator's pairing_vector. When vanish_on is
// supplied, columns for coroots of its elements are checked to be zero.
std::vector<std::vector<Int>> pairing_table(const RootSystem& rs, std::vector<GeneratorInfo>& gens,
                                            const std::vector<RootVec>& coroots,
                                            const SimpleSystem* vanish_on = nullptr);

} // namespace cascade_kit
