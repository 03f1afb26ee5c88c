#pragma once

#include <vector>

#include "cascade_kit/cascade.hpp"
#include "cascade_kit/rootsys.hpp"

namespace cascade_kit {

// Biparabolic datum 𝔮_{π₁,π₂} under the standing hypothesis
// π₁ ∪ π₂ = π and π₁ ∩ π₂ ⊊ π.
struct Biparabolic {
  const RootSystem* rs = nullptr;
  std::vector<int> pi1, pi2; // sorted 1-based simple indices
  // Diagram involutions of the respective sub-systems, extended by the
  // identity to all of π. i1[k-1] is the image of index k.
  std::vector<int> i1, i2;
  std::vector<std::vector<int>> orbits; // ⟨i1,i2⟩ orbits, sorted
  // The [J2] orbit↔generator bijection is established for type A/C
  // parabolics; elsewhere orbits are still computed but carry this flag.
  bool generator_bijection_backed = false;

  bool parabolic() const { return pi2.size() == static_cast<std::size_t>(rs->rank()); }
};

// Throws std::invalid_argument naming the violated clause.
Biparabolic make_biparabolic(const RootSystem& rs, std::vector<int> pi1, std::vector<int> pi2);

const std::vector<std::vector<int>>& orbit_decomposition(const Biparabolic& bp);

struct FrobeniusTest {
  bool frobenius = false;
  std::vector<RootVec> basis; // B = −B_{π₁} ⊔ B_{π₂}, the witness
};

// 𝔮 is Frobenius iff B is a basis of kπ.
FrobeniusTest is_frobenius(const Biparabolic& bp);

// rℓ for a type-C parabolic: the number of ⟨i_{π₁}⟩ orbits on π (i_{π₂}
// is trivial in type C). Throws for non-type-C or non-parabolic input.
int reduced_index_typeC_parabolic(const Biparabolic& bp);

// Extended involution (identity off the subset) as a permutation of 1..n.
std::vector<int> extended_involution(const RootSystem& rs, const std::vector<int>& subset);

} // namespace cascade_kit
