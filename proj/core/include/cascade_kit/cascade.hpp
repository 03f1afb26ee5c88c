#pragma once

#include <vector>

#include "cascade_kit/rootsys.hpp"

namespace cascade_kit {

// Kostant cascade of a simple system: recursively the highest root of each
// connected component followed by the cascade of the orthogonal residue
// π_β = {α in the component | (α,β) = 0}.
struct Cascade {
  std::vector<RootVec> ordered_roots; // construction (preorder) sequence
  SimpleSystem parent;
};

// Unique maximal element of Δ ∩ ℕ·ss; ss must be connected and nonempty
// (throws std::invalid_argument otherwise).
RootVec highest_root(const RootSystem& rs, const SimpleSystem& ss);

// Works for disconnected ss too (union over components, components in
// root_order of their least element).
Cascade kostant_cascade(const RootSystem& rs, const SimpleSystem& ss);

} // namespace cascade_kit
