#include "cascade_kit/cascade.hpp"

#include <stdexcept>

namespace cascade_kit {

namespace {

// Core recursion over a list of roots already known to form a simple system.
void cascade_of(const RootSystem& rs, const std::vector<RootVec>& elems,
                std::vector<RootVec>& out) {
  if (elems.empty()) return;
  for (const auto& comp : connected_components(rs, elems)) {
    // Highest root of the component: saturate from any element by adding
    // component elements while the sum stays a root. In a root system the
    // only positive root that admits no such increase is the highest one.
    RootVec beta = comp.front();
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& a : comp) {
        RootVec cand = beta + a;
        if (rs.is_root(cand)) {
          beta = std::move(cand);
          grew = true;
          break;
        }
      }
    }
    out.push_back(beta);
    std::vector<RootVec> residue;
    for (const auto& a : comp)
      if (rs.bilinear(a, beta) == 0) residue.push_back(a);
    cascade_of(rs, residue, out);
  }
}

} // namespace

RootVec highest_root(const RootSystem& rs, const SimpleSystem& ss) {
  if (ss.elements.empty())
    throw std::invalid_argument("highest_root: empty simple system");
  if (connected_components(rs, ss.elements).size() != 1)
    throw std::invalid_argument("highest_root: simple system is not connected");
  std::vector<RootVec> out;
  cascade_of(rs, ss.elements, out);
  return out.front();
}

Cascade kostant_cascade(const RootSystem& rs, const SimpleSystem& ss) {
  Cascade c;
  c.parent = ss;
  cascade_of(rs, ss.elements, c.ordered_roots);
  return c;
}

} // namespace cascade_kit
