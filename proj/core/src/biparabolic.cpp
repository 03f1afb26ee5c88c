#include "cascade_kit/biparabolic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cascade_kit/linalg.hpp"

namespace cascade_kit {

std::vector<int> extended_involution(const RootSystem& rs, const std::vector<int>& subset) {
  const int n = rs.rank();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  if (subset.empty()) return perm;
  SimpleSystem ss = sub_simple_system(rs, subset);
  auto inner = diagram_involution(rs, ss);
  for (std::size_t k = 0; k < subset.size(); ++k)
    perm[subset[k] - 1] = subset[inner[k]];
  return perm;
}

Biparabolic make_biparabolic(const RootSystem& rs, std::vector<int> pi1, std::vector<int> pi2) {
  const int n = rs.rank();
  auto normalize = [&](std::vector<int>& v, const char* name) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (int i : v)
      if (i < 1 || i > n)
        throw std::invalid_argument(std::string("make_biparabolic: ") + name +
                                    " contains an out-of-range index");
  };
  normalize(pi1, "pi1");
  normalize(pi2, "pi2");

  std::vector<int> uni;
  std::set_union(pi1.begin(), pi1.end(), pi2.begin(), pi2.end(), std::back_inserter(uni));
  if (static_cast<int>(uni.size()) != n)
    throw std::invalid_argument("make_biparabolic: standing hypothesis violated: π₁ ∪ π₂ ≠ π");
  std::vector<int> inter;
  std::set_intersection(pi1.begin(), pi1.end(), pi2.begin(), pi2.end(), std::back_inserter(inter));
  if (static_cast<int>(inter.size()) == n)
    throw std::invalid_argument("make_biparabolic: standing hypothesis violated: π₁ ∩ π₂ = π");

  Biparabolic bp;
  bp.rs = &rs;
  bp.pi1 = std::move(pi1);
  bp.pi2 = std::move(pi2);
  bp.i1 = extended_involution(rs, bp.pi1);
  bp.i2 = extended_involution(rs, bp.pi2);

  // Orbits of the group generated by the two extended involutions.
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : {bp.i1[u] - 1, bp.i2[u] - 1}) {
        if (comp[v] == -1) {
          comp[v] = nc;
          stack.push_back(v);
        }
      }
    }
    ++nc;
  }
  bp.orbits.assign(nc, {});
  for (int k = 0; k < n; ++k) bp.orbits[comp[k]].push_back(k + 1);

  const bool is_parabolic =
      bp.pi2.size() == static_cast<std::size_t>(n) || bp.pi1.size() == static_cast<std::size_t>(n);
  bp.generator_bijection_backed =
      is_parabolic && (rs.type() == Type::A || rs.type() == Type::C);
  return bp;
}

const std::vector<std::vector<int>>& orbit_decomposition(const Biparabolic& bp) {
  return bp.orbits;
}

FrobeniusTest is_frobenius(const Biparabolic& bp) {
  const RootSystem& rs = *bp.rs;
  FrobeniusTest out;
  const Cascade c1 = kostant_cascade(rs, sub_simple_system(rs, bp.pi1));
  const Cascade c2 = kostant_cascade(rs, sub_simple_system(rs, bp.pi2));
  for (const auto& b : c1.ordered_roots) out.basis.push_back(-b);
  for (const auto& b : c2.ordered_roots) out.basis.push_back(b);

  if (out.basis.size() != static_cast<std::size_t>(rs.rank())) {
    out.frobenius = false;
    return out;
  }
  linalg::IntMat m(out.basis.size());
  for (std::size_t i = 0; i < out.basis.size(); ++i)
    m[i].assign(out.basis[i].c.begin(), out.basis[i].c.end());
  out.frobenius = linalg::rank(m) == out.basis.size();
  return out;
}

int reduced_index_typeC_parabolic(const Biparabolic& bp) {
  if (bp.rs->type() != Type::C)
    throw std::invalid_argument("reduced_index_typeC_parabolic: root system is not of type C");
  if (!bp.parabolic())
    throw std::invalid_argument("reduced_index_typeC_parabolic: π₂ must be all of π");
  return static_cast<int>(bp.orbits.size());
}

} // namespace cascade_kit
