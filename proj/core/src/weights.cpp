#include "cascade_kit/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cascade_kit/linalg.hpp"

namespace cascade_kit {

WeightVec fundamental_weight(const RootSystem& rs, const SimpleSystem& ss, const RootVec& alpha) {
  WeightVec out;
  out.c.assign(rs.rank(), Rat(0));
  const auto idx = ss.index_of(alpha);
  if (!idx) return out; // ϖ_α := 0 outside the system

  const std::size_t m = ss.size();
  linalg::RatMat gram(m, linalg::RatVec(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      gram[i][j] = Rat(rs.coroot_pairing(ss.elements[i], ss.elements[j]));
  linalg::RatVec rhs(m, Rat(0));
  rhs[*idx] = 1;

  const auto sol = linalg::solve(gram, rhs);
  if (!sol.consistent || !sol.unique())
    throw std::logic_error("fundamental_weight: singular Gram system");
  for (std::size_t j = 0; j < m; ++j)
    out += sol.particular[j] * to_weight(ss.elements[j]);
  return out;
}

std::vector<std::vector<RootVec>> involution_orbits(const RootSystem& rs,
                                                    const SimpleSystem& parent,
                                                    const SimpleSystem& sub1,
                                                    const SimpleSystem& sub2) {
  const auto perm_of = [&](const SimpleSystem& sub) {
    std::vector<std::size_t> p(parent.size());
    std::iota(p.begin(), p.end(), std::size_t{0});
    if (sub.size() == 0) return p;
    const auto inv = diagram_involution(rs, sub);
    for (std::size_t k = 0; k < sub.size(); ++k) {
      const auto from = parent.index_of(sub.elements[k]);
      const auto to = parent.index_of(sub.elements[inv[k]]);
      if (!from || !to)
        throw std::invalid_argument("involution_orbits: subsystem element outside the parent");
      p[*from] = *to;
    }
    return p;
  };
  const auto p1 = perm_of(sub1);
  const auto p2 = perm_of(sub2);

  std::vector<char> seen(parent.size(), 0);
  std::vector<std::vector<RootVec>> orbits;
  for (std::size_t s = 0; s < parent.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    std::vector<RootVec> orb;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      orb.push_back(parent.elements[v]);
      for (const auto w : {p1[v], p2[v]})
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(orb.begin(), orb.end(), root_order);
    orbits.push_back(std::move(orb));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return root_order(a.front(), b.front()); });
  return orbits;
}

std::vector<GeneratorInfo> generator_weights(const RootSystem& rs, const SimpleSystem& pi1_side,
                                             const SimpleSystem& pi2_side,
                                             const std::vector<std::vector<RootVec>>& orbits) {
  // Canonical order: components of the union system first (by least element),
  // least orbit element within a component second. Reproduces the worked
  // parabolic tables exactly.
  std::vector<RootVec> uni = pi1_side.elements;
  uni.insert(uni.end(), pi2_side.elements.begin(), pi2_side.elements.end());
  std::sort(uni.begin(), uni.end());
  uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
  const auto comps = connected_components(rs, uni);
  const auto comp_of = [&](const RootVec& v) -> std::size_t {
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (const auto& e : comps[c])
        if (e == v) return c;
    throw std::invalid_argument("generator_weights: orbit element outside both sides");
  };

  struct Item {
    std::size_t comp;
    std::vector<RootVec> orbit;
  };
  std::vector<Item> items;
  for (auto orbit : orbits) {
    if (orbit.empty()) throw std::invalid_argument("generator_weights: empty orbit");
    std::sort(orbit.begin(), orbit.end(), root_order);
    items.push_back({comp_of(orbit.front()), std::move(orbit)});
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    return root_order(a.orbit.front(), b.orbit.front());
  });

  std::vector<GeneratorInfo> out;
  int next = 1;
  for (auto& it : items) {
    WeightVec delta;
    delta.c.assign(rs.rank(), Rat(0));
    bool any1 = false, any2 = false, all1 = true, all2 = true;
    for (const auto& a : it.orbit) {
      const bool m1 = pi1_side.contains(a);
      const bool m2 = pi2_side.contains(a);
      any1 |= m1;
      any2 |= m2;
      all1 &= m1;
      all2 &= m2;
      delta += Rat(2) * (fundamental_weight(rs, pi2_side, a) - fundamental_weight(rs, pi1_side, a));
    }
    const std::string base = "p" + std::to_string(next++);
    // A two-element orbit confined to a single side carries two generators of
    // half the orbit weight.
    if (it.orbit.size() == 2 && ((all1 && !any2) || (all2 && !any1))) {
      const WeightVec half = Rat(1, 2) * delta;
      out.push_back({it.orbit, half, {}, base});
      out.push_back({it.orbit, half, {}, base + "'"});
    } else {
      out.push_back({std::move(it.orbit), std::move(delta), {}, base});
    }
  }
  return out;
}

std::vector<std::vector<Int>> pairing_table(const RootSystem& rs, std::vector<GeneratorInfo>& gens,
                                            const std::vector<RootVec>& coroots,
                                            const SimpleSystem* vanish_on) {
  std::vector<std::vector<Int>> table;
  for (auto& g : gens) {
    std::vector<Int> row;
    for (const auto& gamma : coroots) {
      const Rat v = rs.coroot_pairing(gamma, g.weight);
      if (!is_integer(v))
        throw std::logic_error("pairing_table: non-integral pairing for " + g.label);
      row.push_back(boost::multiprecision::numerator(v));
    }
    g.pairing_vector = row;
    table.push_back(std::move(row));
  }
  if (vanish_on) {
    for (std::size_t c = 0; c < coroots.size(); ++c) {
      if (!vanish_on->contains(coroots[c])) continue;
      for (const auto& row : table)
        if (row[c] != 0)
          throw std::logic_error("pairing_table: weight fails to vanish on an intersection-side coroot");
    }
  }
  return table;
}

} // namespace cascade_kit
