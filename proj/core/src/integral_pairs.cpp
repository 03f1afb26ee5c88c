#include "cascade_kit/integral_pairs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "cascade_kit/cascade.hpp"

namespace cascade_kit {

namespace {

void require_type_c(const RootSystem& rs, const char* who) {
  if (rs.type() != Type::C)
    throw std::invalid_argument(std::string(who) + ": type C required");
}

std::vector<int> normalize_subset(const RootSystem& rs, std::vector<int> v, const char* who) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (int i : v)
    if (i < 1 || i > rs.rank())
      throw std::invalid_argument(std::string(who) + ": simple-root index out of range");
  return v;
}

void validate_half(const RootSystem& rs, const HalfSet& half, const char* who) {
  for (std::size_t k = 0; k < half.indices.size(); ++k) {
    int i = half.indices[k];
    if (i < 1 || i > rs.rank())
      throw std::invalid_argument(std::string(who) + ": half-set index out of range");
    if (k > 0 && half.indices[k - 1] >= i)
      throw std::invalid_argument(std::string(who) + ": half-set indices must be strictly increasing");
  }
}

PiZ fail(std::string why) {
  PiZ out;
  out.reason = std::move(why);
  return out;
}

// Sorts, then validates the claimed simple system before returning it: the
// construction is expected to produce exactly rank-many pairwise-compatible
// roots, so a violation here is a bug, not bad input.
PiZ succeed(const RootSystem& rs, std::vector<RootVec> roots) {
  if (static_cast<int>(roots.size()) != rs.rank())
    throw std::logic_error("compute_pi_z: construction did not produce rank-many roots");
  std::sort(roots.begin(), roots.end(), root_order);
  SimpleSystem::make(rs, roots); // throws if not a simple system
  PiZ out;
  out.admissible = true;
  out.roots = std::move(roots);
  return out;
}

std::vector<RootVec> simple_complement(const RootSystem& rs, const HalfSet& half) {
  std::vector<RootVec> out;
  for (int k = 1; k <= rs.rank(); ++k)
    if (!half.contains(k)) out.push_back(rs.simple_root(k));
  return out;
}

// ε_a + ε_b (a < b) over the simple roots, type B: (ε_a − ε_b) + 2ε_b.
RootVec eps_sum_typeB(const RootSystem& rs, int a, int b) {
  RootVec out = interval_root(rs, a, b - 1);
  for (int k = b; k <= rs.rank(); ++k) {
    out += rs.simple_root(k);
    out += rs.simple_root(k);
  }
  return out;
}

// ε_a + ε_b (a < b ≤ n−1) over the simple roots, type D.
RootVec eps_sum_typeD(const RootSystem& rs, int a, int b) {
  const int n = rs.rank();
  RootVec out = interval_root(rs, a, b - 1);
  for (int k = b; k <= n - 2; ++k) {
    out += rs.simple_root(k);
    out += rs.simple_root(k);
  }
  out += rs.simple_root(n - 1);
  out += rs.simple_root(n);
  return out;
}

} // namespace

bool HalfSet::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

HalfSet make_half_set(const RootSystem& rs, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int i : indices)
    if (i < 1 || i > rs.rank())
      throw std::invalid_argument("make_half_set: index out of range");
  if (rs.type() == Type::C && !indices.empty() && indices.back() == rs.rank())
    throw std::invalid_argument("make_half_set: type C requires indices in [1, n-1]");
  return HalfSet{std::move(indices)};
}

RootVec interval_root(const RootSystem& rs, int i, int j) {
  if (i < 1 || j > rs.rank() || i > j)
    throw std::invalid_argument("interval_root: need 1 <= i <= j <= rank");
  RootVec out = rs.simple_root(i);
  for (int k = i + 1; k <= j; ++k) out += rs.simple_root(k);
  return out;
}

RootVec beta_root_typeC(const RootSystem& rs, int i) {
  require_type_c(rs, "beta_root_typeC");
  const int n = rs.rank();
  if (i < 1 || i > n) throw std::invalid_argument("beta_root_typeC: index out of range");
  RootVec out = rs.simple_root(n);
  for (int k = i; k < n; ++k) {
    out += rs.simple_root(k);
    out += rs.simple_root(k);
  }
  return out;
}

PiZ compute_pi_z(const RootSystem& rs, const HalfSet& half) {
  switch (rs.type()) {
    case Type::A:
    case Type::B:
    case Type::C:
    case Type::D:
      break;
    default:
      throw std::invalid_argument("compute_pi_z: classical type required");
  }
  validate_half(rs, half, "compute_pi_z");
  const int n = rs.rank();

  if (half.empty()) {
    std::vector<RootVec> all;
    for (int k = 1; k <= n; ++k) all.push_back(rs.simple_root(k));
    return succeed(rs, std::move(all));
  }

  const auto& I = half.indices;
  const int r = static_cast<int>(I.size());
  const int ir = I.back();

  // Chain roots s[i_j, i_{j+1}] between consecutive half indices.
  auto chain_roots = [&](int count) {
    std::vector<RootVec> out;
    for (int j = 0; j + 1 <= count; ++j) out.push_back(interval_root(rs, I[j], I[j + 1]));
    return out;
  };

  switch (rs.type()) {
    case Type::A:
      return fail("type A: a nonempty half set admits no regular integral pair");

    case Type::B: {
      if (ir == 1)
        return fail("half set {1}: the integral subsystem has rank n-1");
      if (r == 2 && I[1] == I[0] + 1)
        return fail("adjacent pair with no earlier half index: no companion root exists");
      std::vector<RootVec> roots = chain_roots(r - 1);
      auto rest = simple_complement(rs, half);
      roots.insert(roots.end(), rest.begin(), rest.end());
      // companion ε_a + ε_{i_r}: a = i_r − 1 when free, otherwise i_{r−2}
      if (!half.contains(ir - 1))
        roots.push_back(eps_sum_typeB(rs, ir - 1, ir));
      else
        roots.push_back(eps_sum_typeB(rs, I[r - 3], ir));
      return succeed(rs, std::move(roots));
    }

    case Type::C: {
      if (ir == n)
        return fail("half set contains n: type C requires i_r < n");
      std::vector<RootVec> roots = chain_roots(r - 1);
      auto rest = simple_complement(rs, half);
      roots.insert(roots.end(), rest.begin(), rest.end());
      roots.push_back(beta_root_typeC(rs, ir)); // 2ε_{i_r}
      return succeed(rs, std::move(roots));
    }

    case Type::D: {
      const bool fork1 = half.contains(n - 1);
      const bool fork2 = half.contains(n);
      if (fork1 != fork2)
        return fail("exactly one fork index in the half set: the integral subsystem has rank n-1");
      if (fork1 && fork2) {
        if (r == 2)
          return fail("half set {n-1, n}: no half index below the fork");
        const int a = I[r - 3]; // i_{r−2}
        if (a == n - 2)
          return fail("i_{r-2} = n-2: the companion root pairs half-integrally");
        std::vector<RootVec> roots = chain_roots(r - 2);
        RootVec g = interval_root(rs, a, n - 2); // ε_a + ε_n
        g += rs.simple_root(n);
        roots.push_back(std::move(g));
        auto rest = simple_complement(rs, half);
        roots.insert(roots.end(), rest.begin(), rest.end());
        RootVec extra = rs.simple_root(n - 2); // ε_{n−2} + ε_{n−1}
        extra += rs.simple_root(n - 1);
        extra += rs.simple_root(n);
        roots.push_back(std::move(extra));
        return succeed(rs, std::move(roots));
      }
      // Neither fork index present: i_r ≤ n−2 and the type-B rules carry over.
      if (ir == 1)
        return fail("half set {1}: the integral subsystem has rank n-1");
      if (r == 2 && I[1] == I[0] + 1)
        return fail("adjacent pair with no earlier half index: no companion root exists");
      std::vector<RootVec> roots = chain_roots(r - 1);
      auto rest = simple_complement(rs, half);
      roots.insert(roots.end(), rest.begin(), rest.end());
      if (!half.contains(ir - 1))
        roots.push_back(eps_sum_typeD(rs, ir - 1, ir));
      else
        roots.push_back(eps_sum_typeD(rs, I[r - 3], ir));
      return succeed(rs, std::move(roots));
    }

    default:
      throw std::logic_error("compute_pi_z: unreachable");
  }
}

int side_of_index(const HalfSet& half, int x) {
  int below = 0;
  for (int i : half.indices)
    if (i < x) ++below;
  return (below % 2 == 0) ? 1 : 2;
}

SplitI split_I(const RootSystem& rs, const HalfSet& half) {
  require_type_c(rs, "split_I");
  validate_half(rs, half, "split_I");
  PiZ pz = compute_pi_z(rs, half);
  if (!pz.admissible)
    throw std::invalid_argument("split_I: inadmissible half set: " + pz.reason);

  SplitI out;
  for (int t = 1; t <= rs.rank(); ++t) {
    if (side_of_index(half, t) == 1) {
      out.I_left.push_back(t);
      out.cascade_left.push_back(beta_root_typeC(rs, t));
    } else {
      out.I_right.push_back(t);
      out.cascade_right.push_back(beta_root_typeC(rs, t));
    }
  }

  // Cross-check: each π^Z component must recursively cascade onto {β_t} of
  // one side of the partition.
  auto comps = connected_components(rs, pz.roots);
  if (comps.size() != (half.empty() ? 1u : 2u))
    throw std::logic_error("split_I: unexpected pi^Z component count");
  std::vector<std::vector<RootVec>> comp_cascades;
  for (const auto& c : comps)
    comp_cascades.push_back(kostant_cascade(rs, SimpleSystem::make(rs, c)).ordered_roots);
  auto matched = [&](const std::vector<RootVec>& side) {
    if (side.empty()) return true;
    for (const auto& cc : comp_cascades)
      if (cc == side) return true;
    return false;
  };
  if (!matched(out.cascade_left) || !matched(out.cascade_right))
    throw std::logic_error("split_I: component cascades disagree with the index partition");
  return out;
}

HalfSet reduce_half_set(const RootSystem& rs, const std::vector<int>& pi1, const HalfSet& half) {
  require_type_c(rs, "reduce_half_set");
  validate_half(rs, half, "reduce_half_set");
  auto p1 = normalize_subset(rs, pi1, "reduce_half_set");
  const int n = rs.rank();

  // comp_lo[i] = least index of the π₁-run containing i (0 if i ∉ π₁).
  std::vector<int> comp_lo(n + 2, 0);
  for (int i : p1) comp_lo[i] = (i > 1 && comp_lo[i - 1] != 0) ? comp_lo[i - 1] : i;

  std::set<int> cur(half.indices.begin(), half.indices.end());
  for (;;) {
    bool fired = false;
    std::vector<int> v(cur.begin(), cur.end());
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
      const int a = v[j], b = v[j + 1];
      if (comp_lo[a] == 0 || comp_lo[b] != comp_lo[a]) continue;
      // Two half indices inside one π₁-component: slide the pair down.
      cur.erase(a);
      cur.erase(b);
      if (!cur.insert(b - 1).second)
        throw std::logic_error("reduce_half_set: index collision");
      if (a - 1 >= comp_lo[a] && !cur.insert(a - 1).second)
        throw std::logic_error("reduce_half_set: index collision");
      fired = true;
      break;
    }
    if (!fired) break;
  }
  return HalfSet{std::vector<int>(cur.begin(), cur.end())};
}

Pi1Z compute_pi1_z(const RootSystem& rs, const std::vector<int>& pi1, const HalfSet& half) {
  require_type_c(rs, "compute_pi1_z");
  validate_half(rs, half, "compute_pi1_z");
  auto p1 = normalize_subset(rs, pi1, "compute_pi1_z");
  const int n = rs.rank();
  if (!half.empty() && half.indices.back() == n)
    throw std::invalid_argument("compute_pi1_z: half set contains n (no integral pair in type C)");
  if (!(reduce_half_set(rs, p1, half) == half))
    throw std::invalid_argument("compute_pi1_z: half set is not reduced; apply reduce_half_set first");

  std::set<int> in_p1(p1.begin(), p1.end());

  Pi1Z out;
  std::vector<RootVec> roots;
  for (int i : p1)
    if (!half.contains(i)) roots.push_back(rs.simple_root(i));

  bool beta_in = false;
  if (!half.empty()) {
    const int ir = half.indices.back();
    beta_in = true;
    for (int k = ir; k <= n; ++k)
      if (!in_p1.count(k)) {
        beta_in = false;
        break;
      }
    if (beta_in) roots.push_back(beta_root_typeC(rs, ir));
  }
  out.beta_ir_in_pi1z = beta_in;
  out.bar_half = half;
  if (beta_in) out.bar_half.indices.pop_back();

  std::sort(roots.begin(), roots.end(), root_order);
  out.roots = roots;

  // Split along π₁-components, each piece tagged by the π^Z side it sits in.
  std::vector<std::pair<int, int>> runs;
  for (std::size_t k = 0; k < p1.size(); ++k) {
    if (runs.empty() || p1[k] != runs.back().second + 1)
      runs.emplace_back(p1[k], p1[k]);
    else
      runs.back().second = p1[k];
  }
  for (const auto& [lo, hi] : runs) {
    Pi1Z::ComponentSplit cs;
    for (int i = lo; i <= hi; ++i) cs.pi1_component.push_back(i);
    for (const auto& rt : out.roots) {
      const int s = rt.support_min();
      if (s < lo || s > hi) continue;
      (side_of_index(half, s) == 1 ? cs.left : cs.right).push_back(rt);
    }
    out.components.push_back(std::move(cs));
  }
  return out;
}

IntegralPairData make_integral_pair_data(const RootSystem& rs, const std::vector<int>& pi1,
                                         const HalfSet& reduced_half) {
  IntegralPairData out;
  out.half = reduced_half;
  PiZ pz = compute_pi_z(rs, reduced_half);
  if (!pz.admissible)
    throw std::invalid_argument("make_integral_pair_data: inadmissible half set: " + pz.reason);
  out.pi_z = pz.roots;
  for (const auto& rt : pz.roots)
    (side_of_index(reduced_half, rt.support_min()) == 1 ? out.pi_z_left : out.pi_z_right)
        .push_back(rt);
  out.split = split_I(rs, reduced_half);
  out.pi1_z = compute_pi1_z(rs, pi1, reduced_half);
  return out;
}

} // namespace cascade_kit
