#include "cascade_kit/checker.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cascade_kit/linalg.hpp"

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

std::vector<int> full_pi(const RootSystem& rs) {
  std::vector<int> all(rs.rank());
  std::iota(all.begin(), all.end(), 1);
  return all;
}

std::string describe_indices(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

bool component_is_type_a(const RootSystem& rs, const std::vector<RootVec>& comp) {
  std::size_t edges = 0;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    std::size_t degree = 0;
    for (std::size_t j = 0; j < comp.size(); ++j) {
      if (i == j) continue;
      const Int cij = rs.coroot_pairing(comp[i], comp[j]);
      if (cij == 0) continue;
      ++degree;
      if (cij != -1 || rs.coroot_pairing(comp[j], comp[i]) != -1) return false; // multiple bond
      if (i < j) ++edges;
    }
    if (degree > 2) return false; // branch point
  }
  return edges + 1 == comp.size(); // chain
}

} // namespace

std::string to_string(Stage s) {
  switch (s) {
    case Stage::RLEqual: return "RLEqual";
    case Stage::CountFail: return "CountFail";
    case Stage::NotPolynomial: return "NotPolynomial";
    case Stage::FactorizationFail: return "FactorizationFail";
  }
  throw std::logic_error("to_string(Stage): bad value");
}

std::optional<Stage> parse_stage(const std::string& s) {
  if (s == "RLEqual") return Stage::RLEqual;
  if (s == "CountFail") return Stage::CountFail;
  if (s == "NotPolynomial") return Stage::NotPolynomial;
  if (s == "FactorizationFail") return Stage::FactorizationFail;
  return std::nullopt;
}

HGamma h_gamma_basis(const RootSystem& rs, const std::vector<int>& pi1, const HalfSet& half) {
  require_type_c(rs, "h_gamma_basis");
  const auto p1 = normalize_subset(rs, pi1, "h_gamma_basis");
  const Pi1Z z = compute_pi1_z(rs, p1, half); // enforces the reduced precondition
  HGamma out;
  for (int i : z.bar_half.indices)
    if (std::binary_search(p1.begin(), p1.end(), i)) out.coroot_basis.push_back(rs.simple_root(i));
  return out;
}

CountReport count_check(const RootSystem& rs, const std::vector<int>& pi1, const HalfSet& half) {
  require_type_c(rs, "count_check");
  const auto p1 = normalize_subset(rs, pi1, "count_check");

  CountReport out;
  out.dim_h_gamma = static_cast<int>(h_gamma_basis(rs, p1, half).dim());

  const Biparabolic bp = make_biparabolic(rs, p1, full_pi(rs));
  out.rl = reduced_index_typeC_parabolic(bp);

  const PiZ pz = compute_pi_z(rs, half);
  if (!pz.admissible)
    throw std::invalid_argument("count_check: inadmissible half set: " + pz.reason);
  const SimpleSystem piz_sys = SimpleSystem::make(rs, pz.roots);
  const SimpleSystem pi1z_sys = SimpleSystem::make(rs, compute_pi1_z(rs, p1, half).roots);
  out.rl_z = static_cast<int>(involution_orbits(rs, piz_sys, pi1z_sys, piz_sys).size());

  if (out.rl_z - out.rl > out.dim_h_gamma)
    throw std::logic_error("count_check: orbit-count difference exceeds dim h_Gamma");
  out.rl_equal_shortcut = out.dim_h_gamma == 0;
  out.count_fail = !out.rl_equal_shortcut && (out.rl_z - out.rl < out.dim_h_gamma);
  return out;
}

FactorizationReport factorization_test(const std::vector<GeneratorInfo>& gens, const HGamma& hg,
                                       int rl_q, const std::vector<std::vector<int>>& hilbert) {
  const std::size_t k = gens.size();
  const std::size_t dim = hg.dim();
  if (rl_q < 0 || k != static_cast<std::size_t>(rl_q) + dim)
    throw std::invalid_argument("factorization_test: need |gens| = rl_q + dim h_Gamma");
  for (const auto& g : gens)
    if (g.pairing_vector.size() != dim)
      throw std::invalid_argument("factorization_test: pairing vectors not computed against h_Gamma");

  FactorizationReport out;

  // All index subsets of size dim, in lexicographic order.
  std::vector<std::size_t> q(dim);
  std::iota(q.begin(), q.end(), std::size_t{0});
  const auto advance = [&]() {
    if (dim == 0) return false;
    std::size_t i = dim;
    while (i-- > 0) {
      if (q[i] != i + k - dim) {
        ++q[i];
        for (std::size_t j = i + 1; j < dim; ++j) q[j] = q[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  bool first = dim <= k;
  while (first) {
    std::vector<char> in_q(k, 0);
    for (auto i : q) in_q[i] = 1;

    linalg::RatMat m(dim);
    for (std::size_t r = 0; r < dim; ++r)
      m[r].assign(gens[q[r]].pairing_vector.begin(), gens[q[r]].pairing_vector.end());
    if (linalg::rank(std::move(m)) == dim) {
      PartitionTrace trace;
      trace.q_indices.assign(q.begin(), q.end());
      for (const auto& elem : hilbert) {
        int unit_factors = 0;
        bool bad = false;
        for (std::size_t j = 0; j < k; ++j) {
          if (in_q[j] || elem[j] == 0) continue;
          if (elem[j] == 1)
            ++unit_factors;
          else
            bad = true;
        }
        if (bad || unit_factors != 1) {
          trace.violating_element = elem;
          break;
        }
      }
      const bool ok = trace.violating_element.empty();
      out.traces.push_back(std::move(trace));
      if (ok) {
        out.pass = true;
        return out;
      }
    }
    first = advance();
  }
  return out;
}

std::string CheckReport::verdict_string() const {
  if (integral_trivially) return "IntegralTrivially";
  if (excluded_by) return "ExcludedBy(" + to_string(*excluded_by) + ")";
  return "Inconclusive";
}

CheckReport check_half_set(const RootSystem& rs, const std::vector<int>& pi1, const HalfSet& half) {
  require_type_c(rs, "check_half_set");
  const auto p1 = normalize_subset(rs, pi1, "check_half_set");
  if (p1.size() == static_cast<std::size_t>(rs.rank()))
    throw std::invalid_argument("check_half_set: pi1 must be a proper subset of the simple roots");
  if (!half.empty() && half.indices.back() >= rs.rank())
    throw std::invalid_argument("check_half_set: half set must lie in [1, n-1]");

  CheckReport rep;
  rep.type = rs.type();
  rep.rank = rs.rank();
  rep.pi1 = p1;
  rep.requested_half = half;

  if (half.empty()) {
    rep.reduced_half = half;
    rep.integral_trivially = true;
    return rep;
  }

  rep.reduced_half = reduce_half_set(rs, p1, half);
  const IntegralPairData data = make_integral_pair_data(rs, p1, rep.reduced_half);
  rep.pi_z = data.pi_z;
  rep.pi1_z = data.pi1_z.roots;

  rep.hg = h_gamma_basis(rs, p1, rep.reduced_half);
  rep.counts = count_check(rs, p1, rep.reduced_half);

  if (rep.counts.rl_equal_shortcut) {
    rep.excluded_by = Stage::RLEqual;
    rep.notes.push_back("h_Gamma is zero, so the truncated algebras coincide and h must be integral");
    return rep;
  }
  if (rep.counts.count_fail) {
    rep.excluded_by = Stage::CountFail;
    rep.notes.push_back("generator count rises by " +
                        std::to_string(rep.counts.rl_z - rep.counts.rl) + " but dim h_Gamma is " +
                        std::to_string(rep.counts.dim_h_gamma));
    return rep;
  }

  const SimpleSystem piz_sys = SimpleSystem::make(rs, data.pi_z);
  const SimpleSystem pi1z_sys = SimpleSystem::make(rs, data.pi1_z.roots);
  const auto orbits = involution_orbits(rs, piz_sys, pi1z_sys, piz_sys);
  rep.gens = generator_weights(rs, pi1z_sys, piz_sys, orbits);
  if (rep.gens.size() != static_cast<std::size_t>(rep.counts.rl_z))
    throw std::logic_error("check_half_set: generator count differs from the orbit count");
  pairing_table(rs, rep.gens, rep.hg.coroot_basis);

  MonoidProblem problem;
  for (const auto& g : rep.gens) problem.vectors.push_back(g.pairing_vector);
  const HilbertResult hb = hilbert_basis(problem);
  rep.hilbert = hb.basis;
  rep.hilbert_budget_exceeded = hb.budget_exceeded;
  if (hb.budget_exceeded) {
    rep.notes.push_back("Hilbert enumeration hit its degree budget; no verdict");
    return rep; // Inconclusive
  }

  rep.monoid_free = is_free_monoid(problem, hb.basis);
  if (!rep.monoid_free) {
    rep.excluded_by = Stage::NotPolynomial;
    rep.notes.push_back("invariant monoid has " + std::to_string(rep.hilbert.size()) +
                        " minimal generators with a relation, so the invariant algebra is not polynomial");
    return rep;
  }

  rep.fact = factorization_test(rep.gens, rep.hg, rep.counts.rl, rep.hilbert);
  if (!rep.fact.pass) {
    rep.excluded_by = Stage::FactorizationFail;
    rep.notes.push_back(rep.fact.traces.empty()
                            ? "no admissible partition of the generators exists"
                            : "every admissible partition violates the single-factor rule");
    return rep;
  }

  return rep; // Inconclusive: exclusion could not be established
}

SweepReport integrality_sweep(const RootSystem& rs, const std::vector<int>& pi1,
                              int max_rank_guard) {
  require_type_c(rs, "integrality_sweep");
  if (rs.rank() > max_rank_guard)
    throw std::invalid_argument("integrality_sweep: rank exceeds the sweep guard");
  const auto p1 = normalize_subset(rs, pi1, "integrality_sweep");
  if (p1.size() == static_cast<std::size_t>(rs.rank()))
    throw std::invalid_argument("integrality_sweep: pi1 must be a proper subset of the simple roots");

  const int n = rs.rank();
  std::map<std::vector<int>, std::vector<HalfSet>> classes;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> idx;
    for (int b = 0; b < n - 1; ++b)
      if (mask & (1u << b)) idx.push_back(b + 1);
    HalfSet hs{idx};
    classes[reduce_half_set(rs, p1, hs).indices].push_back(std::move(hs));
  }

  SweepReport out;
  out.total_half_sets = 1 << (n - 1);
  out.certified = true;
  for (auto& [rep_indices, members] : classes) {
    SweepCase c;
    c.representative = HalfSet{rep_indices};
    c.members = std::move(members);
    c.report = check_half_set(rs, p1, c.representative);
    if (!c.representative.empty() && !c.report.excluded()) {
      out.certified = false;
      out.inconclusive_cases.push_back(out.cases.size());
    }
    out.cases.push_back(std::move(c));
  }
  return out;
}

ShortcutReport type_a_shortcut(const RootSystem& rs, const std::vector<int>& pi1,
                               const std::vector<int>& pi2) {
  // Unlike the Frobenius machinery this does not need π₁ ∪ π₂ = π, so the
  // sides are only range-checked, not run through make_biparabolic.
  const auto p1 = normalize_subset(rs, pi1, "type_a_shortcut");
  const auto p2 = normalize_subset(rs, pi2, "type_a_shortcut");
  ShortcutReport out;
  for (const auto* side : {&p1, &p2}) {
    std::vector<RootVec> roots;
    for (int i : *side) roots.push_back(rs.simple_root(i));
    for (const auto& comp : connected_components(rs, roots)) {
      if (component_is_type_a(rs, comp)) continue;
      std::vector<int> bad;
      for (const auto& r : comp) bad.push_back(r.support_min());
      out.detail = std::string(side == &p1 ? "pi1" : "pi2") + " component " +
                   describe_indices(bad) + " is not of type A";
      return out;
    }
  }
  out.applicable = true;
  out.detail = "every component of pi1 and pi2 is of type A";
  return out;
}

std::string ManualCheckReport::verdict_string() const {
  if (excluded_by) return "ExcludedBy(" + to_string(*excluded_by) + ")";
  return "Inconclusive";
}

ManualCheckReport check_with_explicit_hgamma(const RootSystem& rs, std::vector<GeneratorInfo> gens,
                                             const HGamma& hg, int rl_q) {
  if (gens.empty()) throw std::invalid_argument("check_with_explicit_hgamma: no generators");
  if (rl_q < 0 || gens.size() != static_cast<std::size_t>(rl_q) + hg.dim())
    throw std::invalid_argument("check_with_explicit_hgamma: need |gens| = rl_q + dim h_Gamma");

  ManualCheckReport rep;
  pairing_table(rs, gens, hg.coroot_basis);
  rep.gens = std::move(gens);

  MonoidProblem problem;
  for (const auto& g : rep.gens) problem.vectors.push_back(g.pairing_vector);
  const HilbertResult hb = hilbert_basis(problem);
  rep.hilbert = hb.basis;
  rep.hilbert_budget_exceeded = hb.budget_exceeded;
  if (hb.budget_exceeded) return rep;

  rep.monoid_free = is_free_monoid(problem, hb.basis);
  if (!rep.monoid_free) {
    rep.excluded_by = Stage::NotPolynomial;
    return rep;
  }
  rep.fact = factorization_test(rep.gens, hg, rl_q, rep.hilbert);
  if (!rep.fact.pass) rep.excluded_by = Stage::FactorizationFail;
  return rep;
}

} // namespace cascade_kit
