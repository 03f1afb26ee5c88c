#include "cascade_kit/frobenius.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace cascade_kit {

namespace {

// Transpose-Cartan action: values_on_pi from coroot coefficients,
// h(α_j) = Σ_i x_i C[i][j].
linalg::RatVec values_from_coroots(const RootSystem& rs, const linalg::RatVec& x) {
  const int n = rs.rank();
  linalg::RatVec v(n, Rat(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (x[i] != 0) v[j] += x[i] * rs.cartan()[i][j];
  return v;
}

linalg::RatVec coroots_from_values(const RootSystem& rs, const linalg::RatVec& v) {
  const int n = rs.rank();
  linalg::RatMat ct(n, linalg::RatVec(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) ct[j][i] = rs.cartan()[i][j];
  auto sol = linalg::solve(ct, v);
  assert(sol.unique()); // Cartan matrices are invertible
  return sol.particular;
}

} // namespace

Rat AdaptedH::value_on(const RootVec& gamma) const {
  Rat s = 0;
  for (std::size_t i = 0; i < values_on_pi.size(); ++i)
    if (gamma.c[i] != 0) s += Rat(gamma.c[i]) * values_on_pi[i];
  return s;
}

AdaptedH adapted_h_from_values(const RootSystem& rs, linalg::RatVec values_on_pi) {
  AdaptedH h;
  h.coroot_coeffs = coroots_from_values(rs, values_on_pi);
  h.values_on_pi = std::move(values_on_pi);
  return h;
}

AdaptedH adapted_h_from_coroots(const RootSystem& rs, linalg::RatVec coroot_coeffs) {
  AdaptedH h;
  h.values_on_pi = values_from_coroots(rs, coroot_coeffs);
  h.coroot_coeffs = std::move(coroot_coeffs);
  return h;
}

int count_even_a_components(const RootSystem& rs, const std::vector<int>& subset) {
  if (subset.empty()) return 0;
  SimpleSystem ss = sub_simple_system(rs, subset);
  int count = 0;
  for (const auto& comp : connected_components(rs, ss.elements)) {
    if (comp.size() % 2 != 0) continue; // want A_{2m}, m > 0
    // Chain test with all edges simply laced: pairings in {0,−1} both ways
    // and no vertex of degree ≥ 3.
    bool is_a = true;
    for (std::size_t i = 0; i < comp.size() && is_a; ++i) {
      int degree = 0;
      for (std::size_t j = 0; j < comp.size() && is_a; ++j) {
        if (i == j) continue;
        const Int p = rs.coroot_pairing(comp[i], comp[j]);
        if (p != 0 && p != -1) is_a = false;
        if (p != 0) ++degree;
      }
      if (degree > 2) is_a = false;
    }
    if (is_a) ++count;
  }
  return count;
}

FrobeniusH frobenius_h(const Biparabolic& bp) {
  const RootSystem& rs = *bp.rs;
  const int n = rs.rank();
  auto ft = is_frobenius(bp);
  if (!ft.frobenius)
    throw std::invalid_argument("frobenius_h: 𝔮 is not Frobenius (B is not a basis)");

  linalg::RatMat a(n, linalg::RatVec(n));
  linalg::RatVec b(n, Rat(1));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) a[r][j] = ft.basis[r].c[j];
  auto sol = linalg::solve(a, b);
  assert(sol.unique());

  FrobeniusH out;
  out.h = adapted_h_from_values(rs, sol.particular);
  out.max_abs = 0;
  for (const auto& v : out.h.values_on_pi) {
    Rat av = v < 0 ? -v : v;
    if (av > out.max_abs) out.max_abs = av;
  }
  out.m1 = count_even_a_components(rs, bp.pi1);
  out.m2 = count_even_a_components(rs, bp.pi2);
  out.bound_m = 1 + std::max(out.m1, out.m2);
  return out;
}

SupportSet make_support_set(const RootSystem& rs, std::vector<RootVec> roots,
                            std::vector<linalg::RatVec> cartan_subspace) {
  for (const auto& g : roots)
    if (!rs.is_root(g)) throw std::invalid_argument("SupportSet: non-root element");
  if (!cartan_subspace.empty()) {
    linalg::RatMat m(cartan_subspace.size());
    for (std::size_t i = 0; i < cartan_subspace.size(); ++i) m[i] = cartan_subspace[i];
    if (linalg::rank(m) != cartan_subspace.size())
      throw std::invalid_argument("SupportSet: subspace basis is linearly dependent");
  }

  SupportSet s;
  s.roots = std::move(roots);
  s.cartan_subspace = std::move(cartan_subspace);

  // Lemma 4.1 precondition: do the functionals γ|_subspace span the dual?
  const std::size_t k = s.cartan_subspace.size();
  linalg::RatMat pair(s.roots.size(), linalg::RatVec(k, Rat(0)));
  for (std::size_t r = 0; r < s.roots.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) {
      Rat v = 0;
      for (int i = 0; i < rs.rank(); ++i)
        for (int j = 0; j < rs.rank(); ++j)
          if (s.cartan_subspace[c][i] != 0 && s.roots[r].c[j] != 0)
            v += s.cartan_subspace[c][i] * rs.cartan()[i][j] * s.roots[r].c[j];
      pair[r][c] = v;
    }
  s.spans_dual = linalg::rank(pair) == k;
  return s;
}

SupportSolve solve_h_on_support(const RootSystem& rs, const SupportSet& support) {
  const std::size_t k = support.cartan_subspace.size();
  if (support.roots.empty()) {
    // No constraints: the solution space is the whole subspace.
    SupportSolve out;
    out.kind = k == 0 ? SolutionKind::Unique : SolutionKind::PositiveDimensional;
    out.h = adapted_h_from_coroots(rs, linalg::RatVec(rs.rank(), Rat(0)));
    out.kernel = support.cartan_subspace;
    return out;
  }
  linalg::RatMat a(support.roots.size(), linalg::RatVec(k, Rat(0)));
  for (std::size_t r = 0; r < support.roots.size(); ++r)
    for (std::size_t c = 0; c < k; ++c) {
      Rat v = 0;
      for (int i = 0; i < rs.rank(); ++i) {
        if (support.cartan_subspace[c][i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < rs.rank(); ++j)
          if (support.roots[r].c[j] != 0) row += Rat(rs.cartan()[i][j]) * support.roots[r].c[j];
        v += support.cartan_subspace[c][i] * row;
      }
      a[r][c] = v;
    }
  linalg::RatVec b(support.roots.size(), Rat(1));
  auto sol = linalg::solve(a, b);

  SupportSolve out;
  if (!sol.consistent) {
    out.kind = SolutionKind::NoSolution;
    return out;
  }
  out.kind = sol.nullspace.empty() ? SolutionKind::Unique : SolutionKind::PositiveDimensional;

  auto expand = [&](const linalg::RatVec& y) {
    linalg::RatVec x(rs.rank(), Rat(0));
    for (std::size_t c = 0; c < k; ++c)
      for (int i = 0; i < rs.rank(); ++i) x[i] += y[c] * support.cartan_subspace[c][i];
    return x;
  };
  out.h = adapted_h_from_coroots(rs, expand(sol.particular));
  for (const auto& dir : sol.nullspace) out.kernel.push_back(expand(dir));
  return out;
}

IntegralityReport integrality_verdict(const RootSystem& rs, const AdaptedH& h,
                                      std::optional<int> bound_m) {
  IntegralityReport rep;
  rep.integral = true;
  for (const auto& g : rs.positive_roots()) {
    if (!is_integer(h.value_on(g))) {
      rep.integral = false;
      rep.offending.push_back(g);
    }
  }
  rep.max_abs_on_pi = 0;
  for (const auto& v : h.values_on_pi) {
    Rat av = v < 0 ? -v : v;
    if (av > rep.max_abs_on_pi) rep.max_abs_on_pi = av;
  }
  rep.bound_m = bound_m;
  // "Within bound" means h(π) ⊆ {0, ±1, …, ±m}, so non-integral values are out.
  rep.within_bound = bound_m && rep.integral && rep.max_abs_on_pi <= *bound_m;
  return rep;
}

DimensionIdentities dimension_identities_check(const Biparabolic& bp, const AdaptedH& h) {
  const RootSystem& rs = *bp.rs;
  const long long n = rs.rank();

  // Δ(𝔮) as h-values; Δ⁻_{π₁} contributes −h(γ) for γ ∈ Δ⁺_{π₁}.
  std::vector<Rat> values;
  for (const auto& g : rs.positive_roots_supported(bp.pi2)) values.push_back(h.value_on(g));
  for (const auto& g : rs.positive_roots_supported(bp.pi1)) values.push_back(-h.value_on(g));

  DimensionIdentities d;
  d.dim_a = static_cast<long long>(values.size()) + n;
  for (const auto& hv : values) {
    const Rat ev = -hv; // −ad h eigenvalue on the dual
    if (hv == 0) ++d.dim_a0;
    if (hv == 1) ++d.dim_star_neg1;
    if (ev >= 0) ++d.dim_star_ge0;
    if (ev < 0) ++d.dim_star_lt0;
    if (ev > -1 && ev < 0) ++d.dim_star_interval;
  }
  d.dim_a0 += n;      // Cartan sits in the zero eigenspace
  d.dim_star_ge0 += n;

  // Index 𝔞 = 0 and dim 𝔷 = 0 for Frobenius 𝔮.
  d.identity_i = Rat(d.dim_a, 2) == Rat(d.dim_star_ge0) + Rat(d.dim_star_interval, 2);
  d.identity_ii = Rat(d.dim_a, 2) == Rat(d.dim_star_lt0) - Rat(d.dim_star_interval, 2);
  d.identity_v = d.dim_a0 == d.dim_star_neg1;
  return d;
}

std::vector<SweepRow> frobenius_sweep(const RootSystem& rs) {
  const int n = rs.rank();
  if (n > 9)
    throw std::invalid_argument("frobenius_sweep: rank guard exceeded (n ≤ 9)");

  auto mask_to_set = [&](unsigned mask) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) s.push_back(i);
    return s;
  };

  std::vector<SweepRow> rows;
  const unsigned full = (1u << n) - 1;
  for (unsigned m1 = 0; m1 <= full; ++m1) {
    for (unsigned m2 = 0; m2 <= full; ++m2) {
      if ((m1 | m2) != full) continue;       // standing hypothesis: union is π
      if ((m1 & m2) == full) continue;       // and the intersection is proper
      SweepRow row;
      row.pi1 = mask_to_set(m1);
      row.pi2 = mask_to_set(m2);
      Biparabolic bp = make_biparabolic(rs, row.pi1, row.pi2);
      auto ft = is_frobenius(bp);
      row.frobenius = ft.frobenius;
      if (row.frobenius) {
        FrobeniusH fh = frobenius_h(bp);
        row.h_values = fh.h.values_on_pi;
        std::set<Rat> vals(row.h_values.begin(), row.h_values.end());
        row.value_set.assign(vals.begin(), vals.end());
        auto rep = integrality_verdict(rs, fh.h, fh.bound_m);
        row.integral = rep.integral;
        row.max_abs = fh.max_abs;
        row.m1 = fh.m1;
        row.m2 = fh.m2;
        row.within_bound_m = fh.max_abs <= fh.bound_m;
        row.within_bound_safe = fh.max_abs <= 1 + fh.m1 + fh.m2;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

} // namespace cascade_kit
