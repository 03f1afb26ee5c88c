#include "commands.hpp"

#include <cstdlib>
#include <future>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cascade_kit/cascade.hpp"
#include "cascade_kit/checker.hpp"
#include "cascade_kit/frobenius.hpp"
#include "render.hpp"

namespace cascade_kit::cli {

namespace {

RootSystem build_system(const std::string& label, int rank) {
  const auto t = parse_type(label);
  if (!t) throw std::invalid_argument("unknown type label '" + label + "'");
  if (rank == 0) {
    switch (*t) {
      case Type::G2: rank = 2; break;
      case Type::F4: rank = 4; break;
      case Type::E6: rank = 6; break;
      case Type::E7: rank = 7; break;
      case Type::E8: rank = 8; break;
      default: throw std::invalid_argument("rank required for type " + label);
    }
  }
  return RootSystem::build(*t, rank);
}

int env_max_rank(int fallback) {
  if (const char* s = std::getenv("CASCADE_KIT_MAX_RANK")) {
    const int v = std::atoi(s);
    if (v > 0) return v;
  }
  return fallback;
}

std::vector<int> full_pi(const RootSystem& rs) {
  std::vector<int> all(rs.rank());
  std::iota(all.begin(), all.end(), 1);
  return all;
}

std::string coroot_name(const RootSystem& rs, const RootVec& r) {
  for (int i = 1; i <= rs.rank(); ++i)
    if (r == rs.simple_root(i)) return "a" + std::to_string(i) + "^";
  return pretty_root(r) + "^";
}

std::vector<RootVec> support_filter(const std::vector<RootVec>& roots,
                                    const std::vector<int>& subset) {
  std::vector<char> in(256, 0);
  for (int i : subset) in[i] = 1;
  std::vector<RootVec> out;
  for (const auto& r : roots) {
    bool ok = true;
    for (std::size_t i = 0; i < r.c.size(); ++i)
      if (r.c[i] != 0 && !in[i + 1]) ok = false;
    if (ok) out.push_back(r);
  }
  return out;
}

void render_generators(std::ostream& os, Format fmt, const RootSystem& rs,
                       const std::vector<GeneratorInfo>& gens,
                       const std::vector<RootVec>& coroots) {
  if (fmt == Format::Tsv) {
    std::vector<std::string> head{"generator", "weight"};
    for (const auto& c : coroots) head.push_back(coroot_name(rs, c));
    os << tsv_row(head);
    for (const auto& g : gens) {
      std::vector<std::string> row{g.label, pretty_weight(g.weight)};
      for (const Int& x : g.pairing_vector) row.push_back(x.str());
      os << tsv_row(row);
    }
    return;
  }
  os << "generator  weight";
  for (const auto& c : coroots) os << "  " << coroot_name(rs, c);
  os << "\n";
  for (const auto& g : gens) {
    os << g.label << "  " << pretty_weight(g.weight) << "  (";
    for (std::size_t i = 0; i < g.pairing_vector.size(); ++i)
      os << (i ? "," : "") << g.pairing_vector[i].str();
    os << ")  orbit {";
    for (std::size_t i = 0; i < g.orbit.size(); ++i)
      os << (i ? ", " : "") << pretty_root(g.orbit[i]);
    os << "}\n";
  }
}

void render_check(std::ostream& os, Format fmt, const CheckReport& rep) {
  if (fmt == Format::Json) {
    os << to_json(rep).dump(2) << "\n";
    return;
  }
  if (fmt == Format::Tsv) {
    os << tsv_row({"type", "rank", "pi1", "half", "reduced", "verdict", "rl", "rl_z",
                   "dim_h_gamma", "generators", "hilbert", "monoid_free"});
    os << tsv_row({to_string(rep.type), std::to_string(rep.rank), join_ints(rep.pi1),
                   join_ints(rep.requested_half.indices), join_ints(rep.reduced_half.indices),
                   rep.verdict_string(), std::to_string(rep.counts.rl),
                   std::to_string(rep.counts.rl_z), std::to_string(rep.counts.dim_h_gamma),
                   std::to_string(rep.gens.size()), std::to_string(rep.hilbert.size()),
                   rep.monoid_free ? "yes" : "no"});
    return;
  }
  os << type_rank_label(rep.type, rep.rank) << "  pi1={" << join_ints(rep.pi1) << "}  half={"
     << join_ints(rep.requested_half.indices) << "}";
  if (!(rep.reduced_half == rep.requested_half))
    os << "  reduced={" << join_ints(rep.reduced_half.indices) << "}";
  os << "\nverdict: " << rep.verdict_string() << "\n";
  if (rep.integral_trivially) return;
  os << "pi^Z:";
  for (const auto& r : rep.pi_z) os << " " << pretty_root(r);
  os << "\npi1^Z:";
  for (const auto& r : rep.pi1_z) os << " " << pretty_root(r);
  os << "\nh_Gamma:";
  for (const auto& r : rep.hg.coroot_basis) os << " " << pretty_root(r) << "^";
  os << "\ncounts: rl=" << rep.counts.rl << " rl_z=" << rep.counts.rl_z
     << " dim=" << rep.counts.dim_h_gamma << "\n";
  if (!rep.gens.empty()) {
    const RootSystem dummy = RootSystem::build(rep.type, rep.rank);
    render_generators(os, Format::Text, dummy, rep.gens, rep.hg.coroot_basis);
  }
  if (!rep.hilbert.empty() || rep.hilbert_budget_exceeded) {
    os << "hilbert basis (" << rep.hilbert.size() << ")"
       << (rep.hilbert_budget_exceeded ? " [budget exceeded]" : "") << ":\n";
    for (const auto& m : rep.hilbert) {
      os << " ";
      for (int x : m) os << " " << x;
      os << "\n";
    }
    os << "monoid free: " << (rep.monoid_free ? "yes" : "no") << "\n";
  }
  for (const auto& t : rep.fact.traces) {
    os << "partition {";
    for (std::size_t i = 0; i < t.q_indices.size(); ++i)
      os << (i ? "," : "") << rep.gens[t.q_indices[i]].label;
    os << "}: ";
    if (t.violating_element.empty())
      os << "passes\n";
    else {
      os << "violated by";
      for (int x : t.violating_element) os << " " << x;
      os << "\n";
    }
  }
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
}

// Same grouping as integrality_sweep, with the per-representative checks
// fanned out over a bounded pool. Case order (and so output) is identical
// to the sequential path.
SweepReport parallel_sweep(const RootSystem& rs, const std::vector<int>& pi1, int guard,
                           int jobs) {
  if (jobs <= 1) return integrality_sweep(rs, pi1, guard);
  if (rs.rank() > guard)
    throw std::invalid_argument("integrality_sweep: rank exceeds the sweep guard");

  const int n = rs.rank();
  std::map<std::vector<int>, std::vector<HalfSet>> classes;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> idx;
    for (int b = 0; b < n - 1; ++b)
      if (mask & (1u << b)) idx.push_back(b + 1);
    HalfSet hs{idx};
    classes[reduce_half_set(rs, pi1, hs).indices].push_back(std::move(hs));
  }

  std::vector<SweepCase> cases(classes.size());
  std::vector<std::pair<std::vector<int>, std::vector<HalfSet>>> items;
  for (auto& [rep, members] : classes) items.emplace_back(rep, std::move(members));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      SweepCase c;
      c.representative = HalfSet{items[i].first};
      c.members = items[i].second;
      c.report = check_half_set(rs, pi1, c.representative);
      cases[i] = std::move(c);
    }
  };
  std::vector<std::future<void>> pool;
  for (int j = 0; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  SweepReport out;
  out.total_half_sets = 1 << (n - 1);
  out.certified = true;
  for (auto& c : cases) {
    if (!c.representative.empty() && !c.report.excluded()) {
      out.certified = false;
      out.inconclusive_cases.push_back(out.cases.size());
    }
    out.cases.push_back(std::move(c));
  }
  return out;
}

struct Args {
  std::string type_label;
  int rank = 0;
  std::string format = "text";
  std::vector<int> pi1, pi2, half, subset, hgamma;
  bool borel = false;
  std::string vectors;
  int budget = kHilbertDegreeBudget;
  int guard = 0;
  int jobs = 1;
};

int cmd_cascade(const Args& a) {
  const RootSystem rs = build_system(a.type_label, a.rank);
  const auto subset = a.subset.empty() ? full_pi(rs) : a.subset;
  const Cascade c = kostant_cascade(rs, sub_simple_system(rs, subset));
  const Format fmt = parse_format(a.format);
  if (fmt == Format::Json) {
    nlohmann::json j{{"type", to_string(rs.type())},
                     {"rank", rs.rank()},
                     {"subset", subset},
                     {"cascade", to_json(c.ordered_roots)}};
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Tsv) {
    std::cout << tsv_row({"position", "root"});
    for (std::size_t i = 0; i < c.ordered_roots.size(); ++i)
      std::cout << tsv_row({std::to_string(i + 1), pretty_root(c.ordered_roots[i])});
  } else {
    std::cout << "cascade of " << type_rank_label(rs.type(), rs.rank()) << " on {"
              << join_ints(subset) << "} (" << c.ordered_roots.size() << " roots):\n";
    for (const auto& r : c.ordered_roots) std::cout << "  " << pretty_root(r) << "\n";
  }
  return 0;
}

int cmd_frobenius(const Args& a) {
  const RootSystem rs = build_system(a.type_label, a.rank);
  std::vector<int> pi1 = a.pi1, pi2 = a.pi2;
  if (a.borel) {
    pi1.clear();
    pi2 = full_pi(rs);
  } else if (pi2.empty()) {
    pi2 = full_pi(rs);
  }
  const Biparabolic bp = make_biparabolic(rs, pi1, pi2);
  const FrobeniusTest ft = is_frobenius(bp);
  const Format fmt = parse_format(a.format);

  if (ft.frobenius) {
    const FrobeniusH fh = frobenius_h(bp);
    const IntegralityReport iv = integrality_verdict(rs, fh.h, fh.bound_m);
    const DimensionIdentities ids = dimension_identities_check(bp, fh.h);
    if (fmt == Format::Json) {
      nlohmann::json j{{"type", to_string(rs.type())},
                       {"rank", rs.rank()},
                       {"pi1", bp.pi1},
                       {"pi2", bp.pi2},
                       {"frobenius", true},
                       {"h", to_json(fh.h)},
                       {"bound_m", fh.bound_m},
                       {"m1", fh.m1},
                       {"m2", fh.m2},
                       {"integral", iv.integral},
                       {"max_abs", iv.max_abs_on_pi.str()},
                       {"within_bound", iv.within_bound},
                       {"identities_hold", ids.all_hold()}};
      std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::Tsv) {
      std::vector<std::string> head{"type"};
      for (int i = 1; i <= rs.rank(); ++i) head.push_back("h(a" + std::to_string(i) + ")");
      std::cout << tsv_row(head);
      std::vector<std::string> row{type_rank_label(rs.type(), rs.rank())};
      for (const Rat& v : fh.h.values_on_pi) row.push_back(v.str());
      std::cout << tsv_row(row);
    } else {
      std::cout << "frobenius: yes\nh = (";
      for (std::size_t i = 0; i < fh.h.values_on_pi.size(); ++i)
        std::cout << (i ? "," : "") << fh.h.values_on_pi[i].str();
      std::cout << ")\nintegral: " << (iv.integral ? "yes" : "no")
                << "  max|h| = " << iv.max_abs_on_pi.str() << "  bound m = " << fh.bound_m
                << (iv.within_bound ? " (within)" : " (exceeded)") << "\n"
                << "dimension identities: " << (ids.all_hold() ? "hold" : "FAIL") << "\n";
    }
    return iv.integral && iv.within_bound ? 0 : 1;
  }

  // Not Frobenius: constrained mode. Solve h(beta)=1 on B over the full
  // Cartan and report which values and involution-pair sums are pinned.
  std::vector<linalg::RatVec> cartan;
  for (int i = 0; i < rs.rank(); ++i) {
    linalg::RatVec e(rs.rank(), Rat(0));
    e[i] = 1;
    cartan.push_back(std::move(e));
  }
  const SupportSolve sol = solve_h_on_support(rs, make_support_set(rs, ft.basis, cartan));
  const auto ipi = extended_involution(rs, full_pi(rs));

  struct Row {
    int i;
    bool fixed_value;
    Rat value;     // when fixed_value
    int partner;   // i_pi image
    bool pair_sum_zero;
  };
  std::vector<Row> rows;
  if (sol.kind != SolutionKind::NoSolution) {
    for (int i = 1; i <= rs.rank(); ++i) {
      Row r;
      r.i = i;
      r.partner = ipi[i - 1];
      bool fixed = true, sum_fixed = true;
      for (const auto& dir : sol.kernel) {
        const AdaptedH k = adapted_h_from_coroots(rs, dir);
        if (k.values_on_pi[i - 1] != 0) fixed = false;
        if (k.values_on_pi[i - 1] + k.values_on_pi[r.partner - 1] != 0) sum_fixed = false;
      }
      r.fixed_value = fixed;
      r.value = sol.h.values_on_pi[i - 1];
      r.pair_sum_zero =
          sum_fixed && sol.h.values_on_pi[i - 1] + sol.h.values_on_pi[r.partner - 1] == 0;
      rows.push_back(r);
    }
  }

  if (fmt == Format::Json) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& r : rows)
      jr.push_back({{"i", r.i},
                    {"fixed", r.fixed_value},
                    {"value", r.fixed_value ? r.value.str() : ""},
                    {"involution_image", r.partner},
                    {"pair_sum_zero", r.pair_sum_zero}});
    nlohmann::json j{{"type", to_string(rs.type())},
                     {"rank", rs.rank()},
                     {"pi1", bp.pi1},
                     {"pi2", bp.pi2},
                     {"frobenius", false},
                     {"solution_kind", sol.kind == SolutionKind::NoSolution ? "none"
                                       : sol.kind == SolutionKind::Unique  ? "unique"
                                                                           : "positive-dimensional"},
                     {"constraints", jr}};
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Tsv) {
    std::cout << tsv_row({"i", "h(a_i)", "i_pi(i)", "pair_sum_zero"});
    for (const auto& r : rows)
      std::cout << tsv_row({std::to_string(r.i), r.fixed_value ? r.value.str() : "free",
                            std::to_string(r.partner), r.pair_sum_zero ? "yes" : "no"});
  } else {
    std::cout << "frobenius: no (|B| < |pi|)\n";
    for (const auto& r : rows) {
      std::cout << "h(a" << r.i << ") = " << (r.fixed_value ? r.value.str() : "free");
      if (r.partner != r.i && r.pair_sum_zero)
        std::cout << "   h(a" << r.i << ")+h(a" << r.partner << ") = 0";
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_frobenius_sweep(const Args& a) {
  const RootSystem rs = build_system(a.type_label, a.rank);
  const auto rows = frobenius_sweep(rs);
  const Format fmt = parse_format(a.format);
  int findings = 0;
  for (const auto& r : rows)
    if (r.frobenius && (!r.integral || !r.within_bound_m)) ++findings;

  if (fmt == Format::Json) {
    nlohmann::json jr = nlohmann::json::array();
    for (const auto& r : rows)
      if (r.frobenius) jr.push_back(to_json(r));
    nlohmann::json j{{"type", to_string(rs.type())},
                     {"rank", rs.rank()},
                     {"pairs_scanned", rows.size()},
                     {"findings", findings},
                     {"frobenius_rows", jr}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << tsv_row({"pi1", "pi2", "h", "integral", "max_abs", "m1", "m2", "within_m",
                          "within_safe"});
    for (const auto& r : rows) {
      if (!r.frobenius) continue;
      std::string h = "(";
      for (std::size_t i = 0; i < r.h_values.size(); ++i)
        h += (i ? "," : "") + r.h_values[i].str();
      h += ")";
      std::cout << tsv_row({"{" + join_ints(r.pi1) + "}", "{" + join_ints(r.pi2) + "}", h,
                            r.integral ? "yes" : "no", r.max_abs.str(), std::to_string(r.m1),
                            std::to_string(r.m2), r.within_bound_m ? "yes" : "no",
                            r.within_bound_safe ? "yes" : "no"});
    }
    if (fmt == Format::Text)
      std::cout << "findings (non-integral or over bound m): " << findings << "\n";
  }
  return findings > 0 ? 1 : 0;
}

int cmd_pi_z(const Args& a) {
  const RootSystem rs = build_system(a.type_label, a.rank);
  const HalfSet half = make_half_set(rs, a.half);
  const PiZ pz = compute_pi_z(rs, half);
  const Format fmt = parse_format(a.format);
  std::optional<SplitI> split;
  if (pz.admissible && rs.type() == Type::C) split = split_I(rs, half);

  if (fmt == Format::Json) {
    nlohmann::json j{{"type", to_string(rs.type())},
                     {"rank", rs.rank()},
                     {"half", to_json(half)},
                     {"pi_z", to_json(pz)}};
    if (split) {
      j["I_left"] = split->I_left;
      j["I_right"] = split->I_right;
      j["cascade_left"] = to_json(split->cascade_left);
      j["cascade_right"] = to_json(split->cascade_right);
    }
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Tsv) {
    std::cout << tsv_row({"admissible", pz.admissible ? "yes" : "no"});
    for (const auto& r : pz.roots) std::cout << tsv_row({"root", pretty_root(r)});
  } else {
    if (!pz.admissible) {
      std::cout << "inadmissible: " << pz.reason << "\n";
    } else {
      std::cout << "pi^Z:";
      for (const auto& r : pz.roots) std::cout << " " << pretty_root(r);
      std::cout << "\n";
      if (split) {
        std::cout << "I_left = {" << join_ints(split->I_left) << "}  I_right = {"
                  << join_ints(split->I_right) << "}\n";
      }
    }
  }
  return 0;
}

int cmd_reduce(const Args& a) {
  const RootSystem rs = build_system(a.type_label, a.rank);
  const HalfSet half = make_half_set(rs, a.half);
  const HalfSet red = reduce_half_set(rs, a.pi1, half);
  const Format fmt = parse_format(a.format);
  if (fmt == Format::Json) {
    nlohmann::json j{{"type", to_string(rs.type())},
                     {"rank", rs.rank()},
                     {"pi1", a.pi1},
                     {"half", to_json(half)},
                     {"reduced", to_json(red)}};
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Tsv) {
    std::cout << tsv_row({"half", "reduced"});
    std::cout << tsv_row({"{" + join_ints(half.indices) + "}", "{" + join_ints(red.indices) + "}"});
  } else {
    std::cout << "{" << join_ints(half.indices) << "} reduces to {" << join_ints(red.indices)
              << "}\n";
  }
  return 0;
}

int cmd_weights(const Args& a) {
  const RootSystem rs = build_system(a.type_label, a.rank);
  const HalfSet half = make_half_set(rs, a.half);
  const Format fmt = parse_format(a.format);

  std::vector<GeneratorInfo> gens;
  std::vector<RootVec> coroots;
  if (a.pi2.empty()) {
    // Parabolic mode: the full pipeline structures, h_Gamma included.
    const IntegralPairData data = make_integral_pair_data(rs, a.pi1, half);
    const SimpleSystem piz = SimpleSystem::make(rs, data.pi_z);
    const SimpleSystem pi1z = SimpleSystem::make(rs, data.pi1_z.roots);
    gens = generator_weights(rs, pi1z, piz, involution_orbits(rs, piz, pi1z, piz));
    coroots = h_gamma_basis(rs, a.pi1, half).coroot_basis;
    pairing_table(rs, gens, coroots, &pi1z);
  } else {
    // Biparabolic mode: sides are carved out of pi^Z by support, h_Gamma is
    // supplied by hand (--hgamma).
    const PiZ pz = compute_pi_z(rs, half);
    if (!pz.admissible) throw std::invalid_argument("half set inadmissible: " + pz.reason);
    const SimpleSystem piz = SimpleSystem::make(rs, pz.roots);
    const SimpleSystem p1 = SimpleSystem::make(rs, support_filter(pz.roots, a.pi1));
    const SimpleSystem p2 = SimpleSystem::make(rs, support_filter(pz.roots, a.pi2));
    gens = generator_weights(rs, p1, p2, involution_orbits(rs, piz, p1, p2));
    for (int i : a.hgamma) coroots.push_back(rs.simple_root(i));
    pairing_table(rs, gens, coroots);
  }

  if (fmt == Format::Json) {
    nlohmann::json jg = nlohmann::json::array();
    for (const auto& g : gens) jg.push_back(to_json(g));
    nlohmann::json j{{"type", to_string(rs.type())},
                     {"rank", rs.rank()},
                     {"pi1", a.pi1},
                     {"half", to_json(half)},
                     {"h_gamma", to_json(coroots)},
                     {"generators", jg}};
    if (!a.pi2.empty()) j["pi2"] = a.pi2;
    std::cout << j.dump(2) << "\n";
  } else {
    render_generators(std::cout, fmt, rs, gens, coroots);
  }
  return 0;
}

MonoidProblem parse_vectors(const std::string& spec) {
  MonoidProblem p;
  std::stringstream rows(spec);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<Int> v;
    std::stringstream entries(row);
    std::string e;
    while (std::getline(entries, e, ',')) {
      if (e.find_first_not_of(" +-0123456789") != std::string::npos)
        throw std::invalid_argument("bad integer '" + e + "' in --vectors");
      v.push_back(Int(e));
    }
    p.vectors.push_back(std::move(v));
  }
  if (p.vectors.empty()) throw std::invalid_argument("--vectors is empty");
  for (const auto& v : p.vectors)
    if (v.size() != p.vectors.front().size())
      throw std::invalid_argument("--vectors rows have unequal lengths");
  return p;
}

int cmd_hilbert(const Args& a) {
  const MonoidProblem problem = parse_vectors(a.vectors);
  const HilbertResult hr = hilbert_basis(problem, a.budget);
  const bool free = hr.budget_exceeded ? false : is_free_monoid(problem, hr.basis);
  const Format fmt = parse_format(a.format);
  if (fmt == Format::Json) {
    nlohmann::json j{{"k", problem.k()},
                     {"d", problem.d()},
                     {"basis", hr.basis},
                     {"budget_exceeded", hr.budget_exceeded},
                     {"free", free}};
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Tsv) {
    std::cout << tsv_row({"element"});
    for (const auto& m : hr.basis) {
      std::string s;
      for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
      std::cout << tsv_row({s});
    }
  } else {
    std::cout << "hilbert basis (" << hr.basis.size() << " elements"
              << (hr.budget_exceeded ? ", budget exceeded" : "") << "):\n";
    for (const auto& m : hr.basis) {
      std::cout << " ";
      for (int x : m) std::cout << " " << x;
      std::cout << "\n";
    }
    if (!hr.budget_exceeded) std::cout << "free: " << (free ? "yes" : "no") << "\n";
  }
  return hr.budget_exceeded ? 1 : 0;
}

int cmd_check(const Args& a) {
  const RootSystem rs = build_system(a.type_label, a.rank);
  const CheckReport rep = check_half_set(rs, a.pi1, make_half_set(rs, a.half));
  render_check(std::cout, parse_format(a.format), rep);
  return rep.integral_trivially || rep.excluded() ? 0 : 1;
}

int cmd_certify(const Args& a) {
  const RootSystem rs = build_system(a.type_label, a.rank);
  const int guard = a.guard > 0 ? a.guard : env_max_rank(8);
  const SweepReport sweep = parallel_sweep(rs, a.pi1, guard, a.jobs);
  const Format fmt = parse_format(a.format);
  if (fmt == Format::Json) {
    nlohmann::json j = to_json(sweep);
    j["type"] = to_string(rs.type());
    j["rank"] = rs.rank();
    j["pi1"] = a.pi1;
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Tsv) {
    std::cout << tsv_row({"representative", "members", "verdict"});
    for (const auto& c : sweep.cases)
      std::cout << tsv_row({"{" + join_ints(c.representative.indices) + "}",
                            std::to_string(c.members.size()), c.report.verdict_string()});
  } else {
    std::cout << (sweep.certified ? "certified" : "NOT certified") << "  ("
              << sweep.total_half_sets << " half sets, " << sweep.cases.size()
              << " reduced classes)\n";
    for (const auto& c : sweep.cases) {
      std::cout << "  {" << join_ints(c.representative.indices) << "}  members "
                << c.members.size() << "  " << c.report.verdict_string() << "\n";
    }
    for (auto idx : sweep.inconclusive_cases) {
      std::cout << "finding: inconclusive class {"
                << join_ints(sweep.cases[idx].representative.indices) << "}\n";
      render_check(std::cout, Format::Text, sweep.cases[idx].report);
    }
  }
  return sweep.certified ? 0 : 1;
}

int cmd_shortcut(const Args& a) {
  const RootSystem rs = build_system(a.type_label, a.rank);
  const ShortcutReport rep = type_a_shortcut(rs, a.pi1, a.pi2);
  const Format fmt = parse_format(a.format);
  if (fmt == Format::Json) {
    nlohmann::json j{{"type", to_string(rs.type())},
                     {"rank", rs.rank()},
                     {"pi1", a.pi1},
                     {"pi2", a.pi2},
                     {"applicable", rep.applicable},
                     {"detail", rep.detail}};
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Tsv) {
    std::cout << tsv_row({"applicable", "detail"});
    std::cout << tsv_row({rep.applicable ? "yes" : "no", rep.detail});
  } else {
    std::cout << (rep.applicable ? "integrality asserted" : "not applicable") << ": "
              << rep.detail << "\n";
  }
  return rep.applicable ? 0 : 1;
}

} // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"cascade-kit: exact root-system combinatorics for adapted pairs"};
  app.require_subcommand(1);

  Args a;
  auto add_common = [&](CLI::App* sub, bool needs_rank = true) {
    sub->add_option("type", a.type_label, "type label (A,B,C,D,E6,E7,E8,F4,G2)")->required();
    if (needs_rank) sub->add_option("rank", a.rank, "rank (optional for exceptional labels)");
    sub->add_option("--output", a.format, "text|json|tsv")->capture_default_str();
  };

  int code = 0;
  auto* cascade = app.add_subcommand("cascade", "Kostant cascade of pi or a subset");
  add_common(cascade);
  cascade->add_option("--subset", a.subset, "simple-root indices")->delimiter(',');
  cascade->callback([&] { code = cmd_cascade(a); });

  auto* frob = app.add_subcommand("frobenius", "adapted-pair h for a biparabolic");
  add_common(frob);
  frob->add_option("--pi1", a.pi1, "pi_1 simple indices")->delimiter(',');
  frob->add_option("--pi2", a.pi2, "pi_2 simple indices (default: all of pi)")->delimiter(',');
  frob->add_flag("--borel", a.borel, "pi_1 empty, pi_2 = pi");
  frob->callback([&] { code = cmd_frobenius(a); });

  auto* fsweep = app.add_subcommand("frobenius-sweep", "scan all (pi_1, pi_2) pairs");
  add_common(fsweep);
  fsweep->callback([&] { code = cmd_frobenius_sweep(a); });

  auto* piz = app.add_subcommand("pi-z", "regular integral pair pi^Z from a half set");
  add_common(piz);
  piz->add_option("--half", a.half, "half-set indices")->delimiter(',');
  piz->callback([&] { code = cmd_pi_z(a); });

  auto* reduce = app.add_subcommand("reduce", "canonical half-set representative");
  add_common(reduce);
  reduce->add_option("--pi1", a.pi1, "pi_1 simple indices")->delimiter(',');
  reduce->add_option("--half", a.half, "half-set indices")->delimiter(',')->required();
  reduce->callback([&] { code = cmd_reduce(a); });

  auto* weights = app.add_subcommand("weights", "semi-invariant generator weight table");
  add_common(weights);
  weights->add_option("--pi1", a.pi1, "pi_1 simple indices")->delimiter(',');
  weights->add_option("--pi2", a.pi2, "pi_2 (switches to biparabolic mode)")->delimiter(',');
  weights->add_option("--half", a.half, "half-set indices")->delimiter(',')->required();
  weights->add_option("--hgamma", a.hgamma, "coroot indices for the pairing columns")
      ->delimiter(',');
  weights->callback([&] { code = cmd_weights(a); });

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of m·A = 0 over N^k");
  hilbert->add_option("--vectors", a.vectors, "rows 'a,b;c,d;...' of the weight vectors")
      ->required();
  hilbert->add_option("--budget", a.budget, "degree cap")->capture_default_str();
  hilbert->add_option("--output", a.format, "text|json|tsv")->capture_default_str();
  hilbert->callback([&] { code = cmd_hilbert(a); });

  auto* check = app.add_subcommand("check", "integrality-exclusion pipeline for one half set");
  add_common(check);
  check->add_option("--pi1", a.pi1, "pi_1 simple indices")->delimiter(',');
  check->add_option("--half", a.half, "half-set indices")->delimiter(',')->required();
  check->callback([&] { code = cmd_check(a); });

  auto* certify = app.add_subcommand("certify", "sweep all half sets of a type-C parabolic");
  add_common(certify);
  certify->add_option("--pi1", a.pi1, "pi_1 simple indices")->delimiter(',');
  certify->add_option("--guard", a.guard, "max rank guard (or CASCADE_KIT_MAX_RANK)");
  certify->add_option("--jobs", a.jobs, "worker pool size for the sweep")->capture_default_str();
  certify->callback([&] { code = cmd_certify(a); });

  auto* shortcut = app.add_subcommand("shortcut", "type-A integrality shortcut");
  add_common(shortcut);
  shortcut->add_option("--pi1", a.pi1, "pi_1 simple indices")->delimiter(',')->required();
  shortcut->add_option("--pi2", a.pi2, "pi_2 simple indices")->delimiter(',')->required();
  shortcut->callback([&] { code = cmd_shortcut(a); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

} // namespace cascade_kit::cli
