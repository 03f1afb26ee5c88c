#include "render.hpp"

#include <sstream>
#include <stdexcept>

namespace cascade_kit::cli {

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  throw std::invalid_argument("unknown output format '" + s + "' (text|json|tsv)");
}

std::string pretty_root(const RootVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.c.size(); ++i) {
    const int c = v.c[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    const int a = c > 0 ? c : -c;
    if (a != 1) out += std::to_string(a);
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string pretty_weight(const WeightVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.c.size(); ++i) {
    const Rat& c = v.c[i];
    if (c == 0) continue;
    const Rat a = c > 0 ? c : Rat(-c);
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    if (a != 1) out += a.str();
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string tuple_root(const RootVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v.c[i]);
  }
  return s + ")";
}

std::string tuple_weight(const WeightVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.c.size(); ++i) {
    if (i) s += ",";
    s += v.c[i].str();
  }
  return s + ")";
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

nlohmann::json to_json(const RootVec& v) { return nlohmann::json(v.c); }

nlohmann::json to_json(const WeightVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Rat& c : v.c) a.push_back(c.str());
  return a;
}

nlohmann::json to_json(const std::vector<RootVec>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

nlohmann::json to_json(const HalfSet& h) { return nlohmann::json(h.indices); }

nlohmann::json to_json(const PiZ& p) {
  return {{"admissible", p.admissible}, {"reason", p.reason}, {"roots", to_json(p.roots)}};
}

nlohmann::json to_json(const GeneratorInfo& g) {
  nlohmann::json pairing = nlohmann::json::array();
  for (const Int& x : g.pairing_vector) pairing.push_back(x.str());
  return {{"label", g.label},
          {"orbit", to_json(g.orbit)},
          {"weight", to_json(g.weight)},
          {"pairing", pairing}};
}

nlohmann::json to_json(const CountReport& c) {
  return {{"rl", c.rl},
          {"rl_z", c.rl_z},
          {"dim_h_gamma", c.dim_h_gamma},
          {"rl_equal_shortcut", c.rl_equal_shortcut},
          {"count_fail", c.count_fail}};
}

nlohmann::json to_json(const FactorizationReport& f) {
  nlohmann::json traces = nlohmann::json::array();
  for (const auto& t : f.traces)
    traces.push_back({{"q_indices", t.q_indices}, {"violating_element", t.violating_element}});
  return {{"pass", f.pass}, {"traces", traces}};
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : r.gens) gens.push_back(to_json(g));
  nlohmann::json j{{"type", to_string(r.type)},
                   {"rank", r.rank},
                   {"pi1", r.pi1},
                   {"requested_half", to_json(r.requested_half)},
                   {"reduced_half", to_json(r.reduced_half)},
                   {"verdict", r.verdict_string()},
                   {"pi_z", to_json(r.pi_z)},
                   {"pi1_z", to_json(r.pi1_z)},
                   {"h_gamma", to_json(r.hg.coroot_basis)},
                   {"counts", to_json(r.counts)},
                   {"generators", gens},
                   {"hilbert_basis", r.hilbert},
                   {"hilbert_budget_exceeded", r.hilbert_budget_exceeded},
                   {"monoid_free", r.monoid_free},
                   {"factorization", to_json(r.fact)},
                   {"notes", r.notes}};
  return j;
}

nlohmann::json to_json(const SweepReport& r) {
  nlohmann::json cases = nlohmann::json::array();
  for (const auto& c : r.cases) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : c.members) members.push_back(to_json(m));
    cases.push_back({{"representative", to_json(c.representative)},
                     {"members", members},
                     {"report", to_json(c.report)}});
  }
  return {{"certified", r.certified},
          {"total_half_sets", r.total_half_sets},
          {"inconclusive_cases", r.inconclusive_cases},
          {"cases", cases}};
}

nlohmann::json to_json(const AdaptedH& h) {
  nlohmann::json coroots = nlohmann::json::array(), values = nlohmann::json::array();
  for (const Rat& c : h.coroot_coeffs) coroots.push_back(c.str());
  for (const Rat& c : h.values_on_pi) values.push_back(c.str());
  return {{"coroot_coeffs", coroots}, {"values_on_pi", values}};
}

nlohmann::json to_json(const SweepRow& r) {
  nlohmann::json values = nlohmann::json::array();
  for (const Rat& c : r.h_values) values.push_back(c.str());
  return {{"pi1", r.pi1},
          {"pi2", r.pi2},
          {"frobenius", r.frobenius},
          {"h_values", values},
          {"integral", r.integral},
          {"max_abs", r.max_abs.str()},
          {"m1", r.m1},
          {"m2", r.m2},
          {"within_bound_m", r.within_bound_m},
          {"within_bound_safe", r.within_bound_safe}};
}

std::string tsv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += '\t';
    line += fields[i];
  }
  line += '\n';
  return line;
}

} // namespace cascade_kit::cli
