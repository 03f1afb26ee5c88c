#pragma once

#include <string>
#include <vector>

#include "cascade_kit/checker.hpp"
#include "cascade_kit/frobenius.hpp"
#include "json.hpp"

namespace cascade_kit::cli {

enum class Format { Text, Json, Tsv };
Format parse_format(const std::string& s); // throws std::invalid_argument

// "2a1+2a2+a3" / "-a2" / "0" — compact sum over the simple-root basis.
std::string pretty_root(const RootVec& v);
std::string pretty_weight(const WeightVec& v);
// "(2,2,1)" exact coefficient tuple (roots get integers, weights rationals).
std::string tuple_root(const RootVec& v);
std::string tuple_weight(const WeightVec& v);
std::string join_ints(const std::vector<int>& v, char sep = ',');

// "C6", "E7" — exceptional labels already carry their rank.
inline std::string type_rank_label(Type t, int rank) {
  std::string s = to_string(t);
  if (s.size() == 1) s += std::to_string(rank);
  return s;
}

nlohmann::json to_json(const RootVec& v);
nlohmann::json to_json(const WeightVec& v);
nlohmann::json to_json(const std::vector<RootVec>& v);
nlohmann::json to_json(const HalfSet& h);
nlohmann::json to_json(const PiZ& p);
nlohmann::json to_json(const GeneratorInfo& g);
nlohmann::json to_json(const CountReport& c);
nlohmann::json to_json(const FactorizationReport& f);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const SweepReport& r);
nlohmann::json to_json(const AdaptedH& h);
nlohmann::json to_json(const SweepRow& r);

// One TSV row; fields are joined with tabs, the line is newline-terminated.
std::string tsv_row(const std::vector<std::string>& fields);

} // namespace cascade_kit::cli
