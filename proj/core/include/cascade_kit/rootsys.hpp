#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cascade_kit/arith.hpp"

namespace cascade_kit {

enum class Type { A, B, C, D, E6, E7, E8, F4, G2 };

std::string to_string(Type t);
std::optional<Type> parse_type(std::string_view s);

// A root (or any integer vector) over the simple-root basis. Roots are kept
// in this one representation for every type; the ε-basis formulas of the
// classical families are translated where they are used.
struct RootVec {
  std::vector<int> c;

  auto operator<=>(const RootVec&) const = default;

  RootVec operator-() const;
  RootVec& operator+=(const RootVec& o);
  RootVec& operator-=(const RootVec& o);
  friend RootVec operator+(RootVec a, const RootVec& b) { return a += b; }
  friend RootVec operator-(RootVec a, const RootVec& b) { return a -= b; }

  int height() const; // sum of coefficients, o(γ)
  // Smallest index (1-based) with a nonzero coefficient; 0 for the zero vector.
  int support_min() const;
};

// Exact-rational vector over the simple-root basis (weights, h-values, ϖ's).
struct WeightVec {
  std::vector<Rat> c;

  bool operator==(const WeightVec&) const = default;

  WeightVec& operator+=(const WeightVec& o);
  WeightVec& operator-=(const WeightVec& o);
  WeightVec& operator*=(const Rat& s);
  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
  friend WeightVec operator*(const Rat& s, WeightVec a) { return a *= s; }
};

WeightVec to_weight(const RootVec& v);

// Deterministic ordering used wherever sub-systems and generators need a
// canonical sequence: first by leading support index, then lexicographically
// on the coefficient vector. For simple roots this is the Bourbaki order.
bool root_order(const RootVec& a, const RootVec& b);

class RootSystem {
public:
  // Legal combinations: A n≥1, B n≥2, C n≥2, D n≥4, E6/E7/E8/F4/G2 with
  // their fixed ranks. Throws std::invalid_argument otherwise.
  static RootSystem build(Type type, int rank);

  Type type() const { return type_; }
  int rank() const { return n_; }

  // cartan()[i][j] = α_{i+1}^∨(α_{j+1})  (0-based storage, Bourbaki numbering)
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  // positive integers d_i with d_i·cartan[i][j] symmetric; (α_i, α_j) = d_i·C[i][j]
  const std::vector<int>& sym_diag() const { return d_; }

  const std::vector<RootVec>& positive_roots() const { return positive_; }
  bool is_positive_root(const RootVec& v) const;
  bool is_root(const RootVec& v) const;

  RootVec simple_root(int i) const; // 1-based

  // The invariant bilinear form (γ, δ); integer-valued on root-lattice vectors.
  Int bilinear(const RootVec& a, const RootVec& b) const;
  Rat bilinear(const RootVec& a, const WeightVec& b) const;
  Int norm2(const RootVec& a) const { return bilinear(a, a); }

  // γ^∨(λ) = 2(γ,λ)/(γ,γ). γ must be a root (throws std::invalid_argument).
  Rat coroot_pairing(const RootVec& gamma, const WeightVec& lambda) const;
  Int coroot_pairing(const RootVec& gamma, const RootVec& delta) const;

  // s_β(γ) = γ − β^∨(γ)·β
  RootVec reflect(const RootVec& beta, const RootVec& gamma) const;

  // Positive roots whose support lies in the given set of simple indices.
  std::vector<RootVec> positive_roots_supported(const std::vector<int>& simple_indices) const;

private:
  RootSystem() = default;

  Type type_{};
  int n_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<RootVec> positive_;
  std::set<std::vector<int>> positive_set_;
};

// A simple system inside an ambient root system: pairwise non-positive
// pairings and linear independence are enforced at construction.
struct SimpleSystem {
  std::vector<RootVec> elements;
  const RootSystem* ambient = nullptr;

  static SimpleSystem make(const RootSystem& rs, std::vector<RootVec> elems);

  std::size_t size() const { return elements.size(); }
  bool contains(const RootVec& v) const;
  std::optional<std::size_t> index_of(const RootVec& v) const;
};

// Sub-simple-system spanned by a set of simple-root indices (1-based, sorted).
SimpleSystem sub_simple_system(const RootSystem& rs, const std::vector<int>& simple_indices);

// Partition into maximal connected blocks under (α,β) ≠ 0. Components are
// ordered by their root_order-least element, elements within by root_order.
std::vector<std::vector<RootVec>> connected_components(const RootSystem& rs,
                                                       const std::vector<RootVec>& roots);

// i_{π'} := −w_{π'}, computed component-by-component as the product of the
// Kostant cascade reflections. Returned as a permutation of ss.elements
// (image index per position).
std::vector<std::size_t> diagram_involution(const RootSystem& rs, const SimpleSystem& ss);

} // namespace cascade_kit
