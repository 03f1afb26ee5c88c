#include "cascade_kit/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <stdexcept>

#include "cascade_kit/cascade.hpp"
#include "cascade_kit/linalg.hpp"

namespace cascade_kit {

std::string to_string(Type t) {
  switch (t) {
    case Type::A: return "A";
    case Type::B: return "B";
    case Type::C: return "C";
    case Type::D: return "D";
    case Type::E6: return "E6";
    case Type::E7: return "E7";
    case Type::E8: return "E8";
    case Type::F4: return "F4";
    case Type::G2: return "G2";
  }
  return "?";
}

std::optional<Type> parse_type(std::string_view s) {
  std::string u(s);
  for (char& c : u) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (u == "A") return Type::A;
  if (u == "B") return Type::B;
  if (u == "C") return Type::C;
  if (u == "D") return Type::D;
  if (u == "E6") return Type::E6;
  if (u == "E7") return Type::E7;
  if (u == "E8") return Type::E8;
  if (u == "F4") return Type::F4;
  if (u == "G2") return Type::G2;
  return std::nullopt;
}

RootVec RootVec::operator-() const {
  RootVec r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

RootVec& RootVec::operator+=(const RootVec& o) {
  assert(c.size() == o.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

RootVec& RootVec::operator-=(const RootVec& o) {
  assert(c.size() == o.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

int RootVec::height() const {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

int RootVec::support_min() const {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return static_cast<int>(i) + 1;
  return 0;
}

WeightVec& WeightVec::operator+=(const WeightVec& o) {
  assert(c.size() == o.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

WeightVec& WeightVec::operator-=(const WeightVec& o) {
  assert(c.size() == o.c.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

WeightVec& WeightVec::operator*=(const Rat& s) {
  for (auto& x : c) x *= s;
  return *this;
}

WeightVec to_weight(const RootVec& v) {
  WeightVec w;
  w.c.assign(v.c.begin(), v.c.end());
  return w;
}

bool root_order(const RootVec& a, const RootVec& b) {
  const int sa = a.support_min(), sb = b.support_min();
  if (sa != sb) return sa < sb;
  return a.c < b.c;
}

namespace {

struct Edge {
  int a, b;     // 1-based nodes
  int ab, ba;   // C[a][b], C[b][a]
};

void fill_chain(std::vector<Edge>& edges, int lo, int hi) {
  for (int i = lo; i < hi; ++i) edges.push_back({i, i + 1, -1, -1});
}

} // namespace

RootSystem RootSystem::build(Type type, int rank) {
  auto bad = [&](const char* why) {
    throw std::invalid_argument("build_root_system(" + to_string(type) + ", " +
                                std::to_string(rank) + "): " + why);
  };

  const int n = rank;
  std::vector<Edge> edges;
  std::vector<int> d(std::max(n, 0), 1);
  std::size_t expected_count = 0;

  switch (type) {
    case Type::A:
      if (n < 1) bad("type A needs rank ≥ 1");
      fill_chain(edges, 1, n);
      expected_count = std::size_t(n) * (n + 1) / 2;
      break;
    case Type::B:
      if (n < 2) bad("type B needs rank ≥ 2");
      fill_chain(edges, 1, n - 1);
      edges.push_back({n - 1, n, -1, -2}); // α_n short
      for (int i = 0; i < n - 1; ++i) d[i] = 2;
      d[n - 1] = 1;
      expected_count = std::size_t(n) * n;
      break;
    case Type::C:
      if (n < 2) bad("type C needs rank ≥ 2");
      fill_chain(edges, 1, n - 1);
      edges.push_back({n - 1, n, -2, -1}); // α_n long
      d[n - 1] = 2;
      expected_count = std::size_t(n) * n;
      break;
    case Type::D:
      if (n < 4) bad("type D needs rank ≥ 4");
      fill_chain(edges, 1, n - 1);
      edges.push_back({n - 2, n, -1, -1}); // fork: α_{n-1}, α_n both meet α_{n-2}
      expected_count = std::size_t(n) * (n - 1);
      break;
    case Type::E6:
    case Type::E7:
    case Type::E8: {
      const int want = type == Type::E6 ? 6 : type == Type::E7 ? 7 : 8;
      if (n != want) bad("exceptional type has a fixed rank");
      edges.push_back({1, 3, -1, -1});
      edges.push_back({2, 4, -1, -1});
      fill_chain(edges, 3, n);
      expected_count = type == Type::E6 ? 36 : type == Type::E7 ? 63 : 120;
      break;
    }
    case Type::F4:
      if (n != 4) bad("F4 has rank 4");
      edges.push_back({1, 2, -1, -1});
      edges.push_back({2, 3, -1, -2}); // α1, α2 long; α3, α4 short
      edges.push_back({3, 4, -1, -1});
      d = {2, 2, 1, 1};
      expected_count = 24;
      break;
    case Type::G2:
      if (n != 2) bad("G2 has rank 2");
      edges.push_back({1, 2, -3, -1}); // α1 short, α2 long
      d = {1, 3};
      expected_count = 6;
      break;
  }

  RootSystem rs;
  rs.type_ = type;
  rs.n_ = n;
  rs.d_ = d;
  rs.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) rs.cartan_[i][i] = 2;
  for (const auto& e : edges) {
    rs.cartan_[e.a - 1][e.b - 1] = e.ab;
    rs.cartan_[e.b - 1][e.a - 1] = e.ba;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (Int(rs.d_[i]) * rs.cartan_[i][j] != Int(rs.d_[j]) * rs.cartan_[j][i])
        bad("sym_diag does not symmetrize the Cartan matrix");

  // Enumerate Δ⁺ by height. γ + α_i is a root iff the α_i-string through γ
  // satisfies q − α_i^∨(γ) ≥ 1, where q is the largest k with γ − kα_i a root;
  // all roots of smaller height are already known, so q is a lookup.
  std::vector<RootVec> frontier;
  for (int i = 1; i <= n; ++i) {
    RootVec a;
    a.c.assign(n, 0);
    a.c[i - 1] = 1;
    frontier.push_back(a);
    rs.positive_set_.insert(a.c);
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const auto& g : frontier) {
      for (int i = 0; i < n; ++i) {
        RootVec cand = g;
        cand.c[i] += 1;
        if (rs.positive_set_.count(cand.c)) continue;
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += rs.cartan_[i][j] * g.c[j];
        int q = 0;
        RootVec down = g;
        for (;;) {
          down.c[i] -= 1;
          bool nonneg = std::all_of(down.c.begin(), down.c.end(), [](int x) { return x >= 0; });
          if (!nonneg || !rs.positive_set_.count(down.c)) break;
          ++q;
        }
        if (q - pairing >= 1) {
          rs.positive_set_.insert(cand.c);
          next.push_back(std::move(cand));
        }
      }
    }
    frontier = std::move(next);
  }

  rs.positive_.reserve(rs.positive_set_.size());
  for (const auto& c : rs.positive_set_) rs.positive_.push_back(RootVec{c});
  std::sort(rs.positive_.begin(), rs.positive_.end(),
            [](const RootVec& a, const RootVec& b) { return a.c < b.c; });

  if (rs.positive_.size() != expected_count)
    throw std::logic_error("root enumeration count mismatch for " + to_string(type));
  return rs;
}

bool RootSystem::is_positive_root(const RootVec& v) const {
  return positive_set_.count(v.c) != 0;
}

bool RootSystem::is_root(const RootVec& v) const {
  if (is_positive_root(v)) return true;
  return positive_set_.count((-v).c) != 0;
}

RootVec RootSystem::simple_root(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("simple root index out of range");
  RootVec a;
  a.c.assign(n_, 0);
  a.c[i - 1] = 1;
  return a;
}

Int RootSystem::bilinear(const RootVec& a, const RootVec& b) const {
  Int s = 0;
  for (int i = 0; i < n_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (b.c[j] == 0) continue;
      s += Int(a.c[i]) * b.c[j] * d_[i] * cartan_[i][j];
    }
  }
  return s;
}

Rat RootSystem::bilinear(const RootVec& a, const WeightVec& b) const {
  Rat s = 0;
  for (int i = 0; i < n_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (b.c[j] == 0) continue;
      s += Rat(Int(a.c[i]) * d_[i] * cartan_[i][j]) * b.c[j];
    }
  }
  return s;
}

Rat RootSystem::coroot_pairing(const RootVec& gamma, const WeightVec& lambda) const {
  if (!is_root(gamma)) throw std::invalid_argument("coroot_pairing: γ is not a root");
  return Rat(2) * bilinear(gamma, lambda) / Rat(norm2(gamma));
}

Int RootSystem::coroot_pairing(const RootVec& gamma, const RootVec& delta) const {
  if (!is_root(gamma)) throw std::invalid_argument("coroot_pairing: γ is not a root");
  const Int num = Int(2) * bilinear(gamma, delta);
  const Int den = norm2(gamma);
  assert(num % den == 0);
  return num / den;
}

RootVec RootSystem::reflect(const RootVec& beta, const RootVec& gamma) const {
  const Int k = coroot_pairing(beta, gamma);
  RootVec r = gamma;
  const long long kk = k.convert_to<long long>();
  for (int i = 0; i < n_; ++i) r.c[i] -= static_cast<int>(kk) * beta.c[i];
  return r;
}

std::vector<RootVec> RootSystem::positive_roots_supported(const std::vector<int>& simple_indices) const {
  std::vector<bool> in(n_ + 1, false);
  for (int i : simple_indices) {
    if (i < 1 || i > n_) throw std::invalid_argument("simple index out of range");
    in[i] = true;
  }
  std::vector<RootVec> out;
  for (const auto& g : positive_) {
    bool ok = true;
    for (int i = 0; i < n_; ++i)
      if (g.c[i] != 0 && !in[i + 1]) { ok = false; break; }
    if (ok) out.push_back(g);
  }
  return out;
}

SimpleSystem SimpleSystem::make(const RootSystem& rs, std::vector<RootVec> elems) {
  for (const auto& e : elems)
    if (!rs.is_root(e)) throw std::invalid_argument("SimpleSystem: element is not a root");
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      if (rs.coroot_pairing(elems[i], elems[j]) > 0)
        throw std::invalid_argument("SimpleSystem: positively paired pair");
    }
  linalg::RatMat m(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    m[i].assign(elems[i].c.begin(), elems[i].c.end());
  if (linalg::rank(m) != elems.size())
    throw std::invalid_argument("SimpleSystem: elements are linearly dependent");
  SimpleSystem ss;
  ss.elements = std::move(elems);
  ss.ambient = &rs;
  return ss;
}

bool SimpleSystem::contains(const RootVec& v) const {
  return std::find(elements.begin(), elements.end(), v) != elements.end();
}

std::optional<std::size_t> SimpleSystem::index_of(const RootVec& v) const {
  auto it = std::find(elements.begin(), elements.end(), v);
  if (it == elements.end()) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

SimpleSystem sub_simple_system(const RootSystem& rs, const std::vector<int>& simple_indices) {
  std::vector<RootVec> elems;
  elems.reserve(simple_indices.size());
  for (int i : simple_indices) elems.push_back(rs.simple_root(i));
  return SimpleSystem::make(rs, std::move(elems));
}

std::vector<std::vector<RootVec>> connected_components(const RootSystem& rs,
                                                       const std::vector<RootVec>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j])
        throw std::invalid_argument("connected_components: duplicate root");

  const std::size_t n = roots.size();
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (comp[v] != -1) continue;
        if (rs.bilinear(roots[u], roots[v]) != 0) {
          comp[v] = nc;
          stack.push_back(v);
        }
      }
    }
    ++nc;
  }

  std::vector<std::vector<RootVec>> blocks(nc);
  for (std::size_t i = 0; i < n; ++i) blocks[comp[i]].push_back(roots[i]);
  for (auto& b : blocks) std::sort(b.begin(), b.end(), root_order);
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return root_order(a.front(), b.front()); });
  return blocks;
}

std::vector<std::size_t> diagram_involution(const RootSystem& rs, const SimpleSystem& ss) {
  // −w_{π'} with w_{π'} realized as the (commuting) product of the cascade
  // reflections of each connected component.
  const Cascade casc = kostant_cascade(rs, ss);
  std::vector<std::size_t> perm(ss.size());
  for (std::size_t k = 0; k < ss.size(); ++k) {
    RootVec img = ss.elements[k];
    for (const auto& beta : casc.ordered_roots) img = rs.reflect(beta, img);
    img = -img;
    auto idx = ss.index_of(img);
    if (!idx)
      throw std::logic_error("diagram_involution: −w_π did not permute the simple system");
    perm[k] = *idx;
  }
  for (std::size_t k = 0; k < ss.size(); ++k)
    if (perm[perm[k]] != k)
      throw std::logic_error("diagram_involution: result is not an involution");
  return perm;
}

} // namespace cascade_kit
