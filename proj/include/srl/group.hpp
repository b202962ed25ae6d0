#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "srl/base.hpp"

namespace srl {

// Finite group as an explicit multiplication table.  Elements are dense
// indices 0..order-1 and index 0 is always the identity.
class Group {
 public:
  Group() = default;
  Group(std::vector<std::vector<int>> mul, std::string label)
      : mul_(std::move(mul)), label_(std::move(label)) {
    const int n = static_cast<int>(mul_.size());
    if (n == 0) throw std::invalid_argument("Group: empty table");
    for (const auto& row : mul_) {
      if (static_cast<int>(row.size()) != n)
        throw std::invalid_argument("Group: table not square");
      for (int v : row)
        if (v < 0 || v >= n)
          throw std::invalid_argument("Group: table entry out of range");
    }
    for (int x = 0; x < n; ++x)
      if (mul_[0][x] != x || mul_[x][0] != x)
        throw std::invalid_argument("Group: index 0 is not an identity");
    inv_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        if (mul_[x][y] == 0) {
          if (mul_[y][x] != 0)
            throw std::invalid_argument("Group: one-sided inverse");
          inv_[x] = y;
          break;
        }
      if (inv_[x] < 0) throw std::invalid_argument("Group: missing inverse");
    }
  }

  int order() const { return static_cast<int>(mul_.size()); }
  int mul(int x, int y) const { return mul_[x][y]; }
  int inv(int x) const { return inv_[x]; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  // Exhaustive associativity check; O(n^3), intended for tests and
  // post-construction validation of externally supplied tables.
  bool associative() const {
    const int n = order();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (mul_[mul_[x][y]][z] != mul_[x][mul_[y][z]]) return false;
    return true;
  }

  int element_order(int x) const {
    int o = 1;
    for (int y = x; y != 0; y = mul_[y][x]) ++o;
    return o;
  }

  bool abelian() const {
    const int n = order();
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (mul_[x][y] != mul_[y][x]) return false;
    return true;
  }

  std::vector<int> center() const {
    std::vector<int> z;
    const int n = order();
    for (int x = 0; x < n; ++x) {
      bool central = true;
      for (int y = 0; y < n && central; ++y) central = mul_[x][y] == mul_[y][x];
      if (central) z.push_back(x);
    }
    return z;
  }

  // Multiset of element orders, as order -> multiplicity.
  std::map<int, int> order_census() const {
    std::map<int, int> c;
    for (int x = 0; x < order(); ++x) ++c[element_order(x)];
    return c;
  }

  int power(int x, long long e) const {
    const int o = element_order(x);
    long long r = e % o;
    if (r < 0) r += o;
    int acc = 0;
    for (long long i = 0; i < r; ++i) acc = mul_[acc][x];
    return acc;
  }

  bool operator==(const Group& other) const { return mul_ == other.mul_; }

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::string label_;
};

inline Group cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return Group(std::move(mul), "C" + std::to_string(n));
}

// Dihedral group of order n.  Indices 0..m-1 are the rotations r^i
// (m = n/2), m+i is the reflection r^i s, with s r s = r^{-1}.
inline Group dihedral(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("dihedral: order must be even and >= 4");
  const int m = n / 2;
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      mul[i][j] = (i + j) % m;
      mul[i][m + j] = m + (i + j) % m;
      mul[m + i][j] = m + ((i - j) % m + m) % m;
      mul[m + i][m + j] = ((i - j) % m + m) % m;
    }
  return Group(std::move(mul), "D" + std::to_string(n));
}

// Quaternion group <a,b : a^4 = e, a^2 = b^2, a^b = a^{-1}>.
// Index layout: i + 4j encodes a^i b^j, so e,a,a2,a3,b,ab,a2b,a3b.
inline Group quaternion8() {
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          int ri, rj;
          if (j == 0) {
            ri = (i + k) % 4;
            rj = l;
          } else {
            // b a^k = a^{-k} b, and b^2 = a^2
            ri = ((i - k + (l == 1 ? 2 : 0)) % 4 + 4) % 4;
            rj = 1 - l;
          }
          mul[i + 4 * j][k + 4 * l] = ri + 4 * rj;
        }
  return Group(std::move(mul), "Q8");
}

inline Group direct_product(const Group& g1, const Group& g2) {
  const long long n = static_cast<long long>(g1.order()) * g2.order();
  if (n > limits().max_product_order)
    throw cap_exceeded("direct_product: order " + std::to_string(n) +
                       " exceeds cap " + std::to_string(limits().max_product_order));
  const int n1 = g1.order(), n2 = g2.order();
  std::vector<std::vector<int>> mul(n1 * n2, std::vector<int>(n1 * n2));
  for (int i1 = 0; i1 < n1; ++i1)
    for (int j1 = 0; j1 < n2; ++j1)
      for (int i2 = 0; i2 < n1; ++i2)
        for (int j2 = 0; j2 < n2; ++j2)
          mul[i1 * n2 + j1][i2 * n2 + j2] =
              g1.mul(i1, i2) * n2 + g2.mul(j1, j2);
  return Group(std::move(mul), g1.label() + "x" + g2.label());
}

// Subgroup as a sorted element set of a parent group.  Plain data; the
// parent is passed explicitly to the free functions below.
struct Subgroup {
  std::vector<int> elements;  // sorted, contains 0

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
  }
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool operator<(const Subgroup& o) const { return elements < o.elements; }
};

inline Subgroup subgroup_generated(const Group& g, const std::vector<int>& gens) {
  std::set<int> seen{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gens) {
        if (s < 0 || s >= g.order())
          throw std::invalid_argument("subgroup_generated: element out of range");
        int y = g.mul(x, s);
        if (seen.insert(y).second) next.push_back(y);
        y = g.mul(x, g.inv(s));
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return Subgroup{std::vector<int>(seen.begin(), seen.end())};
}

inline bool is_subgroup(const Group& g, const Subgroup& h) {
  if (h.elements.empty() || h.elements[0] != 0) return false;
  for (int x : h.elements) {
    if (!h.contains(g.inv(x))) return false;
    for (int y : h.elements)
      if (!h.contains(g.mul(x, y))) return false;
  }
  return true;
}

inline bool is_normal(const Group& g, const Subgroup& n, int* witness = nullptr) {
  for (int x = 0; x < g.order(); ++x)
    for (int h : n.elements)
      if (!n.contains(g.mul(g.mul(x, h), g.inv(x)))) {
        if (witness) *witness = x;
        return false;
      }
  return true;
}

// Section B/A: quotient group together with the projection B -> B/A.
// Cosets are indexed by their smallest element, in increasing order, so the
// coset of the identity is always quotient element 0.
struct Section {
  Subgroup B;
  Subgroup A;                 // normal in B
  Group quotient;
  std::vector<int> projection;  // parent element -> quotient element; -1 outside B
  std::vector<std::vector<int>> cosets;  // quotient element -> parent elements

  int project(int x) const {
    int q = projection[x];
    if (q < 0) throw std::invalid_argument("Section: element outside B");
    return q;
  }
};

inline Section make_section(const Group& g, const Subgroup& b, const Subgroup& a) {
  for (int x : a.elements)
    if (!b.contains(x)) throw std::invalid_argument("make_section: A not inside B");
  if (!is_subgroup(g, b) || !is_subgroup(g, a))
    throw std::invalid_argument("make_section: not subgroups");
  // normality of A in B
  for (int x : b.elements)
    for (int h : a.elements)
      if (!a.contains(g.mul(g.mul(x, h), g.inv(x))))
        throw std::invalid_argument(
            "make_section: A not normal in B (conjugation witness element " +
            std::to_string(x) + ")");

  std::vector<std::vector<int>> cosets;
  std::vector<int> proj(g.order(), -1);
  std::vector<char> seen(g.order(), 0);
  for (int x : b.elements) {
    if (seen[x]) continue;
    std::vector<int> cs;
    for (int h : a.elements) cs.push_back(g.mul(h, x));
    std::sort(cs.begin(), cs.end());
    for (int e : cs) seen[e] = 1;
    cosets.push_back(std::move(cs));
  }
  std::sort(cosets.begin(), cosets.end(),
            [](const auto& l, const auto& r) { return l[0] < r[0]; });
  const int q = static_cast<int>(cosets.size());
  for (int ci = 0; ci < q; ++ci)
    for (int e : cosets[ci]) proj[e] = ci;
  std::vector<std::vector<int>> qmul(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      qmul[i][j] = proj[g.mul(cosets[i][0], cosets[j][0])];
  Section s;
  s.B = b;
  s.A = a;
  s.quotient = Group(std::move(qmul), g.label() + "/A");
  s.projection = std::move(proj);
  s.cosets = std::move(cosets);
  return s;
}

inline Subgroup whole_group(const Group& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{std::move(all)};
}

inline Subgroup trivial_subgroup() { return Subgroup{{0}}; }

// quotient(G, N) for N normal in G.
inline Section quotient(const Group& g, const Subgroup& n) {
  return make_section(g, whole_group(g), n);
}

// Central product D8 o Z4, amalgamating the central involutions: built as
// (D8 x Z4) / <(a^2, z^2)>.
inline Group g16() {
  Group h = direct_product(dihedral(8), cyclic(4));
  // a^2 is rotation index 2 in D8; z^2 is 2 in Z4; product index 2*4+2.
  Subgroup n = subgroup_generated(h, {2 * 4 + 2});
  Group q = quotient(h, n).quotient;
  q.set_label("G16");
  return q;
}

// Lexicographic greedy generating set: repeatedly add the smallest element
// outside the closure so far.  Deterministic.
inline std::vector<int> small_generating_set(const Group& g) {
  std::vector<int> gens;
  Subgroup cur = trivial_subgroup();
  while (cur.order() < g.order()) {
    int next = -1;
    for (int x = 1; x < g.order(); ++x)
      if (!cur.contains(x)) {
        next = x;
        break;
      }
    assert(next >= 0);
    gens.push_back(next);
    cur = subgroup_generated(g, gens);
  }
  return gens;
}

}  // namespace srl
