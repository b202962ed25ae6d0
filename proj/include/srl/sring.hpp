#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "srl/base.hpp"
#include "srl/group.hpp"

namespace srl {

struct PartitionViolation {
  std::string axiom;    // "partition", "identity", "inverse", "coherence"
  std::string witness;  // human-readable witness data
};

class StructureConstants {
 public:
  StructureConstants() : rank_(0) {}
  StructureConstants(int rank, std::vector<int> sizes, std::vector<int> c)
      : rank_(rank), sizes_(std::move(sizes)), c_(std::move(c)) {}

  int rank() const { return rank_; }
  int class_size(int i) const { return sizes_[i]; }
  // c^Z_{XY}: the number of (x,y) in X x Y with xy = z, for any fixed z in Z
  int c(int x, int y, int z) const {
    return c_[(static_cast<size_t>(x) * rank_ + y) * rank_ + z];
  }

  // |Z| c^{Z^-1}_{XY} = |X| c^{X^-1}_{YZ} = |Y| c^{Y^-1}_{ZX} over all triples
  bool triangle_identity(const std::vector<int>& inv_class) const {
    for (int x = 0; x < rank_; ++x)
      for (int y = 0; y < rank_; ++y)
        for (int z = 0; z < rank_; ++z) {
          const long long a =
              static_cast<long long>(sizes_[z]) * c(x, y, inv_class[z]);
          const long long b =
              static_cast<long long>(sizes_[x]) * c(y, z, inv_class[x]);
          const long long cc =
              static_cast<long long>(sizes_[y]) * c(z, x, inv_class[y]);
          if (a != b || b != cc) return false;
        }
    return true;
  }

  // sum_Z c^Z_{XY}|Z| = |X||Y| for all X, Y
  bool row_sums() const {
    for (int x = 0; x < rank_; ++x)
      for (int y = 0; y < rank_; ++y) {
        long long s = 0;
        for (int z = 0; z < rank_; ++z)
          s += static_cast<long long>(c(x, y, z)) * sizes_[z];
        if (s != static_cast<long long>(sizes_[x]) * sizes_[y]) return false;
      }
    return true;
  }

 private:
  int rank_;
  std::vector<int> sizes_;
  std::vector<int> c_;
};

// An S-ring presented as its basic-set partition.  Class ids are assigned by
// smallest contained element, so the identity class is always class 0.
// Coherence is established at construction and the structure-constant tensor
// is kept from that same pair walk.
class SRing {
 public:
  static std::optional<SRing> try_from_partition(
      const Group& g, std::vector<std::vector<int>> classes,
      PartitionViolation* why = nullptr);

  static SRing from_partition(const Group& g,
                              std::vector<std::vector<int>> classes) {
    PartitionViolation why;
    auto a = try_from_partition(g, std::move(classes), &why);
    if (!a)
      throw std::invalid_argument("from_partition: " + why.axiom + ": " +
                                  why.witness);
    return std::move(*a);
  }

  const Group& group() const { return group_; }
  int rank() const { return static_cast<int>(classes_.size()); }
  int class_of(int x) const { return cls_[x]; }
  const std::vector<int>& basic_set(int i) const { return classes_[i]; }
  const std::vector<std::vector<int>>& basic_sets() const { return classes_; }
  int inverse_class(int i) const { return inv_class_[i]; }
  const StructureConstants& structure_constants() const { return tensor_; }

  bool operator==(const SRing& o) const {
    return group_ == o.group_ && classes_ == o.classes_;
  }

  // is the element set (any order) a union of basic sets?
  bool is_a_set(const std::vector<int>& elems) const {
    std::vector<char> in(group_.order(), 0);
    for (int x : elems) in[x] = 1;
    for (int x : elems)
      for (int y : classes_[cls_[x]])
        if (!in[y]) return false;
    return true;
  }

  bool is_a_subgroup(const Subgroup& h) const {
    return is_subgroup(group_, h) && is_a_set(h.elements);
  }

 private:
  SRing() = default;
  Group group_;
  std::vector<int> cls_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> inv_class_;
  StructureConstants tensor_;
};

inline std::optional<SRing> SRing::try_from_partition(
    const Group& g, std::vector<std::vector<int>> classes,
    PartitionViolation* why) {
  const int n = g.order();
  auto fail = [&](const std::string& axiom, const std::string& witness) {
    if (why) *why = {axiom, witness};
    return std::nullopt;
  };

  // partition axioms: nonempty classes, indices in range, exact cover
  std::vector<int> cls(n, -1);
  for (auto& c : classes) {
    if (c.empty()) return fail("partition", "empty class");
    std::sort(c.begin(), c.end());
    for (int x : c) {
      if (x < 0 || x >= n)
        return fail("partition", "element " + std::to_string(x) + " out of range");
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (int i = 0; i < static_cast<int>(classes.size()); ++i)
    for (int x : classes[i]) {
      if (cls[x] != -1)
        return fail("partition", "element " + std::to_string(x) + " covered twice");
      cls[x] = i;
    }
  for (int x = 0; x < n; ++x)
    if (cls[x] == -1)
      return fail("partition", "element " + std::to_string(x) + " not covered");

  // identity axiom: {e} is a class
  if (classes[cls[0]].size() != 1)
    return fail("identity",
                "class of the identity has size " +
                    std::to_string(classes[cls[0]].size()));

  // inverse axiom: X^{-1} is a class for every class X
  const int rank = static_cast<int>(classes.size());
  std::vector<int> inv_class(rank, -1);
  for (int i = 0; i < rank; ++i) {
    std::vector<int> inv;
    inv.reserve(classes[i].size());
    for (int x : classes[i]) inv.push_back(g.inv(x));
    std::sort(inv.begin(), inv.end());
    const int j = cls[inv.front()];
    if (classes[j] != inv) {
      std::ostringstream w;
      w << "inverse of class " << i << " is not a class (contains "
        << inv.front() << ")";
      return fail("inverse", w.str());
    }
    inv_class[i] = j;
  }

  // coherence: one O(n^2) pair walk per class pair; the per-element product
  // counts must be constant on every class, and that constant is c^Z_{XY}
  std::vector<int> sizes(rank);
  for (int i = 0; i < rank; ++i) sizes[i] = static_cast<int>(classes[i].size());
  std::vector<int> tensor(static_cast<size_t>(rank) * rank * rank, 0);
  std::vector<int> cnt(n, 0);
  for (int cx = 0; cx < rank; ++cx)
    for (int cy = 0; cy < rank; ++cy) {
      for (int x : classes[cx])
        for (int y : classes[cy]) ++cnt[g.mul(x, y)];
      for (int cz = 0; cz < rank; ++cz) {
        const int c0 = cnt[classes[cz].front()];
        for (int z : classes[cz])
          if (cnt[z] != c0) {
            std::ostringstream w;
            w << "X=" << cx << " Y=" << cy << " Z=" << cz << ": count at "
              << classes[cz].front() << " is " << c0 << " but at " << z
              << " is " << cnt[z];
            return fail("coherence", w.str());
          }
        tensor[(static_cast<size_t>(cx) * rank + cy) * rank + cz] = c0;
      }
      for (int x = 0; x < n; ++x) cnt[x] = 0;
    }

  SRing a;
  a.group_ = g;
  a.cls_ = std::move(cls);
  a.classes_ = std::move(classes);
  a.inv_class_ = std::move(inv_class);
  a.tensor_ = StructureConstants(rank, std::move(sizes), std::move(tensor));
  return a;
}

inline SRing trivial_sring(const Group& g) {
  std::vector<std::vector<int>> classes{{0}};
  if (g.order() > 1) {
    std::vector<int> rest;
    for (int x = 1; x < g.order(); ++x) rest.push_back(x);
    classes.push_back(std::move(rest));
  }
  return SRing::from_partition(g, std::move(classes));
}

inline SRing full_group_ring(const Group& g) {
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.order(); ++x) classes.push_back({x});
  return SRing::from_partition(g, std::move(classes));
}

// Smallest A-subgroup containing the given classes: alternate subgroup
// closure with rounding up to whole classes until stable.
inline Subgroup a_closure(const SRing& a, std::vector<int> class_ids) {
  const Group& g = a.group();
  std::set<int> elems{0};
  for (int ci : class_ids)
    for (int x : a.basic_set(ci)) elems.insert(x);
  for (;;) {
    Subgroup h = subgroup_generated(g, {elems.begin(), elems.end()});
    std::set<int> rounded;
    for (int x : h.elements)
      for (int y : a.basic_set(a.class_of(x))) rounded.insert(y);
    if (rounded == elems && static_cast<int>(elems.size()) == h.order())
      return h;
    elems = std::move(rounded);
  }
}

// All A-subgroups: join-closure of the per-class closures.  Every A-subgroup
// is the join of the closures of the classes it contains, so this is
// exhaustive.
inline std::vector<Subgroup> a_subgroups(const SRing& a) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> work;
  auto add = [&](const Subgroup& h) {
    if (found.insert(h.elements).second) work.push_back(h.elements);
  };
  add(Subgroup{{0}});
  for (int i = 0; i < a.rank(); ++i) add(a_closure(a, {i}));
  for (size_t wi = 0; wi < work.size(); ++wi) {
    const std::vector<int> cur = work[wi];
    std::vector<std::vector<int>> snapshot(found.begin(), found.end());
    for (const auto& other : snapshot) {
      std::set<int> cids;
      for (int x : cur) cids.insert(a.class_of(x));
      for (int x : other) cids.insert(a.class_of(x));
      add(a_closure(a, {cids.begin(), cids.end()}));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& e : found) out.push_back(Subgroup{e});
  std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements < y.elements;
  });
  return out;
}

// Quotient S-ring A_{B/A}: classes are the images of the basic sets inside B
// under the canonical projection.  Both section subgroups must be
// A-subgroups.
inline SRing quotient_sring(const SRing& a, const Section& s) {
  if (!a.is_a_subgroup(s.B))
    throw std::invalid_argument("quotient_sring: B is not an A-subgroup");
  if (!a.is_a_subgroup(s.A))
    throw std::invalid_argument("quotient_sring: A is not an A-subgroup");
  std::set<std::vector<int>> images;
  std::vector<char> inB(a.group().order(), 0);
  for (int x : s.B.elements) inB[x] = 1;
  for (int ci = 0; ci < a.rank(); ++ci) {
    const auto& x = a.basic_set(ci);
    if (!inB[x.front()]) continue;
    std::set<int> img;
    for (int e : x) img.insert(s.project(e));
    images.insert(std::vector<int>(img.begin(), img.end()));
  }
  std::vector<std::vector<int>> classes(images.begin(), images.end());
  return SRing::from_partition(s.quotient, std::move(classes));
}

// Tensor product over the direct product of the underlying groups, with the
// documented (i,j) -> i*|G2|+j element layout.
inline SRing tensor_product(const SRing& a1, const SRing& a2) {
  Group gp = direct_product(a1.group(), a2.group());
  const int n2 = a2.group().order();
  std::vector<std::vector<int>> classes;
  for (const auto& x1 : a1.basic_sets())
    for (const auto& x2 : a2.basic_sets()) {
      std::vector<int> c;
      c.reserve(x1.size() * x2.size());
      for (int i : x1)
        for (int j : x2) c.push_back(i * n2 + j);
      classes.push_back(std::move(c));
    }
  return SRing::from_partition(gp, std::move(classes));
}

// Internal direct-product test: G = U x V with both A-subgroups, and every
// basic set is (basic set inside U) * (basic set inside V).
inline bool is_tensor(const SRing& a, const Subgroup& u, const Subgroup& v) {
  const Group& g = a.group();
  if (!is_subgroup(g, u) || !is_subgroup(g, v))
    throw std::invalid_argument("is_tensor: not subgroups");
  if (static_cast<long long>(u.order()) * v.order() != g.order())
    throw std::invalid_argument("is_tensor: orders do not multiply to |G|");
  std::vector<int> common;
  std::set_intersection(u.elements.begin(), u.elements.end(),
                        v.elements.begin(), v.elements.end(),
                        std::back_inserter(common));
  if (common != std::vector<int>{0})
    throw std::invalid_argument("is_tensor: subgroups intersect nontrivially");
  if (!is_normal(g, u) || !is_normal(g, v))
    throw std::invalid_argument("is_tensor: subgroups not both normal");
  if (!a.is_a_subgroup(u) || !a.is_a_subgroup(v)) return false;

  std::vector<char> inU(g.order(), 0), inV(g.order(), 0);
  for (int x : u.elements) inU[x] = 1;
  for (int x : v.elements) inV[x] = 1;
  std::set<std::vector<int>> expected;
  for (const auto& p : a.basic_sets()) {
    if (!inU[p.front()]) continue;
    for (const auto& q : a.basic_sets()) {
      if (!inV[q.front()]) continue;
      std::set<int> prod;
      for (int x : p)
        for (int y : q) prod.insert(g.mul(x, y));
      expected.insert(std::vector<int>(prod.begin(), prod.end()));
    }
  }
  std::set<std::vector<int>> actual(a.basic_sets().begin(),
                                    a.basic_sets().end());
  return expected == actual;
}

struct SWreathReport {
  bool wreath = false;
  bool nontrivial = false;  // A != {e} and B != G
};

// S-wreath test over an A-section B/A with A normal in G: every basic set
// outside B must be a union of A-cosets.
inline SWreathReport is_s_wreath(const SRing& a, const Section& s) {
  const Group& g = a.group();
  if (!a.is_a_subgroup(s.B) || !a.is_a_subgroup(s.A))
    throw std::invalid_argument("is_s_wreath: section subgroups must be A-subgroups");
  int w = -1;
  if (!is_normal(g, s.A, &w))
    throw std::invalid_argument("is_s_wreath: A not normal in G");
  std::vector<char> inB(g.order(), 0);
  for (int x : s.B.elements) inB[x] = 1;
  SWreathReport rep;
  rep.nontrivial = s.A.order() > 1 && s.B.order() < g.order();
  for (const auto& x : a.basic_sets()) {
    if (inB[x.front()]) continue;
    std::vector<char> inX(g.order(), 0);
    for (int e : x) inX[e] = 1;
    for (int e : x)
      for (int t : s.A.elements)
        if (!inX[g.mul(e, t)]) return rep;  // wreath stays false
  }
  rep.wreath = true;
  return rep;
}

struct AlgebraicMap {
  const SRing* source = nullptr;
  const SRing* target = nullptr;
  std::vector<int> class_image;  // class id bijection
};

// X -> X^{(m)} = {x^m : x in X} on an abelian group with gcd(m,|G|)=1.
inline AlgebraicMap power_map(const SRing& a, long long m) {
  const Group& g = a.group();
  if (!g.abelian()) throw std::invalid_argument("power_map: group not abelian");
  const int n = g.order();
  long long mm = ((m % n) + n) % n;
  if (std::gcd(mm, static_cast<long long>(n)) != 1)
    throw std::invalid_argument("power_map: m not coprime to |G|");
  AlgebraicMap f;
  f.source = &a;
  f.target = &a;
  f.class_image.resize(a.rank());
  for (int ci = 0; ci < a.rank(); ++ci) {
    std::set<int> img;
    for (int x : a.basic_set(ci)) img.insert(g.power(x, static_cast<int>(mm)));
    std::vector<int> v(img.begin(), img.end());
    const int cj = a.class_of(v.front());
    if (a.basic_set(cj) != v)
      throw std::logic_error("power_map: image of a class is not a class");
    f.class_image[ci] = cj;
  }
  return f;
}

// True iff the class bijection preserves all structure constants.
inline bool is_algebraic_isomorphism(const AlgebraicMap& f) {
  const SRing& a = *f.source;
  const SRing& b = *f.target;
  if (a.rank() != b.rank() ||
      static_cast<int>(f.class_image.size()) != a.rank())
    throw std::invalid_argument("is_algebraic_isomorphism: rank mismatch");
  std::vector<char> hit(b.rank(), 0);
  for (int i : f.class_image) {
    if (i < 0 || i >= b.rank() || hit[i])
      throw std::invalid_argument("is_algebraic_isomorphism: map not a bijection");
    hit[i] = 1;
  }
  const auto& ca = a.structure_constants();
  const auto& cb = b.structure_constants();
  for (int x = 0; x < a.rank(); ++x)
    for (int y = 0; y < a.rank(); ++y)
      for (int z = 0; z < a.rank(); ++z)
        if (ca.c(x, y, z) !=
            cb.c(f.class_image[x], f.class_image[y], f.class_image[z]))
          return false;
  return true;
}

}  // namespace srl
