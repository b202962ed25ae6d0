#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "srl/base.hpp"
#include "srl/group.hpp"
#include "srl/perm.hpp"

namespace srl {

// Permutation group given by generators.  Dual engine: groups whose order
// fits under limits().perm_enum_cap are materialized element by element;
// larger ones fall back to a stabilizer chain (base + strong generating
// set).  Caches are built lazily by the first query; build them before
// sharing an instance across threads.
class PermGroup {
 public:
  PermGroup() : degree_(0) {}
  explicit PermGroup(int degree, std::vector<Perm> generators = {})
      : degree_(degree) {
    for (auto& g : generators) {
      if (g.degree() != degree)
        throw std::invalid_argument("PermGroup: generator degree mismatch");
      if (!g.is_identity()) gens_.push_back(std::move(g));
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  // Exact order is sometimes known at construction time (e.g. from an
  // orbit-stabilizer count during an automorphism search).
  void set_known_order(u64 o) { order_ = o; }

  u64 order() const {
    if (order_) return *order_;
    if (try_enumerate()) {
      order_ = static_cast<u64>(elements_->size());
      return *order_;
    }
    ensure_chain();
    u64 o = 1;
    for (const auto& lv : chain_) o = mul_check(o, lv.orbit.size(), "PermGroup::order");
    order_ = o;
    return o;
  }

  // All group elements, sorted.  Only available under the enumeration cap.
  const std::vector<Perm>& elements() const {
    if (!try_enumerate())
      throw cap_exceeded("PermGroup::elements: order exceeds enumeration cap");
    return *elements_;
  }

  bool contains(const Perm& p) const {
    if (p.degree() != degree_)
      return false;
    if (p.is_identity()) return true;
    if (try_enumerate())
      return std::binary_search(elements_->begin(), elements_->end(), p);
    ensure_chain();
    return sift(p).is_identity();
  }

  // Orbit partition of the domain; orbits sorted by smallest point.
  const std::vector<std::vector<int>>& orbits() const {
    if (orbits_) return *orbits_;
    std::vector<int> root(degree_);
    for (int i = 0; i < degree_; ++i) root[i] = i;
    auto find = [&](int x) {
      while (root[x] != x) {
        root[x] = root[root[x]];
        x = root[x];
      }
      return x;
    };
    for (const auto& g : gens_)
      for (int x = 0; x < degree_; ++x) {
        int a = find(x), b = find(g[x]);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
    std::map<int, std::vector<int>> buckets;
    for (int x = 0; x < degree_; ++x) buckets[find(x)].push_back(x);
    orbits_.emplace();
    for (auto& [r, pts] : buckets) orbits_->push_back(std::move(pts));
    return *orbits_;
  }

  std::vector<int> orbit_of(int x) const {
    for (const auto& o : orbits())
      if (std::binary_search(o.begin(), o.end(), x)) return o;
    throw std::invalid_argument("orbit_of: point out of range");
  }

  bool is_transitive() const { return orbits().size() == 1; }

  bool is_regular() const {
    return is_transitive() && order() == static_cast<u64>(degree_);
  }

  // Pointwise stabilizer of x, as its own PermGroup.
  PermGroup point_stabilizer(int x) const {
    if (x < 0 || x >= degree_)
      throw std::invalid_argument("point_stabilizer: point out of range");
    if (try_enumerate()) {
      std::vector<Perm> fixed;
      for (const auto& p : *elements_)
        if (p[x] == x) fixed.push_back(p);
      PermGroup s(degree_, std::move(fixed));
      return s;
    }
    // Chain with x as the first base point; strong generators below level 0
    // generate the stabilizer.
    PermGroup rebased(degree_, gens_);
    rebased.ensure_chain(x);
    std::vector<Perm> sgens;
    for (size_t i = 1; i < rebased.chain_.size(); ++i)
      for (const auto& g : rebased.chain_[i].gens) sgens.push_back(g);
    return PermGroup(degree_, std::move(sgens));
  }

 private:
  struct Level {
    int base = -1;
    std::vector<Perm> gens;            // strong generators active at this level
    std::map<int, Perm> orbit;         // point -> transversal perm (base -> point)
  };

  bool try_enumerate() const {
    if (enum_failed_) return false;
    if (elements_) return true;
    const u64 cap = limits().perm_enum_cap;
    std::set<Perm> seen;
    std::vector<Perm> frontier{Perm(degree_)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto& p : frontier)
        for (const auto& g : gens_) {
          Perm q = p * g;
          if (seen.size() > cap) {
            enum_failed_ = true;
            return false;
          }
          if (seen.insert(q).second) next.push_back(q);
        }
      frontier = std::move(next);
    }
    elements_.emplace(seen.begin(), seen.end());
    return true;
  }

  void update_orbit(Level& lv) const {
    std::vector<int> frontier;
    if (lv.orbit.empty()) lv.orbit.emplace(lv.base, Perm(degree_));
    for (auto& [pt, t] : lv.orbit) frontier.push_back(pt);
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (const auto& g : lv.gens) {
          int y = g[x];
          if (!lv.orbit.count(y)) {
            lv.orbit.emplace(y, lv.orbit.at(x) * g);
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
  }

  // Sift through the chain from the given level; returns the residue and the
  // level where sifting stopped.
  std::pair<Perm, size_t> sift_from(size_t lvl, Perm p) const {
    for (size_t i = lvl; i < chain_.size(); ++i) {
      if (p.is_identity()) return {p, i};
      int y = p[chain_[i].base];
      auto it = chain_[i].orbit.find(y);
      if (it == chain_[i].orbit.end()) return {p, i};
      p = p * it->second.inverse();
    }
    return {p, chain_.size()};
  }

  Perm sift(const Perm& p) const { return sift_from(0, p).first; }

  // Sims condition at one level: every Schreier generator must sift to
  // identity through the deeper chain.  A failing residue fixes the first j
  // base points, so it joins the strong generators of every level l+1..j
  // (the nesting is what makes each level's generators span the full
  // stabilizer); the failure is reported for re-verification at level j.
  // Returns -1 when the level scans clean.
  int verify_level(size_t l) const {
    update_orbit(chain_[l]);
    std::vector<int> pts;
    for (const auto& [pt, t] : chain_[l].orbit) pts.push_back(pt);
    for (size_t pi = 0; pi < pts.size(); ++pi) {
      for (size_t si = 0; si < chain_[l].gens.size(); ++si) {
        const Perm s = chain_[l].gens[si];
        const Perm u = chain_[l].orbit.at(pts[pi]);
        Perm schreier = (u * s) * chain_[l].orbit.at(s[pts[pi]]).inverse();
        auto [res, j] = sift_from(l + 1, schreier);
        if (res.is_identity()) continue;
        if (j == chain_.size()) {
          Level nl;
          int b = 0;
          while (res[b] == b) ++b;
          nl.base = b;
          chain_.push_back(std::move(nl));
        }
        for (size_t k = l + 1; k <= j; ++k) chain_[k].gens.push_back(res);
        return static_cast<int>(j);
      }
    }
    return -1;
  }

  void ensure_chain(int base_hint = -1) const {
    if (!chain_.empty() || gens_.empty()) return;
    Level lv;
    if (base_hint >= 0) {
      lv.base = base_hint;
    } else {
      int b = 0;
      while (gens_[0][b] == b) ++b;
      lv.base = b;
    }
    chain_.push_back(std::move(lv));
    chain_[0].gens = gens_;

    // Work back toward the top; a failure at level l jumps down to the level
    // that received the new generator (deeper levels are untouched and stay
    // verified).
    size_t l = 0;
    while (true) {
      int j = verify_level(l);
      if (j >= 0) {
        l = static_cast<size_t>(j);
        continue;
      }
      if (l == 0) break;
      --l;
    }
  }

  int degree_;
  std::vector<Perm> gens_;
  mutable std::optional<std::vector<Perm>> elements_;
  mutable bool enum_failed_ = false;
  mutable std::optional<u64> order_;
  mutable std::optional<std::vector<std::vector<int>>> orbits_;
  mutable std::vector<Level> chain_;
};

inline Perm right_translation(const Group& g, int a) {
  std::vector<int> img(g.order());
  for (int x = 0; x < g.order(); ++x) img[x] = g.mul(x, a);
  return Perm(std::move(img));
}

inline PermGroup right_regular_rep(const Group& g) {
  std::vector<Perm> gens;
  for (int a : small_generating_set(g)) gens.push_back(right_translation(g, a));
  PermGroup k(g.order(), std::move(gens));
  k.set_known_order(static_cast<u64>(g.order()));
  return k;
}

// Embedding of H onto a regular subgroup of K, as the image array indexed by
// H's elements.
struct RegularEmbedding {
  std::vector<Perm> image;  // image[h] = permutation assigned to element h
};

// Exhaustive search for a regular subgroup of K isomorphic to H.  Requires
// K's elements to be enumerable (order within the enumeration cap); at that
// scale absence is a definitive verdict.  Generator images are restricted to
// elements all of whose cycles have exactly the generator's order, which is
// necessary in any regular group.
inline std::optional<RegularEmbedding> find_regular_subgroup(const PermGroup& k,
                                                             const Group& h) {
  if (k.degree() != h.order())
    throw std::invalid_argument("find_regular_subgroup: degree != |H|");
  const std::vector<Perm>& universe = k.elements();  // throws cap_exceeded if too big

  const std::vector<int> hgens = small_generating_set(h);
  const int ng = static_cast<int>(hgens.size());

  auto uniform_cycles = [](const Perm& p, int o) {
    std::vector<char> seen(p.degree(), 0);
    for (int i = 0; i < p.degree(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = p[j]) {
        seen[j] = 1;
        ++len;
      }
      if (len != o) return false;
    }
    return true;
  };

  std::vector<std::vector<const Perm*>> candidates(ng);
  for (int i = 0; i < ng; ++i) {
    const int o = h.element_order(hgens[i]);
    for (const auto& p : universe)
      if (uniform_cycles(p, o)) candidates[i].push_back(&p);
    if (candidates[i].empty()) return std::nullopt;
  }

  // img[x] for x in H, filled by BFS over the partial generating set.
  std::vector<Perm> img(h.order());
  std::vector<char> have(h.order(), 0);
  img[0] = Perm(h.order());

  // Fill the closure of hgens[0..upto] and verify homomorphism consistency
  // plus distinctness (regularity follows from uniform cycle structure).
  auto fill = [&](int upto) -> bool {
    std::fill(have.begin(), have.end(), 0);
    img[0] = Perm(h.order());
    have[0] = 1;
    std::vector<int> frontier{0};
    std::set<Perm> used{img[0]};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int gi = 0; gi <= upto; ++gi) {
          const int y = h.mul(x, hgens[gi]);
          Perm cand = img[x] * img[hgens[gi]];
          if (have[y]) {
            if (!(img[y] == cand)) return false;
          } else {
            if (!used.insert(cand).second) return false;  // not injective
            if (!cand.fixed_point_free()) return false;   // must act semiregularly
            img[y] = std::move(cand);
            have[y] = 1;
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    return true;
  };

  std::vector<int> choice(ng, 0);
  int level = 0;
  while (level >= 0) {
    if (level == ng) {
      RegularEmbedding emb;
      emb.image = img;
      return emb;
    }
    bool advanced = false;
    for (int& ci = choice[level]; ci < static_cast<int>(candidates[level].size()); ++ci) {
      img[hgens[level]] = *candidates[level][ci];
      have[hgens[level]] = 1;
      if (fill(level)) {
        ++ci;
        ++level;
        if (level < ng) choice[level] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      choice[level] = 0;
      --level;
    }
  }
  return std::nullopt;
}

}  // namespace srl
