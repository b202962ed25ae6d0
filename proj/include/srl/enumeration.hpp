#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "srl/base.hpp"
#include "srl/schurity.hpp"
#include "srl/sring.hpp"

namespace srl {

namespace detail {

inline std::vector<std::vector<int>> classes_from_ids(
    const std::vector<int>& cls, int rank) {
  std::vector<std::vector<int>> out(rank);
  for (int x = 0; x < static_cast<int>(cls.size()); ++x)
    out[cls[x]].push_back(x);
  return out;
}

}  // namespace detail

// Coarsest S-ring refining the given partition: repeatedly split classes by
// inverse-class signature and by the pair-count vectors until stable.  The
// result always satisfies every axiom, so construction at the end cannot
// fail.
inline SRing wl_closure(const Group& g,
                        const std::vector<std::vector<int>>& seed) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  for (size_t c = 0; c < seed.size(); ++c)
    for (int x : seed[c]) {
      if (x < 0 || x >= n || cls[x] != -1)
        throw std::invalid_argument("wl_closure: seed is not a partition");
      cls[x] = static_cast<int>(c);
    }
  for (int x = 0; x < n; ++x)
    if (cls[x] == -1)
      throw std::invalid_argument("wl_closure: seed is not a partition");
  int rank = static_cast<int>(seed.size());
  if (std::count(cls.begin(), cls.end(), cls[0]) > 1) {
    cls[0] = rank++;  // identity always gets its own class
  }

  // Split every class by key equality; returns true when anything split.
  auto refine = [&](const std::vector<long long>& key) {
    std::map<std::pair<int, long long>, int> relabel;
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) {
      auto k = std::make_pair(cls[x], key[x]);
      auto it = relabel.find(k);
      if (it == relabel.end())
        it = relabel.emplace(k, static_cast<int>(relabel.size())).first;
      next[x] = it->second;
    }
    bool changed = static_cast<int>(relabel.size()) != rank;
    rank = static_cast<int>(relabel.size());
    cls = std::move(next);
    return changed;
  };

  std::vector<long long> key(n);
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < n; ++x) key[x] = cls[g.inv(x)];
    changed |= refine(key);
    const std::vector<int> frozen = cls;
    const int frank = rank;
    for (int ca = 0; ca < frank; ++ca)
      for (int cb = 0; cb < frank; ++cb) {
        std::fill(key.begin(), key.end(), 0);
        for (int x = 0; x < n; ++x) {
          if (frozen[x] != ca) continue;
          for (int y = 0; y < n; ++y)
            if (frozen[y] == cb) ++key[g.mul(x, y)];
        }
        changed |= refine(key);
      }
  }
  return SRing::from_partition(g, detail::classes_from_ids(cls, rank));
}

namespace detail {

// Assemble a class list from one block assignment over the inverse-pair
// atoms plus a side choice for the blocks that split into an inverse pair of
// classes, then keep it if the axioms hold.
struct AtomEnum {
  const Group& g;
  std::vector<std::vector<int>> atoms;  // each sorted; {x} or {x, x^-1}
  std::vector<SRing> found;
  std::set<std::vector<std::vector<int>>> seen;

  explicit AtomEnum(const Group& grp) : g(grp) {
    const int n = g.order();
    std::vector<char> done(n, 0);
    done[0] = 1;
    for (int x = 1; x < n; ++x) {
      if (done[x]) continue;
      const int y = g.inv(x);
      done[x] = 1;
      done[y] = 1;
      if (y == x)
        atoms.push_back({x});
      else
        atoms.push_back({std::min(x, y), std::max(x, y)});
    }
  }

  void try_candidate(std::vector<std::vector<int>> classes) {
    classes.push_back({0});
    PartitionViolation why;
    auto ring = SRing::try_from_partition(g, classes, &why);
    if (!ring) return;
    auto norm = ring->basic_sets();
    if (seen.insert(norm).second) found.push_back(std::move(*ring));
  }

  // One block is settled per level: either the symmetric union of its atoms
  // or, when every atom is a proper pair, one of the 2^(k-1) resolutions
  // into a class and its inverse (the first atom's side is pinned to kill
  // the swap symmetry).
  void resolve(const std::vector<std::vector<int>>& blocks, size_t level,
               std::vector<std::vector<int>>& classes) {
    if (level == blocks.size()) {
      try_candidate(classes);
      return;
    }
    const auto& blk = blocks[level];
    std::vector<int> whole;
    bool pairs_only = true;
    for (int a : blk) {
      whole.insert(whole.end(), atoms[a].begin(), atoms[a].end());
      if (atoms[a].size() == 1) pairs_only = false;
    }
    std::sort(whole.begin(), whole.end());
    classes.push_back(std::move(whole));
    resolve(blocks, level + 1, classes);
    classes.pop_back();
    if (!pairs_only) return;
    const size_t k = blk.size();
    for (u64 mask = 0; mask < (u64(1) << (k - 1)); ++mask) {
      std::vector<int> side, anti;
      for (size_t i = 0; i < k; ++i) {
        const auto& at = atoms[blk[i]];
        const bool flip = i > 0 && (mask >> (i - 1)) & 1;
        side.push_back(at[flip ? 1 : 0]);
        anti.push_back(at[flip ? 0 : 1]);
      }
      std::sort(side.begin(), side.end());
      std::sort(anti.begin(), anti.end());
      classes.push_back(std::move(side));
      classes.push_back(std::move(anti));
      resolve(blocks, level + 1, classes);
      classes.pop_back();
      classes.pop_back();
    }
  }

  // Restricted-growth recursion over atom-to-block assignments.
  void assign(size_t i, std::vector<std::vector<int>>& blocks) {
    if (i == atoms.size()) {
      std::vector<std::vector<int>> classes;
      resolve(blocks, 0, classes);
      return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(static_cast<int>(i));
      assign(i + 1, blocks);
      blocks[b].pop_back();
    }
    blocks.push_back({static_cast<int>(i)});
    assign(i + 1, blocks);
    blocks.pop_back();
  }
};

inline void sort_rings(std::vector<SRing>& rings) {
  std::sort(rings.begin(), rings.end(), [](const SRing& a, const SRing& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.basic_sets() < b.basic_sets();
  });
}

}  // namespace detail

// Every S-ring over G.  Candidates are built from the inverse-pair atoms
// {x, x^-1}: a basic set is a union of atoms, except that a class and its
// inverse may divide a union of proper pairs between them.
inline std::vector<SRing> enumerate_srings(const Group& g) {
  if (g.order() > limits().max_enum_order)
    throw cap_exceeded("enumerate_srings: group order " +
                       std::to_string(g.order()) + " exceeds cap " +
                       std::to_string(limits().max_enum_order));
  detail::AtomEnum e(g);
  std::vector<std::vector<int>> blocks;
  e.assign(0, blocks);
  detail::sort_rings(e.found);
  return e.found;
}

// Independent oracle for tiny groups: test every set partition of the
// non-identity elements with no structural shortcuts.
inline std::vector<SRing> brute_force_srings(const Group& g) {
  const int n = g.order();
  if (n > 8)
    throw std::invalid_argument("brute_force_srings: order must be <= 8");
  std::vector<SRing> found;
  std::vector<std::vector<int>> blocks;
  auto emit = [&]() {
    auto classes = blocks;
    classes.push_back({0});
    if (auto ring = SRing::try_from_partition(g, classes, nullptr))
      found.push_back(std::move(*ring));
  };
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      emit();
      return;
    }
    for (size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(x);
      self(self, x + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({x});
    self(self, x + 1);
    blocks.pop_back();
  };
  rec(rec, 1);
  detail::sort_rings(found);
  return found;
}

struct CensusReport {
  std::string label;
  int total = 0;
  int schurian = 0;
  int nonschurian = 0;
  std::map<int, int> rank_histogram;
};

inline CensusReport schurity_census(const Group& g, const std::string& label) {
  CensusReport rep;
  rep.label = label;
  for (const SRing& a : enumerate_srings(g)) {
    ++rep.total;
    ++rep.rank_histogram[a.rank()];
    if (is_schurian(a))
      ++rep.schurian;
    else
      ++rep.nonschurian;
  }
  return rep;
}

}  // namespace srl
