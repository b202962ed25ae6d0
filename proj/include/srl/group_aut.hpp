#pragma once

#include <algorithm>
#include <vector>

#include "srl/base.hpp"
#include "srl/group.hpp"
#include "srl/perm.hpp"
#include "srl/perm_group.hpp"

namespace srl {

// All automorphisms of G, as permutations of its element indices.  Candidate
// images for a fixed minimal generating set are extended homomorphically;
// inconsistent partial maps are cut early.  Throws cap_exceeded above the
// configured order cap.
inline PermGroup automorphism_group(const Group& g) {
  const int n = g.order();
  if (n > limits().max_aut_order)
    throw cap_exceeded("automorphism_group: group order exceeds cap");
  Deadline dl = Deadline::after(limits().time_budget_secs);

  const std::vector<int> gens = small_generating_set(g);
  const int ng = static_cast<int>(gens.size());

  std::vector<std::vector<int>> candidates(ng);
  for (int i = 0; i < ng; ++i) {
    const int o = g.element_order(gens[i]);
    for (int x = 1; x < n; ++x)
      if (g.element_order(x) == o) candidates[i].push_back(x);
  }

  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);

  // Close img over the subgroup generated by gens[0..upto]; images of those
  // generators must already be placed.  Fails on any inconsistency or
  // collision.  Touched entries are recorded for rollback.
  auto fill = [&](int upto, std::vector<int>& touched) -> bool {
    std::vector<int> queue{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const int x = queue[qi];
      for (int gi = 0; gi <= upto; ++gi) {
        const int y = g.mul(x, gens[gi]);
        const int v = g.mul(img[x], img[gens[gi]]);
        if (img[y] >= 0) {
          if (img[y] != v) return false;
        } else {
          if (used[v]) return false;
          img[y] = v;
          used[v] = 1;
          touched.push_back(y);
        }
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    return true;
  };

  std::vector<Perm> auts;
  std::vector<std::vector<int>> touched_at(ng + 1);

  // level 0 seed: identity is always fixed
  img[0] = 0;
  used[0] = 1;

  std::vector<int> choice(ng, 0);
  int level = 0;
  while (level >= 0) {
    dl.check("automorphism_group");
    if (level == ng) {
      bool total = std::find(img.begin(), img.end(), -1) == img.end();
      if (total) auts.emplace_back(img);
      // backtrack to explore the next candidate at the deepest level
      --level;
      if (level >= 0) {
        for (int y : touched_at[level]) {
          used[img[y]] = 0;
          img[y] = -1;
        }
        touched_at[level].clear();
      }
      continue;
    }
    bool advanced = false;
    for (int& ci = choice[level]; ci < static_cast<int>(candidates[level].size()); ++ci) {
      const int v = candidates[level][ci];
      if (used[v]) continue;
      img[gens[level]] = v;
      used[v] = 1;
      touched_at[level].push_back(gens[level]);
      if (fill(level, touched_at[level])) {
        ++ci;
        ++level;
        if (level < ng) choice[level] = 0;
        advanced = true;
        break;
      }
      for (int y : touched_at[level]) {
        used[img[y]] = 0;
        img[y] = -1;
      }
      touched_at[level].clear();
    }
    if (!advanced) {
      choice[level] = 0;
      --level;
      if (level >= 0) {
        for (int y : touched_at[level]) {
          used[img[y]] = 0;
          img[y] = -1;
        }
        touched_at[level].clear();
      }
    }
  }

  PermGroup aut(n, std::move(auts));
  return aut;
}

// The automorphism x -> t*x of the additive group of Z_n, for gcd(t,n)=1.
inline Perm mult_map(int n, int t) {
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) img[x] = static_cast<int>((static_cast<long long>(x) * t) % n);
  Perm p(std::move(img));
  return p;
}

}  // namespace srl
