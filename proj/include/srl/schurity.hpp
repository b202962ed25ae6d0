#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "srl/base.hpp"
#include "srl/group.hpp"
#include "srl/perm.hpp"
#include "srl/perm_group.hpp"
#include "srl/sring.hpp"

namespace srl {

// Colored Cayley structure: color(u,v) = class of v*u^{-1}.  Right
// translations preserve all colors; the diagonal carries the identity class.
class ColorMatrix {
 public:
  explicit ColorMatrix(const SRing& a)
      : n_(a.group().order()), rank_(a.rank()), color_(static_cast<size_t>(n_) * n_) {
    const Group& g = a.group();
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        color_[static_cast<size_t>(u) * n_ + v] = a.class_of(g.mul(v, g.inv(u)));
  }

  int degree() const { return n_; }
  int rank() const { return rank_; }
  int color(int u, int v) const { return color_[static_cast<size_t>(u) * n_ + v]; }

  bool preserved_by(const Perm& p) const {
    if (p.degree() != n_) return false;
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (color(p[u], p[v]) != color(u, v)) return false;
    return true;
  }

 private:
  int n_;
  int rank_;
  std::vector<int> color_;
};

namespace detail {

// Backtracking search for color-preserving permutations.  Candidate image
// sets are bit rows; every newly pinned point refines all open rows against
// the color constraints in both directions, to a fixpoint, before branching.
class ColorAutSearch {
 public:
  explicit ColorAutSearch(const ColorMatrix& cm)
      : cm_(cm),
        n_(cm.degree()),
        words_((cm.degree() + 63) / 64),
        row_match_(static_cast<size_t>(n_) * cm.rank() * words_, 0),
        col_match_(static_cast<size_t>(n_) * cm.rank() * words_, 0),
        deadline_(Deadline::after(limits().time_budget_secs)) {
    for (int t = 0; t < n_; ++t)
      for (int s = 0; s < n_; ++s) {
        set_bit(&row_match_[(static_cast<size_t>(t) * cm.rank() + cm.color(t, s)) * words_], s);
        set_bit(&col_match_[(static_cast<size_t>(t) * cm.rank() + cm.color(s, t)) * words_], s);
      }
  }

  // One automorphism satisfying all forced point images, or nullopt.
  std::optional<Perm> find_one(const std::vector<std::pair<int, int>>& forced) {
    State st = initial_state(forced);
    if (!st.alive) return std::nullopt;
    return dfs(st);
  }

  // Generators and order of the subgroup of color automorphisms fixing the
  // given points; one orbit representative search per coset, standard
  // orbit-stabilizer recursion.
  struct StabResult {
    std::vector<Perm> gens;
    u64 order = 1;
  };

  StabResult stabilizer_of(std::vector<int> prefix) {
    std::vector<std::pair<int, int>> forced;
    forced.reserve(prefix.size());
    for (int p : prefix) forced.emplace_back(p, p);
    State st = initial_state(forced);
    if (!st.alive)
      throw std::logic_error("stabilizer_of: identity rejected");  // cannot happen

    int u = -1;
    for (int x = 0; x < n_; ++x)
      if (st.assigned[x] < 0) {
        u = x;
        break;
      }
    if (u < 0) return {};

    prefix.push_back(u);
    StabResult deeper = stabilizer_of(std::move(prefix));

    std::vector<Perm> found = std::move(deeper.gens);
    std::vector<char> orbit(n_, 0);
    auto grow_orbit = [&]() {
      std::fill(orbit.begin(), orbit.end(), 0);
      orbit[u] = 1;
      std::vector<int> frontier{u};
      while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
          for (const Perm& q : found)
            if (!orbit[q[x]]) {
              orbit[q[x]] = 1;
              next.push_back(q[x]);
            }
        frontier = std::move(next);
      }
    };
    grow_orbit();

    const u64* cand_u = &st.cand[static_cast<size_t>(u) * words_];
    for (int v = 0; v < n_; ++v) {
      if (v == u || !test_bit(cand_u, v) || orbit[v]) continue;
      deadline_.check("color automorphism stabilizer");
      std::vector<std::pair<int, int>> f;
      for (int pt : st.fixed) f.emplace_back(pt, pt);
      f.emplace_back(u, v);
      if (auto p = find_one(f)) {
        found.push_back(std::move(*p));
        grow_orbit();
      }
    }

    int orbit_size = 0;
    for (int x = 0; x < n_; ++x) orbit_size += orbit[x];
    StabResult res;
    res.gens = std::move(found);
    res.order = mul_check(static_cast<u64>(orbit_size), deeper.order,
                          "color automorphism group order");
    return res;
  }

 private:
  struct State {
    bool alive = false;
    std::vector<u64> cand;    // n rows of `words` words
    std::vector<int> assigned;
    std::vector<int> fixed;   // the forced prefix points (for coset searches)
    int unassigned = 0;
  };

  static void set_bit(u64* row, int i) { row[i >> 6] |= u64{1} << (i & 63); }
  static bool test_bit(const u64* row, int i) {
    return (row[i >> 6] >> (i & 63)) & 1;
  }

  const ColorMatrix& cm_;
  int n_;
  int words_;
  std::vector<u64> row_match_;
  std::vector<u64> col_match_;
  Deadline deadline_;
  u64 nodes_ = 0;

  const u64* rmatch(int t, int c) const {
    return &row_match_[(static_cast<size_t>(t) * cm_.rank() + c) * words_];
  }
  const u64* cmatch(int t, int c) const {
    return &col_match_[(static_cast<size_t>(t) * cm_.rank() + c) * words_];
  }

  State initial_state(const std::vector<std::pair<int, int>>& forced) {
    State st;
    st.cand.assign(static_cast<size_t>(n_) * words_, 0);
    st.assigned.assign(n_, -1);
    st.unassigned = n_;
    for (int u = 0; u < n_; ++u) {
      u64* row = &st.cand[static_cast<size_t>(u) * words_];
      for (int w = 0; w < words_; ++w) row[w] = ~u64{0};
      const int extra = words_ * 64 - n_;
      if (extra) row[words_ - 1] >>= extra;
    }
    std::vector<int> queue;
    for (auto [pt, im] : forced) {
      u64* row = &st.cand[static_cast<size_t>(pt) * words_];
      if (!test_bit(row, im)) return st;  // alive stays false
      for (int w = 0; w < words_; ++w) row[w] = 0;
      set_bit(row, im);
      queue.push_back(pt);
      st.fixed.push_back(pt);
    }
    st.alive = propagate(st, std::move(queue));
    return st;
  }

  // Process newly-singleton rows until fixpoint.
  bool propagate(State& st, std::vector<int> queue) {
    while (!queue.empty()) {
      const int w = queue.back();
      queue.pop_back();
      if (st.assigned[w] >= 0) continue;
      const u64* roww = &st.cand[static_cast<size_t>(w) * words_];
      int t = -1;
      for (int k = 0; k < words_ && t < 0; ++k)
        if (roww[k]) t = k * 64 + __builtin_ctzll(roww[k]);
      st.assigned[w] = t;
      --st.unassigned;
      for (int u = 0; u < n_; ++u) {
        if (u == w) continue;
        if (st.assigned[u] >= 0) {
          const int s = st.assigned[u];
          if (cm_.color(t, s) != cm_.color(w, u) ||
              cm_.color(s, t) != cm_.color(u, w))
            return false;
          continue;
        }
        u64* row = &st.cand[static_cast<size_t>(u) * words_];
        const u64* rm = rmatch(t, cm_.color(w, u));
        const u64* cl = cmatch(t, cm_.color(u, w));
        u64 any = 0;
        int pc = 0;
        for (int k = 0; k < words_; ++k) {
          row[k] &= rm[k] & cl[k];
          any |= row[k];
          pc += __builtin_popcountll(row[k]);
        }
        if (!any) return false;
        if (pc == 1) queue.push_back(u);
      }
    }
    return true;
  }

  std::optional<Perm> dfs(State& st) {
    if ((++nodes_ & 1023) == 0) deadline_.check("color automorphism search");
    if (st.unassigned == 0) {
      return Perm(st.assigned);
    }
    // branch on an open row with fewest candidates
    int best = -1, best_pc = n_ + 1;
    for (int u = 0; u < n_; ++u) {
      if (st.assigned[u] >= 0) continue;
      int pc = 0;
      const u64* row = &st.cand[static_cast<size_t>(u) * words_];
      for (int k = 0; k < words_; ++k) pc += __builtin_popcountll(row[k]);
      if (pc < best_pc) {
        best_pc = pc;
        best = u;
      }
    }
    const std::vector<u64> saved_cand = st.cand;
    const std::vector<int> saved_assigned = st.assigned;
    const int saved_unassigned = st.unassigned;
    const u64* row0 = &saved_cand[static_cast<size_t>(best) * words_];
    for (int v = 0; v < n_; ++v) {
      if (!test_bit(row0, v)) continue;
      u64* row = &st.cand[static_cast<size_t>(best) * words_];
      for (int k = 0; k < words_; ++k) row[k] = 0;
      set_bit(row, v);
      if (propagate(st, {best})) {
        if (auto res = dfs(st)) return res;
      }
      st.cand = saved_cand;
      st.assigned = saved_assigned;
      st.unassigned = saved_unassigned;
    }
    return std::nullopt;
  }
};

}  // namespace detail

struct SRingAutData {
  PermGroup aut;        // full Aut(A), contains the right regular representation
  PermGroup stabilizer; // Aut(A)_e
  u64 stabilizer_order = 1;
};

inline SRingAutData automorphism_group_data(const SRing& a) {
  const Group& g = a.group();
  const int n = g.order();
  if (n > limits().max_sring_aut_degree)
    throw cap_exceeded("automorphism_group: degree exceeds cap");
  ColorMatrix cm(a);
  detail::ColorAutSearch search(cm);
  auto stab = search.stabilizer_of({0});

  SRingAutData data;
  data.stabilizer = PermGroup(n, stab.gens);
  data.stabilizer.set_known_order(stab.order);
  data.stabilizer_order = stab.order;

  std::vector<Perm> autgens;
  for (int x : small_generating_set(g)) autgens.push_back(right_translation(g, x));
  for (auto& q : stab.gens) autgens.push_back(std::move(q));
  data.aut = PermGroup(n, std::move(autgens));
  data.aut.set_known_order(
      mul_check(static_cast<u64>(n), stab.order, "Aut(A) order"));
  return data;
}

inline PermGroup automorphism_group(const SRing& a) {
  return automorphism_group_data(a).aut;
}

struct SchurityReport {
  bool schurian = false;
  u64 aut_order = 0;
  std::vector<std::vector<int>> stabilizer_orbits;
  int split_class = -1;  // a basic set broken into several orbits, if any
  std::vector<std::vector<int>> split_pieces;
};

inline SchurityReport schurity_report(const SRing& a) {
  SRingAutData data = automorphism_group_data(a);
  SchurityReport rep;
  rep.aut_order = data.aut.order();
  rep.stabilizer_orbits = data.stabilizer.orbits();
  rep.schurian = static_cast<int>(rep.stabilizer_orbits.size()) == a.rank();
  if (!rep.schurian) {
    // orbits refine basic sets, so some class holds several orbits
    std::vector<int> orbit_of(a.group().order(), -1);
    for (int i = 0; i < static_cast<int>(rep.stabilizer_orbits.size()); ++i)
      for (int x : rep.stabilizer_orbits[i]) orbit_of[x] = i;
    for (int ci = 0; ci < a.rank() && rep.split_class < 0; ++ci) {
      const auto& cl = a.basic_set(ci);
      for (int x : cl)
        if (orbit_of[x] != orbit_of[cl.front()]) {
          rep.split_class = ci;
          std::vector<int> seen;
          for (int y : cl) {
            if (std::find(seen.begin(), seen.end(), orbit_of[y]) == seen.end()) {
              seen.push_back(orbit_of[y]);
              rep.split_pieces.push_back(rep.stabilizer_orbits[orbit_of[y]]);
            }
          }
          break;
        }
    }
  }
  return rep;
}

inline bool is_schurian(const SRing& a) { return schurity_report(a).schurian; }

// V(K,G): classes are the orbits of the stabilizer of the identity point in
// K.  K must contain all right translations.
inline SRing transitivity_module(const PermGroup& k, const Group& g) {
  if (k.degree() != g.order())
    throw std::invalid_argument("transitivity_module: degree mismatch");
  for (int x : small_generating_set(g))
    if (!k.contains(right_translation(g, x)))
      throw std::invalid_argument(
          "transitivity_module: K does not contain the right translations");
  return SRing::from_partition(g, k.point_stabilizer(0).orbits());
}

inline bool is_group_automorphism(const Group& g, const Perm& p) {
  if (p.degree() != g.order()) return false;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (p[g.mul(x, y)] != g.mul(p[x], p[y])) return false;
  return true;
}

// cyc(K,G): classes are the orbits of K on G; every generator must be an
// automorphism of G.
inline SRing cyclotomic(const PermGroup& k, const Group& g) {
  if (k.degree() != g.order())
    throw std::invalid_argument("cyclotomic: degree mismatch");
  for (const Perm& q : k.generators())
    if (!is_group_automorphism(g, q))
      throw std::invalid_argument("cyclotomic: generator is not an automorphism");
  return SRing::from_partition(g, k.orbits());
}

// The permutation alpha^{G/N} on right cosets of an A-subgroup N, cosets
// listed by smallest element.  alpha must preserve the coset partition (it
// does whenever alpha is an automorphism of an S-ring having N as an
// A-subgroup).
inline Perm induced_action(const SRing& a, const Perm& alpha, const Subgroup& n) {
  const Group& g = a.group();
  if (alpha.degree() != g.order())
    throw std::invalid_argument("induced_action: degree mismatch");
  if (!a.is_a_subgroup(n))
    throw std::invalid_argument("induced_action: N is not an A-subgroup");
  ColorMatrix cm(a);
  if (!cm.preserved_by(alpha))
    throw std::invalid_argument("induced_action: alpha is not an automorphism of A");
  std::vector<int> coset(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int t : n.elements) coset[g.mul(t, x)] = id;
  }
  std::vector<int> img(reps.size());
  for (size_t i = 0; i < reps.size(); ++i) img[i] = coset[alpha[reps[i]]];
  // well-definedness: all members of a coset must land in the same coset
  for (int x = 0; x < g.order(); ++x)
    if (coset[alpha[x]] != img[coset[x]])
      throw std::logic_error("induced_action: coset partition not preserved");
  return Perm(std::move(img));
}

}  // namespace srl
