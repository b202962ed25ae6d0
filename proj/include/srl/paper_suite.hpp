#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "srl/constructions.hpp"
#include "srl/cyclotomy.hpp"
#include "srl/enumeration.hpp"
#include "srl/group_aut.hpp"
#include "srl/schurity.hpp"

namespace srl {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace suite {

inline std::string fail_at(const std::string& what) { return what; }

// 1: the dihedral-fiber family is a valid S-ring of the expected rank and is
// never schurian.
inline CriterionResult c1() {
  CriterionResult r{1, "d8zp family valid and nonschurian", true, ""};
  for (int p : {5, 7, 11, 13}) {
    SRing a = d8_zp_sring(p);  // construction validates the axioms
    if (a.rank() != 13 + 3 * (p - 3)) {
      r.pass = false;
      r.detail = fail_at("rank mismatch at p=" + std::to_string(p));
      return r;
    }
    if (is_schurian(a)) {
      r.pass = false;
      r.detail = fail_at("schurian at p=" + std::to_string(p));
      return r;
    }
  }
  r.detail = "p=5,7,11,13: valid, rank 13+3(p-3), nonschurian";
  return r;
}

// 2: the quotient modulo the central order-2 subgroup splits as a tensor
// product, and the stabilizer of the quotient identity point is exactly the
// order-2 group generated by the fiber-swap involution.
inline CriterionResult c2() {
  CriterionResult r{2, "quotient tensor split and coset stabilizer", true, ""};
  for (int p : {5, 7}) {
    SRing a = d8_zp_sring(p);
    Section s = d8zp_quotient_section(p);
    SRing q = quotient_sring(a, s);
    std::set<int> us, vs;
    for (int h = 0; h < 8; ++h) us.insert(s.project(h * p));
    for (int k = 0; k < p; ++k) vs.insert(s.project(k));
    Subgroup u{std::vector<int>(us.begin(), us.end())};
    Subgroup v{std::vector<int>(vs.begin(), vs.end())};
    if (!is_tensor(q, u, v)) {
      r.pass = false;
      r.detail = fail_at("no tensor split at p=" + std::to_string(p));
      return r;
    }
    SRingAutData data = automorphism_group_data(q);
    Perm sigma = sigma_involution(p);
    if (data.stabilizer.order() != 2 || sigma.is_identity() ||
        !data.stabilizer.contains(sigma)) {
      r.pass = false;
      r.detail = fail_at("stabilizer is not <sigma> at p=" + std::to_string(p));
      return r;
    }
  }
  r.detail = "p=5,7: tensor split holds, stabilizer = <sigma> of order 2";
  return r;
}

// 3: both quaternion-fiber families are valid S-rings and never schurian.
inline CriterionResult c3() {
  CriterionResult r{3, "q8zp families valid and nonschurian", true, ""};
  for (int p : {5, 13}) {
    if (is_schurian(q8_zp_l4(p))) {
      r.pass = false;
      r.detail = fail_at("l=4 schurian at p=" + std::to_string(p));
      return r;
    }
  }
  for (int p : {7, 13}) {
    if (is_schurian(q8_zp_l6(p))) {
      r.pass = false;
      r.detail = fail_at("l=6 schurian at p=" + std::to_string(p));
      return r;
    }
  }
  r.detail = "l=4 p=5,13 and l=6 p=7,13: valid, nonschurian";
  return r;
}

// The two basic sets the overgroup fuses, identified by member elements
// (index 7 and 8 of the construction's class list).
inline std::pair<int, int> fused_pair(const SRing& a, int p, int l) {
  CycOrbitSystem sys = cyc_orbit_system(p, l);
  const int e7 = p + sys.orbit[l == 4 ? 1 : 3].front();  // a*c, c in C_1/C_3
  const int e8 = p + sys.orbit[l == 4 ? 3 : 6].front();  // a*c, c in C_3/C_6
  return {a.class_of(e7), a.class_of(e8)};
}

// 4: the overgroup's orbit partition merges exactly the expected pair of
// basic sets, and the fused cyclotomic ring is schurian.
inline CriterionResult c4() {
  CriterionResult r{4, "overgroup fusion orbits and schurity", true, ""};
  for (auto [p, l] : std::vector<std::pair<int, int>>{{5, 4}, {13, 4}, {7, 6}, {13, 6}}) {
    SRing a = l == 4 ? q8_zp_l4(p) : q8_zp_l6(p);
    auto [i7, i8] = fused_pair(a, p, l);
    std::vector<std::vector<int>> expect;
    for (int i = 0; i < a.rank(); ++i)
      if (i != i7 && i != i8) expect.push_back(a.basic_set(i));
    std::vector<int> merged = a.basic_set(i7);
    merged.insert(merged.end(), a.basic_set(i8).begin(), a.basic_set(i8).end());
    std::sort(merged.begin(), merged.end());
    expect.push_back(std::move(merged));
    std::sort(expect.begin(), expect.end());
    PermGroup k = k_groups(p, l);
    const std::string tag = " at p=" + std::to_string(p) + " l=" + std::to_string(l);
    if (k.orbits() != expect) {
      r.pass = false;
      r.detail = fail_at("orbit partition differs" + tag);
      return r;
    }
    if (!is_schurian(cyclotomic(k, a.group()))) {
      r.pass = false;
      r.detail = fail_at("fused ring nonschurian" + tag);
      return r;
    }
  }
  r.detail = "4 cases: orbits fuse exactly one pair, fused rings schurian";
  return r;
}

// 5: both identity sweeps succeed for every applicable prime below 200
// (the verifiers throw on any failure).
inline CriterionResult c5() {
  CriterionResult r{5, "cyclotomic identity sweep p < 200", true, ""};
  auto r4 = cyclotomy_sweep(200, 4);
  auto r6 = cyclotomy_sweep(200, 6);
  r.detail = std::to_string(r4.size()) + " quartic and " +
             std::to_string(r6.size()) + " sextic primes, zero failures";
  return r;
}

// 6: the census finds no nonschurian ring over C8, D8, Q8, with totals
// matching the independent brute-force oracle and the frozen golden counts.
inline CriterionResult c6() {
  CriterionResult r{6, "schurity census C8, D8, Q8", true, ""};
  const std::vector<std::pair<Group, int>> cases = {
      {cyclic(8), 10}, {dihedral(8), 34}, {quaternion8(), 26}};
  for (const auto& [g, golden] : cases) {
    CensusReport rep = schurity_census(g, g.label());
    const int oracle = static_cast<int>(brute_force_srings(g).size());
    if (rep.total != golden || rep.total != oracle || rep.nonschurian != 0) {
      r.pass = false;
      r.detail = fail_at(g.label() + ": total=" + std::to_string(rep.total) +
                         " oracle=" + std::to_string(oracle) +
                         " nonschurian=" + std::to_string(rep.nonschurian));
      return r;
    }
  }
  r.detail = "totals 10/34/26 match oracle, 0 nonschurian";
  return r;
}

struct SuiteRing {
  std::string name;
  SRing ring;
};

// Every ring the earlier criteria touch, one registry for the property
// sweep.
inline std::vector<SuiteRing> suite_rings() {
  std::vector<SuiteRing> rs;
  for (int p : {5, 7, 11, 13})
    rs.push_back({"d8zp p=" + std::to_string(p), d8_zp_sring(p)});
  for (int p : {5, 7})
    rs.push_back({"d8zp quotient p=" + std::to_string(p),
                  quotient_sring(d8_zp_sring(p), d8zp_quotient_section(p))});
  for (int p : {5, 13})
    rs.push_back({"q8zp l=4 p=" + std::to_string(p), q8_zp_l4(p)});
  for (int p : {7, 13})
    rs.push_back({"q8zp l=6 p=" + std::to_string(p), q8_zp_l6(p)});
  for (auto [p, l] : std::vector<std::pair<int, int>>{{5, 4}, {13, 4}, {7, 6}, {13, 6}}) {
    Group g = direct_product(quaternion8(), cyclic(p));
    rs.push_back({"fused l=" + std::to_string(l) + " p=" + std::to_string(p),
                  cyclotomic(k_groups(p, l), g)});
  }
  for (const Group& g : {cyclic(8), dihedral(8), quaternion8()}) {
    int i = 0;
    for (SRing& a : enumerate_srings(g))
      rs.push_back({g.label() + " #" + std::to_string(i++), std::move(a)});
  }
  return rs;
}

inline bool triangle_and_row_sums(const SRing& a) {
  std::vector<int> inv(a.rank());
  for (int i = 0; i < a.rank(); ++i) inv[i] = a.inverse_class(i);
  return a.structure_constants().triangle_identity(inv) &&
         a.structure_constants().row_sums();
}

// (Xy)^alpha = X y^alpha over sampled automorphisms, classes and points.
inline bool translate_property(const SRing& a, const PermGroup& aut,
                               std::mt19937& rng, int trials = 100) {
  const Group& g = a.group();
  const auto& gens = aut.generators();
  std::uniform_int_distribution<int> dx(0, a.rank() - 1);
  std::uniform_int_distribution<int> dy(0, g.order() - 1);
  std::uniform_int_distribution<int> dlen(1, 6);
  for (int t = 0; t < trials; ++t) {
    Perm alpha(g.order());
    if (!gens.empty()) {
      std::uniform_int_distribution<size_t> dg(0, gens.size() - 1);
      for (int i = dlen(rng); i > 0; --i) alpha = alpha * gens[dg(rng)];
    }
    const int cx = dx(rng), y = dy(rng);
    std::vector<int> lhs, rhs;
    for (int x : a.basic_set(cx)) {
      lhs.push_back(alpha[g.mul(x, y)]);
      rhs.push_back(g.mul(x, alpha[y]));
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) return false;
  }
  return true;
}

inline bool orbits_refine_classes(const SRing& a, const PermGroup& stab) {
  for (const auto& orb : stab.orbits())
    for (int x : orb)
      if (a.class_of(x) != a.class_of(orb.front())) return false;
  return true;
}

inline std::vector<std::vector<int>> partitions_of(int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int a = std::min(left, maxpart); a >= 1; --a) {
      cur.push_back(a);
      self(self, left - a, a);
      cur.pop_back();
    }
  };
  rec(rec, e, e);
  return out;
}

// One cyclic-factor list per isomorphism class of abelian groups of order n.
inline std::vector<std::vector<int>> abelian_factor_lists(int n) {
  std::vector<std::pair<int, int>> pe;  // prime, exponent
  int m = n;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      int e = 0;
      while (m % d == 0) m /= d, ++e;
      pe.emplace_back(d, e);
    }
  if (m > 1) pe.emplace_back(m, 1);
  std::vector<std::vector<int>> lists{{}};
  for (auto [p, e] : pe) {
    std::vector<std::vector<int>> next;
    for (const auto& part : partitions_of(e))
      for (const auto& base : lists) {
        auto ext = base;
        for (int a : part) {
          int q = 1;
          for (int i = 0; i < a; ++i) q *= p;
          ext.push_back(q);
        }
        next.push_back(std::move(ext));
      }
    lists = std::move(next);
  }
  if (n == 1) lists = {{1}};
  return lists;
}

inline Group abelian_group(const std::vector<int>& factors) {
  Group g = cyclic(factors.front());
  for (size_t i = 1; i < factors.size(); ++i)
    g = direct_product(g, cyclic(factors[i]));
  return g;
}

// S-rings to exercise per abelian group: the full enumeration when the
// order allows, otherwise trivial, full and the orbit rings of single
// power-map group automorphisms.
inline std::vector<SRing> power_suite_rings(const Group& g) {
  if (g.order() <= limits().max_enum_order) return enumerate_srings(g);
  std::vector<SRing> family{trivial_sring(g), full_group_ring(g)};
  std::set<std::vector<std::vector<int>>> seen;
  for (const SRing& a : family) seen.insert(a.basic_sets());
  for (int t = 2; t < g.order(); ++t) {
    if (std::gcd(t, g.order()) != 1) continue;
    std::vector<int> img(g.order());
    for (int x = 0; x < g.order(); ++x) img[x] = g.power(x, t);
    PermGroup k(g.order(), {Perm(std::move(img))});
    SRing a = cyclotomic(k, g);
    if (seen.insert(a.basic_sets()).second) family.push_back(std::move(a));
  }
  return family;
}

// 7: property sweep over every ring of criteria 1-6, plus the power-map
// sweep over all abelian groups of order <= 24.
inline CriterionResult c7() {
  CriterionResult r{7, "property suites", true, ""};
  std::mt19937 rng(20260818u);
  auto rings = suite_rings();
  for (const SuiteRing& sr : rings) {
    if (!triangle_and_row_sums(sr.ring)) {
      r.pass = false;
      r.detail = fail_at("structure-constant identity fails: " + sr.name);
      return r;
    }
    SRingAutData data = automorphism_group_data(sr.ring);
    if (!translate_property(sr.ring, data.aut, rng)) {
      r.pass = false;
      r.detail = fail_at("translate property fails: " + sr.name);
      return r;
    }
    if (!orbits_refine_classes(sr.ring, data.stabilizer)) {
      r.pass = false;
      r.detail = fail_at("stabilizer orbit escapes a basic set: " + sr.name);
      return r;
    }
    SRing module = transitivity_module(data.aut, sr.ring.group());
    if (!is_schurian(module)) {
      r.pass = false;
      r.detail = fail_at("transitivity module nonschurian: " + sr.name);
      return r;
    }
  }
  int groups = 0, checks = 0;
  for (int n = 1; n <= 24; ++n)
    for (const auto& factors : abelian_factor_lists(n)) {
      Group g = abelian_group(factors);
      ++groups;
      for (const SRing& a : power_suite_rings(g))
        for (int mm = 1; mm < std::max(2, g.order()); ++mm) {
          if (std::gcd(mm, g.order()) != 1) continue;
          if (!is_algebraic_isomorphism(power_map(a, mm))) {
            r.pass = false;
            r.detail = fail_at("power map fails: " + g.label() +
                               " m=" + std::to_string(mm));
            return r;
          }
          ++checks;
        }
    }
  r.detail = std::to_string(rings.size()) + " rings pass all properties; " +
             std::to_string(checks) + " power-map checks over " +
             std::to_string(groups) + " abelian groups";
  return r;
}

// 8: the embedding search finds a regular quaternion subgroup of the full
// symmetric group on 8 points and reports none inside the regular cyclic
// group.
inline CriterionResult c8() {
  CriterionResult r{8, "regular subgroup search on 8 points", true, ""};
  PermGroup sym8 = automorphism_group(trivial_sring(cyclic(8)));
  if (sym8.order() != 40320) {
    r.pass = false;
    r.detail = fail_at("Aut of the trivial ring is not Sym(8)");
    return r;
  }
  Group q8 = quaternion8();
  auto emb = find_regular_subgroup(sym8, q8);
  if (!emb) {
    r.pass = false;
    r.detail = fail_at("no quaternion subgroup found in Sym(8)");
    return r;
  }
  for (int x = 0; x < 8 && r.pass; ++x)
    for (int y = 0; y < 8; ++y)
      if (emb->image[x] * emb->image[y] != emb->image[q8.mul(x, y)]) {
        r.pass = false;
        r.detail = fail_at("embedding is not a homomorphism");
        return r;
      }
  std::vector<Perm> gens(emb->image.begin() + 1, emb->image.end());
  PermGroup h(8, gens);
  if (!h.is_regular() || h.order() != 8) {
    r.pass = false;
    r.detail = fail_at("image is not regular of order 8");
    return r;
  }
  if (find_regular_subgroup(right_regular_rep(cyclic(8)), q8)) {
    r.pass = false;
    r.detail = fail_at("phantom quaternion subgroup inside cyclic C8");
    return r;
  }
  r.detail = "found in Sym(8), none in regular C8";
  return r;
}

}  // namespace suite

inline std::vector<CriterionResult> paper_suite() {
  using Fn = CriterionResult (*)();
  const Fn fns[] = {suite::c1, suite::c2, suite::c3, suite::c4,
                    suite::c5, suite::c6, suite::c7, suite::c8};
  std::vector<CriterionResult> out;
  for (int i = 0; i < 8; ++i) {
    try {
      out.push_back(fns[i]());
    } catch (const std::exception& e) {
      out.push_back({i + 1, "criterion threw", false, e.what()});
    }
  }
  return out;
}

}  // namespace srl
