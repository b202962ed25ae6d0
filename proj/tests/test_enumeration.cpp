#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "srl/constructions.hpp"
#include "srl/enumeration.hpp"

using namespace srl;

namespace {

std::set<std::vector<std::vector<int>>> key_set(const std::vector<SRing>& rings) {
  std::set<std::vector<std::vector<int>>> out;
  for (const SRing& a : rings) out.insert(a.basic_sets());
  return out;
}

}  // namespace

TEST_CASE("wl closure reaches the coarsest refinement", "[enumeration]") {
  Group c4 = cyclic(4);

  // discrete partition is already coherent
  SRing fine = wl_closure(c4, {{0}, {1}, {2}, {3}});
  REQUIRE(fine.rank() == 4);

  // the identity class is always extracted
  SRing cyc = wl_closure(c4, {{0, 2}, {1, 3}});
  REQUIRE(cyc.basic_sets() == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});

  // inverse signatures force a cascade down to the group ring
  SRing casc = wl_closure(c4, {{0}, {1, 2}, {3}});
  REQUIRE(casc.rank() == 4);

  // the trivial partition is coherent as given
  SRing triv = wl_closure(c4, {{0}, {1, 2, 3}});
  REQUIRE(triv.rank() == 2);

  // pair counts separate r from the reflections
  Group d8 = dihedral(8);
  SRing d = wl_closure(d8, {{0, 1}, {2, 3, 4, 5, 6, 7}});
  REQUIRE(d.basic_sets() ==
          std::vector<std::vector<int>>{{0}, {1}, {2}, {3}, {4, 5, 6, 7}});

  // a fixpoint stays put
  SRing a = d8_zp_sring(5);
  SRing again = wl_closure(a.group(), a.basic_sets());
  REQUIRE(again.basic_sets() == a.basic_sets());

  REQUIRE_THROWS_AS(wl_closure(c4, {{0}, {1, 2}}), std::invalid_argument);
  REQUIRE_THROWS_AS(wl_closure(c4, {{0}, {1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("exhaustive listing over small groups", "[enumeration]") {
  std::vector<SRing> one = enumerate_srings(cyclic(2));
  REQUIRE(one.size() == 1);
  REQUIRE(one[0].rank() == 2);

  std::vector<SRing> c4r = enumerate_srings(cyclic(4));
  REQUIRE(c4r.size() == 3);
  REQUIRE(c4r.front().rank() == 2);
  REQUIRE(c4r.back().rank() == 4);
  std::multiset<int> ranks;
  for (const SRing& a : c4r) ranks.insert(a.rank());
  REQUIRE(ranks == std::multiset<int>{2, 3, 4});

  struct Row {
    Group g;
    size_t count;
  };
  std::vector<Row> rows;
  rows.push_back({cyclic(8), 10});
  rows.push_back({dihedral(8), 34});
  rows.push_back({quaternion8(), 26});
  rows.push_back({direct_product(cyclic(2), cyclic(2)), 5});
  rows.push_back({cyclic(6), 7});
  rows.push_back({direct_product(cyclic(4), cyclic(2)), 28});
  rows.push_back({direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)), 100});
  rows.push_back({dihedral(6), 10});
  for (const Row& row : rows) {
    std::vector<SRing> rings = enumerate_srings(row.g);
    INFO(row.g.label());
    REQUIRE(rings.size() == row.count);
    for (const SRing& a : rings) REQUIRE(a.group().order() == row.g.order());
  }

  REQUIRE_THROWS_AS(enumerate_srings(cyclic(13)), cap_exceeded);
}

TEST_CASE("listing agrees with the set-partition search", "[enumeration]") {
  std::vector<Group> groups;
  groups.push_back(cyclic(4));
  groups.push_back(cyclic(6));
  groups.push_back(cyclic(8));
  groups.push_back(dihedral(6));
  groups.push_back(dihedral(8));
  groups.push_back(quaternion8());
  groups.push_back(direct_product(cyclic(4), cyclic(2)));
  groups.push_back(direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)));
  for (const Group& g : groups) {
    INFO(g.label());
    REQUIRE(key_set(enumerate_srings(g)) == key_set(brute_force_srings(g)));
  }
  REQUIRE_THROWS_AS(brute_force_srings(cyclic(9)), std::invalid_argument);
}

TEST_CASE("census over the order-8 groups", "[enumeration]") {
  struct Row {
    Group g;
    const char* label;
    int total;
    std::map<int, int> hist;
  };
  std::vector<Row> rows;
  rows.push_back({cyclic(8), "C8", 10,
                  {{2, 1}, {3, 2}, {4, 1}, {5, 4}, {6, 1}, {8, 1}}});
  rows.push_back({dihedral(8), "D8", 34,
                  {{2, 1}, {3, 8}, {4, 15}, {5, 6}, {6, 3}, {8, 1}}});
  rows.push_back({quaternion8(), "Q8", 26,
                  {{2, 1}, {3, 4}, {4, 7}, {5, 10}, {6, 3}, {8, 1}}});
  for (const Row& row : rows) {
    CensusReport rep = schurity_census(row.g, row.label);
    INFO(row.label);
    REQUIRE(rep.label == row.label);
    REQUIRE(rep.total == row.total);
    REQUIRE(rep.schurian == row.total);
    REQUIRE(rep.nonschurian == 0);
    REQUIRE(rep.rank_histogram == row.hist);
  }
}
