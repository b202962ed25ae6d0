#include <catch2/catch_amalgamated.hpp>

#include "srl/group.hpp"

using namespace srl;

TEST_CASE("cyclic groups", "[group]") {
  Group g = cyclic(6);
  REQUIRE(g.order() == 6);
  REQUIRE(g.label() == "C6");
  REQUIRE(g.associative());
  REQUIRE(g.abelian());
  REQUIRE(g.mul(4, 5) == 3);
  REQUIRE(g.inv(2) == 4);
  REQUIRE(g.element_order(1) == 6);
  REQUIRE(g.element_order(2) == 3);
  REQUIRE(g.order_census() == std::map<int, int>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
  REQUIRE(g.power(1, 100) == 4);
  REQUIRE(g.power(1, -1) == 5);
  REQUIRE(cyclic(1).order() == 1);
  REQUIRE_THROWS_AS(cyclic(0), std::invalid_argument);
}

TEST_CASE("dihedral groups", "[group]") {
  Group g = dihedral(8);
  REQUIRE(g.order() == 8);
  REQUIRE(g.associative());
  REQUIRE_FALSE(g.abelian());
  // five involutions: r^2 and the four reflections
  REQUIRE(g.order_census() == std::map<int, int>{{1, 1}, {2, 5}, {4, 2}});
  // s r s = r^-1: indices 4 = s, 1 = r
  REQUIRE(g.mul(g.mul(4, 1), 4) == 3);
  REQUIRE(g.center() == std::vector<int>{0, 2});
  REQUIRE_THROWS_AS(dihedral(7), std::invalid_argument);
  REQUIRE_THROWS_AS(dihedral(2), std::invalid_argument);
  REQUIRE(dihedral(12).order_census() ==
          std::map<int, int>{{1, 1}, {2, 7}, {3, 2}, {6, 2}});
}

TEST_CASE("quaternion group", "[group]") {
  Group g = quaternion8();
  REQUIRE(g.order() == 8);
  REQUIRE(g.associative());
  REQUIRE_FALSE(g.abelian());
  REQUIRE(g.order_census() == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});
  // a^2 = b^2 (indices: a = 1, a^2 = 2, b = 4)
  REQUIRE(g.mul(4, 4) == 2);
  // b a b^-1 = a^-1
  REQUIRE(g.mul(g.mul(4, 1), g.inv(4)) == 3);
  REQUIRE(g.center() == std::vector<int>{0, 2});
}

TEST_CASE("central product of order 16", "[group]") {
  Group g = g16();
  REQUIRE(g.order() == 16);
  REQUIRE(g.associative());
  REQUIRE_FALSE(g.abelian());
  REQUIRE(g.order_census() == std::map<int, int>{{1, 1}, {2, 7}, {4, 8}});
  // center is cyclic of order 4
  std::vector<int> z = g.center();
  REQUIRE(z.size() == 4);
  bool has_order4 = false;
  for (int x : z) has_order4 = has_order4 || g.element_order(x) == 4;
  REQUIRE(has_order4);
}

TEST_CASE("direct products", "[group]") {
  Group g = direct_product(dihedral(8), cyclic(5));
  REQUIRE(g.order() == 40);
  REQUIRE(g.label() == "D8xC5");
  REQUIRE(g.associative());
  // (h1,k1)(h2,k2) under the i*n2+j index layout
  REQUIRE(g.mul(1 * 5 + 2, 1 * 5 + 4) == 2 * 5 + 1);
  REQUIRE(direct_product(cyclic(2), cyclic(3)).order_census() ==
          cyclic(6).order_census());
  REQUIRE_THROWS_AS(direct_product(cyclic(64), cyclic(65)), cap_exceeded);
}

TEST_CASE("table validation", "[group]") {
  REQUIRE_THROWS_AS(Group({{0, 1}, {1, 1}}, "bad"), std::invalid_argument);
  REQUIRE_THROWS_AS(Group({{1, 0}, {0, 1}}, "bad"), std::invalid_argument);
  REQUIRE_THROWS_AS(Group({{0}, {0}}, "bad"), std::invalid_argument);
  REQUIRE_THROWS_AS(Group({}, "bad"), std::invalid_argument);
}

TEST_CASE("subgroups", "[group]") {
  Group g = dihedral(8);
  Subgroup rot = subgroup_generated(g, {1});
  REQUIRE(rot.elements == std::vector<int>{0, 1, 2, 3});
  REQUIRE(is_subgroup(g, rot));
  REQUIRE(is_normal(g, rot));
  Subgroup refl = subgroup_generated(g, {4});
  REQUIRE(refl.elements == std::vector<int>{0, 4});
  int witness = -1;
  REQUIRE_FALSE(is_normal(g, refl, &witness));
  REQUIRE(witness >= 0);
  REQUIRE_FALSE(is_subgroup(g, Subgroup{{0, 1}}));
  REQUIRE(is_subgroup(g, whole_group(g)));
  REQUIRE(is_subgroup(g, trivial_subgroup()));
}

TEST_CASE("sections and quotients", "[group]") {
  Group g = quaternion8();
  Subgroup z = subgroup_generated(g, {2});
  REQUIRE(z.elements == std::vector<int>{0, 2});
  Section s = quotient(g, z);
  REQUIRE(s.quotient.order() == 4);
  // Q8 / <a^2> is the Klein group
  REQUIRE(s.quotient.order_census() == std::map<int, int>{{1, 1}, {2, 3}});
  REQUIRE(s.project(0) == 0);
  REQUIRE(s.project(2) == 0);
  REQUIRE(s.project(1) == s.project(3));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      REQUIRE(s.quotient.mul(s.project(x), s.project(y)) ==
              s.project(g.mul(x, y)));
  // non-normal A is rejected
  Group d = dihedral(8);
  REQUIRE_THROWS_AS(make_section(d, whole_group(d), subgroup_generated(d, {4})),
                    std::invalid_argument);
}

TEST_CASE("generating sets", "[group]") {
  REQUIRE(small_generating_set(cyclic(8)) == std::vector<int>{1});
  REQUIRE(small_generating_set(quaternion8()) == std::vector<int>{1, 4});
  REQUIRE(small_generating_set(cyclic(1)).empty());
  Group v4 = direct_product(cyclic(2), cyclic(2));
  REQUIRE(small_generating_set(v4) == std::vector<int>{1, 2});
}
