#include <catch2/catch_amalgamated.hpp>

#include "srl/perm_group.hpp"

using namespace srl;

namespace {
// Restores resource caps mutated by a test section.
struct LimitsGuard {
  Limits saved = limits();
  ~LimitsGuard() { limits() = saved; }
};

Perm cycle(int n, const std::vector<int>& c) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
  return Perm(std::move(img));
}
}  // namespace

TEST_CASE("permutation basics", "[perm]") {
  Perm a(std::vector<int>{1, 2, 0, 3});
  Perm b(std::vector<int>{0, 1, 3, 2});
  // composition applies the left factor first
  REQUIRE((a * b)[0] == 1);
  REQUIRE((a * b)[1] == 3);
  REQUIRE((b * a)[1] == 2);
  REQUIRE(a.inverse() * a == Perm(4));
  REQUIRE(a.order() == 3);
  REQUIRE(b.order() == 2);
  REQUIRE(a.support() == 3);
  REQUIRE_FALSE(a.fixed_point_free());
  REQUIRE(Perm(std::vector<int>{1, 0, 3, 2}).fixed_point_free());
  REQUIRE_THROWS_AS(Perm(std::vector<int>{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("orbits and transitivity", "[perm]") {
  PermGroup k(4, {cycle(4, {0, 1})});
  REQUIRE(k.order() == 2);
  REQUIRE(k.orbits() == std::vector<std::vector<int>>{{0, 1}, {2}, {3}});
  REQUIRE_FALSE(k.is_transitive());
  PermGroup rot(3, {cycle(3, {0, 1, 2})});
  REQUIRE(rot.is_transitive());
  REQUIRE(rot.is_regular());
  REQUIRE(rot.orbit_of(1) == std::vector<int>{0, 1, 2});
}

TEST_CASE("small symmetric group", "[perm]") {
  PermGroup s3(3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})});
  REQUIRE(s3.order() == 6);
  REQUIRE(s3.elements().size() == 6);
  REQUIRE(s3.is_transitive());
  REQUIRE_FALSE(s3.is_regular());
  REQUIRE(s3.contains(cycle(3, {1, 2})));
  PermGroup s4(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
  REQUIRE(s4.order() == 24);
  PermGroup stab = s4.point_stabilizer(0);
  REQUIRE(stab.order() == 6);
  REQUIRE(stab.orbits() == std::vector<std::vector<int>>{{0}, {1, 2, 3}});
}

TEST_CASE("large groups go through the stabilizer chain", "[perm]") {
  PermGroup s12(12, {cycle(12, {0, 1}),
                     cycle(12, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})});
  REQUIRE(s12.order() == 479001600u);
  REQUIRE_THROWS_AS(s12.elements(), cap_exceeded);
  REQUIRE(s12.contains(cycle(12, {3, 7})));
  REQUIRE(s12.point_stabilizer(0).order() == 39916800u);

  // the 11-cycle on 1..11 is even, so these generate the alternating group
  PermGroup a12(12, {cycle(12, {0, 1, 2}),
                     cycle(12, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11})});
  REQUIRE(a12.order() == 239500800u);
  REQUIRE(a12.contains(cycle(12, {0, 1}) * cycle(12, {2, 3})));
  REQUIRE_FALSE(a12.contains(cycle(12, {0, 1})));
}

TEST_CASE("right regular representation", "[perm]") {
  Group g = quaternion8();
  PermGroup k = right_regular_rep(g);
  REQUIRE(k.order() == 8);
  REQUIRE(k.is_regular());
  // x -> x*a for a = element 1
  Perm t = right_translation(g, 1);
  for (int x = 0; x < 8; ++x) REQUIRE(t[x] == g.mul(x, 1));
  REQUIRE(k.contains(t));
  Group d = dihedral(8);
  REQUIRE(right_translation(d, 4)[1] == 5);
}

TEST_CASE("regular subgroup search", "[perm]") {
  // C6 inside its own regular representation
  Group c6 = cyclic(6);
  auto emb = find_regular_subgroup(right_regular_rep(c6), c6);
  REQUIRE(emb.has_value());
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      REQUIRE(emb->image[x] * emb->image[y] == emb->image[c6.mul(x, y)]);

  // S3 regularly inside Sym(6)
  PermGroup s6(6, {cycle(6, {0, 1}), cycle(6, {0, 1, 2, 3, 4, 5})});
  Group s3 = dihedral(6);
  auto demb = find_regular_subgroup(s6, s3);
  REQUIRE(demb.has_value());
  std::vector<Perm> gens(demb->image.begin() + 1, demb->image.end());
  PermGroup h(6, gens);
  REQUIRE(h.is_regular());
  REQUIRE(h.order() == 6);

  // no C4 inside the regular Klein group: no order-4 elements available
  Group v4 = direct_product(cyclic(2), cyclic(2));
  REQUIRE_FALSE(find_regular_subgroup(right_regular_rep(v4), cyclic(4)));

  // degree mismatch is a precondition error
  REQUIRE_THROWS_AS(find_regular_subgroup(s6, cyclic(4)),
                    std::invalid_argument);

  // cap exhaustion is reported distinctly from absence (fresh group: the
  // element list is cached on first enumeration, so the cap is read then)
  LimitsGuard guard;
  limits().perm_enum_cap = 4;
  PermGroup s6b(6, {cycle(6, {0, 1}), cycle(6, {0, 1, 2, 3, 4, 5})});
  REQUIRE_THROWS_AS(find_regular_subgroup(s6b, s3), cap_exceeded);
}

TEST_CASE("point stabilizer via rebased chain", "[perm]") {
  LimitsGuard guard;
  limits().perm_enum_cap = 10;  // force the chain path even for S4
  PermGroup s4(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
  REQUIRE(s4.order() == 24);
  PermGroup stab = s4.point_stabilizer(2);
  REQUIRE(stab.order() == 6);
  for (const Perm& q : stab.generators()) REQUIRE(q[2] == 2);
}
