#include <catch2/catch_amalgamated.hpp>

#include "srl/group_aut.hpp"
#include "srl/sring.hpp"

using namespace srl;

namespace {
// the rank-3 ring {e}, {a^2}, {a, a^3} over C4
SRing c4_rank3() {
  return SRing::from_partition(cyclic(4), {{0}, {2}, {1, 3}});
}
}  // namespace

TEST_CASE("trivial and full rings", "[sring]") {
  Group g = quaternion8();
  SRing t = trivial_sring(g);
  REQUIRE(t.rank() == 2);
  REQUIRE(t.basic_sets() ==
          std::vector<std::vector<int>>{{0}, {1, 2, 3, 4, 5, 6, 7}});
  SRing f = full_group_ring(g);
  REQUIRE(f.rank() == 8);
  REQUIRE(trivial_sring(cyclic(1)).rank() == 1);
}

TEST_CASE("partition axioms are enforced with witnesses", "[sring]") {
  Group g = cyclic(4);
  PartitionViolation why;

  REQUIRE_FALSE(SRing::try_from_partition(g, {{0}, {1, 2}}, &why));
  REQUIRE(why.axiom == "partition");

  REQUIRE_FALSE(SRing::try_from_partition(g, {{0}, {1, 2}, {2, 3}}, &why));
  REQUIRE(why.axiom == "partition");

  REQUIRE_FALSE(SRing::try_from_partition(g, {{0, 1}, {2, 3}}, &why));
  REQUIRE(why.axiom == "identity");

  // inverse of {1,2} is {3,2}, not a class
  REQUIRE_FALSE(SRing::try_from_partition(g, {{0}, {1, 2}, {3}}, &why));
  REQUIRE(why.axiom == "inverse");
  REQUIRE_FALSE(why.witness.empty());

  // inverse-closed but incoherent over C5
  REQUIRE_FALSE(
      SRing::try_from_partition(cyclic(5), {{0}, {1, 2}, {3, 4}}, &why));
  REQUIRE(why.axiom == "coherence");

  REQUIRE_THROWS_AS(SRing::from_partition(g, {{0, 1}, {2, 3}}),
                    std::invalid_argument);
}

TEST_CASE("classes are normalized", "[sring]") {
  SRing a = SRing::from_partition(cyclic(4), {{3, 1}, {2}, {0}});
  REQUIRE(a.basic_sets() == std::vector<std::vector<int>>{{0}, {1, 3}, {2}});
  REQUIRE(a.class_of(3) == 1);
  REQUIRE(a.inverse_class(1) == 1);
  REQUIRE(a == c4_rank3());
}

TEST_CASE("structure constants", "[sring]") {
  SRing a = c4_rank3();
  const StructureConstants& sc = a.structure_constants();
  // X = {a, a^3}: XX covers e twice, a^2 twice, X never
  const int x = a.class_of(1), e = 0, s = a.class_of(2);
  REQUIRE(sc.c(x, x, e) == 2);
  REQUIRE(sc.c(x, x, s) == 2);
  REQUIRE(sc.c(x, x, x) == 0);
  REQUIRE(sc.c(s, x, x) == 1);
  REQUIRE(sc.c(e, x, x) == 1);

  std::vector<int> inv(a.rank());
  for (int i = 0; i < a.rank(); ++i) inv[i] = a.inverse_class(i);
  REQUIRE(sc.triangle_identity(inv));
  REQUIRE(sc.row_sums());
}

TEST_CASE("class unions and A-subgroups", "[sring]") {
  SRing a = c4_rank3();
  REQUIRE(a.is_a_set({0, 2}));
  REQUIRE_FALSE(a.is_a_set({0, 1}));
  REQUIRE(a.is_a_subgroup(Subgroup{{0, 2}}));
  REQUIRE_FALSE(a.is_a_subgroup(Subgroup{{0, 1}}));

  auto subs = a_subgroups(a);
  REQUIRE(subs.size() == 3);
  REQUIRE(subs[0].elements == std::vector<int>{0});
  REQUIRE(subs[1].elements == std::vector<int>{0, 2});
  REQUIRE(subs[2].elements == std::vector<int>{0, 1, 2, 3});

  // the full ring sees every subgroup of Q8
  REQUIRE(a_subgroups(full_group_ring(quaternion8())).size() == 6);
  // the trivial ring sees only the two obvious ones
  REQUIRE(a_subgroups(trivial_sring(quaternion8())).size() == 2);
}

TEST_CASE("quotient rings", "[sring]") {
  // full ring over C4 modulo <a^2>: full ring over C2
  SRing f = full_group_ring(cyclic(4));
  Section s = quotient(cyclic(4), Subgroup{{0, 2}});
  SRing q = quotient_sring(f, s);
  REQUIRE(q.rank() == 2);
  REQUIRE(q.group().order() == 2);

  // B must be an A-subgroup
  SRing t = trivial_sring(cyclic(4));
  REQUIRE_THROWS_AS(quotient_sring(t, s), std::invalid_argument);
}

TEST_CASE("tensor products", "[sring]") {
  SRing a = c4_rank3();
  SRing b = full_group_ring(cyclic(3));
  SRing t = tensor_product(a, b);
  REQUIRE(t.rank() == 9);
  REQUIRE(t.group().order() == 12);

  // the product ring splits over its factor subgroups
  Subgroup u{{0, 3, 6, 9}};  // C4 x {e}
  Subgroup v{{0, 1, 2}};     // {e} x C3
  REQUIRE(is_tensor(t, u, v));

  // the trivial ring over C12 does not split over the same pair
  REQUIRE_FALSE(is_tensor(trivial_sring(t.group()), u, v));

  // overlapping factors are a precondition error
  REQUIRE_THROWS_AS(is_tensor(t, u, Subgroup{{0, 3, 6, 9}}),
                    std::invalid_argument);
}

TEST_CASE("wreath decomposition", "[sring]") {
  // rank-3 ring over C4: {a, a^3} is a coset of <a^2>, so the ring is an
  // S-wreath product over the section <a^2>/<a^2>
  SRing a = c4_rank3();
  Section s = make_section(cyclic(4), Subgroup{{0, 2}}, Subgroup{{0, 2}});
  SWreathReport rep = is_s_wreath(a, s);
  REQUIRE(rep.wreath);

  // the full ring is not: singleton classes outside B are not cosets
  REQUIRE_FALSE(is_s_wreath(full_group_ring(cyclic(4)), s).wreath);
}

TEST_CASE("power maps", "[sring]") {
  SRing a = SRing::from_partition(
      cyclic(8), {{0}, {4}, {2, 6}, {1, 3, 5, 7}});
  for (int m : {1, 3, 5, 7}) {
    AlgebraicMap f = power_map(a, m);
    REQUIRE(is_algebraic_isomorphism(f));
    REQUIRE(f.class_image[0] == 0);
  }
  REQUIRE_THROWS_AS(power_map(a, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(power_map(trivial_sring(quaternion8()), 3),
                    std::invalid_argument);

  // full ring over C8: m = 3 permutes the singletons by multiplication
  AlgebraicMap f = power_map(full_group_ring(cyclic(8)), 3);
  REQUIRE(is_algebraic_isomorphism(f));
  REQUIRE(f.class_image[1] == 3);
}

TEST_CASE("algebraic isomorphism rejects a broken map", "[sring]") {
  SRing f = full_group_ring(cyclic(8));
  AlgebraicMap id = power_map(f, 1);
  REQUIRE(is_algebraic_isomorphism(id));
  // swapping two classes breaks c^{2}_{1,1} = 1
  AlgebraicMap bad = id;
  std::swap(bad.class_image[1], bad.class_image[2]);
  REQUIRE_FALSE(is_algebraic_isomorphism(bad));
}
