#include <catch2/catch_amalgamated.hpp>

#include "srl/constructions.hpp"
#include "srl/schurity.hpp"

using namespace srl;

TEST_CASE("primes and primitive roots", "[construct]") {
  REQUIRE(is_prime(2));
  REQUIRE(is_prime(13));
  REQUIRE_FALSE(is_prime(1));
  REQUIRE_FALSE(is_prime(91));
  REQUIRE(smallest_primitive_root(13) == 2);
  REQUIRE(smallest_primitive_root(7) == 3);
  REQUIRE(smallest_primitive_root(41) == 6);
}

TEST_CASE("residue orbit systems", "[construct]") {
  CycOrbitSystem sys = cyc_orbit_system(13, 4);
  REQUIRE(sys.m == 3);
  REQUIRE(sys.g == 2);
  REQUIRE(sys.orbit[1] == std::vector<int>{1, 3, 9});
  REQUIRE(sys.orbit[2] == std::vector<int>{2, 5, 6});
  REQUIRE(sys.orbit[3] == std::vector<int>{4, 10, 12});
  REQUIRE(sys.orbit[4] == std::vector<int>{7, 8, 11});
  // multiplication by g rotates the orbits cyclically
  for (int i = 1; i <= 4; ++i)
    for (int x : sys.orbit[i]) {
      REQUIRE(sys.orbit_of[x] == i);
      REQUIRE(sys.orbit_of[(x * sys.g) % 13] == sys.shift(i));
    }
  // odd m: inversion swaps C_i with C_{i+2}
  for (int x : sys.orbit[1]) REQUIRE(sys.orbit_of[(13 - x) % 13] == 3);
  for (int x : sys.orbit[2]) REQUIRE(sys.orbit_of[(13 - x) % 13] == 4);

  // even m: every orbit is inverse-closed
  CycOrbitSystem s6 = cyc_orbit_system(13, 6);
  REQUIRE(s6.m == 2);
  REQUIRE(s6.orbit[1] == std::vector<int>{1, 12});
  for (int i = 1; i <= 6; ++i)
    for (int x : s6.orbit[i]) REQUIRE(s6.orbit_of[(13 - x) % 13] == i);

  REQUIRE_THROWS_AS(cyc_orbit_system(12, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(cyc_orbit_system(13, 5), std::invalid_argument);
}

TEST_CASE("dihedral fiber ring", "[construct]") {
  SRing a = d8_zp_sring(5);
  REQUIRE(a.group().order() == 40);
  REQUIRE(a.rank() == 19);
  // index layout: h*p + k with rotations 0..3, reflections 4..7
  REQUIRE(a.is_a_set({1 * 5, 3 * 5, 4 * 5, 6 * 5}));      // {a,a3,b,a2b} x {0}
  REQUIRE(a.is_a_set({5 * 5, 7 * 5}));                    // {ab,a3b} x {0}
  REQUIRE(a.is_a_set({0 * 5 + 1, 2 * 5 + 1}));            // {e,a2} c
  REQUIRE(a.is_a_set({1 * 5 + 1, 4 * 5 + 1}));            // {a,b} c
  REQUIRE(a.is_a_set({3 * 5 + 4, 4 * 5 + 4}));            // {a3,b} c^-1
  REQUIRE(a.is_a_set({1 * 5 + 2, 3 * 5 + 2, 4 * 5 + 2, 6 * 5 + 2}));
  REQUIRE(d8_zp_sring(7).rank() == 25);
  REQUIRE(d8_zp_sring(11).rank() == 37);
  REQUIRE_THROWS_AS(d8_zp_sring(4), std::invalid_argument);
  REQUIRE_THROWS_AS(d8_zp_sring(3), std::invalid_argument);
}

TEST_CASE("central subgroup and quotient section", "[construct]") {
  Subgroup a1 = central_a1(5);
  REQUIRE(a1.elements == std::vector<int>{0, 10});
  Group g = direct_product(dihedral(8), cyclic(5));
  REQUIRE(is_subgroup(g, a1));
  REQUIRE(is_normal(g, a1));
  Section s = d8zp_quotient_section(5);
  REQUIRE(s.quotient.order() == 20);

  Perm sigma = sigma_involution(5);
  REQUIRE(sigma.degree() == 20);
  REQUIRE_FALSE(sigma.is_identity());
  REQUIRE((sigma * sigma).is_identity());
  // sigma fixes every rotation coset and the identity coset fiber
  for (int k = 0; k < 5; ++k) {
    REQUIRE(sigma[s.project(k)] == s.project(k));
    REQUIRE(sigma[s.project(1 * 5 + k)] == s.project(4 * 5 + k));
  }
  // sigma is an automorphism of the quotient ring
  SRing q = quotient_sring(d8_zp_sring(5), s);
  REQUIRE(q.rank() == 15);
  REQUIRE(ColorMatrix(q).preserved_by(sigma));
}

TEST_CASE("quaternion fiber rings", "[construct]") {
  SRing a = q8_zp_l4(5);
  REQUIRE(a.group().order() == 40);
  REQUIRE(a.rank() == 10);
  std::multiset<size_t> sizes;
  for (const auto& c : a.basic_sets()) sizes.insert(c.size());
  REQUIRE(sizes == std::multiset<size_t>{1, 1, 2, 4, 4, 4, 8, 4, 4, 8});

  SRing b = q8_zp_l6(7);
  REQUIRE(b.group().order() == 56);
  REQUIRE(b.rank() == 9);
  std::multiset<size_t> bs;
  for (const auto& c : b.basic_sets()) bs.insert(c.size());
  // {e},{a2},{order-4 reps}x{0},{e}xZp^#,{a2}xZp^#, two 12s, two 6s
  REQUIRE(bs == std::multiset<size_t>{1, 1, 6, 6, 6, 12, 12, 6, 6});

  REQUIRE(q8_zp_l4(13).rank() == 10);
  REQUIRE(q8_zp_l6(13).rank() == 9);
  REQUIRE_THROWS_AS(q8_zp_l4(7), std::invalid_argument);
  REQUIRE_THROWS_AS(q8_zp_l6(5), std::invalid_argument);
}

TEST_CASE("quaternion automorphism frame", "[construct]") {
  Q8Frame fr = q8_frame();
  REQUIRE(fr.u_elements.size() == 8);
  REQUIRE(fr.v_elements.size() == 12);
  REQUIRE(fr.u0_elements.size() == 4);
  Group q8 = quaternion8();
  for (const Perm& s : fr.u_elements) REQUIRE(is_group_automorphism(q8, s));
  for (const Perm& s : fr.v_elements) REQUIRE(is_group_automorphism(q8, s));
  // U0 = U meet V
  for (const Perm& s : fr.u0_elements) {
    REQUIRE(std::count(fr.u_elements.begin(), fr.u_elements.end(), s) == 1);
    REQUIRE(std::count(fr.v_elements.begin(), fr.v_elements.end(), s) == 1);
  }
  // the residue map V -> Z3 is a homomorphism with kernel U0
  for (const Perm& s : fr.v_elements)
    for (const Perm& t : fr.v_elements)
      REQUIRE(fr.pi2(s * t) == (fr.pi2(s) + fr.pi2(t)) % 3);
  for (const Perm& s : fr.u0_elements) REQUIRE(fr.pi2(s) == 0);
}

TEST_CASE("point overgroups of the quaternion fiber rings", "[construct]") {
  PermGroup k4 = k_groups(5, 4);
  REQUIRE(k4.degree() == 40);
  REQUIRE(k4.order() == 16);
  Group g = direct_product(quaternion8(), cyclic(5));
  for (size_t i = 0; i < 3; ++i)
    REQUIRE(is_group_automorphism(g, k4.generators()[i]));

  PermGroup k6 = k_groups(7, 6);
  REQUIRE(k6.degree() == 56);
  REQUIRE(k6.order() == 24);

  REQUIRE_THROWS_AS(k_groups(5, 6), std::invalid_argument);
  REQUIRE_THROWS_AS(k_groups(13, 5), std::invalid_argument);
}
