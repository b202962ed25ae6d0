#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "srl/base.hpp"
#include "srl/group.hpp"
#include "srl/perm.hpp"
#include "srl/perm_group.hpp"
#include "srl/sring.hpp"

namespace srl {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline int smallest_primitive_root(int p) {
  std::vector<int> fac;
  int m = p - 1;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) fac.push_back(m);
  auto powmod = [p](long long b, long long e) {
    long long r = 1;
    b %= p;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return static_cast<int>(r);
  };
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int q : fac)
      if (powmod(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("smallest_primitive_root: none found");
}

// The orbits C_1..C_l of the index-l subgroup M of Aut(Z_p) on nonzero
// residues: C_1 is the subgroup of l-th power residues (the M-orbit of 1),
// C_{i+1} = g*C_i for the smallest primitive root g.  Multiplication by g
// realizes the l-cycle (C_1 ... C_l) on class indices.
struct CycOrbitSystem {
  int p = 0;
  int l = 0;
  int m = 0;  // (p-1)/l
  int g = 0;  // smallest primitive root mod p
  std::vector<std::vector<int>> orbit;  // orbit[1..l] sorted; orbit[0] empty
  std::vector<int> orbit_of;            // residue -> 1..l (0 for residue 0)

  int shift(int i) const { return i % l + 1; }
};

inline CycOrbitSystem cyc_orbit_system(int p, int l) {
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument("cyc_orbit_system: p must be an odd prime");
  if ((p - 1) % l != 0)
    throw std::invalid_argument("cyc_orbit_system: l must divide p-1");
  CycOrbitSystem sys;
  sys.p = p;
  sys.l = l;
  sys.m = (p - 1) / l;
  sys.g = smallest_primitive_root(p);
  sys.orbit.assign(l + 1, {});
  std::vector<int>& c1 = sys.orbit[1];
  {
    long long gl = 1;
    for (int i = 0; i < l; ++i) gl = gl * sys.g % p;
    long long x = 1;
    for (int t = 0; t < sys.m; ++t) {
      c1.push_back(static_cast<int>(x));
      x = x * gl % p;
    }
    std::sort(c1.begin(), c1.end());
  }
  for (int i = 2; i <= l; ++i) {
    for (int x : sys.orbit[i - 1])
      sys.orbit[i].push_back(static_cast<int>(static_cast<long long>(x) * sys.g % p));
    std::sort(sys.orbit[i].begin(), sys.orbit[i].end());
  }
  sys.orbit_of.assign(p, 0);
  for (int i = 1; i <= l; ++i)
    for (int x : sys.orbit[i]) sys.orbit_of[x] = i;
  return sys;
}

namespace detail {
// Element indices shared by the dihedral(8) and quaternion8() tables:
// rotations first, then the reflected/antipodal coset.
enum : int { E8 = 0, A = 1, A2 = 2, A3 = 3, B = 4, AB = 5, A2B = 6, A3B = 7 };
}  // namespace detail

// The rank 13+3(p-3) S-ring over D8 x Z_p: five classes at the identity
// fiber, four at c, four at c^{-1}, and three per remaining fiber.
inline SRing d8_zp_sring(int p) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("d8_zp_sring: p must be a prime >= 5");
  using namespace detail;
  Group g = direct_product(dihedral(8), cyclic(p));
  auto at = [p](int h, int k) { return h * p + ((k % p) + p) % p; };
  auto fiber = [&](std::initializer_list<int> hs, int k) {
    std::vector<int> c;
    for (int h : hs) c.push_back(at(h, k));
    std::sort(c.begin(), c.end());
    return c;
  };
  std::vector<std::vector<int>> classes;
  classes.push_back(fiber({E8}, 0));
  classes.push_back(fiber({A2}, 0));
  classes.push_back(fiber({AB}, 0));
  classes.push_back(fiber({A3B}, 0));
  classes.push_back(fiber({A, A3, B, A2B}, 0));
  classes.push_back(fiber({E8, A2}, 1));
  classes.push_back(fiber({AB, A3B}, 1));
  classes.push_back(fiber({A, B}, 1));
  classes.push_back(fiber({A3, A2B}, 1));
  classes.push_back(fiber({E8, A2}, -1));
  classes.push_back(fiber({AB, A3B}, -1));
  classes.push_back(fiber({A3, B}, -1));
  classes.push_back(fiber({A, A2B}, -1));
  for (int k = 2; k <= p - 2; ++k) {
    classes.push_back(fiber({E8, A2}, k));
    classes.push_back(fiber({AB, A3B}, k));
    classes.push_back(fiber({A, A3, B, A2B}, k));
  }
  return SRing::from_partition(g, std::move(classes));
}

// A_1 = <a^2> x {0} inside D8 x Z_p (also Q8 x Z_p; same index layout).
inline Subgroup central_a1(int p) { return Subgroup{{0, detail::A2 * p}}; }

// The section (G)/(A_1) for G = D8 x Z_p, with cosets listed by smallest
// element; the domain of sigma_involution.
inline Section d8zp_quotient_section(int p) {
  Group g = direct_product(dihedral(8), cyclic(p));
  return make_section(g, whole_group(g), central_a1(p));
}

// The involution interchanging A_1 a c^k with A_1 b c^k and fixing the other
// cosets, on the coset numbering of d8zp_quotient_section.
inline Perm sigma_involution(int p) {
  if (p < 5 || !is_prime(p))
    throw std::invalid_argument("sigma_involution: p must be a prime >= 5");
  using namespace detail;
  Section s = d8zp_quotient_section(p);
  std::vector<int> img(s.quotient.order());
  for (int i = 0; i < s.quotient.order(); ++i) img[i] = i;
  for (int k = 0; k < p; ++k) {
    const int ia = s.project(A * p + k);
    const int ib = s.project(B * p + k);
    std::swap(img[ia], img[ib]);
  }
  return Perm(std::move(img));
}

// The 10-class S-ring over Q8 x Z_p built on the quartic orbit system.
inline SRing q8_zp_l4(int p) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("q8_zp_l4: p must be a prime = 1 mod 4");
  using namespace detail;
  Group g = direct_product(quaternion8(), cyclic(p));
  CycOrbitSystem sys = cyc_orbit_system(p, 4);
  auto at = [p](int h, int k) { return h * p + k % p; };
  auto add = [&](std::vector<int>& c, std::initializer_list<int> hs,
                 const std::vector<int>& ks) {
    for (int h : hs)
      for (int k : ks) c.push_back(at(h, k));
  };
  std::vector<int> all;
  for (int k = 1; k < p; ++k) all.push_back(k);

  std::vector<std::vector<int>> cls(10);
  cls[0] = {at(E8, 0)};
  cls[1] = {at(A2, 0)};
  add(cls[2], {AB, A3B}, {0});
  add(cls[3], {A, A3, B, A2B}, {0});
  add(cls[4], {E8}, all);
  add(cls[5], {A2}, all);
  add(cls[6], {A, A3}, sys.orbit[2]);
  add(cls[6], {A, A3}, sys.orbit[4]);
  add(cls[6], {B, A2B}, sys.orbit[1]);
  add(cls[6], {B, A2B}, sys.orbit[3]);
  add(cls[7], {A}, sys.orbit[1]);
  add(cls[7], {A3}, sys.orbit[3]);
  add(cls[7], {B}, sys.orbit[2]);
  add(cls[7], {A2B}, sys.orbit[4]);
  add(cls[8], {A}, sys.orbit[3]);
  add(cls[8], {A3}, sys.orbit[1]);
  add(cls[8], {B}, sys.orbit[4]);
  add(cls[8], {A2B}, sys.orbit[2]);
  add(cls[9], {AB, A3B}, all);
  return SRing::from_partition(g, std::move(cls));
}

// The 9-class S-ring over Q8 x Z_p built on the sextic orbit system.
inline SRing q8_zp_l6(int p) {
  if (!is_prime(p) || p % 6 != 1)
    throw std::invalid_argument("q8_zp_l6: p must be a prime = 1 mod 6");
  using namespace detail;
  Group g = direct_product(quaternion8(), cyclic(p));
  CycOrbitSystem sys = cyc_orbit_system(p, 6);
  auto at = [p](int h, int k) { return h * p + k % p; };
  auto add = [&](std::vector<int>& c, std::initializer_list<int> hs,
                 const std::vector<int>& ks) {
    for (int h : hs)
      for (int k : ks) c.push_back(at(h, k));
  };
  std::vector<int> all;
  for (int k = 1; k < p; ++k) all.push_back(k);

  std::vector<std::vector<int>> cls(9);
  cls[0] = {at(E8, 0)};
  cls[1] = {at(A2, 0)};
  add(cls[2], {A, A3, B, A2B, AB, A3B}, {0});
  add(cls[3], {E8}, all);
  add(cls[4], {A2}, all);
  for (int i : {1, 4}) add(cls[5], {A, A3}, sys.orbit[i]);
  for (int i : {2, 5}) add(cls[5], {B, A2B}, sys.orbit[i]);
  for (int i : {3, 6}) add(cls[5], {AB, A3B}, sys.orbit[i]);
  for (int i : {2, 5}) add(cls[6], {A, A3}, sys.orbit[i]);
  for (int i : {3, 6}) add(cls[6], {B, A2B}, sys.orbit[i]);
  for (int i : {1, 4}) add(cls[6], {AB, A3B}, sys.orbit[i]);
  add(cls[7], {A}, sys.orbit[3]);
  add(cls[7], {A2B}, sys.orbit[4]);
  add(cls[7], {AB}, sys.orbit[5]);
  add(cls[7], {A3}, sys.orbit[6]);
  add(cls[7], {B}, sys.orbit[1]);
  add(cls[7], {A3B}, sys.orbit[2]);
  add(cls[8], {A}, sys.orbit[6]);
  add(cls[8], {A2B}, sys.orbit[1]);
  add(cls[8], {AB}, sys.orbit[2]);
  add(cls[8], {A3}, sys.orbit[3]);
  add(cls[8], {B}, sys.orbit[4]);
  add(cls[8], {A3B}, sys.orbit[5]);
  return SRing::from_partition(g, std::move(cls));
}

// The three quaternion automorphisms the section 4 groups are built from,
// with the dihedral group U they generate alongside the alternating V.
struct Q8Frame {
  Perm sigma1, sigma2, sigma3;
  std::vector<Perm> u_elements;   // <sigma1, sigma2>, order 8
  std::vector<Perm> v_elements;   // <sigma1^2, sigma2, sigma3>, order 12
  std::vector<Perm> u0_elements;  // <sigma1^2, sigma2>, order 4

  bool in_u0(const Perm& s) const {
    return std::find(u0_elements.begin(), u0_elements.end(), s) !=
           u0_elements.end();
  }
  // s = v0 * sigma3^j for s in V; returns j in {0,1,2}
  int pi2(const Perm& s) const {
    Perm x = s;
    Perm s3inv = sigma3.inverse();
    for (int j = 0; j < 3; ++j) {
      if (in_u0(x)) return j;
      x = x * s3inv;
    }
    throw std::logic_error("Q8Frame::pi2: element not in V");
  }
};

namespace detail {

inline std::optional<Perm> q8_aut_from_images(int ia, int ib) {
  Group h = quaternion8();
  std::vector<int> img(8, -1);
  img[0] = 0;
  img[A] = ia;
  img[B] = ib;
  for (int pass = 0; pass < 4; ++pass)
    for (int x = 0; x < 8; ++x) {
      if (img[x] < 0) continue;
      for (auto [src, dst] : {std::pair{A, ia}, std::pair{B, ib}}) {
        const int y = h.mul(x, src);
        const int ny = h.mul(img[x], dst);
        if (img[y] < 0)
          img[y] = ny;
        else if (img[y] != ny)
          return std::nullopt;
      }
    }
  std::vector<char> hit(8, 0);
  for (int v : img) {
    if (v < 0 || hit[v]) return std::nullopt;
    hit[v] = 1;
  }
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y)
      if (img[h.mul(x, y)] != h.mul(img[x], img[y])) return std::nullopt;
  return Perm(std::move(img));
}

inline std::vector<Perm> perm_closure(const std::vector<Perm>& gens, int deg) {
  std::vector<Perm> out{Perm(deg)};
  std::vector<Perm> frontier = out;
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier)
      for (const Perm& g : gens) {
        Perm y = x * g;
        if (std::find(out.begin(), out.end(), y) == out.end()) {
          out.push_back(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace detail

inline Q8Frame q8_frame() {
  using namespace detail;
  Q8Frame f;
  f.sigma1 = q8_aut_from_images(B, A3).value();     // (a,b) -> (b, a^3)
  f.sigma2 = q8_aut_from_images(A3, B).value();     // (a,b) -> (a^3, b)
  f.sigma3 = q8_aut_from_images(A2B, A3B).value();  // (a,b) -> (a^2 b, a^3 b)
  Perm s1s1 = f.sigma1 * f.sigma1;
  f.u_elements = perm_closure({f.sigma1, f.sigma2}, 8);
  f.v_elements = perm_closure({s1s1, f.sigma2, f.sigma3}, 8);
  f.u0_elements = perm_closure({s1s1, f.sigma2}, 8);
  if (f.u_elements.size() != 8 || f.v_elements.size() != 12 ||
      f.u0_elements.size() != 4)
    throw std::logic_error("q8_frame: unexpected subgroup orders");
  return f;
}

// K1 (l=4) or K2 (l=6) as a permutation group on Q8 x Z_p: the subdirect
// product pairing the quaternion automorphism's residue class with the
// exponent of the field automorphism x -> g^t x.
inline PermGroup k_groups(int p, int l) {
  if (l != 4 && l != 6) throw std::invalid_argument("k_groups: l must be 4 or 6");
  if (!is_prime(p) || (p - 1) % l != 0)
    throw std::invalid_argument("k_groups: p must be a prime = 1 mod l");
  CycOrbitSystem sys = cyc_orbit_system(p, l);
  Q8Frame f = q8_frame();

  std::vector<std::pair<const Perm*, int>> pairs;  // (sigma, multiplier w)
  long long w = 1;
  for (int t = 0; t < p - 1; ++t) {
    if (l == 4) {
      const int pi3 = t % 2;
      for (const Perm& s : f.u_elements)
        if ((f.in_u0(s) ? 0 : 1) == pi3) pairs.emplace_back(&s, static_cast<int>(w));
    } else {
      const int pi3 = t % 3;
      for (const Perm& s : f.v_elements)
        if (f.pi2(s) == pi3) pairs.emplace_back(&s, static_cast<int>(w));
    }
    w = w * sys.g % p;
  }
  if (static_cast<int>(pairs.size()) != 4 * (p - 1))
    throw std::logic_error("k_groups: wrong element count");

  std::vector<Perm> perms;
  perms.reserve(pairs.size());
  for (auto [s, mult] : pairs) {
    std::vector<int> img(8 * p);
    for (int h = 0; h < 8; ++h)
      for (int k = 0; k < p; ++k)
        img[h * p + k] =
            (*s)[h] * p + static_cast<int>(static_cast<long long>(mult) * k % p);
    perms.emplace_back(std::move(img));
  }
  PermGroup kg(8 * p, std::move(perms));
  kg.set_known_order(static_cast<u64>(4) * (p - 1));
  return kg;
}

}  // namespace srl
