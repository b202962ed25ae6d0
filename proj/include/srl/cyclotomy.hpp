#pragma once

#include <cmath>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "srl/base.hpp"
#include "srl/constructions.hpp"

namespace srl {

// Integer square root test: the nonnegative r with r*r == n, if any.
inline std::optional<int> exact_sqrt(long long n) {
  if (n < 0) return std::nullopt;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  for (long long c = std::max<long long>(0, r - 2); c <= r + 2; ++c)
    if (c * c == n) return static_cast<int>(c);
  return std::nullopt;
}

// Structure constants c_ij^k of cyc(M, Z_p) on the nonzero classes, with the
// derived quantities of the order-4 and order-6 identities.
struct CyclotomicReport {
  int p = 0;
  int l = 0;
  int m = 0;
  bool m_even = false;
  std::vector<int> tensor;  // c_ij^k at [(i*(l+1)+j)*(l+1)+k], indices 1..l
  bool shift_symmetry = false;  // c_{i+1,j+1}^{k+1} = c_ij^k

  // branch data; unused fields stay at defaults
  int s = 0, t = 0, u = 0;
  int m_value = 0;      // the sum that must equal m (odd-m branches)
  int r_abs = -1;       // |r| of the quadratic form, -1 when not applicable
  int alternative = 0;  // which disjunct of the final identity held (1 or 2)

  int c(int i, int j, int k) const {
    return tensor[(static_cast<size_t>(i) * (l + 1) + j) * (l + 1) + k];
  }
};

// c_ij^k = |{x in C_i : z - x in C_j}| for a fixed z in C_k, plus the shift
// symmetry check (multiplication by g is an algebraic automorphism).
inline CyclotomicReport cyc_constants(int p, int l) {
  CycOrbitSystem sys = cyc_orbit_system(p, l);
  CyclotomicReport rep;
  rep.p = p;
  rep.l = l;
  rep.m = sys.m;
  rep.m_even = sys.m % 2 == 0;
  rep.tensor.assign(static_cast<size_t>(l + 1) * (l + 1) * (l + 1), 0);
  auto at = [&](int i, int j, int k) -> int& {
    return rep.tensor[(static_cast<size_t>(i) * (l + 1) + j) * (l + 1) + k];
  };
  for (int k = 1; k <= l; ++k) {
    const int z = sys.orbit[k].front();
    for (int i = 1; i <= l; ++i)
      for (int x : sys.orbit[i]) {
        const int y = ((z - x) % p + p) % p;
        if (y) ++at(i, sys.orbit_of[y], k);
      }
  }
  rep.shift_symmetry = true;
  for (int i = 1; i <= l && rep.shift_symmetry; ++i)
    for (int j = 1; j <= l && rep.shift_symmetry; ++j)
      for (int k = 1; k <= l; ++k)
        if (rep.c(sys.shift(i), sys.shift(j), sys.shift(k)) != rep.c(i, j, k)) {
          rep.shift_symmetry = false;
          break;
        }
  return rep;
}

// Order-4 identities: m even — p = r^2 + 4s^2 with s = c_12^1 - c_14^1;
// m odd — m = c_32^1 + c_34^1 + 2 c_41^1.  Theorems, so failure throws.
inline CyclotomicReport verify_l4(int p) {
  if (!is_prime(p) || p % 4 != 1)
    throw std::invalid_argument("verify_l4: p must be a prime = 1 mod 4");
  CyclotomicReport rep = cyc_constants(p, 4);
  if (!rep.shift_symmetry)
    throw std::logic_error("verify_l4: shift symmetry failed");
  auto c = [&](int i, int j) { return rep.c(i, j, 1); };
  if (rep.m_even) {
    rep.s = c(1, 2) - c(1, 4);
    auto r = exact_sqrt(static_cast<long long>(p) - 4LL * rep.s * rep.s);
    if (!r) throw std::logic_error("verify_l4: p != r^2 + 4s^2");
    rep.r_abs = *r;
  } else {
    rep.m_value = c(3, 2) + c(3, 4) + 2 * c(4, 1);
    if (rep.m_value != rep.m)
      throw std::logic_error("verify_l4: m identity failed");
  }
  return rep;
}

// Order-6 identities.  m even: s, t, u from the C_1/C_2 rows, 4p = r^2+27s^2,
// and 3s = t = 2u or 3s = -t - 2u.  m odd: the five-term sum equals m; s, t
// from the C_4/C_5 rows; u = c_43 - c_45 + c_51 - c_52 (the pairing under
// which 2u = t whenever c_42 = c_45 and c_43 = c_46); 4p = r^2 + 27s^2; and
// 3s = -t = 2u or 3s = t - 2u.  Theorems, so failure throws.
inline CyclotomicReport verify_l6(int p) {
  if (!is_prime(p) || p % 6 != 1)
    throw std::invalid_argument("verify_l6: p must be a prime = 1 mod 6");
  CyclotomicReport rep = cyc_constants(p, 6);
  if (!rep.shift_symmetry)
    throw std::logic_error("verify_l6: shift symmetry failed");
  auto c = [&](int i, int j) { return rep.c(i, j, 1); };
  if (rep.m_even) {
    rep.s = c(1, 2) + 2 * c(2, 4) + c(1, 5) - c(1, 3) - 2 * c(2, 5) - c(1, 6);
    rep.t = c(1, 2) + 2 * c(2, 4) - 3 * c(1, 5) + 3 * c(1, 3) - c(1, 6) -
            2 * c(2, 5);
    rep.u = c(1, 2) - c(1, 6) - c(2, 4) + c(2, 5);
    if (3 * rep.s == rep.t && rep.t == 2 * rep.u)
      rep.alternative = 1;
    else if (3 * rep.s == -rep.t - 2 * rep.u)
      rep.alternative = 2;
    else
      throw std::logic_error("verify_l6: even-m alternative failed");
  } else {
    rep.m_value = c(4, 3) + c(4, 5) + c(5, 1) + c(5, 2) + 2 * c(5, 6);
    if (rep.m_value != rep.m)
      throw std::logic_error("verify_l6: m identity failed");
    rep.s = c(4, 2) + 2 * c(5, 1) + c(4, 5) - c(4, 3) - 2 * c(5, 2) - c(4, 6);
    rep.t = c(4, 5) + 2 * c(5, 1) - 3 * c(4, 2) + 3 * c(4, 6) - c(4, 3) -
            2 * c(5, 2);
    rep.u = c(4, 3) - c(4, 5) + c(5, 1) - c(5, 2);
    if (3 * rep.s == -rep.t && -rep.t == 2 * rep.u)
      rep.alternative = 1;
    else if (3 * rep.s == rep.t - 2 * rep.u)
      rep.alternative = 2;
    else
      throw std::logic_error("verify_l6: odd-m alternative failed");
  }
  auto r = exact_sqrt(4LL * p - 27LL * rep.s * rep.s);
  if (!r) throw std::logic_error("verify_l6: 4p != r^2 + 27s^2");
  rep.r_abs = *r;
  return rep;
}

// All applicable primes below pmax, in order; parallel over primes when
// asked, order-stable output either way.
inline std::vector<CyclotomicReport> cyclotomy_sweep(int pmax, int l,
                                                     int threads = 0) {
  std::vector<int> primes;
  for (int p = 5; p < pmax; ++p)
    if (is_prime(p) && (p - 1) % l == 0) primes.push_back(p);
  std::vector<CyclotomicReport> out(primes.size());
  if (threads <= 0) threads = thread_count();
  threads = std::min<int>(threads, static_cast<int>(primes.size()));
  if (threads <= 1) {
    for (size_t i = 0; i < primes.size(); ++i)
      out[i] = l == 4 ? verify_l4(primes[i]) : verify_l6(primes[i]);
    return out;
  }
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (int tid = 0; tid < threads; ++tid)
    pool.emplace_back([&, tid]() {
      try {
        for (size_t i = tid; i < primes.size(); i += threads)
          out[i] = l == 4 ? verify_l4(primes[i]) : verify_l6(primes[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

}  // namespace srl
