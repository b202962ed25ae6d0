#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>

namespace srl {

using u64 = std::uint64_t;

// Raised when a configured resource cap (order, degree, node or time budget)
// would be exceeded.  Never a partial answer: callers either get a complete
// result or this.
struct cap_exceeded : std::runtime_error {
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

struct Limits {
  int max_product_order = 4096;   // direct_product result cap
  int max_aut_order = 64;         // |G| cap for automorphism_group(Group)
  int max_sring_aut_degree = 256; // degree cap for automorphism_group(SRing)
  int max_enum_order = 12;        // |G| cap for enumerate_srings
  u64 perm_enum_cap = u64(1) << 20; // element-enumeration threshold for PermGroup
  double time_budget_secs = 300.0;  // per automorphism-search call
  int threads = 0;                  // 0 = hardware concurrency
};

inline Limits& limits() {
  static Limits l;
  return l;
}

inline int thread_count() {
  int t = limits().threads;
  if (t > 0) return t;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Deadline for long searches.  A default-constructed deadline never fires.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(double secs) {
    Deadline d;
    d.armed_ = true;
    d.end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(secs));
    return d;
  }
  bool expired() const {
    return armed_ && std::chrono::steady_clock::now() > end_;
  }
  void check(const char* where) const {
    if (expired()) throw cap_exceeded(std::string(where) + ": time budget exceeded");
  }

 private:
  bool armed_ = false;
  std::chrono::steady_clock::time_point end_;
};

inline u64 mul_check(u64 a, u64 b, const char* where) {
  if (b != 0 && a > ~u64(0) / b)
    throw cap_exceeded(std::string(where) + ": order overflows 64 bits");
  return a * b;
}

}  // namespace srl
