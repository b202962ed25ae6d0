#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace srl {

// Permutation of 0..n-1, stored as the image array.  Composition is
// left-to-right: (a * b)[x] = b[a[x]], i.e. apply a first.  This matches
// right actions, so g -> right-translation is a homomorphism.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
  explicit Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("Perm: not a bijection");
      seen[v] = 1;
    }
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Perm operator*(const Perm& other) const {
    std::vector<int> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r[i] = other.img_[img_[i]];
    Perm p;
    p.img_ = std::move(r);
    return p;
  }

  Perm inverse() const {
    std::vector<int> r(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) r[img_[i]] = static_cast<int>(i);
    Perm p;
    p.img_ = std::move(r);
    return p;
  }

  // Number of points moved; 0 exactly for the identity.
  int support() const {
    int s = 0;
    for (int i = 0; i < degree(); ++i)
      if (img_[i] != i) ++s;
    return s;
  }

  bool fixed_point_free() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[i] == i) return false;
    return true;
  }

  int order() const {
    // lcm of cycle lengths
    std::vector<char> seen(img_.size(), 0);
    long long o = 1;
    for (int i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = 1;
        ++len;
      }
      o = std::lcm(o, static_cast<long long>(len));
    }
    return static_cast<int>(o);
  }

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

}  // namespace srl
