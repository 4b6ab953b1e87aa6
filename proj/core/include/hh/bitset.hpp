#ifndef HH_BITSET_HPP
#define HH_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace hh {

// Fixed-capacity bitset sized at construction. Rows of the adjacency
// matrix and candidate sets in the exact solvers are all of this type.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }

  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  void fill_first(int k) {
    clear();
    for (int i = 0; i < k / 64; ++i) w_[i] = ~uint64_t{0};
    if (k & 63) w_[k / 64] = (uint64_t{1} << (k & 63)) - 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }

  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // this subseteq o
  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this \ o
  Bitset& operator-=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t x = w_[i];
      while (x) {
        f(static_cast<int>(i * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace hh

#endif
