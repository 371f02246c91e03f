#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ortho {

/// Subset of {0, ..., n-1} packed into 64-bit words. The universe size is
/// fixed at construction; binary operations require equal universes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t universe) : n_(universe), w_(word_count(universe), 0) {}

  static Bitset full(std::size_t universe) {
    Bitset b(universe);
    for (auto& w : b.w_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }
  static Bitset single(std::size_t universe, int i) {
    Bitset b(universe);
    b.set(i);
    return b;
  }
  /// Low 64 bits taken from `mask` (universe must be <= 64).
  static Bitset from_mask(std::size_t universe, std::uint64_t mask) {
    Bitset b(universe);
    if (!b.w_.empty()) b.w_[0] = mask;
    b.trim();
    return b;
  }

  std::size_t universe() const { return n_; }
  bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  Bitset complement() const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset&) const = default;
  /// Numeric order (bit i has weight 2^i); total and deterministic.
  bool operator<(const Bitset& o) const {
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  /// Index of the lowest set bit, -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>((i << 6) + static_cast<std::size_t>(std::countr_zero(w_[i])));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi)
      for (std::uint64_t w = w_[wi]; w; w &= w - 1)
        f(static_cast<int>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w))));
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ n_;
    for (auto w : w_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static std::size_t word_count(std::size_t n) { return (n + 63) >> 6; }
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

/// "{a,b,c}" with member labels in index order; "{}" for the empty set.
inline std::string set_label(const Bitset& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int i) {
    if (!first) out += ",";
    out += labels[static_cast<std::size_t>(i)];
    first = false;
  });
  out += "}";
  return out;
}

}  // namespace ortho
