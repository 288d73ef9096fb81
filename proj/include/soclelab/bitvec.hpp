#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace soclelab {

// Fixed-width bit vector with word-parallel set algebra. Backs ideal
// membership sets; ring sizes stay far below a million bits, so a flat
// word array is all that is needed.
class bitvec {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  bitvec() = default;
  explicit bitvec(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }

  void set(std::size_t i) {
    assert(i < bits_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < bits_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool test(std::size_t i) const {
    assert(i < bits_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bitvec& operator&=(const bitvec& o) {
    assert(bits_ == o.bits_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  bitvec& operator|=(const bitvec& o) {
    assert(bits_ == o.bits_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend bitvec operator&(bitvec a, const bitvec& b) { return a &= b; }
  friend bitvec operator|(bitvec a, const bitvec& b) { return a |= b; }

  bool operator==(const bitvec&) const = default;

  bool is_subset_of(const bitvec& o) const {
    assert(bits_ == o.bits_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const bitvec& o) const {
    assert(bits_ == o.bits_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // True when the two sets share an element other than `excluded`.
  bool intersects_excluding(const bitvec& o, std::size_t excluded) const {
    assert(bits_ == o.bits_);
    const std::size_t xw = excluded >> 6;
    const std::uint64_t xmask = ~(std::uint64_t{1} << (excluded & 63));
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t both = w_[i] & o.w_[i];
      if (i == xw) both &= xmask;
      if (both) return true;
    }
    return false;
  }

  std::size_t find_first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return npos;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        f((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ bits_;
    for (auto w : w_) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  // Word-lexicographic order from the low words; only used to make
  // enumeration output deterministic.
  bool lex_less(const bitvec& o) const {
    assert(bits_ == o.bits_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> w_;
};

struct bitvec_hash {
  std::size_t operator()(const bitvec& b) const { return b.hash(); }
};

}  // namespace soclelab
