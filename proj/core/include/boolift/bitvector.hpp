#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace boolift {

/// Fixed-length packed bit vector. Bits beyond size() in the last word are
/// always zero, so word-wise comparison and hashing are exact.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t nbits, bool value = false)
      : size_(nbits), words_((nbits + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool operator[](std::size_t i) const { return test(i); }

  void set(std::size_t i, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  void reset(std::size_t i) { set(i, false); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  bool all() const { return count() == size_; }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  BitVector& operator&=(const BitVector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitVector& operator|=(const BitVector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitVector& operator^=(const BitVector& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  BitVector operator~() const {
    BitVector r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  /// True iff (*this & o) has any bit set, without materializing it.
  bool intersects(const BitVector& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  /// True iff every set bit of *this is also set in o.
  bool is_subset_of(const BitVector& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// Index of the first set bit at or after `from`, or size() if none.
  std::size_t find_next(std::size_t from) const {
    if (from >= size_) return size_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return size_;
      w = words_[wi];
    }
  }
  std::size_t find_first() const { return find_next(0); }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    // Lexicographic from bit 0: the lowest differing bit decides.
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      if (a.words_[i] == b.words_[i]) continue;
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      const int low = std::countr_zero(diff);
      return ((a.words_[i] >> low) & 1u) ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

 private:
  void trim() {
    if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

}  // namespace boolift
