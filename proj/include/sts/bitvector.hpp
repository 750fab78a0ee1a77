#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sts {

// Fixed-width bit vector. Width is chosen at construction; all binary
// operations require equal widths and run in O(words).
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t bits, bool value = false);

  std::size_t size() const { return bits_; }
  std::span<const Word> words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }

  // this &= ~other
  void and_not(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);

  bool intersects(const BitVector& other) const;
  // popcount(this & other)
  std::size_t and_count(const BitVector& other) const;

  // Indices of set bits, ascending.
  std::vector<std::size_t> indices() const;

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word word = words_[w];
      while (word != 0) {
        const int bit = std::countr_zero(word);
        f(w * kWordBits + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void clear_tail();

  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

}  // namespace sts
