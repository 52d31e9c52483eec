#pragma once

#include <cstddef>
#include <vector>

#include "arrsym/bit_kernels.hpp"

namespace arrsym {

// Fixed-size bitset over vertex indexes backed by 64-bit words.
class Bitset {
 public:
  using Word = kernels::Word;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset full(std::size_t size);

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const Word* data() const { return words_.data(); }
  Word* data() { return words_.data(); }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= Word{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }
  void clear();

  std::size_t count() const;
  bool none() const;
  // Lowest set index, or size() when empty.
  std::size_t first() const;
  // Lowest set index strictly greater than i, or size().
  std::size_t next(std::size_t i) const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator-=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);

  std::vector<std::size_t> indexes() const;

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace arrsym
