#include "arrsym/bitset.hpp"

#include <algorithm>
#include <bit>

namespace arrsym {

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  std::fill(b.words_.begin(), b.words_.end(), ~Word{0});
  if (size % 64 != 0 && !b.words_.empty()) b.words_.back() = (Word{1} << (size % 64)) - 1;
  return b;
}

void Bitset::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::size_t Bitset::count() const { return kernels::active().popcount(words_.data(), words_.size()); }

bool Bitset::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::size_t Bitset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + std::countr_zero(words_[w]);
  }
  return size_;
}

std::size_t Bitset::next(std::size_t i) const {
  ++i;
  if (i >= size_) return size_;
  std::size_t w = i >> 6;
  Word masked = words_[w] & (~Word{0} << (i & 63));
  while (true) {
    if (masked != 0) return w * 64 + std::countr_zero(masked);
    if (++w == words_.size()) return size_;
    masked = words_[w];
  }
}

Bitset& Bitset::operator&=(const Bitset& other) {
  kernels::active().and_into(words_.data(), words_.data(), other.words_.data(), words_.size());
  return *this;
}

Bitset& Bitset::operator-=(const Bitset& other) {
  kernels::active().andnot_into(words_.data(), words_.data(), other.words_.data(), words_.size());
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<std::size_t> Bitset::indexes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = first(); i < size_; i = next(i)) out.push_back(i);
  return out;
}

}  // namespace arrsym
