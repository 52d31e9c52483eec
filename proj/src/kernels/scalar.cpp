#include <bit>

#include "arrsym/bit_kernels.hpp"

namespace arrsym::kernels {
namespace {

std::size_t popcount_scalar(const Word* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

void and_into_scalar(Word* dst, const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] & b[i];
}

void andnot_into_scalar(Word* dst, const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] & ~b[i];
}

bool intersects_scalar(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

bool equal_scalar(const Word* a, const Word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

const BitKernels& scalar() {
  static const BitKernels table{"scalar",          popcount_scalar,    and_popcount_scalar,
                                and_into_scalar,   andnot_into_scalar, intersects_scalar,
                                equal_scalar};
  return table;
}

}  // namespace arrsym::kernels
