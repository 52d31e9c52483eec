// Compiled with -mavx2 -mpopcnt; only called after cpu_has_avx2() succeeds.

#include <immintrin.h>

#include <bit>

#include "arrsym/bit_kernels.hpp"

namespace arrsym::kernels {
namespace {

// Nibble-lookup popcount (Mula): per-byte counts summed with SAD.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts =
      _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  return static_cast<std::size_t>(_mm256_extract_epi64(acc, 0)) +
         static_cast<std::size_t>(_mm256_extract_epi64(acc, 1)) +
         static_cast<std::size_t>(_mm256_extract_epi64(acc, 2)) +
         static_cast<std::size_t>(_mm256_extract_epi64(acc, 3));
}

inline __m256i load(const Word* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(Word* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

std::size_t popcount_avx2(const Word* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::size_t and_popcount_avx2(const Word* a, const Word* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

void and_into_avx2(Word* dst, const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
  for (; i < words; ++i) dst[i] = a[i] & b[i];
}

void andnot_into_avx2(Word* dst, const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  // _mm256_andnot_si256(x, y) computes ~x & y.
  for (; i + 4 <= words; i += 4) store(dst + i, _mm256_andnot_si256(load(b + i), load(a + i)));
  for (; i < words; ++i) dst[i] = a[i] & ~b[i];
}

bool intersects_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  }
  for (; i < words; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

bool equal_avx2(const Word* a, const Word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i diff = _mm256_xor_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < words; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

const BitKernels& avx2_table() {
  static const BitKernels table{"avx2",          popcount_avx2,    and_popcount_avx2,
                                and_into_avx2,   andnot_into_avx2, intersects_avx2,
                                equal_avx2};
  return table;
}

}  // namespace arrsym::kernels
