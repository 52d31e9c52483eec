#pragma once

// Packed-bitset primitives used by refinement, neighbourhood queries and the
// clique search. Every kernel exists as a portable scalar reference and, on
// x86-64, as an AVX2 variant chosen at runtime. Both must agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace arrsym::kernels {

using Word = std::uint64_t;

struct BitKernels {
  std::string_view name;
  std::size_t (*popcount)(const Word* a, std::size_t words);
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
  // dst = a & b
  void (*and_into)(Word* dst, const Word* a, const Word* b, std::size_t words);
  // dst = a & ~b
  void (*andnot_into)(Word* dst, const Word* a, const Word* b, std::size_t words);
  bool (*intersects)(const Word* a, const Word* b, std::size_t words);
  bool (*equal)(const Word* a, const Word* b, std::size_t words);
};

const BitKernels& scalar();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const BitKernels* avx2();

// The dispatch choice: AVX2 when available, unless ARRSYM_SIMD=scalar.
const BitKernels& active();

bool cpu_has_avx2();

}  // namespace arrsym::kernels
