#include <cstdlib>
#include <string_view>

#include "arrsym/bit_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define ARRSYM_X86 1
#include <cpuid.h>
#else
#define ARRSYM_X86 0
#endif

namespace arrsym::kernels {

#if ARRSYM_HAVE_AVX2
const BitKernels& avx2_table();
#endif

bool cpu_has_avx2() {
#if ARRSYM_X86 && ARRSYM_HAVE_AVX2
  static const bool supported = [] {
    unsigned eax = 0, ebx = 0, ecx = 0, edx = 0;
    if (!__get_cpuid(1, &eax, &ebx, &ecx, &edx)) return false;
    const bool osxsave = (ecx & (1U << 27)) != 0;
    const bool avx = (ecx & (1U << 28)) != 0;
    const bool popcnt = (ecx & (1U << 23)) != 0;
    if (!(osxsave && avx && popcnt)) return false;
    // OS must save the YMM state.
    unsigned xcr0_lo = 0, xcr0_hi = 0;
    __asm__("xgetbv" : "=a"(xcr0_lo), "=d"(xcr0_hi) : "c"(0));
    if ((xcr0_lo & 0x6) != 0x6) return false;
    if (!__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) return false;
    return (ebx & (1U << 5)) != 0;
  }();
  return supported;
#else
  return false;
#endif
}

const BitKernels* avx2() {
#if ARRSYM_HAVE_AVX2
  if (cpu_has_avx2()) return &avx2_table();
#endif
  return nullptr;
}

const BitKernels& active() {
  static const BitKernels& chosen = []() -> const BitKernels& {
    const char* forced = std::getenv("ARRSYM_SIMD");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar();
    if (const BitKernels* k = avx2()) return *k;
    return scalar();
  }();
  return chosen;
}

}  // namespace arrsym::kernels
