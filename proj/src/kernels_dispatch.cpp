#include "fixmat/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#include <bit>
#endif

namespace fixmat::kernels {

#if defined(__x86_64__)
bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }
#endif

#if defined(__aarch64__)
uint64_t popcount_words_neon(const uint64_t* words, size_t n) {
  uint64x2_t acc = vdupq_n_u64(0);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint8x16_t v = vld1q_u8(reinterpret_cast<const uint8_t*>(words + i));
    acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
  }
  uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < n; ++i) total += static_cast<uint64_t>(std::popcount(words[i]));
  return total;
}
#endif

namespace {

struct Resolved {
  PopcountFn fn;
  const char* name;
};

Resolved resolve() {
#if defined(__x86_64__)
  if (cpu_has_avx2()) return {popcount_words_avx2, "avx2"};
#elif defined(__aarch64__)
  return {popcount_words_neon, "neon"};
#endif
  return {popcount_words_scalar, "scalar"};
}

const Resolved& resolved() {
  static const Resolved r = resolve();
  return r;
}

}  // namespace

PopcountFn popcount_impl() { return resolved().fn; }
const char* popcount_impl_name() { return resolved().name; }

}  // namespace fixmat::kernels
