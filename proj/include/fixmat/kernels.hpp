#ifndef FIXMAT_KERNELS_HPP
#define FIXMAT_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Bit-row kernels. Matrix rows are packed little-endian into 64-bit words;
// row sums are popcounts over those words. The scalar kernel is the
// reference; a SIMD variant (AVX2 on x86-64, NEON on aarch64) is picked at
// runtime when the CPU supports it and is equivalence-tested against the
// scalar one.

namespace fixmat::kernels {

uint64_t popcount_words_scalar(const uint64_t* words, size_t n);

#if defined(__x86_64__)
bool cpu_has_avx2();
uint64_t popcount_words_avx2(const uint64_t* words, size_t n);
#endif
#if defined(__aarch64__)
uint64_t popcount_words_neon(const uint64_t* words, size_t n);
#endif

using PopcountFn = uint64_t (*)(const uint64_t*, size_t);

// Best kernel for this CPU, resolved once.
PopcountFn popcount_impl();
const char* popcount_impl_name();

inline uint64_t popcount_words(const uint64_t* words, size_t n) {
  return popcount_impl()(words, n);
}

}  // namespace fixmat::kernels

#endif
