#include "fixmat/kernels.hpp"

#include <bit>

namespace fixmat::kernels {

uint64_t popcount_words_scalar(const uint64_t* words, size_t n) {
  uint64_t total = 0;
  for (size_t i = 0; i < n; ++i) total += static_cast<uint64_t>(std::popcount(words[i]));
  return total;
}

}  // namespace fixmat::kernels
