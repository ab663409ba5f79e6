#include "mbc/simd/kernels.hpp"

#include <bit>

namespace mbc::simd::scalar {

std::uint64_t popcount_words(std::span<const std::uint64_t> words) {
  std::uint64_t total = 0;
  for (std::uint64_t w : words) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

}  // namespace mbc::simd::scalar
