#include "mbc/simd/kernels.hpp"

#include <arm_neon.h>

#include <bit>

namespace mbc::simd::neon {

std::uint64_t popcount_words(std::span<const std::uint64_t> words) {
  const std::uint64_t* data = words.data();
  const std::size_t n = words.size();
  std::size_t i = 0;
  uint64x2_t acc = vdupq_n_u64(0);
  for (; i + 2 <= n; i += 2) {
    uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(data + i)));
    acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes))));
  }
  std::uint64_t total = vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1);
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(data[i]));
  return total;
}

void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  std::uint64_t* d = dst.data();
  const std::uint64_t* s = src.data();
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_u64(d + i, vandq_u64(vld1q_u64(d + i), vld1q_u64(s + i)));
  for (; i < n; ++i) d[i] &= s[i];
}

}  // namespace mbc::simd::neon
