#include "mbc/simd/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace mbc::simd::avx2 {

namespace {

// Nibble-lookup popcount: per-byte counts via pshufb, folded into 64-bit
// lanes with psadbw.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
}

}  // namespace

std::uint64_t popcount_words(std::span<const std::uint64_t> words) {
  const std::uint64_t* data = words.data();
  const std::size_t n = words.size();
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  const __m256i zero = _mm256_setzero_si256();

  // Byte counters are at most 8 per word, so 8 vectors (64) fit in a byte
  // before the psadbw fold.
  while (i + 32 <= n) {
    __m256i bytes = zero;
    for (int u = 0; u < 8; ++u, i += 4) {
      __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
      bytes = _mm256_add_epi8(bytes, popcount_bytes(v));
    }
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, zero));
  }
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), zero));
  }

  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += static_cast<std::uint64_t>(std::popcount(data[i]));
  return total;
}

void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  std::uint64_t* d = dst.data();
  const std::uint64_t* s = src.data();
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(d + i), _mm256_and_si256(a, b));
  }
  for (; i < n; ++i) d[i] &= s[i];
}

}  // namespace mbc::simd::avx2
