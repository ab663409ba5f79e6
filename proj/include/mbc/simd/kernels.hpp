#pragma once

// Word-level bitmap kernels used by the segmented sieve. Every kernel has a
// scalar reference implementation; vector variants are selected at runtime
// and must agree with the reference bit for bit.

#include <cstdint>
#include <span>
#include <string_view>

namespace mbc::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

// Best available variant, unless overridden by force_isa() or the
// MBC_FORCE_ISA environment variable ("scalar", "avx2", "neon").
Isa active_isa();

// Pins the dispatch to `isa`. Returns false (and changes nothing) when the
// variant is unavailable.
bool force_isa(Isa isa);
void reset_isa();

// Number of set bits across all words.
std::uint64_t popcount_words(std::span<const std::uint64_t> words);

// dst[i] &= src[i] for i < dst.size(); src must be at least as long as dst.
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

namespace scalar {
std::uint64_t popcount_words(std::span<const std::uint64_t> words);
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
}  // namespace scalar

#if defined(MBC_HAVE_AVX2)
namespace avx2 {
std::uint64_t popcount_words(std::span<const std::uint64_t> words);
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
}  // namespace avx2
#endif

#if defined(MBC_HAVE_NEON)
namespace neon {
std::uint64_t popcount_words(std::span<const std::uint64_t> words);
void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
}  // namespace neon
#endif

}  // namespace mbc::simd
