#include <atomic>
#include <cstdlib>
#include <string_view>

#include "mbc/simd/kernels.hpp"

namespace mbc::simd {

namespace {

struct KernelTable {
  std::uint64_t (*popcount_words)(std::span<const std::uint64_t>);
  void (*and_words)(std::span<std::uint64_t>, std::span<const std::uint64_t>);
};

KernelTable table_for(Isa isa) {
  switch (isa) {
#if defined(MBC_HAVE_AVX2)
    case Isa::avx2:
      return {&avx2::popcount_words, &avx2::and_words};
#endif
#if defined(MBC_HAVE_NEON)
    case Isa::neon:
      return {&neon::popcount_words, &neon::and_words};
#endif
    default:
      return {&scalar::popcount_words, &scalar::and_words};
  }
}

Isa detect_best() {
  if (const char* forced = std::getenv("MBC_FORCE_ISA")) {
    std::string_view name(forced);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
      if (name == isa_name(isa) && isa_available(isa)) return isa;
  }
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

std::atomic<int>& selected() {
  static std::atomic<int> isa{static_cast<int>(detect_best())};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    case Isa::scalar: break;
  }
  return "scalar";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(MBC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
    case Isa::neon:
#if defined(MBC_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return static_cast<Isa>(selected().load(std::memory_order_relaxed)); }

bool force_isa(Isa isa) {
  if (!isa_available(isa)) return false;
  selected().store(static_cast<int>(isa), std::memory_order_relaxed);
  return true;
}

void reset_isa() { selected().store(static_cast<int>(detect_best()), std::memory_order_relaxed); }

std::uint64_t popcount_words(std::span<const std::uint64_t> words) {
  return table_for(active_isa()).popcount_words(words);
}

void and_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  table_for(active_isa()).and_words(dst, src);
}

}  // namespace mbc::simd
