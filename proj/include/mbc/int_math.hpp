#pragma once

// Exact integer helpers shared by the valuation and interval code. Nothing
// here touches floating point.

#include <cstdint>
#include <limits>

namespace mbc {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~static_cast<u128>(0);

// base^exp, saturating at `cap` (any result > cap is reported as cap + 1,
// or kU128Max when cap is kU128Max).
constexpr u128 saturating_pow(u64 base, unsigned exp, u128 cap = kU128Max) {
  const u128 over = cap == kU128Max ? kU128Max : cap + 1;
  u128 acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && acc > cap / base) return over;
    acc *= base;
  }
  return acc > cap ? over : acc;
}

constexpr u128 ceil_div(u128 a, u128 b) { return a / b + (a % b != 0); }

// Largest r with r^j <= x.
constexpr u64 iroot(u128 x, unsigned j) {
  if (j == 0 || x == 0) return 0;
  if (j == 1) return x > std::numeric_limits<u64>::max() ? std::numeric_limits<u64>::max() : static_cast<u64>(x);
  u64 lo = 1, hi = 1;
  while (saturating_pow(hi, j, x) <= x) {
    lo = hi;
    if (hi > (std::numeric_limits<u64>::max() >> 1)) break;
    hi <<= 1;
  }
  // invariant: lo^j <= x, and hi^j > x (or hi saturated)
  while (hi - lo > 1) {
    u64 mid = lo + (hi - lo) / 2;
    if (saturating_pow(mid, j, x) <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

constexpr u64 isqrt(u128 x) { return iroot(x, 2); }

// Smallest r with r^j >= x.
constexpr u64 iroot_ceil(u128 x, unsigned j) {
  u64 r = iroot(x, j);
  return saturating_pow(r, j, x) >= x ? r : r + 1;
}

}  // namespace mbc
