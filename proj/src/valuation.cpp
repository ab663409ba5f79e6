#include "mbc/valuation.hpp"

namespace mbc {

u64 legendre_factorial(u64 p, u64 m) {
  u64 sum = 0;
  for (u128 q = p; q <= m; q *= p) sum += static_cast<u64>(m / q);
  return sum;
}

unsigned kummer_term(u64 n, u64 p, unsigned j) {
  const u128 twice_n = static_cast<u128>(n) * 2;
  const u128 q = saturating_pow(p, j, twice_n);
  if (q > twice_n) return 0;
  const u128 r = n % q;
  return 2 * r >= q ? 1 : 0;
}

unsigned vp_of_B(u64 n, u64 p) {
  const u128 twice_n = static_cast<u128>(n) * 2;
  unsigned e = 0;
  for (u128 q = p; q <= twice_n; q *= p) {
    const u128 r = n % q;
    e += 2 * r >= q ? 1 : 0;
  }
  return e;
}

u64 v2_of_B(u64 n) { return n - legendre_factorial(2, n); }

u64 vp_odd_double_factorial(u64 p, u64 n) {
  if (n == 0) return 0;
  const u64 top = 2 * n - 1;
  u64 sum = 0;
  for (u128 q = p; q <= top; q *= p) sum += (odd_floor(static_cast<u64>(top / q)) + 1) / 2;
  return sum;
}

unsigned max_layers(u64 n) {
  if (n == 0) return 0;
  const u128 top = static_cast<u128>(n) * 2 - 1;
  unsigned j = 0;
  for (u128 q = 3; q <= top; q *= 3) ++j;
  return j;
}

}  // namespace mbc
