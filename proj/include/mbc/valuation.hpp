#pragma once

// Exact p-adic valuations for factorials, odd double factorials and the
// middle binomial coefficient B(n) = (2n)! / (n!)^2. Pure integer arithmetic;
// intermediate prime powers are carried in 128 bits and saturate, so every
// routine is total over 64-bit inputs.

#include <cstdint>

#include "mbc/int_math.hpp"

namespace mbc {

struct Valuation {
  u64 prime = 2;
  unsigned exponent = 0;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

// v_p(m!) by Legendre's sum of floor(m / p^j).
u64 legendre_factorial(u64 p, u64 m);

// floor(2n / p^j) - 2 floor(n / p^j), i.e. 1 iff 2 (n mod p^j) >= p^j.
// Zero once p^j exceeds 2n.
unsigned kummer_term(u64 n, u64 p, unsigned j);

// Exponent of p in B(n): the number of layers j with kummer_term(n, p, j) = 1.
unsigned vp_of_B(u64 n, u64 p);

// Exponent of 2 in B(n) as n - v_2(n!).
u64 v2_of_B(u64 n);

// Largest odd integer not exceeding x (x >= 1).
constexpr u64 odd_floor(u64 x) { return (x & 1) ? x : x - 1; }

// v_p((2n - 1)!!) for odd p: sum over j of the number of odd multiples of
// p^j below 2n, each counted as (odd_floor(floor((2n-1)/p^j)) + 1) / 2.
u64 vp_odd_double_factorial(u64 p, u64 n);

// Upper bound on the number of Legendre layers for odd primes: the largest
// j with 3^j <= 2n - 1. Requires n >= 2.
unsigned max_layers(u64 n);

}  // namespace mbc
