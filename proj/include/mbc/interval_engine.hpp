#pragma once

// Chebyshev intervals of the Legendre layers of B(n).
//
// For layer j and interval index k the interval is
//   S_k^(j) = ((n/k)^(1/j), (n/(k - 1/2))^(1/j)),
// both ends open. Bounds are never evaluated as real numbers: an integer p
// lies in S_k^(j) iff k p^j > n and (2k - 1) p^j < 2n. The integer span of an
// interval comes from exact integer roots.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbc/int_math.hpp"
#include "mbc/prime_engine.hpp"

namespace mbc {

class ChebyshevInterval {
 public:
  ChebyshevInterval(u64 n, unsigned j, u64 k) : n_(n), j_(j), k_(k) {}

  u64 n() const { return n_; }
  unsigned layer() const { return j_; }
  u64 index() const { return k_; }

  bool contains(u64 p) const;

  // Smallest / largest integer inside the open bounds. When the interval
  // holds no integer, first_integer() > last_integer().
  u64 first_integer() const;
  u64 last_integer() const;

  // True when some integer >= 3 lies inside.
  bool has_odd_candidates() const;

  // Human form, e.g. "(500, 666.66)" for j = 1 or "(1000000, 2000000)^(1/2)".
  // Non-integral bounds are truncated to two decimals.
  std::string describe() const;

  friend bool operator==(const ChebyshevInterval&, const ChebyshevInterval&) = default;

 private:
  u64 n_;
  unsigned j_;
  u64 k_;
};

// First factor-free zone [(2n/3)^(1/j), n^(1/j)]: q inside iff 3 q^j >= 2n and
// q^j <= n.
class FactorFreeZone {
 public:
  FactorFreeZone(u64 n, unsigned j) : n_(n), j_(j) {}

  u64 n() const { return n_; }
  unsigned layer() const { return j_; }
  bool contains(u64 q) const;
  u64 first_integer() const;
  u64 last_integer() const;
  std::string describe() const;

 private:
  u64 n_;
  unsigned j_;
};

// k·p^j > n and (2k−1)·p^j < 2n, overflow-safe. Total for any j, k >= 1.
bool interval_bounds_check(u64 n, unsigned j, u64 k, u64 p);

// Two-step test for layer 1: k = ceil(n/p), then p < n/(k-1/2). Primes
// dividing n sit on a lower bound and are rejected up front.
std::optional<u64> distinct_layer_membership(u64 n, u64 p);

// Index of the layer-j interval containing p, if any.
std::optional<u64> layer_membership(u64 n, u64 p, unsigned j);

// Sentinel for "every interval the layer admits".
inline constexpr u64 kExhaust = 0;

// Largest k the layer admits: k < n/2 for j = 1, and lower bound above 2
// (k 2^j < n) for j >= 2. Zero when the layer has no admissible interval.
u64 layer_k_limit(u64 n, unsigned j);

struct IntervalStats {
  u64 emitted = 0;
  u64 skipped_empty = 0;
};

// S_1^(j) .. S_kmax^(j), descending in value (ascending k), skipping those
// without an integer >= 3. For j = 1, k_max >= n/2 throws Error{invalid_k};
// for j >= 2 enumeration stops where the lower bound drops to 2.
// k_max == kExhaust means layer_k_limit(n, j).
std::vector<ChebyshevInterval> enumerate_intervals(u64 n, unsigned j, u64 k_max,
                                                   IntervalStats* stats = nullptr);

FactorFreeZone first_factor_free_zone(u64 n, unsigned j);

struct SelectedPrime {
  u64 prime;
  u64 k;

  friend bool operator==(const SelectedPrime&, const SelectedPrime&) = default;
};

// Primes of layer j found in intervals k = 1..k_max, ascending by prime.
// Only primes strictly above `floor` are reported; intervals lying wholly at
// or below it are not visited.
std::vector<SelectedPrime> select_layer_primes(u64 n, unsigned j, u64 k_max, const PrimeSource& source,
                                               u64 floor = 2, IntervalStats* stats = nullptr);

// Complete layer j (every odd prime with kummer_term(n, p, j) = 1) by
// exhaustive interval selection. Covers the n = 2 main interval (2, 4) that
// the k < n/2 bound leaves out.
std::vector<SelectedPrime> collect_layer(u64 n, unsigned j, const PrimeSource& source,
                                         IntervalStats* stats = nullptr);

}  // namespace mbc
