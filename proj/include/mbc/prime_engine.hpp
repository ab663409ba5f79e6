#pragma once

// Prime enumeration over subranges of the factor-base via an odd-only
// segmented sieve, plus a deterministic primality test.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mbc/int_math.hpp"

namespace mbc {

inline constexpr u64 kDefaultRangeCeiling = 20'000'000'001ULL;
inline constexpr std::size_t kDefaultSegmentBytes = 32 * 1024;

struct SieveLimits {
  // Largest admissible exclusive upper bound of a range query.
  u64 range_ceiling = kDefaultRangeCeiling;
};

// Half-open range [lo, hi). Values below 2 are allowed and simply contain no
// primes. segment_bytes is advisory; results never depend on it.
struct PrimeRangeQuery {
  u64 lo = 2;
  u64 hi = 2;
  std::size_t segment_bytes = kDefaultSegmentBytes;
};

// Ascending primes in [q.lo, q.hi).
// Throws Error{empty_range} if lo >= hi, Error{range_too_large} if hi exceeds
// the ceiling.
std::vector<u64> primes_in_range(const PrimeRangeQuery& q, const SieveLimits& limits = {});

// Same contract as primes_in_range, counting without materializing the list.
u64 count_primes_in_range(u64 lo, u64 hi, const SieveLimits& limits = {});
u64 count_primes_in_range(const PrimeRangeQuery& q, const SieveLimits& limits = {});

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 m);

// Something that can answer "which primes lie in [lo, hi)". The interval
// engine selects primes through this so callers choose between sieving on
// demand and a precomputed table.
class PrimeSource {
 public:
  virtual ~PrimeSource() = default;
  // Appends the ascending primes in [lo, hi) to `out`. lo >= hi yields none.
  virtual void append_primes(u64 lo, u64 hi, std::vector<u64>& out) const = 0;
};

// Sieves each request independently.
class SievePrimeSource final : public PrimeSource {
 public:
  explicit SievePrimeSource(SieveLimits limits = {}, std::size_t segment_bytes = kDefaultSegmentBytes)
      : limits_(limits), segment_bytes_(segment_bytes) {}
  void append_primes(u64 lo, u64 hi, std::vector<u64>& out) const override;

 private:
  SieveLimits limits_;
  std::size_t segment_bytes_;
};

// All primes below `limit`, sieved once; range requests are binary searches.
class PrimeTable final : public PrimeSource {
 public:
  explicit PrimeTable(u64 limit, const SieveLimits& limits = {});
  void append_primes(u64 lo, u64 hi, std::vector<u64>& out) const override;

  u64 limit() const { return limit_; }
  std::span<const u64> primes() const { return primes_; }
  // Ascending primes in [lo, hi) as a view into the table (hi clipped to limit).
  std::span<const u64> range(u64 lo, u64 hi) const;

 private:
  u64 limit_;
  std::vector<u64> primes_;
};

}  // namespace mbc
