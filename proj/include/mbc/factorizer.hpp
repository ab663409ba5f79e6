#pragma once

// Full prime factorization of B(n) = C(2n, n) assembled from the Legendre
// layers: odd primes above a cutoff are selected from Chebyshev intervals,
// the rest are valued directly, and 2 comes from v2_of_B.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mbc/int_math.hpp"
#include "mbc/interval_engine.hpp"
#include "mbc/prime_engine.hpp"

namespace mbc {

using BigNat = mpz_class;

enum class ProvenanceKind { interval, direct, even_prime };

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::direct;
  unsigned layer = 0;  // interval only
  u64 k = 0;           // interval only

  static Provenance interval(unsigned j, u64 k) { return {ProvenanceKind::interval, j, k}; }
  static Provenance direct() { return {ProvenanceKind::direct, 0, 0}; }
  static Provenance even_prime() { return {ProvenanceKind::even_prime, 0, 0}; }

  // "interval(j,k)", "direct" or "even_prime".
  std::string to_string() const;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct PrimePower {
  u64 prime = 2;
  unsigned exponent = 0;
  std::vector<unsigned> layers;  // ascending; empty for the prime 2
  Provenance provenance;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct ReportCounts {
  u64 distinct_primes = 0;        // number of factors, 2 included
  u64 prime_power_multiset = 0;   // sum of all exponents: Omega(B(n))
  u64 layer_population = 0;       // sum of odd-layer sizes (2 excluded)
  u64 distinct_layer_size = 0;    // odd primes in layer 1
  u64 main_interval_size = 0;     // primes in (n, 2n)
  std::vector<u64> layer_sizes;   // layer_sizes[j - 1] = |layer j|, odd primes
  u64 interval_selected = 0;      // odd primes with interval provenance
  u64 direct_fallback = 0;        // odd primes valued directly
  u64 intervals_visited = 0;
  u64 intervals_skipped_empty = 0;
};

struct FactorizationReport {
  u64 n = 0;
  std::vector<PrimePower> factors;  // ascending by prime
  ReportCounts counts;
};

struct StrategyConfig {
  std::vector<unsigned> layers_via_intervals{1, 2};
  // Odd primes at or below the cutoff are valued directly. Defaults to
  // floor(sqrt(2n)); values below 3 are raised to 3.
  std::optional<u64> direct_cutoff;
  // Per-layer interval limit; absent or kExhaust means every admissible k.
  std::map<unsigned, u64> k_max;
};

struct FactorizerLimits {
  u64 full_ceiling = 100'000'000;
  u64 verification_cutoff = 20'000;
  SieveLimits sieve;
};

// Throws Error{index_too_large} when n > limits.full_ceiling, and
// Error{invalid_k} for a layer-1 k_max that violates k < n/2.
FactorizationReport factor_mbc(u64 n, const StrategyConfig& strategy = {}, const FactorizerLimits& limits = {});

struct LayerSplit {
  u64 n = 0;
  // layers[j - 1]: ascending odd primes p with kummer_term(n, p, j) = 1.
  std::vector<std::vector<u64>> layers;
  std::vector<unsigned> empty_layer_indices;  // ascending
  unsigned v2 = 0;                            // exponent of 2, outside the layers
};

// Layers 1..j_max (default max_layers(n)); layers above max_layers(n) are
// present and empty. n must be >= 2.
LayerSplit layer_split(u64 n, std::optional<unsigned> j_max = std::nullopt, const FactorizerLimits& limits = {});

// One layer, sieving only up to floor((2n)^(1/j)). Layer 1 is limited to the
// full-factorization ceiling; higher layers go up to the sieve range ceiling.
// Throws Error{layer_out_of_range} when 3^j > 2n - 1.
std::vector<u64> single_layer(u64 n, unsigned j, const FactorizerLimits& limits = {});
std::vector<u64> single_layer(u64 n, unsigned j, const PrimeSource& source, const FactorizerLimits& limits = {});

// B(n) from its definition (2n)! / (n!)^2.
BigNat mbc_value(u64 n);

// Product of prime^exponent over the report.
BigNat product_of(const FactorizationReport& r);

struct VerifyOutcome {
  bool ok = true;
  std::optional<u64> first_mismatch;
  std::string detail;

  explicit operator bool() const { return ok; }
};

// Compares the report against mbc_value(r.n) and re-derives each exponent
// with vp_of_B. Throws Error{index_too_large} above the verification cutoff.
VerifyOutcome verify_report(const FactorizationReport& r, const FactorizerLimits& limits = {});

// verify_report, throwing Error{verification_failed} carrying the prime.
void check_report(const FactorizationReport& r, const FactorizerLimits& limits = {});

}  // namespace mbc
