#include "mbc/interval_engine.hpp"

#include <algorithm>
#include <string>

#include "mbc/error.hpp"

namespace mbc {

namespace {

std::string format_rational(u128 num, u128 den) {
  const u64 whole = static_cast<u64>(num / den);
  const u128 rem = num % den;
  std::string s = std::to_string(whole);
  if (rem != 0) {
    const unsigned hundredths = static_cast<unsigned>(rem * 100 / den);
    s += '.';
    s += static_cast<char>('0' + hundredths / 10);
    s += static_cast<char>('0' + hundredths % 10);
  }
  return s;
}

std::string root_suffix(unsigned j) { return j == 1 ? "" : "^(1/" + std::to_string(j) + ")"; }

}  // namespace

bool interval_bounds_check(u64 n, unsigned j, u64 k, u64 p) {
  if (k == 0 || j == 0) return false;
  const u128 twice_n = static_cast<u128>(n) * 2;
  const u128 q = saturating_pow(p, j, twice_n);
  if (q > twice_n) return false;
  // k q > n  <=>  q > floor(n / k);  (2k-1) q < 2n  <=>  q < ceil(2n / (2k-1))
  const u128 odd = static_cast<u128>(k) * 2 - 1;
  return q > n / k && q < ceil_div(twice_n, odd);
}

std::optional<u64> distinct_layer_membership(u64 n, u64 p) {
  if (n == 0 || p == 0) return std::nullopt;
  // k = ceil(n/p), except that p | n puts p on the open lower bound n/k of
  // S_k and outside every interval.
  if (n % p == 0) return std::nullopt;
  const u64 k = static_cast<u64>(ceil_div(n, p));
  if ((static_cast<u128>(k) * 2 - 1) * p < static_cast<u128>(n) * 2) return k;
  return std::nullopt;
}

std::optional<u64> layer_membership(u64 n, u64 p, unsigned j) {
  if (n == 0 || j == 0 || p < 2) return std::nullopt;
  const u128 twice_n = static_cast<u128>(n) * 2;
  const u128 q = saturating_pow(p, j, twice_n);
  if (q >= twice_n) return std::nullopt;
  const u64 k = q <= n ? static_cast<u64>(ceil_div(n, q)) : 1;
  if ((static_cast<u128>(k) * 2 - 1) * q < twice_n && static_cast<u128>(k) * q > n) return k;
  return std::nullopt;
}

bool ChebyshevInterval::contains(u64 p) const { return interval_bounds_check(n_, j_, k_, p); }

u64 ChebyshevInterval::first_integer() const { return iroot(n_ / k_, j_) + 1; }

u64 ChebyshevInterval::last_integer() const {
  const u128 bound = ceil_div(static_cast<u128>(n_) * 2, static_cast<u128>(k_) * 2 - 1);
  return bound == 0 ? 0 : iroot(bound - 1, j_);
}

bool ChebyshevInterval::has_odd_candidates() const {
  return std::max<u64>(first_integer(), 3) <= last_integer();
}

std::string ChebyshevInterval::describe() const {
  return "(" + format_rational(n_, k_) + ", " +
         format_rational(static_cast<u128>(n_) * 2, static_cast<u128>(k_) * 2 - 1) + ")" + root_suffix(j_);
}

bool FactorFreeZone::contains(u64 q) const {
  const u128 twice_n = static_cast<u128>(n_) * 2;
  const u128 power = saturating_pow(q, j_, twice_n);
  return power <= n_ && 3 * power >= twice_n;
}

u64 FactorFreeZone::first_integer() const { return iroot_ceil(ceil_div(static_cast<u128>(n_) * 2, 3), j_); }

u64 FactorFreeZone::last_integer() const { return iroot(n_, j_); }

std::string FactorFreeZone::describe() const {
  return "[" + format_rational(static_cast<u128>(n_) * 2, 3) + ", " + std::to_string(n_) + "]" + root_suffix(j_);
}

u64 layer_k_limit(u64 n, unsigned j) {
  if (n == 0 || j == 0) return 0;
  if (j == 1) return (n - 1) / 2;
  if (j >= 64) return 0;
  return (n - 1) >> j;
}

std::vector<ChebyshevInterval> enumerate_intervals(u64 n, unsigned j, u64 k_max, IntervalStats* stats) {
  if (j == 0) throw Error(ErrorCode::layer_out_of_range, "layer index must be positive");
  const u64 limit = layer_k_limit(n, j);
  if (k_max == kExhaust) {
    k_max = limit;
  } else if (j == 1 && k_max > limit) {
    throw Error(ErrorCode::invalid_k, "k_max " + std::to_string(k_max) + " violates k < n/2 for n = " +
                                          std::to_string(n));
  } else {
    k_max = std::min(k_max, limit);
  }

  std::vector<ChebyshevInterval> out;
  for (u64 k = 1; k <= k_max; ++k) {
    ChebyshevInterval s(n, j, k);
    if (s.has_odd_candidates()) {
      out.push_back(s);
      if (stats) ++stats->emitted;
    } else if (stats) {
      ++stats->skipped_empty;
    }
  }
  return out;
}

FactorFreeZone first_factor_free_zone(u64 n, unsigned j) {
  if (j == 0) throw Error(ErrorCode::layer_out_of_range, "layer index must be positive");
  return FactorFreeZone(n, j);
}

std::vector<SelectedPrime> select_layer_primes(u64 n, unsigned j, u64 k_max, const PrimeSource& source,
                                               u64 floor, IntervalStats* stats) {
  if (j == 0) throw Error(ErrorCode::layer_out_of_range, "layer index must be positive");
  const u64 limit = layer_k_limit(n, j);
  if (k_max == kExhaust) {
    k_max = limit;
  } else if (j == 1 && k_max > limit) {
    throw Error(ErrorCode::invalid_k, "k_max " + std::to_string(k_max) + " violates k < n/2 for n = " +
                                          std::to_string(n));
  } else {
    k_max = std::min(k_max, limit);
  }

  // Intervals descend as k grows. Those whose integer content lies at or
  // below `floor` are irrelevant: k must stay below k_stop, where
  // ceil(2n / (2k - 1)) <= (floor + 1)^j.
  const u128 twice_n = static_cast<u128>(n) * 2;
  const u128 floor_pow = saturating_pow(floor + 1, j, twice_n);
  const u128 k_stop = (ceil_div(twice_n, floor_pow) + 2) / 2;  // ceil((ceil(2n/F^j) + 1) / 2)
  const u64 k_last = static_cast<u64>(std::min<u128>(k_max, k_stop == 0 ? 0 : k_stop - 1));

  std::vector<std::pair<u64, std::size_t>> blocks;  // (k, offset into found)
  std::vector<u64> found;
  std::vector<SelectedPrime> tail;
  for (u64 k = 1; k <= k_last; ++k) {
    ChebyshevInterval s(n, j, k);
    const u64 last = s.last_integer();
    if (last <= floor) break;
    const u64 lowest = std::max<u64>(floor + 1, 3);

    // Once the remaining intervals outnumber the integers they can hold,
    // place each integer in its interval instead (k = ceil(n / m^j)).
    if (last >= lowest && k_last - k + 1 > last - lowest + 1) {
      std::vector<u64> primes;
      source.append_primes(lowest, last + 1, primes);
      std::size_t next_prime = 0;
      u64 prev_k = 0;
      u64 hit = 0;
      for (u64 m = lowest; m <= last; ++m) {
        auto km = layer_membership(n, m, j);
        const bool counted = km && *km >= k && *km <= k_last;
        if (counted && *km != prev_k) {
          ++hit;
          prev_k = *km;
        }
        if (next_prime < primes.size() && primes[next_prime] == m) {
          if (counted) tail.push_back({m, *km});
          ++next_prime;
        }
      }
      if (stats) {
        stats->emitted += hit;
        stats->skipped_empty += (k_last - k + 1) - hit;
      }
      break;
    }

    const u64 first = std::max(s.first_integer(), lowest);
    if (first > last) {
      if (stats) ++stats->skipped_empty;
      continue;
    }
    if (stats) ++stats->emitted;
    blocks.emplace_back(k, found.size());
    source.append_primes(first, last + 1, found);
  }

  std::vector<SelectedPrime> out = std::move(tail);
  out.reserve(out.size() + found.size());
  std::size_t end = found.size();
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    for (std::size_t i = it->second; i < end; ++i) out.push_back({found[i], it->first});
    end = it->second;
  }
  return out;
}

std::vector<SelectedPrime> collect_layer(u64 n, unsigned j, const PrimeSource& source, IntervalStats* stats) {
  if (layer_k_limit(n, j) > 0) return select_layer_primes(n, j, kExhaust, source, 2, stats);

  // No admissible interval index (n <= 2^j); test candidates one by one.
  std::vector<SelectedPrime> out;
  const u64 top = iroot(static_cast<u128>(n) * 2, j);
  std::vector<u64> candidates;
  source.append_primes(3, top + 1, candidates);
  for (u64 p : candidates)
    if (auto k = layer_membership(n, p, j)) out.push_back({p, *k});
  return out;
}

}  // namespace mbc
