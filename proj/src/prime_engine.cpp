#include "mbc/prime_engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <string>

#include "mbc/error.hpp"
#include "mbc/simd/kernels.hpp"

namespace mbc {

namespace {

// Bitmaps are odd-only: bit i stands for the number 2i + 1.

// Pre-sieve tables. A bit survives iff 2i + 1 is coprime to every prime in
// the group; a table of prod(group) words repeats with the index period.
struct PresieveTable {
  std::array<u64, 8> primes{};
  std::size_t count = 0;
  std::vector<u64> words;
};

PresieveTable make_presieve(std::initializer_list<u64> group) {
  PresieveTable t;
  u64 period = 1;
  for (u64 p : group) {
    t.primes[t.count++] = p;
    period *= p;
  }
  t.words.assign(period, ~u64{0});
  const u64 bits = period * 64;
  for (std::size_t g = 0; g < t.count; ++g) {
    const u64 p = t.primes[g];
    // 2i + 1 == 0 (mod p)  <=>  i == (p - 1) / 2 (mod p)
    for (u64 i = (p - 1) / 2; i < bits; i += p) t.words[i / 64] &= ~(u64{1} << (i % 64));
  }
  return t;
}

const PresieveTable& presieve_a() {
  static const PresieveTable t = make_presieve({3, 5, 7, 11, 13});
  return t;
}

const PresieveTable& presieve_b() {
  static const PresieveTable t = make_presieve({17, 19, 23});
  return t;
}

constexpr u64 kLargestPresievePrime = 23;
constexpr std::array<u64, 8> kPresievePrimes = {3, 5, 7, 11, 13, 17, 19, 23};

// Plain Eratosthenes for base primes; bound is at most ~1.5e5 in practice.
std::vector<u64> small_primes_upto(u64 bound) {
  std::vector<u64> out;
  if (bound < 2) return out;
  std::vector<char> composite(bound + 1, 0);
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 m = i * i; m <= bound; m += i) composite[m] = 1;
  }
  return out;
}

void fill_cyclic(std::span<u64> dst, u64 first_word, const std::vector<u64>& pattern) {
  std::size_t pos = first_word % pattern.size();
  std::size_t done = 0;
  while (done < dst.size()) {
    std::size_t chunk = std::min(dst.size() - done, pattern.size() - pos);
    std::memcpy(dst.data() + done, pattern.data() + pos, chunk * sizeof(u64));
    done += chunk;
    pos = 0;
  }
}

void and_cyclic(std::span<u64> dst, u64 first_word, const std::vector<u64>& pattern) {
  std::size_t pos = first_word % pattern.size();
  std::size_t done = 0;
  while (done < dst.size()) {
    std::size_t chunk = std::min(dst.size() - done, pattern.size() - pos);
    simd::and_words(dst.subspan(done, chunk), std::span<const u64>(pattern).subspan(pos, chunk));
    done += chunk;
    pos = 0;
  }
}

void validate(u64 lo, u64 hi, const SieveLimits& limits) {
  if (lo >= hi)
    throw Error(ErrorCode::empty_range,
                "empty range [" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
  if (hi > limits.range_ceiling)
    throw Error(ErrorCode::range_too_large, "range end " + std::to_string(hi) +
                                                " exceeds ceiling " + std::to_string(limits.range_ceiling));
}

// Runs the sieve over the odd numbers of [lo, hi) and hands every finished
// segment to `visit(first_index, words)`. Bits outside the range are clear.
template <class Visit>
void sieve_odd_segments(u64 lo, u64 hi, std::size_t segment_bytes, Visit&& visit) {
  u64 first_odd = std::max<u64>(lo, 3) | 1;
  if (first_odd >= hi) return;
  const u64 begin = (first_odd - 1) / 2;
  const u64 end = hi / 2;  // one past the index of the last odd number below hi
  if (begin >= end) return;

  const std::size_t seg_words = std::max<std::size_t>(1, segment_bytes / sizeof(u64));
  const u64 seg_bits = seg_words * 64;

  const std::vector<u64> base = small_primes_upto(isqrt(hi - 1));
  // next[i]: next bitmap index to clear for base prime base[i] (odd, > 23).
  std::vector<u64> sieving;
  std::vector<u64> next;
  const u64 seg0 = begin & ~u64{63};
  for (u64 p : base) {
    if (p <= kLargestPresievePrime) continue;
    const u64 low_number = 2 * seg0 + 1;
    u64 m = std::max<u64>(p * p, static_cast<u64>(ceil_div(low_number, p) * p));
    if (m % 2 == 0) m += p;
    sieving.push_back(p);
    next.push_back((m - 1) / 2);
  }

  const auto& pa = presieve_a();
  const auto& pb = presieve_b();
  std::vector<u64> words(seg_words);

  for (u64 seg = seg0; seg < end; seg += seg_bits) {
    const u64 seg_end = std::min(seg + seg_bits, end);
    const std::size_t nwords = static_cast<std::size_t>((seg_end - seg + 63) / 64);
    std::span<u64> bits(words.data(), nwords);

    fill_cyclic(bits, seg / 64, pa.words);
    and_cyclic(bits, seg / 64, pb.words);

    for (std::size_t i = 0; i < sieving.size(); ++i) {
      const u64 p = sieving[i];
      u64 idx = next[i];
      for (; idx < seg_end; idx += p) {
        const u64 local = idx - seg;
        bits[local / 64] &= ~(u64{1} << (local % 64));
      }
      next[i] = idx;
    }

    if (2 * seg + 1 <= kLargestPresievePrime) {
      for (u64 p : kPresievePrimes) {
        const u64 idx = (p - 1) / 2;
        if (idx >= seg && idx < seg_end) bits[(idx - seg) / 64] |= u64{1} << ((idx - seg) % 64);
      }
    }
    if (seg == 0) bits[0] &= ~u64{1};  // the number 1

    if (begin > seg) {
      const u64 skip = begin - seg;
      for (u64 w = 0; w < skip / 64; ++w) bits[w] = 0;
      if (skip % 64) bits[skip / 64] &= ~u64{0} << (skip % 64);
    }
    const u64 tail = seg_end - seg;
    if (tail % 64) bits[nwords - 1] &= (u64{1} << (tail % 64)) - 1;

    visit(seg, std::span<const u64>(bits));
  }
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

std::vector<u64> primes_in_range(const PrimeRangeQuery& q, const SieveLimits& limits) {
  validate(q.lo, q.hi, limits);
  std::vector<u64> out;
  if (q.lo <= 2 && 2 < q.hi) out.push_back(2);
  sieve_odd_segments(q.lo, q.hi, q.segment_bytes, [&](u64 seg, std::span<const u64> bits) {
    for (std::size_t w = 0; w < bits.size(); ++w) {
      u64 word = bits[w];
      while (word) {
        const u64 idx = seg + 64 * w + static_cast<u64>(std::countr_zero(word));
        out.push_back(2 * idx + 1);
        word &= word - 1;
      }
    }
  });
  return out;
}

u64 count_primes_in_range(const PrimeRangeQuery& q, const SieveLimits& limits) {
  validate(q.lo, q.hi, limits);
  u64 count = (q.lo <= 2 && 2 < q.hi) ? 1 : 0;
  sieve_odd_segments(q.lo, q.hi, q.segment_bytes,
                     [&](u64, std::span<const u64> bits) { count += simd::popcount_words(bits); });
  return count;
}

u64 count_primes_in_range(u64 lo, u64 hi, const SieveLimits& limits) {
  return count_primes_in_range(PrimeRangeQuery{lo, hi, kDefaultSegmentBytes}, limits);
}

bool is_prime(u64 m) {
  if (m < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (m % p == 0) return m == p;
  }
  if (m < 41 * 41) return true;
  u64 d = m - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // The first twelve primes as witnesses are exact below 3.3e24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void SievePrimeSource::append_primes(u64 lo, u64 hi, std::vector<u64>& out) const {
  if (lo >= hi) return;
  std::vector<u64> found = primes_in_range(PrimeRangeQuery{lo, hi, segment_bytes_}, limits_);
  out.insert(out.end(), found.begin(), found.end());
}

PrimeTable::PrimeTable(u64 limit, const SieveLimits& limits) : limit_(limit) {
  if (limit > 2) primes_ = primes_in_range(PrimeRangeQuery{2, limit, kDefaultSegmentBytes}, limits);
}

std::span<const u64> PrimeTable::range(u64 lo, u64 hi) const {
  hi = std::min(hi, limit_);
  if (lo >= hi) return {};
  auto first = std::lower_bound(primes_.begin(), primes_.end(), lo);
  auto last = std::lower_bound(first, primes_.end(), hi);
  return {primes_.data() + (first - primes_.begin()), static_cast<std::size_t>(last - first)};
}

void PrimeTable::append_primes(u64 lo, u64 hi, std::vector<u64>& out) const {
  if (hi > limit_ && lo < hi) {
    // Outside the table: fall back to sieving the uncovered tail.
    auto head = range(lo, limit_);
    out.insert(out.end(), head.begin(), head.end());
    std::vector<u64> tail = primes_in_range(PrimeRangeQuery{std::max(lo, limit_), hi, kDefaultSegmentBytes});
    out.insert(out.end(), tail.begin(), tail.end());
    return;
  }
  auto r = range(lo, hi);
  out.insert(out.end(), r.begin(), r.end());
}

}  // namespace mbc
