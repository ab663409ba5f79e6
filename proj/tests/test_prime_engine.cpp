#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mbc/error.hpp"
#include "mbc/prime_engine.hpp"
#include "oracle.hpp"

using namespace mbc;

TEST_CASE("primes_in_range examples") {
  CHECK(primes_in_range({2, 11}) == std::vector<u64>{2, 3, 5, 7});
  CHECK(primes_in_range({1000, 2000}).size() == 135);
  CHECK(primes_in_range({500, 667}).size() == 26);
  CHECK(primes_in_range({0, 30}) == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(primes_in_range({23, 24}) == std::vector<u64>{23});
  CHECK(primes_in_range({24, 29}).empty());
}

TEST_CASE("count_primes_in_range examples") {
  CHECK(count_primes_in_range(1'000'000, 2'000'000) == 70435);
  CHECK(count_primes_in_range(2, 3) == 1);
  CHECK(count_primes_in_range(14, 16) == 0);
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(primes_in_range({10, 10}), Error);
  try {
    count_primes_in_range(20, 10);
    FAIL("expected EmptyRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::empty_range);
  }
  try {
    primes_in_range({2, 101}, SieveLimits{100});
    FAIL("expected RangeTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::range_too_large);
  }
  CHECK_NOTHROW(primes_in_range({2, 100}, SieveLimits{100}));
  CHECK_NOTHROW(count_primes_in_range(kDefaultRangeCeiling - 1000, kDefaultRangeCeiling));
}

TEST_CASE("agrees with trial division on the first 20000 integers") {
  CHECK(primes_in_range({2, 20000}) == oracle::trial_primes(2, 20000));
}

TEST_CASE("random subranges below 1e6 agree with trial division") {
  std::mt19937_64 rng(2020);
  std::uniform_int_distribution<u64> pick(0, 1'000'000);
  for (int trial = 0; trial < 60; ++trial) {
    u64 lo = pick(rng), len = 1 + rng() % 3000;
    u64 hi = std::min<u64>(lo + len, 1'000'001);
    if (lo >= hi) continue;
    const auto expected = oracle::trial_primes(lo, hi);
    CHECK(primes_in_range({lo, hi}) == expected);
    CHECK(count_primes_in_range(lo, hi) == expected.size());
  }
}

TEST_CASE("segmentation invariance") {
  const auto ref = primes_in_range({123'457, 654'321});
  for (std::size_t bytes : {1, 8, 24, 512, 4096, 1 << 20}) {
    CHECK(primes_in_range({123'457, 654'321, bytes}) == ref);
    CHECK(count_primes_in_range(PrimeRangeQuery{123'457, 654'321, bytes}) == ref.size());
  }
}

TEST_CASE("count is additive over adjacent ranges") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    u64 a = rng() % 3'000'000;
    u64 b = a + 1 + rng() % 200'000;
    u64 c = b + 1 + rng() % 200'000;
    CHECK(count_primes_in_range(a, c) == count_primes_in_range(a, b) + count_primes_in_range(b, c));
  }
}

TEST_CASE("ranges near 2e10 match Miller-Rabin") {
  const u64 lo = 20'000'000'000ULL - 5000, hi = 20'000'000'001ULL;
  std::vector<u64> expected;
  for (u64 m = lo; m < hi; ++m)
    if (is_prime(m)) expected.push_back(m);
  CHECK(primes_in_range({lo, hi}) == expected);
  CHECK(!expected.empty());
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(1999) == oracle::trial_is_prime(1999));
  CHECK(is_prime(1999));
  for (u64 m = 0; m < 50000; ++m) REQUIRE(is_prime(m) == oracle::trial_is_prime(m));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    u64 m = rng() % 20'000'000'000ULL;
    CHECK(is_prime(m) == oracle::trial_is_prime(m));
  }
  // strong pseudoprimes to several small bases
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(2152302898747ULL));
  CHECK(is_prime(18446744073709551557ULL));
}

TEST_CASE("prime sources agree") {
  PrimeTable table(5000);
  SievePrimeSource sieve;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    u64 lo = rng() % 5200, hi = lo + rng() % 400;
    std::vector<u64> a, b;
    table.append_primes(lo, hi, a);
    sieve.append_primes(lo, hi, b);
    CHECK(a == b);
  }
}
