#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "mbc/prime_engine.hpp"
#include "mbc/valuation.hpp"
#include "oracle.hpp"

using namespace mbc;

TEST_CASE("legendre_factorial") {
  CHECK(legendre_factorial(11, 23) == 2);
  CHECK(legendre_factorial(5, 4) == 0);
  REQUIRE(oracle::factorial_valuation(3, 100) == 48);
  CHECK(legendre_factorial(3, 100) == 48);
  CHECK(legendre_factorial(2, 0) == 0);
  for (u64 p : {2, 3, 5, 7, 11, 97})
    for (u64 m = 0; m < 600; m += 7) CHECK(legendre_factorial(p, m) == oracle::factorial_valuation(p, m));
}

TEST_CASE("kummer_term") {
  CHECK(kummer_term(1'000'000, 11, 6) == 1);
  CHECK(kummer_term(10, 7, 1) == 0);
  for (u64 p : {3, 5, 7, 13})
    for (unsigned j = 1; j <= 3; ++j)
      for (u64 k = 1; k < 20; ++k) {
        u64 q = 1;
        for (unsigned i = 0; i < j; ++i) q *= p;
        CHECK(kummer_term(k * q, p, j) == 0);
      }
  // agrees with the floor definition and the fractional-part test
  for (u64 n = 1; n < 400; ++n)
    for (u64 p : {2, 3, 5, 7, 11, 19})
      for (unsigned j = 1; j < 8; ++j) {
        u64 q = 1;
        for (unsigned i = 0; i < j; ++i) q *= p;
        const u64 floor_form = 2 * n / q - 2 * (n / q);
        CHECK(kummer_term(n, p, j) == floor_form);
        CHECK(kummer_term(n, p, j) == oracle::fractional_half(n, p, j));
      }
}

TEST_CASE("kummer_term never ties for odd primes") {
  for (u64 n = 1; n <= 3000; ++n)
    for (u64 p : primes_between(3, 2 * n + 1)) {
      for (u128 q = p; q <= 2 * n; q *= p) REQUIRE(2 * (n % q) != q);
    }
}

TEST_CASE("vp_of_B against big-integer factorization") {
  const auto b5 = oracle::factor_central_binomial(5);  // 252 = 2^2 3^2 7
  REQUIRE(b5 == std::map<u64, unsigned>{{2, 2}, {3, 2}, {7, 1}});
  CHECK(vp_of_B(5, 3) == 2);
  const auto b10 = oracle::factor_central_binomial(10);  // 184756
  REQUIRE(b10 == std::map<u64, unsigned>{{2, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}});
  CHECK(vp_of_B(10, 13) == 1);
  CHECK(vp_of_B(10, 7) == 0);
  for (u64 n : {1, 2, 3, 17, 64, 100, 255, 777}) {
    const auto f = oracle::factor_central_binomial(n);
    for (u64 p : primes_between(2, 2 * n + 2)) {
      auto it = f.find(p);
      CHECK(vp_of_B(n, p) == (it == f.end() ? 0u : it->second));
    }
  }
}

TEST_CASE("v2_of_B") {
  CHECK(v2_of_B(3) == 2);
  CHECK(v2_of_B(4) == 1);
  CHECK(v2_of_B(1) == 1);
  for (u64 n = 1; n <= 100'000; ++n) {
    REQUIRE(v2_of_B(n) == static_cast<u64>(std::popcount(n)));
    if (n <= 5000) REQUIRE(v2_of_B(n) == vp_of_B(n, 2));
  }
}

TEST_CASE("odd_floor") {
  CHECK(odd_floor(9) == 9);
  CHECK(odd_floor(44) == 43);
  CHECK(isqrt(2'000'000) == 1414);
  CHECK(odd_floor(isqrt(2'000'000)) == 1413);
}

TEST_CASE("vp_odd_double_factorial") {
  CHECK(vp_odd_double_factorial(3, 5) == 3);  // 9!! = 945
  CHECK(vp_odd_double_factorial(7, 4) == 1);  // 7!! = 105
  CHECK(vp_odd_double_factorial(5, 2) == 0);  // 3!! = 3
  for (u64 n = 1; n < 300; ++n)
    for (u64 p : {3, 5, 7, 11, 13}) {
      mpz_class dbl = 1;
      for (u64 m = 1; m < 2 * n; m += 2) dbl *= m;
      CHECK(vp_odd_double_factorial(p, n) == oracle::multiplicity(dbl, p));
    }
}

TEST_CASE("max_layers") {
  CHECK(max_layers(1'000'000) == 13);
  CHECK(max_layers(2) == 1);
  CHECK(max_layers(1000) == 6);
  // no odd prime power with a nonzero term exceeds the bound
  for (u64 n = 2; n <= 2000; ++n)
    for (u64 p : primes_between(3, 2 * n))
      for (unsigned j = max_layers(n) + 1; j < max_layers(n) + 4; ++j) REQUIRE(kummer_term(n, p, j) == 0);
}

TEST_CASE("route equivalences") {
  for (u64 n = 1; n <= 1500; ++n) {
    for (u64 p : primes_between(2, 2 * n + 1)) {
      const unsigned v = vp_of_B(n, p);
      REQUIRE(v == legendre_factorial(p, 2 * n) - 2 * legendre_factorial(p, n));
      unsigned layered = 0;
      for (unsigned j = 1; j <= 40; ++j) layered += kummer_term(n, p, j);
      REQUIRE(v == layered);
      if (p > 2) REQUIRE(v == vp_odd_double_factorial(p, n) - legendre_factorial(p, n));
    }
  }
}

TEST_CASE("odd double factorial multiplicity by interval (k-th copy bound)") {
  for (u64 n = 1; n <= 1500; ++n)
    for (u64 p : primes_between(3, 2 * n)) {
      for (u64 k = 1; 2 * k < p + 1; ++k) {
        if (p * (2 * k - 1) < 2 * n && p * (2 * k + 1) > 2 * n) REQUIRE(vp_odd_double_factorial(p, n) == k);
      }
    }
}

TEST_CASE("factorial multiplicity by interval (n/k < p <= n/(k-1))") {
  for (u64 n = 1; n <= 1500; ++n)
    for (u64 p : primes_between(3, 2 * n)) {
      for (u64 k = 1; k < p; ++k) {
        if (p * k > n && p * (k - 1) <= n) REQUIRE(legendre_factorial(p, n) == k - 1);
      }
    }
}

TEST_CASE("overflow safety at large n") {
  const u64 n = 10'000'000'000ULL;
  CHECK(kummer_term(n, 3, 40) == 0);  // 3^40 far above 2n
  CHECK(vp_of_B(n, 2) == static_cast<u64>(std::popcount(n)));
  CHECK(vp_of_B(n, 3) == legendre_factorial(3, 2 * n) - 2 * legendre_factorial(3, n));
  CHECK(kummer_term(~u64{0} / 2, 3, 41) <= 1);
  CHECK(max_layers(n) == 21);  // 3^21 = 10460353203 <= 2e10 - 1 < 3^22
}
