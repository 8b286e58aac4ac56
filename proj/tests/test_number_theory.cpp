#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qhgr/number_theory.hpp"

using namespace qhgr;

namespace {

bool trial_division_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("primality agrees with trial division") {
  for (u64 n = 0; n < 3000; ++n) CHECK(is_prime(n) == trial_division_prime(n));
  CHECK(is_prime(1'000'000'007ULL));
  CHECK_FALSE(is_prime(1'000'000'007ULL * 3));
  CHECK(primes_up_to(30) == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("prime factors") {
  CHECK(prime_factors(360) == std::vector<u64>{2, 3, 5});
  CHECK(prime_factors(97) == std::vector<u64>{97});
  CHECK(prime_factors(1).empty());
}

TEST_CASE("multiplicative order by brute force") {
  for (u64 m = 2; m < 60; ++m) {
    for (u64 a = 1; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      u64 order = 1;
      u64 x = a % m;
      while (x != 1 % m) {
        x = x * a % m;
        ++order;
      }
      CHECK(multiplicative_order(a, m) == order);
    }
  }
}

TEST_CASE("binomial matches Pascal's triangle") {
  std::vector<std::vector<u64>> pascal(30);
  for (int n = 0; n < 30; ++n) {
    pascal[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
  }
}

TEST_CASE("prime power splitting") {
  auto s = split_prime_power(24, 2);
  CHECK(s.exponent == 3);
  CHECK(s.cofactor == 3);
  s = split_prime_power(10, 7);
  CHECK(s.exponent == 0);
  CHECK(s.cofactor == 10);
  s = split_prime_power(10, 0);
  CHECK(s.cofactor == 10);
  CHECK(checked_pow(3, 4) == 81);
  CHECK_THROWS_AS(checked_pow(10, 30), std::overflow_error);
}

TEST_CASE("modular arithmetic") {
  CHECK(pow_mod(3, 6, 7) == 1);
  CHECK(mul_mod(1ULL << 62, 4, 1'000'000'007ULL) == ((1ULL << 62) % 1'000'000'007ULL) * 4 % 1'000'000'007ULL);
  CHECK(gcd_u64(12, 18) == 6);
}
