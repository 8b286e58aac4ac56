#pragma once

#include <cstdint>
#include <vector>

namespace qhgr {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);
std::vector<u64> primes_up_to(u64 bound);
std::vector<u64> prime_factors(u64 n);  // distinct, ascending

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 gcd_u64(u64 a, u64 b);

/// Order of a in (Z/mZ)^x; requires gcd(a, m) = 1 and m >= 1.
u64 multiplicative_order(u64 a, u64 m);

u64 binomial(int n, int k);

/// Splits n = p^d * m with gcd(m, p) = 1; returns {d, m}. p = 0 gives {0, n}.
struct PrimePowerSplit {
  int exponent;
  u64 cofactor;
};
PrimePowerSplit split_prime_power(u64 n, u64 p);

/// Integer power with overflow check; throws std::overflow_error.
u64 checked_pow(u64 base, int exp);

}  // namespace qhgr
