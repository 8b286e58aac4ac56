#include "qhgr/number_theory.hpp"

#include <stdexcept>

namespace qhgr {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> primes_up_to(u64 bound) {
  std::vector<u64> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(bound + 1, true);
  for (u64 i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m == 0) throw std::invalid_argument("multiplicative_order: modulus 0");
  if (m == 1) return 1;
  a %= m;
  if (gcd_u64(a, m) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  u64 x = a;
  u64 order = 1;
  while (x != 1) {
    x = mul_mod(x, a, m);
    ++order;
  }
  return order;
}

u64 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  u64 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<u64>(n - k + i) / static_cast<u64>(i);
  }
  return result;
}

PrimePowerSplit split_prime_power(u64 n, u64 p) {
  PrimePowerSplit out{0, n};
  if (p < 2) return out;
  while (out.cofactor % p == 0) {
    out.cofactor /= p;
    ++out.exponent;
  }
  return out;
}

u64 checked_pow(u64 base, int exp) {
  u64 result = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) throw std::overflow_error("checked_pow overflow");
  }
  return result;
}

}  // namespace qhgr
