#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhgr/poly.hpp"
#include "qhgr/zpoly.hpp"

using namespace qhgr;

namespace {

// All monic polynomials of the given degree over a prime field.
std::vector<Poly> monic_polys(const FieldCtx& f, int degree) {
  const u64 p = f.characteristic();
  std::vector<Poly> out;
  u64 count = 1;
  for (int i = 0; i < degree; ++i) count *= p;
  for (u64 idx = 0; idx < count; ++idx) {
    std::vector<i64> c;
    u64 rest = idx;
    for (int i = 0; i < degree; ++i) {
      c.push_back(static_cast<i64>(rest % p));
      rest /= p;
    }
    c.push_back(1);
    out.push_back(Poly::from_ints(f, c));
  }
  return out;
}

// Irreducible iff no monic divisor of degree 1..deg/2.
bool brute_force_irreducible(const Poly& f) {
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    for (const Poly& g : monic_polys(f.field(), d)) {
      if ((f % g).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("irreducibility examples") {
  const FieldCtx f3 = FieldCtx::prime_field(3);
  const FieldCtx f5 = FieldCtx::prime_field(5);
  CHECK(is_irreducible(Poly::parse(f3, "-1 - x + x^2")));
  CHECK_FALSE(is_irreducible(Poly::parse(f5, "-1 - x + x^2")));
  CHECK(Poly::parse(f5, "-1 - x + x^2").eval(f5.from_int(3)) == f5.zero());
  CHECK(is_irreducible(Poly::variable(f3)));
  CHECK(is_irreducible(Poly::variable(FieldCtx::rationals())));
}

TEST_CASE("irreducibility over small prime fields matches brute force") {
  for (u64 p : {2, 3}) {
    const FieldCtx f = FieldCtx::prime_field(p);
    for (int d = 1; d <= (p == 2 ? 7 : 5); ++d) {
      for (const Poly& g : monic_polys(f, d)) {
        CAPTURE(g.to_string());
        CHECK(is_irreducible(g) == brute_force_irreducible(g));
      }
    }
  }
}

TEST_CASE("irreducibility over an extension field") {
  const FieldCtx f4 = make_extension(2, 2);
  // x^2 + x + 1 splits over GF(4) (its roots generate GF(4)).
  CHECK_FALSE(is_irreducible(Poly::parse(f4, "1 + x + x^2")));
  // x^3 + x + 1 stays irreducible: 3 is coprime to 2.
  CHECK(is_irreducible(Poly::parse(f4, "1 + x + x^3")));
  CHECK(is_irreducible(Poly(f4, {f4.adjoined_generator(), f4.one(), f4.one()})));
}

TEST_CASE("irreducibility over Q") {
  const FieldCtx q = FieldCtx::rationals();
  CHECK(is_irreducible(Poly::parse(q, "1 + x^4")));
  CHECK_FALSE(is_irreducible(Poly::parse(q, "4 + x^4")));  // (x^2+2x+2)(x^2-2x+2)
  CHECK(is_irreducible(Poly::parse(q, "1 - 10*x^2 + x^4")));  // reducible modulo every prime
  CHECK(is_irreducible(Poly::parse(q, "-2 + x^2")));
  CHECK_FALSE(is_irreducible(Poly::parse(q, "-4 + x^2")));
  for (int n = 1; n <= 40; ++n) {
    std::vector<mpq_class> c;
    for (const auto& z : cyclotomic_polynomial(n)) c.emplace_back(z);
    std::vector<Fe> coeffs;
    for (const auto& v : c) coeffs.push_back(q.from_rational(v));
    const Poly phi(q, coeffs);
    CAPTURE(n);
    CHECK(is_irreducible(phi));
    if (n > 1) CHECK_FALSE(is_irreducible(phi * Poly::parse(q, "1 + x + x^2")));
  }
  std::vector<i64> big(70, 0);
  big[0] = 1;
  big[69] = 1;
  CHECK_THROWS_AS(is_irreducible(Poly::from_ints(q, big)), MathError);
}

TEST_CASE("factorization over finite fields") {
  const FieldCtx f7 = FieldCtx::prime_field(7);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<i64> c;
    const int deg = 2 + static_cast<int>(rng() % 8);
    for (int i = 0; i < deg; ++i) c.push_back(static_cast<i64>(rng() % 7));
    c.push_back(1);
    const Poly g = Poly::from_ints(f7, c);
    if (!is_squarefree(g)) continue;
    const auto factors = factor_squarefree(g);
    Poly prod = Poly::from_ints(f7, {1});
    std::vector<int> degrees;
    for (const Poly& h : factors) {
      CHECK(is_irreducible(h));
      prod = prod * h;
      degrees.push_back(h.degree());
    }
    std::sort(degrees.begin(), degrees.end());
    CHECK(prod == g.monic());
    CHECK(factor_degrees(g) == degrees);
  }
}

TEST_CASE("division, gcd and text round trip") {
  const FieldCtx q = FieldCtx::rationals();
  const Poly a = Poly::parse(q, "1 + 2*x - 3*x^3 + x^5");
  const Poly b = Poly::parse(q, "2 - x + x^2");
  const auto [quot, rem] = divmod(a, b);
  CHECK(quot * b + rem == a);
  CHECK(rem.degree() < b.degree());
  CHECK(gcd(a * b, b * Poly::parse(q, "1 + x")) == b.monic());
  CHECK(Poly::parse(q, a.to_string()) == a);
  const FieldCtx f9 = make_extension(3, 2);
  const Poly c = Poly::parse(f9, "(1 + a)*x^2 + 2*x + a");
  CHECK(Poly::parse(f9, c.to_string()) == c);
  CHECK(Poly(q).degree() == Poly::kZeroDegree);
  CHECK(Poly::parse(q, "x^2 - 1").derivative() == Poly::parse(q, "2*x"));
}
