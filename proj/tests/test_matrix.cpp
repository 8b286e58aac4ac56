#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhgr/matrix.hpp"

using namespace qhgr;

namespace {

SquareMatrix random_matrix(const FieldCtx& f, std::size_t n, std::mt19937_64& rng) {
  SquareMatrix m(f, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m.at(r, c) = f.is_finite() ? f.element_at(rng() % *f.order()) : f.from_int(static_cast<i64>(rng() % 11) - 5);
    }
  }
  return m;
}

// det by cofactor expansion: an elimination-free oracle for small sizes.
Fe cofactor_det(const SquareMatrix& m) {
  const FieldCtx& f = m.field();
  const std::size_t n = m.size();
  if (n == 1) return m.at(0, 0);
  Fe acc = f.zero();
  for (std::size_t c = 0; c < n; ++c) {
    SquareMatrix minor(f, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t cc = 0, mc = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor.at(r - 1, mc++) = m.at(r, cc);
      }
    }
    Fe term = f.mul(m.at(0, c), cofactor_det(minor));
    acc = (c % 2) ? f.sub(acc, term) : f.add(acc, term);
  }
  return acc;
}

}  // namespace

TEST_CASE("characteristic polynomial examples") {
  const FieldCtx q = FieldCtx::rationals();
  CHECK(char_poly(SquareMatrix::identity(q, 2)) == Poly::parse(q, "1 - 2*x + x^2"));
  CHECK(char_poly(SquareMatrix::from_ints(q, {{1, -1}, {-1, 0}})) == Poly::parse(q, "-1 - x + x^2"));
  CHECK(char_poly(SquareMatrix::from_ints(q, {{2}})) == Poly::parse(q, "2 - x"));
}

TEST_CASE("char_poly agrees with det(M - tI) by cofactors") {
  std::mt19937_64 rng(5);
  for (const FieldCtx& f : {FieldCtx::rationals(), FieldCtx::prime_field(7), make_extension(2, 3)}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const SquareMatrix m = random_matrix(f, n, rng);
      const Poly cp = char_poly(m);
      CHECK(cp.degree() == static_cast<int>(n));
      for (i64 t = -2; t <= 3; ++t) {
        SquareMatrix shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) = f.sub(shifted.at(i, i), f.from_int(t));
        CHECK(cp.eval(f.from_int(t)) == cofactor_det(shifted));
      }
    }
  }
}

TEST_CASE("Cayley-Hamilton and minimal polynomials") {
  std::mt19937_64 rng(9);
  for (const FieldCtx& f : {FieldCtx::rationals(), FieldCtx::prime_field(3), make_extension(5, 2)}) {
    for (std::size_t n = 1; n <= 7; ++n) {
      SquareMatrix m = random_matrix(f, n, rng);
      if (n >= 4) {
        // Force a repeated block so the minimal polynomial is a proper divisor.
        for (std::size_t c = 0; c < n; ++c) m.at(n - 1, c) = m.at(0, c);
      }
      const Poly cp = char_poly(m);
      CHECK(evaluate_at(cp, m).is_zero());
      const Poly mp = min_poly(m);
      CHECK(mp.leading() == f.one());
      CHECK(evaluate_at(mp, m).is_zero());
      CHECK((cp % mp).is_zero());
    }
  }
  const FieldCtx q = FieldCtx::rationals();
  CHECK(min_poly(SquareMatrix::identity(q, 3)) == Poly::parse(q, "-1 + x"));
  CHECK(min_poly(SquareMatrix::from_ints(q, {{1, 0}, {0, 2}})) == Poly::parse(q, "2 - 3*x + x^2"));
}

TEST_CASE("rank") {
  const FieldCtx q = FieldCtx::rationals();
  CHECK(rank(SquareMatrix::from_ints(q, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(SquareMatrix::identity(q, 4)) == 4);
  CHECK(rank(SquareMatrix::from_ints(FieldCtx::prime_field(2), {{1, 1}, {1, 1}})) == 1);
  CHECK(rank(SquareMatrix::from_ints(FieldCtx::prime_field(3), {{1, 2}, {2, 1}})) == 1);  // det = -3
}
