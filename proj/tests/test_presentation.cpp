#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qhgr/degree_zero.hpp"
#include "qhgr/matrix.hpp"
#include "qhgr/presentation.hpp"

using namespace qhgr;

namespace {

const FieldCtx kQ = FieldCtx::rationals();

std::vector<Fe> ints(const FieldCtx& f, std::initializer_list<i64> values) {
  std::vector<Fe> out;
  for (i64 v : values) out.push_back(f.from_int(v));
  return out;
}

SpecialPolynomial poly_mul(const SpecialPolynomial& a, const SpecialPolynomial& b) {
  SpecialPolynomial out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SpecialPolynomial poly_add(SpecialPolynomial a, const SpecialPolynomial& b, i64 scale) {
  for (const auto& [e, c] : b) a[e] += scale * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
  return a;
}

SpecialPolynomial variable(int i, int k) {
  std::vector<int> e(static_cast<std::size_t>(k), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return {{e, 1}};
}

Fe det(const SquareMatrix& m) { return char_poly(m).eval(m.field().zero()); }

// Bialternant: s_D(z) = det(z_i^(D_j + k - j)) / det(z_i^(k - j)) for distinct z.
Fe schur_bialternant(const FieldCtx& f, const std::vector<Fe>& z, const YoungDiagram& d) {
  const std::size_t k = z.size();
  SquareMatrix num(f, k), den(f, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const int e = static_cast<int>(k - 1 - j);
      num.at(i, j) = f.pow(z[i], d.row(static_cast<int>(j)) + e);
      den.at(i, j) = f.pow(z[i], e);
    }
  }
  return f.div(det(num), det(den));
}

QhElement random_class(const GrContext& ctx, const FieldCtx& f, std::mt19937_64& rng) {
  QhElement out(ctx, f);
  for (const auto& d : enumerate_diagrams(ctx)) {
    if (rng() % 3 == 0) out.add_term(d, static_cast<int>(rng() % 3) - 1, f.from_int(static_cast<i64>(rng() % 5) - 2));
  }
  return out;
}

}  // namespace

TEST_CASE("elementary and complete symmetric functions") {
  CHECK(elementary_sym(kQ, ints(kQ, {1, 2, 3}), 2) == kQ.from_int(11));
  CHECK(elementary_sym(kQ, ints(kQ, {4, 5}), 0) == kQ.one());
  CHECK(complete_sym(kQ, ints(kQ, {1, 2}), 2) == kQ.from_int(7));
  CHECK(complete_sym(kQ, ints(kQ, {1, 2}), 0) == kQ.one());
  CHECK_THROWS_AS(elementary_sym(kQ, ints(kQ, {1}), 2), std::out_of_range);
  CHECK_THROWS_AS(complete_sym(kQ, ints(kQ, {1}), -1), std::out_of_range);

  // h_r by brute-force monomial enumeration.
  std::mt19937_64 rng(1);
  for (int k = 1; k <= 4; ++k) {
    std::vector<Fe> v;
    for (int i = 0; i < k; ++i) v.push_back(kQ.from_int(static_cast<i64>(rng() % 9) - 4));
    for (int r = 0; r <= 6; ++r) {
      Fe brute = kQ.zero();
      std::vector<int> e(static_cast<std::size_t>(k), 0);
      while (true) {
        int total = 0;
        for (int x : e) total += x;
        if (total == r) {
          Fe m = kQ.one();
          for (int i = 0; i < k; ++i) m = kQ.mul(m, kQ.pow(v[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]));
          brute = kQ.add(brute, m);
        }
        int i = 0;
        while (i < k && e[static_cast<std::size_t>(i)] == r) e[static_cast<std::size_t>(i++)] = 0;
        if (i == k) break;
        ++e[static_cast<std::size_t>(i)];
      }
      CHECK(complete_sym(kQ, v, r) == brute);
    }
  }
}

TEST_CASE("E(-t)H(t) = 1") {
  std::mt19937_64 rng(7);
  for (const FieldCtx& f : {kQ, FieldCtx::prime_field(5), make_extension(2, 3)}) {
    for (int k = 1; k <= 4; ++k) {
      std::vector<Fe> v;
      for (int i = 0; i < k; ++i) v.push_back(f.is_finite() ? f.element_at(rng() % *f.order()) : f.from_int(static_cast<i64>(rng() % 11) - 5));
      for (int r = 1; r <= 12; ++r) {
        Fe acc = f.zero();
        for (int i = 0; i <= std::min(r, k); ++i) {
          Fe term = f.mul(elementary_sym(f, v, i), complete_sym(f, v, r - i));
          acc = (i % 2) ? f.sub(acc, term) : f.add(acc, term);
        }
        CHECK(f.is_zero(acc));
      }
    }
  }
}

TEST_CASE("Vieta on all n-th roots of unity") {
  for (int n = 1; n <= 12; ++n) {
    for (const FieldCtx& f : {FieldCtx::cyclotomic(n), make_extension(13, static_cast<int>(multiplicative_order(13, static_cast<u64>(n))))}) {
      if (f.characteristic() != 0 && n % 13 == 0) continue;
      const auto roots = nth_roots_of_unity(f, static_cast<u64>(n));
      for (int i = 0; i <= n; ++i) {
        Fe expected = f.zero();
        if (i == 0) expected = f.one();
        if (i == n) expected = f.neg(f.one());
        // coefficient of t^i in sum e_i (-t)^i
        Fe got = elementary_sym(f, roots, i);
        if (i % 2) got = f.neg(got);
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("Y_r polynomials") {
  CHECK(to_string(y_polynomial(1, 3)) == "x1");
  CHECK(y_polynomial(2, 3) == SpecialPolynomial{{{2, 0, 0}, 1}, {{0, 1, 0}, -1}});
  for (int k = 4; k <= 5; ++k) {
    SpecialPolynomial rhs = poly_mul(variable(1, k), y_polynomial(3, k));
    rhs = poly_add(rhs, poly_mul(variable(2, k), y_polynomial(2, k)), -1);
    rhs = poly_add(rhs, poly_mul(variable(3, k), y_polynomial(1, k)), 1);
    rhs = poly_add(rhs, variable(4, k), -1);
    CHECK(y_polynomial(4, k) == rhs);
  }
  // The single-row class is Y_r.
  for (int n = 3; n <= 9; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int r = 1; r <= n - k; ++r) CHECK(giambelli_expand(GrContext(k, n), YoungDiagram::row_of(r)) == y_polynomial(r, k));
    }
  }
}

TEST_CASE("admissible multisets") {
  CHECK(admissible_multisets(make_ev_context(GrContext(3, 3), kQ)).size() == 1);
  CHECK(admissible_multisets(make_ev_context(GrContext(2, 5), kQ)).size() == 10);
  const auto cube_roots = admissible_multisets(FieldCtx::prime_field(7), 1, 3);
  std::vector<u64> values;
  for (const auto& j : cube_roots) values.push_back(FieldCtx::prime_field(7).prime_residue(j.roots[0]));
  std::sort(values.begin(), values.end());
  CHECK(values == std::vector<u64>{1, 2, 4});
  const EvContext ev = make_ev_context(GrContext(2, 6), FieldCtx::prime_field(3));
  CHECK(ev.multiplicity_cap == 3);
  CHECK(ev.root_order == 2);
  CHECK(admissible_multisets(ev).size() == 3);
  CHECK(ev.multiset("[0,0]").to_string() == "[0,0]");
  CHECK_THROWS(ev.multiset("[0,0,0]"));
  CHECK_THROWS(make_ev_context(GrContext(2, 6), FieldCtx::prime_field(5)).multiset("[1,1]"));
  CHECK_THROWS_AS(make_ev_context(GrContext(2, 5), make_extension(5, 2)), MathError);
}

TEST_CASE("xi and the evaluation maps") {
  struct Case {
    int k, n;
    FieldCtx f;
  };
  for (const Case& c : {Case{2, 5, FieldCtx::prime_field(11)}, Case{3, 6, FieldCtx::prime_field(7)},
                        Case{2, 7, FieldCtx::prime_field(3)}, Case{2, 5, kQ}, Case{3, 6, kQ}, Case{2, 6, kQ},
                        Case{2, 6, FieldCtx::prime_field(2)}, Case{2, 6, FieldCtx::prime_field(3)},
                        Case{3, 6, FieldCtx::prime_field(3)}, Case{1, 4, kQ}}) {
    const GrContext ctx(c.k, c.n);
    const EvContext ev = make_ev_context(ctx, c.f);
    const FieldCtx& K = ev.splitting;
    CAPTURE(c.k);
    CAPTURE(c.n);
    CAPTURE(c.f.name());
    Fe target = K.one();
    if (c.k % 2 == 0) target = K.neg(target);
    CHECK(K.pow(ev.xi, c.n) == target);
    std::mt19937_64 rng(static_cast<u64>(c.k * 100 + c.n));
    for (const auto& j : admissible_multisets(ev)) {
      CHECK(verify_ideal_vanishing(ev, j).all_vanish());
      CHECK(ev_map(ev, j, QhElement::unit(ctx, c.f)) == K.one());
      CHECK(ev_map(ev, j, QhElement::schubert(ctx, c.f, YoungDiagram(), 1)) == K.one());
      for (int i = 1; i <= c.k; ++i) {
        CHECK(ev_special(ev, j, i) == K.mul(K.pow(ev.xi, i), elementary_sym(K, j.roots, i)));
      }
      for (int t = 0; t < 5; ++t) {
        const QhElement a = random_class(ctx, c.f, rng);
        const QhElement b = random_class(ctx, c.f, rng);
        CHECK(ev_map(ev, j, quantum_product(a, b)) == K.mul(ev_map(ev, j, a), ev_map(ev, j, b)));
        CHECK(ev_map(ev, j, a + b) == K.add(ev_map(ev, j, a), ev_map(ev, j, b)));
      }
      // Degree-zero classes land in the field generated by the roots.
      for (const auto& e : qh0_basis(ctx)) {
        CHECK(in_root_subfield(ev, ev_map(ev, j, QhElement::schubert(ctx, c.f, e.diagram, e.q_power))));
      }
    }
  }
}

TEST_CASE("Schubert classes evaluate to Schur functions") {
  for (const auto& [k, n, f] : {std::tuple{2, 5, kQ}, std::tuple{3, 7, kQ}, std::tuple{2, 5, FieldCtx::prime_field(11)},
                                std::tuple{3, 6, FieldCtx::prime_field(7)}}) {
    const GrContext ctx(k, n);
    const EvContext ev = make_ev_context(ctx, f);
    const FieldCtx& K = ev.splitting;
    for (const auto& j : admissible_multisets(ev)) {
      for (const auto& d : enumerate_diagrams(ctx)) {
        const Fe expected = K.mul(K.pow(ev.xi, d.size()), schur_bialternant(K, j.roots, d));
        CHECK(ev_map(ev, j, QhElement::schubert(ctx, f, d)) == expected);
      }
    }
  }
}

TEST_CASE("root subfield membership has teeth") {
  const EvContext ev = make_ev_context(GrContext(2, 6), kQ);
  CHECK(in_root_subfield(ev, ev.zeta));
  CHECK_FALSE(in_root_subfield(ev, ev.xi));
  CHECK(in_root_subfield(ev, ev.splitting.pow(ev.xi, 2)));
  const EvContext ev7 = make_ev_context(GrContext(2, 7), FieldCtx::prime_field(3));
  CHECK(in_root_subfield(ev7, ev7.zeta));
  const EvContext ev8 = make_ev_context(GrContext(2, 4), FieldCtx::prime_field(3));
  // xi is a primitive 8th root; over GF(3) the 4th roots generate GF(9) already.
  CHECK(ev8.splitting.pow(ev8.xi, 4) == ev8.splitting.neg(ev8.splitting.one()));
}
