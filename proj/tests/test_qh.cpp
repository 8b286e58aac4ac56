#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "qhgr/qh.hpp"

using namespace qhgr;

namespace {

const FieldCtx kQ = FieldCtx::rationals();

QhElement sigma(const GrContext& ctx, std::vector<int> rows, int q_power = 0, const FieldCtx& f = kQ) {
  return QhElement::schubert(ctx, f, YoungDiagram(std::move(rows)), q_power);
}

// Classical terms of x_j * sigma_D: every E in the rectangle with E/D a
// vertical strip of j boxes (each row grows by at most one).
std::vector<YoungDiagram> vertical_strips(const GrContext& ctx, const YoungDiagram& d, int j) {
  std::vector<YoungDiagram> out;
  for (const auto& e : enumerate_diagrams(ctx)) {
    if (e.size() != d.size() + j) continue;
    bool ok = true;
    for (int i = 0; i < ctx.k(); ++i) ok = ok && (e.row(i) - d.row(i) == 0 || e.row(i) - d.row(i) == 1);
    if (ok) out.push_back(e);
  }
  return out;
}

QhElement random_homogeneous(const GrContext& ctx, const FieldCtx& f, std::mt19937_64& rng) {
  const int degree = static_cast<int>(rng() % static_cast<u64>(2 * ctx.n())) - ctx.n() / 2;
  QhElement out(ctx, f);
  for (const auto& b : graded_basis(ctx, degree)) {
    const i64 c = static_cast<i64>(rng() % 7) - 3;
    out.add_term(b.diagram, b.q_power, f.from_int(c));
  }
  return out;
}

}  // namespace

TEST_CASE("Pieri examples") {
  const GrContext g36(3, 6);
  CHECK(pieri_multiply(sigma(g36, {3, 1}), 2) == sigma(g36, {3, 2, 1}) + sigma(g36, {}, 1));
  CHECK(pieri_multiply(sigma(g36, {3, 1}), 2).to_string() == "σ[3,2,1] + q*σ[-]");
  const GrContext g25(2, 5);
  CHECK(pieri_multiply(sigma(g25, {3, 2}), 2) == sigma(g25, {2}, 1));
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const GrContext ctx(k, n);
      for (int j = 1; j <= k; ++j) {
        CHECK(pieri_multiply(QhElement::unit(ctx, kQ), j) == QhElement::schubert(ctx, kQ, YoungDiagram::column(j)));
      }
      for (int j = 1; j <= n - k; ++j) {
        CHECK(transposed_pieri_multiply(QhElement::unit(ctx, kQ), j) ==
              QhElement::schubert(ctx, kQ, YoungDiagram::row_of(j)));
      }
    }
  }
  CHECK_THROWS_AS(pieri_multiply(QhElement::unit(g25, kQ), 3), std::invalid_argument);
  CHECK_THROWS_AS(transposed_pieri_multiply(QhElement::unit(g25, kQ), 4), std::invalid_argument);
}

TEST_CASE("classical Pieri terms are the vertical strips") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const GrContext ctx(k, n);
      for (const auto& d : enumerate_diagrams(ctx)) {
        for (int j = 1; j <= k; ++j) {
          const QhElement prod = pieri_multiply(QhElement::schubert(ctx, kQ, d), j);
          QhElement classical(ctx, kQ);
          for (const auto& [b, c] : prod.terms()) {
            CHECK(kQ.is_one(c));  // Pieri coefficients are 0/1
            if (b.q_power == 0) classical.add_term(b.diagram, 0, c);
            else CHECK(b.q_power == 1);
          }
          QhElement expected(ctx, kQ);
          for (const auto& e : vertical_strips(ctx, d, j)) expected.add_term(e, 0, kQ.one());
          CHECK(classical == expected);
          if (d.row(0) < n - k) CHECK(classical == prod);  // no full top row, no q-term
        }
      }
    }
  }
}

TEST_CASE("transposed Pieri in the middle degree") {
  const GrContext g(2, 13);
  const QhElement v0 = sigma(g, {11});
  const QhElement v1 = sigma(g, {10, 1});
  const QhElement v2 = sigma(g, {9, 2});
  CHECK(transposed_pieri_multiply(v1, 9) == sigma(g, {11, 9}) + sigma(g, {10, 10}) + sigma(g, {7}, 1));
  CHECK(transposed_pieri_multiply(v0, 9) == sigma(g, {11, 9}));
  const QhElement x2 = QhElement::special(g, kQ, 2);
  CHECK(quantum_product(quantum_product(x2, v1), v1) == q_shift(v0 + v1 + v2, 1));
}

TEST_CASE("x_k^n = q^k") {
  for (const FieldCtx& f : {kQ, FieldCtx::prime_field(2)}) {
    for (int n = 1; n <= 8; ++n) {
      for (int k = 1; k <= n; ++k) {
        const GrContext ctx(k, n);
        const QhElement p = quantum_power(QhElement::special(ctx, f, k), n);
        CHECK(p == QhElement::schubert(ctx, f, YoungDiagram(), k));
        CHECK(q_shift(p, -k) == QhElement::unit(ctx, f));
      }
    }
  }
}

TEST_CASE("Pieri consistency and Giambelli") {
  CHECK(to_string(giambelli_expand(GrContext(2, 5), YoungDiagram({1, 1}))) == "x2");
  CHECK(giambelli_expand(GrContext(2, 5), YoungDiagram({2, 1})) == SpecialPolynomial{{{1, 1}, 1}});
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const GrContext ctx(k, n);
      for (int j = 1; j <= k; ++j) {
        CHECK(giambelli_expand(ctx, YoungDiagram::column(j)) == SpecialPolynomial{{[&] {
                std::vector<int> e(static_cast<std::size_t>(k), 0);
                e[static_cast<std::size_t>(j - 1)] = 1;
                return e;
              }(), 1}});
      }
      for (const auto& d : enumerate_diagrams(ctx)) {
        // Apply each monomial to the unit by iterated Pieri.
        QhElement rebuilt(ctx, kQ);
        for (const auto& [exps, coeff] : giambelli_expand(ctx, d)) {
          QhElement term = QhElement::unit(ctx, kQ);
          for (int i = 0; i < k; ++i) {
            for (int r = 0; r < exps[static_cast<std::size_t>(i)]; ++r) term = pieri_multiply(term, i + 1);
          }
          rebuilt = rebuilt + term.scaled(kQ.from_int(coeff));
        }
        CHECK(rebuilt == QhElement::schubert(ctx, kQ, d));
        for (int j = 1; j <= k; ++j) {
          const QhElement e = QhElement::schubert(ctx, kQ, d);
          CHECK(quantum_product(QhElement::special(ctx, kQ, j), e) == pieri_multiply(e, j));
        }
      }
    }
  }
}

TEST_CASE("Poincare duality and classical nonnegativity") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const GrContext ctx(k, n);
      const YoungDiagram point(std::vector<int>(static_cast<std::size_t>(k), n - k));
      const auto ds = enumerate_diagrams(ctx);
      for (const auto& a : ds) {
        for (const auto& b : ds) {
          if (a.size() + b.size() != ctx.dimension()) continue;
          // sigma_a sigma_b = [b is the complement of a] * pt.
          bool complementary = true;
          for (int i = 0; i < k; ++i) complementary = complementary && a.row(i) + b.row(k - 1 - i) == n - k;
          i64 coeff = 0;
          for (const auto& [e, c] : schubert_product(ctx, a, b)) {
            if (e.diagram == point && e.q_power == 0) coeff = c;
          }
          CHECK(coeff == (complementary ? 1 : 0));
        }
        for (const auto& b : ds) {
          for (const auto& [e, c] : schubert_product(ctx, a, b)) CHECK(c > 0);
        }
      }
      // PD(pt) = x_k^(n-k) is invertible: pt^n = q^(k(n-k)).
      const QhElement pt = QhElement::schubert(ctx, kQ, point);
      CHECK(pt == quantum_power(QhElement::special(ctx, kQ, k), n - k));
      CHECK(quantum_power(pt, n) == QhElement::schubert(ctx, kQ, YoungDiagram(), ctx.dimension()));
    }
  }
}

TEST_CASE("associativity, commutativity and grading") {
  std::mt19937_64 rng(2024);
  for (const FieldCtx& f : {kQ, FieldCtx::prime_field(2), FieldCtx::prime_field(3), FieldCtx::prime_field(7)}) {
    for (int n = 2; n <= 8; ++n) {
      for (int k = 1; k <= std::min(3, n - 1); ++k) {
        const GrContext ctx(k, n);
        for (int t = 0; t < 200; ++t) {
          const QhElement a = random_homogeneous(ctx, f, rng);
          const QhElement b = random_homogeneous(ctx, f, rng);
          const QhElement c = random_homogeneous(ctx, f, rng);
          const QhElement ab = quantum_product(a, b);
          CHECK(quantum_product(ab, c) == quantum_product(a, quantum_product(b, c)));
          CHECK(ab == quantum_product(b, a));
          if (a.degree() && b.degree() && !ab.is_zero()) CHECK(ab.is_homogeneous(*a.degree() + *b.degree()));
        }
      }
    }
  }
}

TEST_CASE("unit, q-shift and mismatches") {
  const GrContext g(2, 6);
  const QhElement a = QhElement::parse(g, kQ, "3*σ[2,1] - 1/2*σ[3]");
  CHECK(quantum_product(QhElement::unit(g, kQ), a) == a);
  CHECK(q_shift(QhElement::unit(g, kQ), 0) == QhElement::unit(g, kQ));
  CHECK(q_shift(q_shift(QhElement::unit(g, kQ), 1), -1) == QhElement::unit(g, kQ));
  CHECK(*q_shift(a, 2).degree() == 3 + 12);
  CHECK_THROWS_AS(quantum_product(a, QhElement::unit(GrContext(2, 5), kQ)), std::invalid_argument);
  CHECK_THROWS_AS(quantum_product(a, QhElement::unit(g, FieldCtx::prime_field(3))), std::invalid_argument);
}

TEST_CASE("text round trip") {
  const GrContext g(3, 6);
  const FieldCtx f9 = make_extension(3, 2);
  for (const char* text : {"σ[3,2,1] + q*σ[-]", "2*σ[1] - q^-1*σ[3,3,2]", "s[2,2] + q^(2)*s[1]", "-σ[-]"}) {
    const QhElement e = QhElement::parse(g, kQ, text);
    CHECK(QhElement::parse(g, kQ, e.to_string()) == e);
  }
  CHECK(QhElement::parse(g, kQ, "s[2,2] + q^(2)*s[1]") == sigma(g, {2, 2}) + sigma(g, {1}, 2));
  const QhElement ext = QhElement::parse(g, f9, "(1 + a)*σ[1] + a*q*σ[-]");
  CHECK(QhElement::parse(g, f9, ext.to_string()) == ext);
  CHECK_THROWS_AS(QhElement::parse(g, kQ, "σ[4]"), std::invalid_argument);
  CHECK_THROWS_AS(QhElement::parse(g, kQ, "σ[1"), std::invalid_argument);
  CHECK(QhElement(g, kQ).to_string() == "0");
}

TEST_CASE("concurrent products agree with sequential ones") {
  const GrContext ctx(3, 9);
  const auto ds = enumerate_diagrams(ctx);
  std::vector<std::vector<IntegerExpansion>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < ds.size(); i += 3) {
        for (const auto& b : ds) results[t].push_back(schubert_product(ctx, ds[i], b));
      }
    });
  }
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < results.size(); ++t) {
    std::size_t idx = 0;
    for (std::size_t i = t; i < ds.size(); i += 3) {
      for (const auto& b : ds) {
        const QhElement seq = quantum_product(QhElement::schubert(ctx, kQ, ds[i]), QhElement::schubert(ctx, kQ, b));
        QhElement par(ctx, kQ);
        for (const auto& [e, c] : results[t][idx++]) par.add_term(e.diagram, e.q_power, kQ.from_int(c));
        CHECK(par == seq);
      }
    }
  }
  CHECK(structure_cache_size() > 0);
}
