#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qhgr/diagram.hpp"
#include "qhgr/number_theory.hpp"

using namespace qhgr;

namespace {

// Oracle: all k-tuples in [0, n-k]^k that are weakly decreasing.
std::set<std::vector<int>> brute_force(int k, int n) {
  std::set<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(k), 0);
  while (true) {
    bool ok = true;
    for (int i = 1; i < k; ++i) ok = ok && t[i] <= t[i - 1];
    if (ok) {
      std::vector<int> rows = t;
      while (!rows.empty() && rows.back() == 0) rows.pop_back();
      out.insert(rows);
    }
    int i = 0;
    while (i < k && t[i] == n - k) t[i++] = 0;
    if (i == k) break;
    ++t[i];
  }
  return out;
}

std::vector<YoungDiagram> diagrams(std::initializer_list<std::vector<int>> rows) {
  std::vector<YoungDiagram> out;
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_diagrams(GrContext(2, 5)).size() == 10);
  CHECK(enumerate_diagrams(GrContext(1, 2)).size() == 2);
  CHECK(enumerate_diagrams(GrContext(3, 6)).size() == 20);
  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto ds = enumerate_diagrams(GrContext(k, n));
      std::set<std::vector<int>> got;
      for (const auto& d : ds) got.insert(d.rows());
      CHECK(got == brute_force(k, n));
      CHECK(ds.size() == binomial(n, k));
      for (std::size_t i = 1; i < ds.size(); ++i) CHECK(ds[i - 1] < ds[i]);
    }
  }
}

TEST_CASE("canonical order on the middle graded pieces") {
  std::vector<YoungDiagram> odd;
  for (const auto& b : graded_basis(GrContext(2, 13), 11)) {
    CHECK(b.q_power == 0);
    odd.push_back(b.diagram);
  }
  CHECK(odd == diagrams({{11}, {10, 1}, {9, 2}, {8, 3}, {7, 4}, {6, 5}}));
  std::vector<YoungDiagram> even;
  for (const auto& b : graded_basis(GrContext(2, 12), 10)) even.push_back(b.diagram);
  CHECK(even == diagrams({{10}, {9, 1}, {8, 2}, {7, 3}, {6, 4}, {5, 5}}));
}

TEST_CASE("conjugation") {
  const GrContext g25(2, 5);
  CHECK(conjugate(g25, YoungDiagram({3, 1})) == YoungDiagram({2, 1, 1}));
  CHECK(conjugate(g25, YoungDiagram({3, 2})) == YoungDiagram({2, 2, 1}));
  CHECK(conjugate(GrContext(3, 6), YoungDiagram()) == YoungDiagram());
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k < n; ++k) {
      const GrContext ctx(k, n);
      for (const auto& d : enumerate_diagrams(ctx)) {
        const YoungDiagram c = conjugate(ctx, d);
        CHECK(c.fits(ctx.dual()));
        CHECK(c.size() == d.size());
        CHECK(conjugate(ctx.dual(), c) == d);
      }
    }
  }
}

TEST_CASE("graded basis") {
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; k < n; ++k) {
      const GrContext ctx(k, n);
      std::size_t total = 0;
      for (int d = 0; d < n; ++d) total += graded_basis(ctx, d).size();
      CHECK(total == binomial(n, k));
      for (int d = -n; d < 2 * n; ++d) {
        const auto base = graded_basis(ctx, d);
        const auto up = graded_basis(ctx, d + n);
        REQUIRE(base.size() == up.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
          CHECK(up[i].diagram == base[i].diagram);
          CHECK(up[i].q_power == base[i].q_power + 1);
          CHECK(base[i].degree(ctx) == d);
        }
      }
      bool has_unit = false;
      for (const auto& b : graded_basis(ctx, 0)) has_unit = has_unit || (b.diagram.empty() && b.q_power == 0);
      CHECK(has_unit);
    }
  }
}

TEST_CASE("text format and validation") {
  CHECK(YoungDiagram::parse("3,1").rows() == std::vector<int>{3, 1});
  CHECK(YoungDiagram::parse("-").empty());
  CHECK(YoungDiagram::parse("2,0,0") == YoungDiagram({2}));
  CHECK(YoungDiagram({3, 2, 1}).to_string() == "3,2,1");
  CHECK(YoungDiagram().to_string() == "-");
  CHECK_THROWS_AS(YoungDiagram({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(YoungDiagram::parse("a,1"), std::invalid_argument);
  CHECK_THROWS_AS(GrContext(3, 2), std::invalid_argument);
  CHECK_FALSE(YoungDiagram({4}).fits(GrContext(2, 5)));
  CHECK(YoungDiagram::column(3) == YoungDiagram({1, 1, 1}));
  CHECK(GrContext(2, 7).minimal_chern_number() == 7);
}
