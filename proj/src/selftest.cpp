#include "qhgr/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "qhgr/degree_zero.hpp"
#include "qhgr/gelfand_cetlin.hpp"
#include "qhgr/presentation.hpp"
#include "qhgr/qh.hpp"

namespace qhgr {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail.str("");
    if (!pass) detail << "; ";
    pass = false;
    detail << why;
  }
};

QhElement random_element(const GrContext& ctx, const FieldCtx& field, std::mt19937_64& rng) {
  const auto diagrams = enumerate_diagrams(ctx);
  const u64 p = field.characteristic();
  QhElement e(ctx, field);
  const int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    const auto& d = diagrams[rng() % diagrams.size()];
    const int q_power = static_cast<int>(rng() % 3) - 1;
    const i64 c = p ? 1 + static_cast<i64>(rng() % (p - 1)) : static_cast<i64>(rng() % 7) - 3;
    e.add_term(d, q_power, field.from_int(c));
  }
  return e;
}

// 1 ---------------------------------------------------------------------------
void golden_product(Outcome& o, SuiteTier) {
  const GrContext ctx(3, 6);
  const FieldCtx q = FieldCtx::rationals();
  const auto a = QhElement::parse(ctx, q, "\xCF\x83[1,1]");
  const auto b = QhElement::parse(ctx, q, "\xCF\x83[3,1]");
  const std::string got = quantum_product(a, b).to_string();
  const std::string want = "\xCF\x83[3,2,1] + q*\xCF\x83[-]";
  if (got != want) o.fail("got " + got);
  else o.detail << got;
}

// 2 ---------------------------------------------------------------------------
void power_identity(Outcome& o, SuiteTier) {
  int checked = 0;
  for (const FieldCtx& field : {FieldCtx::rationals(), FieldCtx::prime_field(2)}) {
    for (int n = 4; n <= 10; ++n) {
      for (int k = 2; k <= n - k; ++k) {
        const GrContext ctx(k, n);
        const auto lhs = quantum_power(QhElement::special(ctx, field, k), n);
        const auto rhs = QhElement::schubert(ctx, field, YoungDiagram(), k);
        ++checked;
        if (!(lhs == rhs)) o.fail("Gr(" + std::to_string(k) + "," + std::to_string(n) + ") over " + field.name() +
                                  ": " + lhs.to_string());
      }
    }
  }
  if (o.pass) o.detail << checked << " cases";
}

// 3 ---------------------------------------------------------------------------
void matrix_reproduction(Outcome& o, SuiteTier) {
  const FieldCtx q = FieldCtx::rationals();
  const std::vector<std::vector<i64>> odd = {
      {1, -1, 0, 0, 0, 0}, {-1, 0, -1, 0, 0, 0}, {0, -1, 0, -1, 0, 0},
      {0, 0, -1, 0, -1, 0}, {0, 0, 0, -1, 0, -1}, {0, 0, 0, 0, -1, 0}};
  std::vector<std::vector<i64>> even = odd;
  even[5][5] = 1;
  const SquareMatrix m13 = degree_zero_action(13, q);
  const SquareMatrix m12 = degree_zero_action(12, q);
  if (!(m13 == SquareMatrix::from_ints(q, odd))) o.fail("n=13 differs:\n" + m13.to_string());
  if (!(m12 == SquareMatrix::from_ints(q, even))) o.fail("n=12 differs:\n" + m12.to_string());
  if (o.pass) o.detail << "n=13 and n=12 entry-exact";
}

// 4 ---------------------------------------------------------------------------
void charpoly_identities(Outcome& o, SuiteTier tier) {
  const FieldCtx q = FieldCtx::rationals();
  const int top = tier == SuiteTier::Full ? 40 : 20;
  for (int n = 3; n <= top; ++n) {
    const Poly pi = char_poly(closed_form_matrix(n, q));
    if (!satisfies_charpoly_identity(pi, n)) o.fail("identity fails for n=" + std::to_string(n));
    if (!(pi == closed_form_charpoly(n))) o.fail("closed form differs for n=" + std::to_string(n));
  }
  if (o.pass) o.detail << "n=3.." << top;
}

// 5 ---------------------------------------------------------------------------
void equivalence_battery(Outcome& o, SuiteTier tier) {
  const u64 top = tier == SuiteTier::Full ? 31 : 13;
  int cases = 0;
  int fields = 0;
  for (u64 n : primes_up_to(top)) {
    if (n < 3) continue;
    for (u64 p : primes_up_to(top)) {
      if (p == n) continue;
      const FieldCtx f = FieldCtx::prime_field(p);
      const FieldTest test = is_graded_field(GrContext(2, static_cast<int>(n)), f);
      const bool irreducible = is_irreducible(map_rational_coefficients(closed_form_charpoly(static_cast<int>(n)), f));
      const bool units = generates_units(p, n);
      bool agree = test.is_field == irreducible && irreducible == units;
      if (test.exhaustive) agree = agree && *test.exhaustive == units;
      ++cases;
      fields += units;
      if (!agree) o.fail("n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  }
  if (o.pass) o.detail << cases << " pairs, " << fields << " fields";
}

// 6 ---------------------------------------------------------------------------
void semisimplicity(Outcome& o, SuiteTier tier) {
  const OrbitDecomposition orbits = orbit_decomposition(10, 7);
  if (orbits.count() != 3 || orbits.sizes() != std::vector<int>{1, 2, 2}) o.fail("orbits(10,7) = " + orbits.to_string());
  const FieldCtx f7 = FieldCtx::prime_field(7);
  if (factor_degrees(map_rational_coefficients(closed_form_charpoly(10), f7)) != std::vector<int>{1, 2, 2}) {
    o.fail("pi for n=10 over GF(7) does not factor as 1+2+2");
  }
  const int top = tier == SuiteTier::Full ? 24 : 14;
  int cases = 0;
  for (int n = 3; n <= top; ++n) {
    for (u64 p : primes_up_to(13)) {
      if (gcd_u64(p, static_cast<u64>(n)) != 1) continue;
      const Poly pi = map_rational_coefficients(closed_form_charpoly(n), FieldCtx::prime_field(p));
      if (!is_squarefree(pi)) o.fail("repeated factor n=" + std::to_string(n) + " p=" + std::to_string(p));
      std::vector<int> sizes = orbit_decomposition(static_cast<u64>(n), p).sizes();
      std::sort(sizes.begin(), sizes.end());
      if (factor_degrees(pi) != sizes) o.fail("n=" + std::to_string(n) + " p=" + std::to_string(p));
      ++cases;
    }
  }
  if (o.pass) o.detail << "orbits(10,7) sizes [1,2,2]; " << cases << " (n,p) factor/orbit matches";
}

// 7 ---------------------------------------------------------------------------
void evaluation_homomorphisms(Outcome& o, SuiteTier tier) {
  const int pairs = tier == SuiteTier::Full ? 100 : 20;
  struct Case {
    int k, n;
    u64 p;
  };
  std::mt19937_64 rng(7);
  for (const Case& c : {Case{2, 5, 11}, Case{3, 6, 7}, Case{2, 7, 3}}) {
    const GrContext ctx(c.k, c.n);
    const FieldCtx source = FieldCtx::prime_field(c.p);
    const EvContext ev = make_ev_context(ctx, source);
    const auto multisets = admissible_multisets(ev);
    int ideal_failures = 0;
    for (const auto& j : multisets) ideal_failures += !verify_ideal_vanishing(ev, j).all_vanish();
    int product_failures = 0;
    for (int t = 0; t < pairs; ++t) {
      const auto a = random_element(ctx, source, rng);
      const auto b = random_element(ctx, source, rng);
      const auto ab = quantum_product(a, b);
      for (const auto& j : multisets) {
        if (!(ev_map(ev, j, ab) == ev.splitting.mul(ev_map(ev, j, a), ev_map(ev, j, b)))) ++product_failures;
      }
    }
    const std::string tag = "Gr(" + std::to_string(c.k) + "," + std::to_string(c.n) + ") over " + ev.splitting.name();
    if (ideal_failures) o.fail(tag + ": ideal does not vanish at " + std::to_string(ideal_failures) + " multisets");
    if (product_failures) o.fail(tag + ": " + std::to_string(product_failures) + " multiplicativity failures");
    if (o.pass) o.detail << tag << " " << multisets.size() << " multisets; ";
  }
}

// 8 ---------------------------------------------------------------------------
void classifier_table(Outcome& o, SuiteTier) {
  const std::vector<u64> chars = {0, 2, 3, 5, 7, 11, 13};
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) o.fail(what);
  };
  for (int n = 2; n <= 12; ++n) {
    for (u64 p : chars) expect(classify(1, n, p).is_graded_field, "(1," + std::to_string(n) + "," + std::to_string(p) + ")");
  }
  for (int n : {5, 7}) {
    const auto v = classify(2, n, 0);
    expect(v.is_graded_field && v.diameter == ClassifierVerdict::Diameter::FiniteWithBound &&
               v.bound == (2 * 2 * (n - 2)) / n,
           "(2," + std::to_string(n) + ",0)");
  }
  for (int n = 4; n <= 16; n += 2) {
    for (u64 p : chars) expect(!classify(2, n, p).is_graded_field, "(2," + std::to_string(n) + "," + std::to_string(p) + ")");
  }
  for (int n : {7, 8}) {
    for (u64 p : chars) expect(!classify(3, n, p).is_graded_field, "(3," + std::to_string(n) + "," + std::to_string(p) + ")");
  }
  expect(classify(4, 8, 0).diameter == ClassifierVerdict::Diameter::Infinite, "(4,8,0) not infinite");
  expect(classify(2, 4, 0).diameter == ClassifierVerdict::Diameter::Infinite, "(2,4,0) not infinite");
  if (o.pass) o.detail << "table reproduced";
}

// 9 ---------------------------------------------------------------------------
void oracle_agreement(Outcome& o, SuiteTier tier) {
  const int top_n = tier == SuiteTier::Full ? 20 : 12;
  const u64 top_p = tier == SuiteTier::Full ? 97 : 31;
  int cases = 0;
  int fields = 0;
  for (int k = 1; 2 * k <= top_n; ++k) {
    for (int n = 2 * k; n <= top_n; ++n) {
      const GrContext ctx(k, n);
      const std::size_t dim = qh0_basis(ctx).size();
      for (u64 p : primes_up_to(top_p)) {
        double space = 1.0;
        for (std::size_t i = 0; i < dim; ++i) space *= static_cast<double>(p);
        if (space > 1e6) continue;
        const bool exhaustive = !find_zero_divisor(ctx, FieldCtx::prime_field(p)).has_value();
        const bool rule = rule_is_graded_field(k, n, p, p);
        ++cases;
        fields += rule;
        if (exhaustive != rule) {
          o.fail("(" + std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(p) + ")");
        }
      }
    }
  }
  if (o.pass) o.detail << cases << " tuples (n<=" << top_n << ", p<=" << top_p << "), " << fields << " fields";
}

// 10 --------------------------------------------------------------------------
void gelfand_cetlin_checks(Outcome& o, SuiteTier tier) {
  const int samples = tier == SuiteTier::Full ? 100 : 20;
  double worst_equal = 0.0;
  for (const GrContext ctx : {GrContext(2, 4), GrContext(4, 8)}) {
    for (int s = 0; s < samples; ++s) {
      const GcValues v = gc_map(Frame::quaternionic(ctx, static_cast<std::uint64_t>(s)));
      worst_equal = std::max(worst_equal, std::abs(v.at(1, 2) - v.at(2, 1)));
    }
  }
  double worst_interlace = 0.0;
  for (const GrContext ctx : {GrContext(2, 4), GrContext(2, 5), GrContext(3, 6), GrContext(4, 8)}) {
    for (int s = 0; s < samples; ++s) {
      const Frame f = Frame::random(ctx, 1000 + static_cast<std::uint64_t>(s));
      worst_interlace = std::max({worst_interlace, interlacing_violation(leading_spectra(f)),
                                  gc_map(f).inequality_violation()});
    }
  }
  if (worst_equal >= 1e-9) o.fail("quaternionic |Z12-Z21| = " + std::to_string(worst_equal));
  if (worst_interlace > 1e-9) o.fail("interlacing violated by " + std::to_string(worst_interlace));
  if (o.pass) o.detail << "max |Z12-Z21| " << worst_equal << ", max interlacing violation " << worst_interlace;
}

// 11 --------------------------------------------------------------------------
void critical_points(Outcome& o, SuiteTier) {
  const auto trivial = find_critical_point(GrContext(1, 2), 1e-8);
  if (std::abs(trivial.point.z[0] - 1.0) > 1e-12 || std::abs(trivial.potential - 2.0) > 1e-12) {
    o.fail("Gr(1,2) critical point is not z=1, W=2");
  }
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> uniform(0.5, 2.0);
  for (const GrContext ctx : {GrContext(2, 4), GrContext(2, 5), GrContext(3, 6)}) {
    const auto r = find_critical_point(ctx, 1e-8);
    const std::string tag = "Gr(" + std::to_string(ctx.k()) + "," + std::to_string(ctx.n()) + ")";
    if (!(r.grad_inf < 1e-8)) o.fail(tag + " gradient " + std::to_string(r.grad_inf));
    if (!r.hessian_positive_definite) o.fail(tag + " Hessian not positive definite");
    GcPoint random_point = GcPoint::constant(ctx, 1.0);
    for (double& v : random_point.z) v = uniform(rng);
    for (const GcPoint& z : {r.point, random_point}) {
      const auto g = potential_grad(z);
      const auto fd = finite_difference_grad(z);
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (std::abs(g[i] - fd[i]) > 1e-6 * std::max(1.0, std::abs(g[i]))) o.fail(tag + " finite differences disagree");
      }
    }
    if (o.pass) o.detail << tag << " W=" << r.potential << " in " << r.iterations << " steps; ";
  }
}

struct Criterion {
  const char* name;
  void (*run)(Outcome&, SuiteTier);
  double seconds_limit;
};

const Criterion kCriteria[kCriterionCount] = {
    {"Pieri golden case", golden_product, 1.0},
    {"power identity x_k^n = q^k", power_identity, 30.0},
    {"matrix reproduction", matrix_reproduction, 60.0},
    {"char-poly identities", charpoly_identities, 10.0},
    {"equivalence battery", equivalence_battery, 120.0},
    {"semisimplicity", semisimplicity, 120.0},
    {"evaluation homomorphisms", evaluation_homomorphisms, 120.0},
    {"classifier table", classifier_table, 60.0},
    {"zero-divisor oracle agreement", oracle_agreement, 300.0},
    {"Gelfand-Cetlin", gelfand_cetlin_checks, 60.0},
    {"critical point", critical_points, 10.0},
};

}  // namespace

CriterionResult run_criterion(int id, SuiteTier tier) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id must be 1..11");
  const Criterion& c = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.name = c.name;
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(outcome, tier);
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.seconds > c.seconds_limit) {
    outcome.fail("took " + std::to_string(result.seconds) + "s, limit " + std::to_string(c.seconds_limit) + "s");
  }
  result.pass = outcome.pass;
  result.detail = outcome.detail.str();
  while (result.detail.ends_with("; ")) result.detail.resize(result.detail.size() - 2);
  return result;
}

std::vector<CriterionResult> run_acceptance(SuiteTier tier, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, tier));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out.precision(3);
  out << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << " (" << std::fixed << r.seconds << "s)";
  if (!r.detail.empty()) out << ": " << r.detail;
  return out.str();
}

}  // namespace qhgr
