#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <numbers>
#include <random>

#include "qhgr/gelfand_cetlin.hpp"

using namespace qhgr;

namespace {

// Descending spectrum of the leading r x r block, computed afresh.
std::vector<double> leading_eigenvalues(const Eigen::MatrixXcd& a, int r) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.topLeftCorner(r, r));
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + r);
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// The value of W at its minimum, from the symmetric critical point.
double expected_critical_value(int k, int n) {
  const double pi = std::numbers::pi;
  return n * std::sin(k * pi / n) / std::sin(pi / n);
}

}  // namespace

TEST_CASE("frames") {
  const GrContext g(2, 4);
  CHECK_THROWS_AS(Frame(g, Eigen::MatrixXcd::Ones(4, 2)), std::invalid_argument);
  CHECK_THROWS_AS(Frame(g, Eigen::MatrixXcd::Identity(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(Frame::quaternionic(GrContext(1, 4), 0), std::invalid_argument);
  CHECK_THROWS_AS(Frame::quaternionic(GrContext(2, 5), 0), std::invalid_argument);
  for (const GrContext& ctx : {GrContext(2, 4), GrContext(2, 5), GrContext(3, 6), GrContext(4, 8)}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Frame f = Frame::random(ctx, seed);
      CHECK(projection_defect(f) < 1e-10);
      CHECK(std::abs(f.projection().trace().real() - ctx.k()) < 1e-10);
      if (ctx.k() % 2 == 0 && ctx.n() % 2 == 0) CHECK(projection_defect(Frame::quaternionic(ctx, seed)) < 1e-10);
    }
  }
  CHECK(Frame::random(g, 3).matrix() == Frame::random(g, 3).matrix());
  CHECK_FALSE(Frame::random(g, 3).matrix().isApprox(Frame::random(g, 4).matrix()));
}

TEST_CASE("quaternionic structure") {
  Eigen::VectorXcd v(4);
  v << std::complex<double>(1, 2), std::complex<double>(3, -1), std::complex<double>(0, 1), 2.0;
  const Eigen::VectorXcd jv = quaternionic_j(v);
  CHECK(std::abs(jv(0) - std::complex<double>(-3, -1)) < 1e-15);
  CHECK(std::abs(jv(1) - std::complex<double>(1, -2)) < 1e-15);
  CHECK((quaternionic_j(jv) + v).norm() < 1e-15);   // J^2 = -1
  CHECK(std::abs(v.dot(jv)) < 1e-15);               // v and Jv are orthogonal

  const Frame f = Frame::quaternionic(GrContext(2, 4), 0);
  const Eigen::MatrixXcd a2 = f.projection().topLeftCorner(2, 2);
  CHECK(std::abs(a2(0, 1)) < 1e-12);
  CHECK(std::abs(a2(0, 0) - a2(1, 1)) < 1e-12);
  CHECK(std::abs(a2(0, 0).imag()) < 1e-12);
  const Frame f1 = Frame::quaternionic(GrContext(2, 4), 1);
  CHECK_FALSE(f.matrix().isApprox(f1.matrix()));
  for (const GrContext& ctx : {GrContext(2, 4), GrContext(4, 8)}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const GcValues z = gc_map(Frame::quaternionic(ctx, seed));
      CHECK(std::abs(z.at(1, 2) - z.at(2, 1)) < 1e-9);
    }
  }
  int separated = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GcValues z = gc_map(Frame::random(GrContext(2, 4), seed));
    if (std::abs(z.at(1, 2) - z.at(2, 1)) > 1e-3) ++separated;
  }
  CHECK(separated >= 95);
}

TEST_CASE("Gelfand-Cetlin values") {
  for (const GrContext& ctx : {GrContext(1, 2), GrContext(2, 4), GrContext(2, 5), GrContext(3, 6), GrContext(3, 7)}) {
    const GcValues top = gc_map(Frame::coordinate(ctx, true));
    const GcValues bottom = gc_map(Frame::coordinate(ctx, false));
    for (double v : top.values) CHECK(std::abs(v - 1) < 1e-12);
    for (double v : bottom.values) CHECK(std::abs(v) < 1e-12);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Frame f = Frame::random(ctx, seed);
      const GcValues z = gc_map(f);
      CHECK(z.inequality_violation() < 1e-9);
      const auto spectra = leading_spectra(f);
      CHECK(interlacing_violation(spectra) < 1e-9);
      for (int r = 1; r <= ctx.n(); ++r) {
        CHECK(max_abs_diff(spectra[static_cast<std::size_t>(r - 1)], leading_eigenvalues(f.projection(), r)) < 1e-10);
      }
      for (int i = 1; i <= ctx.k(); ++i) {
        for (int j = 1; j <= ctx.cols(); ++j) {
          const auto ev = leading_eigenvalues(f.projection(), i + j - 1);
          CHECK(std::abs(z.at(i, j) - ev[static_cast<std::size_t>(i - 1)]) < 1e-10);
        }
      }
    }
  }
  CHECK(interlacing_violation({{0.5}, {0.4, 0.6}}) > 0.05);
  const GcValues z = gc_map(Frame::random(GrContext(2, 4), 0));
  const std::string row = z.to_csv_row();
  CHECK(std::count(row.begin(), row.end(), ',') == 3);
}

TEST_CASE("potential and gradient") {
  const GrContext g12(1, 2);
  CHECK(potential_eval(GcPoint::constant(g12, 1.0)) == doctest::Approx(2.0));
  CHECK(potential_eval(GcPoint::constant(g12, 2.0)) == doctest::Approx(2.5));
  CHECK(potential_grad(GcPoint::constant(g12, 1.0))[0] == doctest::Approx(0.0));
  CHECK(potential_grad(GcPoint::constant(g12, 2.0))[0] == doctest::Approx(0.75));
  CHECK(potential_eval(GcPoint::constant(GrContext(2, 4), 1.0)) == doctest::Approx(6.0));
  CHECK_THROWS_AS(potential_eval(GcPoint::constant(g12, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(potential_grad(GcPoint::constant(g12, -1.0)), std::invalid_argument);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.2, 3.0);
  for (const GrContext& ctx : {GrContext(2, 4), GrContext(2, 5), GrContext(3, 6), GrContext(3, 7)}) {
    for (int t = 0; t < 20; ++t) {
      GcPoint p = GcPoint::constant(ctx, 1.0);
      for (double& v : p.z) v = dist(rng);
      const auto analytic = potential_grad(p);
      const auto numeric = finite_difference_grad(p);
      for (std::size_t i = 0; i < analytic.size(); ++i) {
        CHECK(std::abs(analytic[i] - numeric[i]) <= 1e-6 * std::max(1.0, std::abs(analytic[i])));
      }
    }
  }
}

TEST_CASE("critical points") {
  const CriticalPointReport trivial = find_critical_point(GrContext(1, 2), 1e-10);
  CHECK(trivial.point.z[0] == doctest::Approx(1.0));
  CHECK(trivial.potential == doctest::Approx(2.0));
  for (const auto& [k, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}, std::pair{3, 7}, std::pair{4, 9}}) {
    const GrContext ctx(k, n);
    const CriticalPointReport r = find_critical_point(ctx, 1e-8);
    CAPTURE(k);
    CAPTURE(n);
    CHECK(r.grad_inf < 1e-8);
    CHECK(r.log_grad_inf < 1e-8);
    CHECK(r.hessian_positive_definite);
    CHECK(r.potential > 0);
    CHECK(r.potential == doctest::Approx(expected_critical_value(k, n)).epsilon(1e-9));
    const auto grad = potential_grad(r.point);
    for (std::size_t i = 0; i < grad.size(); ++i) {
      CHECK(std::abs(r.point.z[i] * grad[i]) < 1e-8);
    }
    const auto fd = finite_difference_grad(r.point);
    for (double g : fd) CHECK(std::abs(g) < 1e-5);
    CHECK(r.history.size() == static_cast<std::size_t>(r.iterations + 1));
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j.contains("z"));
    CHECK(j["z"].size() == static_cast<std::size_t>(ctx.dimension()));
    CHECK(j["iters"] == r.iterations);
  }
}
