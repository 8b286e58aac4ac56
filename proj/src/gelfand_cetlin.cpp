#include "qhgr/gelfand_cetlin.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qhgr {

namespace {

Eigen::MatrixXcd gaussian(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) m(r, c) = {normal(rng), normal(rng)};
  }
  return m;
}

// One exponential term exp(a . u) of W in log coordinates, a sparse.
struct Term {
  std::vector<std::pair<int, double>> a;
};

std::vector<Term> potential_terms(const GrContext& ctx) {
  const int k = ctx.k();
  const int c = ctx.cols();
  auto idx = [c](int i, int j) { return (i - 1) * c + (j - 1); };
  std::vector<Term> terms;
  for (int i = 1; i < k; ++i) {
    for (int j = 1; j <= c; ++j) terms.push_back({{{idx(i, j), 1.0}, {idx(i + 1, j), -1.0}}});
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j < c; ++j) terms.push_back({{{idx(i, j + 1), 1.0}, {idx(i, j), -1.0}}});
  }
  terms.push_back({{{idx(1, c), -1.0}}});
  terms.push_back({{{idx(k, 1), 1.0}}});
  return terms;
}

void require_positive(const GcPoint& z) {
  if (static_cast<int>(z.z.size()) != z.ctx.k() * z.ctx.cols()) throw std::invalid_argument("GcPoint has wrong size");
  for (double v : z.z) {
    if (!(v > 0.0)) throw std::invalid_argument("GcPoint coordinates must be positive");
  }
}

double log_value(const std::vector<Term>& terms, const Eigen::VectorXd& u) {
  double w = 0.0;
  for (const Term& t : terms) {
    double s = 0.0;
    for (const auto& [i, a] : t.a) s += a * u(i);
    w += std::exp(s);
  }
  return w;
}

}  // namespace

Frame::Frame(GrContext ctx, Eigen::MatrixXcd u) : ctx_(ctx), u_(std::move(u)) {
  if (u_.rows() != ctx_.n() || u_.cols() != ctx_.k()) throw std::invalid_argument("frame must be n x k");
  const Eigen::MatrixXcd gram = u_.adjoint() * u_;
  const double defect = (gram - Eigen::MatrixXcd::Identity(ctx_.k(), ctx_.k())).cwiseAbs().maxCoeff();
  if (defect > 1e-12) throw std::invalid_argument("frame columns are not orthonormal");
}

Frame Frame::random(const GrContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Eigen::MatrixXcd g = gaussian(ctx.n(), ctx.k(), rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(ctx.n(), ctx.k());
  return Frame(ctx, std::move(q));
}

Eigen::VectorXcd quaternionic_j(const Eigen::VectorXcd& v) {
  if (v.size() % 2) throw std::invalid_argument("quaternionic structure needs even length");
  Eigen::VectorXcd out(v.size());
  for (Eigen::Index a = 0; a < v.size(); a += 2) {
    out(a) = -std::conj(v(a + 1));
    out(a + 1) = std::conj(v(a));
  }
  return out;
}

Frame Frame::quaternionic(const GrContext& ctx, std::uint64_t seed) {
  if (ctx.k() % 2 || ctx.n() % 2) throw std::invalid_argument("quaternionic frames need k and n even");
  std::mt19937_64 rng(seed);
  Eigen::MatrixXcd u(ctx.n(), ctx.k());
  for (int c = 0; c < ctx.k(); c += 2) {
    Eigen::VectorXcd x = gaussian(ctx.n(), 1, rng).col(0);
    // Two passes of Gram-Schmidt against every earlier column (X_i and JX_i).
    for (int pass = 0; pass < 2; ++pass) {
      for (int prev = 0; prev < c; ++prev) x -= u.col(prev) * u.col(prev).dot(x);
    }
    x.normalize();
    u.col(c) = x;
    u.col(c + 1) = quaternionic_j(x);  // orthogonal to x and to all earlier columns
  }
  return Frame(ctx, std::move(u));
}

Frame Frame::coordinate(const GrContext& ctx, bool first) {
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(ctx.n(), ctx.k());
  const int offset = first ? 0 : ctx.n() - ctx.k();
  for (int c = 0; c < ctx.k(); ++c) u(offset + c, c) = 1.0;
  return Frame(ctx, std::move(u));
}

double projection_defect(const Frame& frame) {
  const Eigen::MatrixXcd a = frame.projection();
  return std::max((a * a - a).cwiseAbs().maxCoeff(), (a.adjoint() - a).cwiseAbs().maxCoeff());
}

std::vector<std::vector<double>> leading_spectra(const Frame& frame) {
  const Eigen::MatrixXcd a = frame.projection();
  std::vector<std::vector<double>> out;
  for (int r = 1; r <= frame.ctx().n(); ++r) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.topLeftCorner(r, r), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = solver.eigenvalues();  // ascending
    std::vector<double> desc(ev.data(), ev.data() + ev.size());
    std::reverse(desc.begin(), desc.end());
    out.push_back(std::move(desc));
  }
  return out;
}

double interlacing_violation(const std::vector<std::vector<double>>& spectra) {
  double worst = 0.0;
  for (std::size_t r = 0; r + 1 < spectra.size(); ++r) {
    const auto& lo = spectra[r];
    const auto& hi = spectra[r + 1];
    for (std::size_t i = 0; i < lo.size(); ++i) {
      worst = std::max(worst, lo[i] - hi[i]);
      worst = std::max(worst, hi[i + 1] - lo[i]);
    }
  }
  return worst;
}

double GcValues::inequality_violation() const {
  const int k = ctx.k();
  const int c = ctx.cols();
  double worst = 0.0;
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= c; ++j) {
      const double v = at(i, j);
      worst = std::max({worst, -v, v - 1.0});
      if (j < c) worst = std::max(worst, v - at(i, j + 1));
      if (i < k) worst = std::max(worst, at(i + 1, j) - v);
    }
  }
  return worst;
}

std::string GcValues::to_csv_row() const {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

GcValues gc_map(const Frame& frame) {
  const GrContext& ctx = frame.ctx();
  const int n = ctx.n();
  const int k = ctx.k();
  const auto spectra = leading_spectra(frame);
  for (int r = 1; r <= n; ++r) {
    for (int i = 1; i <= r; ++i) {
      const double v = spectra[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(i - 1)];
      if (i + n - r <= k && std::abs(v - 1.0) > 1e-9) throw std::logic_error("Gelfand-Cetlin: eigenvalue should be 1");
      if (i >= k + 1 && std::abs(v) > 1e-9) throw std::logic_error("Gelfand-Cetlin: eigenvalue should be 0");
    }
  }
  GcValues out{ctx, {}};
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= ctx.cols(); ++j) {
      out.values.push_back(spectra[static_cast<std::size_t>(i + j - 2)][static_cast<std::size_t>(i - 1)]);
    }
  }
  return out;
}

GcPoint GcPoint::constant(const GrContext& ctx, double value) {
  return GcPoint{ctx, std::vector<double>(static_cast<std::size_t>(ctx.k() * ctx.cols()), value)};
}

double potential_eval(const GcPoint& z) {
  require_positive(z);
  double w = 0.0;
  for (const Term& t : potential_terms(z.ctx)) {
    double v = 1.0;
    for (const auto& [i, a] : t.a) v *= a > 0 ? z.z[static_cast<std::size_t>(i)] : 1.0 / z.z[static_cast<std::size_t>(i)];
    w += v;
  }
  return w;
}

std::vector<double> potential_grad(const GcPoint& z) {
  require_positive(z);
  std::vector<double> g(z.z.size(), 0.0);
  // d/dz_i of a monomial prod z^a equals a_i * monomial / z_i.
  for (const Term& t : potential_terms(z.ctx)) {
    double v = 1.0;
    for (const auto& [i, a] : t.a) v *= a > 0 ? z.z[static_cast<std::size_t>(i)] : 1.0 / z.z[static_cast<std::size_t>(i)];
    for (const auto& [i, a] : t.a) g[static_cast<std::size_t>(i)] += a * v / z.z[static_cast<std::size_t>(i)];
  }
  return g;
}

std::vector<double> finite_difference_grad(const GcPoint& z, double h) {
  require_positive(z);
  std::vector<double> g(z.z.size());
  for (std::size_t i = 0; i < z.z.size(); ++i) {
    const double step = h * std::max(1.0, z.z[i]);
    GcPoint plus = z;
    GcPoint minus = z;
    plus.z[i] += step;
    minus.z[i] -= step;
    g[i] = (potential_eval(plus) - potential_eval(minus)) / (2.0 * step);
  }
  return g;
}

std::string CriticalPointReport::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json zs;
  for (int i = 1; i <= point.ctx.k(); ++i) {
    for (int c = 1; c <= point.ctx.cols(); ++c) zs[std::to_string(i) + "," + std::to_string(c)] = point.at(i, c);
  }
  j["z"] = zs;
  j["W"] = potential;
  j["gradInf"] = grad_inf;
  j["iters"] = iterations;
  return j.dump();
}

CriticalPointReport find_critical_point(const GrContext& ctx, double tol, int max_iterations) {
  if (!(tol > 0.0)) throw std::invalid_argument("find_critical_point: tol must be positive");
  const std::vector<Term> terms = potential_terms(ctx);
  const int dim = ctx.k() * ctx.cols();
  Eigen::VectorXd u = Eigen::VectorXd::Zero(dim);
  CriticalPointReport report{GcPoint::constant(ctx, 1.0), 0.0, 0.0, 0.0, 0, true, {}};

  for (int iter = 0;; ++iter) {
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(dim);
    Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(dim, dim);
    double w = 0.0;
    for (const Term& t : terms) {
      double s = 0.0;
      for (const auto& [i, a] : t.a) s += a * u(i);
      const double e = std::exp(s);
      w += e;
      for (const auto& [i, a] : t.a) {
        grad(i) += a * e;
        for (const auto& [j, b] : t.a) hess(i, j) += a * b * e;
      }
    }
    GcPoint point{ctx, std::vector<double>(static_cast<std::size_t>(dim))};
    for (int i = 0; i < dim; ++i) point.z[static_cast<std::size_t>(i)] = std::exp(u(i));
    const auto gz = potential_grad(point);
    double gz_inf = 0.0;
    for (double v : gz) gz_inf = std::max(gz_inf, std::abs(v));
    const double gu_inf = grad.cwiseAbs().maxCoeff();
    report.history.push_back(gu_inf);
    report.point = point;
    report.potential = w;
    report.grad_inf = gz_inf;
    report.log_grad_inf = gu_inf;
    report.iterations = iter;
    if (gz_inf < tol && gu_inf < tol) return report;
    if (iter >= max_iterations) throw std::runtime_error("find_critical_point: Newton did not converge");

    Eigen::LLT<Eigen::MatrixXd> llt(hess);
    if (llt.info() != Eigen::Success) {
      report.hessian_positive_definite = false;
      throw std::runtime_error("find_critical_point: Hessian is not positive definite");
    }
    const Eigen::VectorXd step = -llt.solve(grad);
    const double slope = grad.dot(step);
    // Armijo backtracking; the small slack absorbs rounding once W is flat.
    const double slack = 1e-14 * std::abs(w);
    double alpha = 1.0;
    while (alpha > 1e-12 && log_value(terms, u + alpha * step) > w + 1e-4 * alpha * slope + slack) alpha *= 0.5;
    u += alpha * step;
  }
}

}  // namespace qhgr
