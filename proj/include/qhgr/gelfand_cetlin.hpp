#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "qhgr/diagram.hpp"

namespace qhgr {

/// An orthonormal basis (columns) of a k-plane in C^n.
class Frame {
 public:
  /// Throws std::invalid_argument for a wrong shape or when U^dagger U
  /// differs from the identity by more than 1e-12.
  Frame(GrContext ctx, Eigen::MatrixXcd u);

  /// Gaussian matrix orthonormalized by QR; deterministic in the seed.
  static Frame random(const GrContext& ctx, std::uint64_t seed);
  /// Columns X_1, JX_1, ..., X_{k/2}, JX_{k/2}, where J is complex
  /// conjugation followed by (z1, z2) -> (-z2, z1) on consecutive coordinate
  /// pairs. Requires k and n even.
  static Frame quaternionic(const GrContext& ctx, std::uint64_t seed);
  /// The span of e_1..e_k (first = true) or e_{n-k+1}..e_n.
  static Frame coordinate(const GrContext& ctx, bool first);

  const GrContext& ctx() const { return ctx_; }
  const Eigen::MatrixXcd& matrix() const { return u_; }
  /// A = U U^dagger.
  Eigen::MatrixXcd projection() const { return u_ * u_.adjoint(); }

 private:
  GrContext ctx_;
  Eigen::MatrixXcd u_;
};

/// Applies the quaternionic structure J to a vector of even length.
Eigen::VectorXcd quaternionic_j(const Eigen::VectorXcd& v);

/// max(|A^2 - A|, |A^dagger - A|) entrywise.
double projection_defect(const Frame& frame);

/// Eigenvalues of the leading r x r blocks of A, r = 1..n, each descending.
std::vector<std::vector<double>> leading_spectra(const Frame& frame);

/// Largest violation of lambda_i^(r+1) >= lambda_i^(r) >= lambda_{i+1}^(r+1).
double interlacing_violation(const std::vector<std::vector<double>>& spectra);

struct GcValues {
  GrContext ctx;
  std::vector<double> values;  // row-major, (i, j) -> (i-1)(n-k) + (j-1)

  double at(int i, int j) const { return values[static_cast<std::size_t>((i - 1) * ctx.cols() + (j - 1))]; }
  /// Largest violation of Z_{i,j+1} >= Z_{i,j} >= Z_{i+1,j} and 0 <= Z <= 1.
  double inequality_violation() const;
  std::string to_csv_row() const;
};

/// Z_{i,j} = lambda_i^(i+j-1). Throws std::logic_error if an eigenvalue that
/// must be constant (1 when i+n-r <= k, 0 when i >= k+1) is off by > 1e-9.
GcValues gc_map(const Frame& frame);

struct GcPoint {
  GrContext ctx;
  std::vector<double> z;  // same layout as GcValues

  static GcPoint constant(const GrContext& ctx, double value);
  double at(int i, int j) const { return z[static_cast<std::size_t>((i - 1) * ctx.cols() + (j - 1))]; }
};

/// W(z) = sum z_{i,j}/z_{i+1,j} + sum z_{i,j+1}/z_{i,j} + 1/z_{1,n-k} + z_{k,1}.
/// Throws std::invalid_argument for nonpositive coordinates.
double potential_eval(const GcPoint& z);

/// Analytic dW/dz_{i,j}.
std::vector<double> potential_grad(const GcPoint& z);

/// Central differences with step h (relative to each coordinate).
std::vector<double> finite_difference_grad(const GcPoint& z, double h = 1e-6);

struct CriticalPointReport {
  GcPoint point;
  double potential = 0.0;
  double grad_inf = 0.0;      // |dW/dz|_inf
  double log_grad_inf = 0.0;  // |z dW/dz|_inf
  int iterations = 0;
  bool hessian_positive_definite = true;  // at every accepted iterate
  std::vector<double> history;            // log-gradient norm per iterate

  /// {"z": {"1,1": ...}, "W": ..., "gradInf": ..., "iters": ...}
  std::string to_json() const;
};

/// Minimizes W in u = log z by damped Newton from u = 0 until both gradient
/// norms drop below tol. Throws std::runtime_error after max_iterations.
CriticalPointReport find_critical_point(const GrContext& ctx, double tol, int max_iterations = 200);

}  // namespace qhgr
