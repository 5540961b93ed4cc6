#pragma once

#include <optional>

#include "ieci/types.hpp"

namespace ieci {

// Posterior predictive moments at one point, in response units.
struct Prediction {
  double mean = 0.0;
  double variance = 0.0;
};

// Rank-one extension of the Gram inverse for a candidate x:
//   K_{N+1}^{-1}(x) = [ K_N^{-1} + g g^T / mu    g  ]
//                     [ g^T                      mu ]
// with g = -mu K_N^{-1} k_N(x) and 1/mu the Schur complement
// K(x,x) - k_N^T K_N^{-1} k_N.  kx and kxx follow the Gram-matrix
// convention (nugget and jitter on the diagonal entry only).
struct PartitionedUpdate {
  Vector cross_vector;  // g(x)
  double mu = 0.0;      // mu(x) > 0
  Vector kx;            // k_N(x)
  double kxx = 0.0;     // K(x,x) as it would appear on the Gram diagonal
};

// Whether fit() keeps the supplied sigma2 or replaces it with the
// conditional MLE  Z^T K^{-1} Z / N  given the correlation parameters.
enum class ScaleEstimate { kProfiled, kFixed };

// Value-based covariance of the power family: K*(x,y) plus the nugget when
// x and y are bitwise identical.  sigma2 is not applied.
double covariance(const Vector& x, const Vector& y, const Hyperparams& params);

// Zero-mean Gaussian-process regression surrogate.  Immutable once fitted;
// all prediction entry points are safe for concurrent callers.
class GpModel {
 public:
  // Fits on the given design.  The scaling is applied internally and undone
  // on every output; lengthscales are interpreted in internal (scaled)
  // units.  Throws FactorizationError when the nugget-augmented Gram matrix
  // is not positive definite.
  static GpModel fit(Matrix X, Vector Z, Hyperparams params,
                     Scaling scaling, ScaleEstimate estimate = ScaleEstimate::kProfiled);
  static GpModel fit(Matrix X, Vector Z, Hyperparams params,
                     ScaleEstimate estimate = ScaleEstimate::kProfiled);

  Prediction predict(const Vector& x) const;
  void predict(const Matrix& points, Vector& means, Vector& variances) const;

  // Throws DegenerateCandidateError when x duplicates a design row with
  // zero nugget, or when the Schur complement underflows.
  PartitionedUpdate partitioned_update(const Vector& x) const;

  // Predictive variance at y once x has been added to the design, equal to
  // a full refit with unchanged parameters and independent of the response
  // value observed at x.
  double deduced_variance(const Vector& y, const Vector& x) const;
  double deduced_variance(const Vector& y, const Vector& x,
                          const PartitionedUpdate& update) const;

  // Marginal log likelihood of the (internally scaled) responses under the
  // fitted parameters.
  double log_likelihood() const;

  int size() const { return static_cast<int>(z_.size()); }
  int dim() const { return static_cast<int>(x_.cols()); }
  const Matrix& inputs() const { return x_; }
  const Vector& responses() const { return z_; }
  const Hyperparams& params() const { return params_; }
  const Scaling& scaling() const { return scaling_; }
  const Vector& alpha() const { return alpha_; }
  const Eigen::MatrixXd& gram_factor() const { return llt_.matrixL(); }

  // Loop support for acquisition code: correlation vector k_N(x) in the
  // Gram convention (no nugget bump), Gram solves, and the internal scale.
  Vector gram_cross(const Vector& x) const;
  Vector gram_solve(const Vector& b) const;
  double correlation_at(const Vector& a, const Vector& b) const;
  double gram_diagonal() const;
  double process_variance() const { return params_.sigma2; }
  double response_scale2() const { return scaling_.z_scale * scaling_.z_scale; }

  // Diagonal jitter added to every Gram matrix on top of the statistical
  // nugget.
  static constexpr double kJitter = 1e-10;

 private:
  GpModel() = default;

  Matrix x_;        // original units
  Vector z_;        // original units
  Matrix x_int_;    // scaled inputs
  Vector z_int_;    // scaled responses
  Hyperparams params_;
  Scaling scaling_;
  Eigen::LLT<Matrix> llt_;
  Vector alpha_;    // K^{-1} z_int
};

}  // namespace ieci
