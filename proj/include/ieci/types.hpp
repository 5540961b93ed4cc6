#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace ieci {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Bad arguments: dimension mismatches, out-of-domain inputs.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Invalid run or acquisition configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gram matrix not positive definite (e.g. duplicate rows with zero nugget).
struct FactorizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Candidate coincides with a design point (zero nugget) or has no
// remaining conditional variance.
struct DegenerateCandidateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency failure (e.g. a variance far below zero).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iterative fit failed to converge.
struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rectangular input domain.
struct Bounds {
  Vector lower;
  Vector upper;

  Bounds() = default;
  Bounds(Vector lo, Vector hi);

  int dim() const { return static_cast<int>(lower.size()); }
  bool contains(const Vector& x, double tol = 0.0) const;
  Vector clip(const Vector& x) const;
  Vector range() const { return upper - lower; }

  static Bounds unit(int d);
};

// Covariance parameters of the power-family kernel
//   K*(x, x') = exp(-sum_j |x_j - x'_j|^power / lengthscales_j),
// with process scale sigma2 and nugget added on the Gram diagonal.
struct Hyperparams {
  double sigma2 = 1.0;
  Vector lengthscales;
  double nugget = 0.0;
  double power = 2.0;

  int dim() const { return static_cast<int>(lengthscales.size()); }
  void validate() const;  // throws ArgumentError on an invariant violation

  static Hyperparams isotropic(int d, double lengthscale, double nugget = 0.0);
};

// Deterministic random stream: a seed plus the number of draws consumed.
// Identical seeds reproduce identical draw sequences bitwise.
class RngState {
 public:
  explicit RngState(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  std::uint64_t next_u64();
  double uniform();    // [0, 1)
  double gaussian();   // Box-Muller, two draws per variate
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n), rejection sampled

  // Independent substream for a named purpose; forking does not consume
  // draws from this stream.
  RngState fork(std::uint64_t purpose) const;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::mt19937_64 engine_;
};

// Affine input/response rescaling applied inside a fitted model:
//   x_int = (x - x_shift) / x_scale  componentwise,  z_int = (z - z_shift) / z_scale.
// Lengthscales of a model are expressed in internal units.
struct Scaling {
  Vector x_shift;
  Vector x_scale;
  double z_shift = 0.0;
  double z_scale = 1.0;

  int dim() const { return static_cast<int>(x_shift.size()); }
  Vector x_to_internal(const Vector& x) const;
  Matrix x_to_internal(const Matrix& x) const;

  static Scaling identity(int d);
  // Inputs mapped to [0,1]^d from bounds; responses centered and scaled to
  // unit variance (left untouched when the sample variance degenerates).
  static Scaling standardize(const Bounds& bounds, const Vector& z);
};

}  // namespace ieci
