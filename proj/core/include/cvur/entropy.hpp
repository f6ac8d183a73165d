#ifndef CVUR_ENTROPY_HPP
#define CVUR_ENTROPY_HPP

#include <Eigen/Core>
#include <array>

#include "cvur/quadratures.hpp"
#include "cvur/states.hpp"

namespace cvur {

/// Grid resolution and span for sampled densities. Default: mean +- 12 sigma,
/// 2048 points per axis in 1-D and 512 per axis in 2-D, which keeps the
/// Gaussian tail mass below 1e-30 and the quadrature truncation error of the
/// entropy below 1e-9.
struct GridSpec {
  int points_1d = 2048;
  int points_2d = 512;
  double sigma_span = 12.0;

  int points(int dims) const { return dims == 1 ? points_1d : points_2d; }
};

/// Probability density sampled on a 1-D or 2-D tensor grid. values are
/// nonnegative and integrate to 1 within 1e-6 (checked on construction);
/// 2-D values are stored row-major (axis 0 slowest).
class GriddedDensity {
 public:
  GriddedDensity(int dims, std::array<double, 2> lo, std::array<double, 2> hi,
                 std::array<int, 2> points, Eigen::VectorXd values);

  int dims() const { return dims_; }
  double lo(int axis) const { return lo_[axis]; }
  double hi(int axis) const { return hi_[axis]; }
  int points(int axis) const { return points_[axis]; }
  double step(int axis) const;
  const Eigen::VectorXd& values() const { return values_; }
  double coordinate(int axis, int index) const;

  /// Composite Simpson integral of the sampled values.
  double integral() const;
  /// Simpson quadrature weight of a grid node.
  double weight(int i) const;
  double weight(int i, int j) const;

 private:
  int dims_;
  std::array<double, 2> lo_, hi_;
  std::array<int, 2> points_;
  Eigen::VectorXd values_;
};

/// Density of the jointly measured quadratures of Q (rows <= 2). Gaussian
/// states take the exact multivariate-normal path for any mode count; Fock
/// states are evaluated through Hermite-function wavefunctions, with one row
/// on one mode or two rows on distinct modes of a two-mode state. Row norms
/// different from 1 rescale the variable (and shift the entropy by ln|s|).
GriddedDensity quadrature_pdf(const State& s, const QuadratureSet& q,
                              const GridSpec& spec = {});

/// -integral p ln p by composite Simpson, with 0 ln 0 = 0. Rejects densities
/// whose grid integral deviates from 1 by more than 1e-6.
double differential_entropy(const GriddedDensity& d);

/// Renyi entropy (1/(1-alpha)) ln integral p^alpha; alpha = 1 dispatches to
/// the Shannon entropy. alpha <= 0 rejected.
double renyi_entropy(const GriddedDensity& d, double alpha);

/// Closed form 1/2 ln((2 pi e)^m det cov) for an m-variate Gaussian.
double gaussian_entropy(const Eigen::MatrixXd& cov);

/// Closed form Renyi entropy of an m-variate Gaussian:
/// 1/2 ln((2 pi)^m det cov) + m ln(alpha) / (2 (alpha - 1)).
double gaussian_renyi_entropy(const Eigen::MatrixXd& cov, double alpha);

/// Entropy power of an m-dimensional set: exp(2 h / m) / (2 pi e).
double entropy_power(double h, int m);

/// 1/2 ln(sigma1^2 sigma2^2 / det gamma) >= 0 for a 2x2 covariance.
double gaussian_mutual_information(const Eigen::Matrix2d& cov);

/// Non-Gaussianity D(x || x_G) = h(x_G) - h(x) where x_G is the Gaussian with
/// the grid-estimated mean and variance. 1-D densities only.
double relative_entropy_to_gaussian(const GriddedDensity& d);

/// Mean and variance of a 1-D gridded density (Simpson moments).
double grid_mean(const GriddedDensity& d);
double grid_variance(const GriddedDensity& d);

/// Integrates out the other axis of a 2-D density.
GriddedDensity marginal(const GriddedDensity& d, int axis);

}  // namespace cvur

#endif
