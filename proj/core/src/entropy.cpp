#include "cvur/entropy.hpp"

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fock_ops.hpp"

namespace cvur {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Composite Simpson weights for n >= 2 points at spacing h. Even interval
// counts use plain Simpson; odd interval counts close with a 3/8 block, so
// any point count integrates smooth data at fourth order.
Eigen::VectorXd simpson_weights(int n, double h) {
  if (n < 2) throw std::invalid_argument("quadrature needs at least two points");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
  if (n == 2) {
    w << 0.5, 0.5;
    return h * w;
  }
  int simpson_end = n;  // exclusive end of the plain-Simpson range
  if (n % 2 == 0) {
    simpson_end = n - 3;
    w(n - 4) += 3.0 / 8.0;
    w(n - 3) += 9.0 / 8.0;
    w(n - 2) += 9.0 / 8.0;
    w(n - 1) += 3.0 / 8.0;
  }
  if (simpson_end >= 3) {
    w(0) += 1.0 / 3.0;
    w(simpson_end - 1) += 1.0 / 3.0;
    for (int i = 1; i < simpson_end - 1; ++i) w(i) += (i % 2 == 1 ? 4.0 : 2.0) / 3.0;
  }
  return h * w;
}

// Normalized Hermite functions phi_0..phi_{dim-1} at the given points via the
// three-term recurrence phi_{n+1} = sqrt(2/(n+1)) u phi_n - sqrt(n/(n+1))
// phi_{n-1}; stable for all n and u, no factorials involved.
Eigen::MatrixXd hermite_functions(const Eigen::VectorXd& u, int dim) {
  const double norm0 = std::pow(std::numbers::pi, -0.25);
  Eigen::MatrixXd phi(u.size(), dim);
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double x = u(i);
    double prev = 0.0;
    double cur = norm0 * std::exp(-0.5 * x * x);
    phi(i, 0) = cur;
    for (int n = 1; n < dim; ++n) {
      const double next =
          std::sqrt(2.0 / n) * x * cur - std::sqrt((n - 1.0) / n) * prev;
      prev = cur;
      cur = next;
      phi(i, n) = cur;
    }
  }
  return phi;
}

struct Axis {
  int mode = 0;       // which mode the row measures
  double scale = 1.0; // row norm s, R = s * x_theta
  double theta = 0.0;
  double lo = 0.0, hi = 0.0;
  int points = 0;
  Eigen::VectorXd grid;       // measured variable v
  Eigen::VectorXd mode_grid;  // v / s, argument of the wavefunction
};

Axis make_axis(int mode, double cx, double cp, double mean, double sigma,
               const GridSpec& spec, int dims) {
  Axis ax;
  ax.mode = mode;
  ax.scale = std::hypot(cx, cp);
  ax.theta = std::atan2(cp, cx);
  ax.points = spec.points(dims);
  ax.lo = mean - spec.sigma_span * sigma;
  ax.hi = mean + spec.sigma_span * sigma;
  ax.grid.resize(ax.points);
  ax.mode_grid.resize(ax.points);
  const double h = (ax.hi - ax.lo) / (ax.points - 1);
  for (int i = 0; i < ax.points; ++i) {
    ax.grid(i) = ax.lo + h * i;
    ax.mode_grid(i) = ax.grid(i) / ax.scale;
  }
  return ax;
}

// Phase-rotates the amplitudes of mode `mode` by e^{-i theta n}, turning the
// x-distribution of the rotated state into the x_theta-distribution.
Eigen::VectorXcd rotate_mode(const FockState& f, int mode, double theta,
                             Eigen::VectorXcd amps) {
  for (int idx = 0; idx < amps.size(); ++idx) {
    const int n = (f.n_modes == 1) ? idx : (mode == 0 ? idx / f.dim : idx % f.dim);
    amps(idx) *= std::polar(1.0, -theta * n);
  }
  return amps;
}

GriddedDensity gaussian_pdf_on_grid(const Eigen::VectorXd& mean,
                                    const Eigen::MatrixXd& cov, const GridSpec& spec) {
  const int dims = static_cast<int>(mean.size());
  std::array<double, 2> lo{0, 0}, hi{0, 0};
  std::array<int, 2> pts{0, 0};
  for (int a = 0; a < dims; ++a) {
    const double sigma = std::sqrt(cov(a, a));
    lo[a] = mean(a) - spec.sigma_span * sigma;
    hi[a] = mean(a) + spec.sigma_span * sigma;
    pts[a] = spec.points(dims);
  }
  if (dims == 1) {
    const double s2 = cov(0, 0);
    const double norm = 1.0 / std::sqrt(kTwoPi * s2);
    Eigen::VectorXd values(pts[0]);
    const double h = (hi[0] - lo[0]) / (pts[0] - 1);
    for (int i = 0; i < pts[0]; ++i) {
      const double d = lo[0] + h * i - mean(0);
      values(i) = norm * std::exp(-0.5 * d * d / s2);
    }
    return GriddedDensity(1, lo, hi, pts, std::move(values));
  }
  const double det = cov.determinant();
  if (det <= 0.0) {
    throw std::invalid_argument("projected covariance is singular");
  }
  const Eigen::Matrix2d inv = Eigen::Matrix2d(cov).inverse();
  const double norm = 1.0 / (kTwoPi * std::sqrt(det));
  Eigen::VectorXd values(static_cast<Eigen::Index>(pts[0]) * pts[1]);
  const double h0 = (hi[0] - lo[0]) / (pts[0] - 1);
  const double h1 = (hi[1] - lo[1]) / (pts[1] - 1);
  for (int i = 0; i < pts[0]; ++i) {
    const double d0 = lo[0] + h0 * i - mean(0);
    for (int j = 0; j < pts[1]; ++j) {
      const double d1 = lo[1] + h1 * j - mean(1);
      const double quad =
          inv(0, 0) * d0 * d0 + 2.0 * inv(0, 1) * d0 * d1 + inv(1, 1) * d1 * d1;
      values(static_cast<Eigen::Index>(i) * pts[1] + j) = norm * std::exp(-0.5 * quad);
    }
  }
  return GriddedDensity(2, lo, hi, pts, std::move(values));
}

GriddedDensity fock_pdf(const FockState& f, const QuadratureSet& q, const GridSpec& spec) {
  const int rows = q.rows();
  if (rows > 2 || rows > f.n_modes) {
    throw std::invalid_argument(
        "unsupported Fock density: need one row per measured mode (n_modes <= 2)");
  }
  const GaussianState moments = fock_covariance(f);
  std::vector<Axis> axes;
  std::vector<bool> mode_taken(f.n_modes, false);
  for (int i = 0; i < rows; ++i) {
    const Eigen::RowVectorXd row = q.coeffs.row(i);
    int mode = -1;
    for (int k = 0; k < f.n_modes; ++k) {
      if (row(k) != 0.0 || row(f.n_modes + k) != 0.0) {
        if (mode != -1) {
          throw std::invalid_argument(
              "unsupported Fock density: row " + std::to_string(i) +
              " mixes several modes; each row must act on a single mode");
        }
        mode = k;
      }
    }
    if (mode_taken[mode]) {
      throw std::invalid_argument(
          "unsupported Fock density: two rows act on the same mode");
    }
    mode_taken[mode] = true;
    const double mean = row * moments.mean;
    const double sigma = std::sqrt(row * moments.cov * row.transpose());
    axes.push_back(make_axis(mode, row(mode), row(f.n_modes + mode), mean, sigma,
                             spec, rows));
  }

  Eigen::VectorXcd amps = f.amplitudes;
  for (const Axis& ax : axes) amps = rotate_mode(f, ax.mode, ax.theta, amps);

  std::array<double, 2> lo{0, 0}, hi{0, 0};
  std::array<int, 2> pts{0, 0};
  for (int a = 0; a < rows; ++a) {
    lo[a] = axes[a].lo;
    hi[a] = axes[a].hi;
    pts[a] = axes[a].points;
  }

  if (f.n_modes == 1) {
    const Eigen::MatrixXd phi = hermite_functions(axes[0].mode_grid, f.dim);
    const Eigen::VectorXcd psi = phi * amps;
    const Eigen::VectorXd values = psi.cwiseAbs2() / axes[0].scale;
    return GriddedDensity(1, lo, hi, pts, values);
  }

  using RowMajor =
      Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> c(amps.data(), f.dim, f.dim);
  if (rows == 1) {
    // Marginal of one mode of a two-mode state: sum the squared partial
    // wavefunction over the unmeasured index.
    const Eigen::MatrixXd phi = hermite_functions(axes[0].mode_grid, f.dim);
    const Eigen::MatrixXcd partial =
        (axes[0].mode == 0) ? Eigen::MatrixXcd(phi * c)
                            : Eigen::MatrixXcd(phi * c.transpose());
    const Eigen::VectorXd values = partial.cwiseAbs2().rowwise().sum() / axes[0].scale;
    return GriddedDensity(1, lo, hi, pts, values);
  }

  const Axis& ax_m0 = (axes[0].mode == 0) ? axes[0] : axes[1];
  const Axis& ax_m1 = (axes[0].mode == 0) ? axes[1] : axes[0];
  const Eigen::MatrixXd phi0 = hermite_functions(ax_m0.mode_grid, f.dim);
  const Eigen::MatrixXd phi1 = hermite_functions(ax_m1.mode_grid, f.dim);
  const Eigen::MatrixXcd psi = phi0 * c * phi1.transpose();  // (u_mode0, u_mode1)
  const double jac = axes[0].scale * axes[1].scale;
  Eigen::VectorXd values(static_cast<Eigen::Index>(pts[0]) * pts[1]);
  for (int i = 0; i < pts[0]; ++i) {
    for (int j = 0; j < pts[1]; ++j) {
      // axis 0 indexes the first row of q; map back to mode indices.
      const std::complex<double> amp = (axes[0].mode == 0) ? psi(i, j) : psi(j, i);
      values(static_cast<Eigen::Index>(i) * pts[1] + j) = std::norm(amp) / jac;
    }
  }
  return GriddedDensity(2, lo, hi, pts, std::move(values));
}

}  // namespace

GriddedDensity::GriddedDensity(int dims, std::array<double, 2> lo, std::array<double, 2> hi,
                               std::array<int, 2> points, Eigen::VectorXd values)
    : dims_(dims), lo_(lo), hi_(hi), points_(points), values_(std::move(values)) {
  if (dims_ < 1 || dims_ > 2) throw std::invalid_argument("density must be 1-D or 2-D");
  Eigen::Index expected = points_[0];
  if (dims_ == 2) expected *= points_[1];
  for (int a = 0; a < dims_; ++a) {
    if (points_[a] < 4 || hi_[a] <= lo_[a]) {
      throw std::invalid_argument("density grid axis is degenerate");
    }
  }
  if (values_.size() != expected) {
    throw std::invalid_argument("density value count does not match the grid");
  }
  if (values_.minCoeff() < 0.0) {
    throw std::invalid_argument("density values must be nonnegative");
  }
  const double total = integral();
  if (std::abs(total - 1.0) > 1e-6) {
    throw std::invalid_argument("density integrates to " + std::to_string(total) +
                                ", expected 1 within 1e-6");
  }
}

double GriddedDensity::step(int axis) const {
  return (hi_[axis] - lo_[axis]) / (points_[axis] - 1);
}

double GriddedDensity::coordinate(int axis, int index) const {
  return lo_[axis] + step(axis) * index;
}

double GriddedDensity::integral() const {
  const Eigen::VectorXd w0 = simpson_weights(points_[0], step(0));
  if (dims_ == 1) return w0.dot(values_);
  const Eigen::VectorXd w1 = simpson_weights(points_[1], step(1));
  double total = 0.0;
  for (int i = 0; i < points_[0]; ++i) {
    total += w0(i) * w1.dot(values_.segment(static_cast<Eigen::Index>(i) * points_[1],
                                            points_[1]));
  }
  return total;
}

double GriddedDensity::weight(int i) const {
  return simpson_weights(points_[0], step(0))(i);
}

double GriddedDensity::weight(int i, int j) const {
  return simpson_weights(points_[0], step(0))(i) * simpson_weights(points_[1], step(1))(j);
}

GriddedDensity quadrature_pdf(const State& s, const QuadratureSet& q, const GridSpec& spec) {
  if (q.rows() < 1 || q.rows() > 2) {
    throw std::invalid_argument("quadrature_pdf supports 1 or 2 rows");
  }
  if (q.rows() == 2 && !pairwise_commuting(q)) {
    throw std::invalid_argument("jointly measured quadratures must commute");
  }
  if (q.n_modes != state_modes(s)) {
    throw std::invalid_argument("quadrature set does not match the state's mode count");
  }
  if (const auto* g = std::get_if<GaussianState>(&s)) {
    const GaussianState gx = g->in_ordering(Ordering::xxpp);
    const Eigen::VectorXd mean = q.coeffs * gx.mean;
    Eigen::MatrixXd cov = q.coeffs * gx.cov * q.coeffs.transpose();
    cov = 0.5 * (cov + cov.transpose());
    return gaussian_pdf_on_grid(mean, cov, spec);
  }
  return fock_pdf(std::get<FockState>(s), q, spec);
}

double differential_entropy(const GriddedDensity& d) {
  if (std::abs(d.integral() - 1.0) > 1e-6) {
    throw std::invalid_argument("differential_entropy requires a normalized density");
  }
  const Eigen::VectorXd w0 = simpson_weights(d.points(0), d.step(0));
  auto plogp = [](double p) { return p < 1e-300 ? 0.0 : p * std::log(p); };
  double acc = 0.0;
  if (d.dims() == 1) {
    for (int i = 0; i < d.points(0); ++i) acc += w0(i) * plogp(d.values()(i));
  } else {
    const Eigen::VectorXd w1 = simpson_weights(d.points(1), d.step(1));
    for (int i = 0; i < d.points(0); ++i) {
      double rowacc = 0.0;
      for (int j = 0; j < d.points(1); ++j) {
        rowacc += w1(j) * plogp(d.values()(static_cast<Eigen::Index>(i) * d.points(1) + j));
      }
      acc += w0(i) * rowacc;
    }
  }
  return -acc;
}

double renyi_entropy(const GriddedDensity& d, double alpha) {
  if (alpha <= 0.0) throw std::invalid_argument("Renyi order must be positive");
  if (alpha == 1.0) return differential_entropy(d);
  if (std::abs(d.integral() - 1.0) > 1e-6) {
    throw std::invalid_argument("renyi_entropy requires a normalized density");
  }
  const Eigen::VectorXd w0 = simpson_weights(d.points(0), d.step(0));
  double acc = 0.0;
  if (d.dims() == 1) {
    for (int i = 0; i < d.points(0); ++i) acc += w0(i) * std::pow(d.values()(i), alpha);
  } else {
    const Eigen::VectorXd w1 = simpson_weights(d.points(1), d.step(1));
    for (int i = 0; i < d.points(0); ++i) {
      double rowacc = 0.0;
      for (int j = 0; j < d.points(1); ++j) {
        rowacc += w1(j) *
                  std::pow(d.values()(static_cast<Eigen::Index>(i) * d.points(1) + j), alpha);
      }
      acc += w0(i) * rowacc;
    }
  }
  return std::log(acc) / (1.0 - alpha);
}

double gaussian_entropy(const Eigen::MatrixXd& cov) {
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (cov.rows() != cov.cols() || llt.info() != Eigen::Success) {
    throw std::invalid_argument("gaussian_entropy requires a positive-definite covariance");
  }
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < cov.rows(); ++i) {
    log_det += 2.0 * std::log(llt.matrixLLT()(i, i));
  }
  const double m = static_cast<double>(cov.rows());
  return 0.5 * (m * std::log(kTwoPi * std::numbers::e) + log_det);
}

double gaussian_renyi_entropy(const Eigen::MatrixXd& cov, double alpha) {
  if (alpha <= 0.0) throw std::invalid_argument("Renyi order must be positive");
  if (alpha == 1.0) return gaussian_entropy(cov);
  const double m = static_cast<double>(cov.rows());
  const double shannon = gaussian_entropy(cov);
  return shannon - 0.5 * m + m * std::log(alpha) / (2.0 * (alpha - 1.0));
}

double entropy_power(double h, int m) {
  if (m < 1) throw std::invalid_argument("entropy_power requires dimension >= 1");
  return std::exp(2.0 * h / m) / (kTwoPi * std::numbers::e);
}

double gaussian_mutual_information(const Eigen::Matrix2d& cov) {
  const double det = cov.determinant();
  if (det <= 0.0 || cov(0, 0) <= 0.0) {
    throw std::invalid_argument("mutual information requires a positive-definite covariance");
  }
  return 0.5 * std::log(cov(0, 0) * cov(1, 1) / det);
}

double relative_entropy_to_gaussian(const GriddedDensity& d) {
  if (d.dims() != 1) {
    throw std::invalid_argument("relative_entropy_to_gaussian takes 1-D densities");
  }
  const double var = grid_variance(d);
  return 0.5 * std::log(kTwoPi * std::numbers::e * var) - differential_entropy(d);
}

double grid_mean(const GriddedDensity& d) {
  if (d.dims() != 1) throw std::invalid_argument("grid_mean takes 1-D densities");
  const Eigen::VectorXd w = simpson_weights(d.points(0), d.step(0));
  double acc = 0.0;
  for (int i = 0; i < d.points(0); ++i) acc += w(i) * d.coordinate(0, i) * d.values()(i);
  return acc;
}

double grid_variance(const GriddedDensity& d) {
  const double mean = grid_mean(d);
  const Eigen::VectorXd w = simpson_weights(d.points(0), d.step(0));
  double acc = 0.0;
  for (int i = 0; i < d.points(0); ++i) {
    const double dev = d.coordinate(0, i) - mean;
    acc += w(i) * dev * dev * d.values()(i);
  }
  return acc;
}

GriddedDensity marginal(const GriddedDensity& d, int axis) {
  if (d.dims() != 2 || axis < 0 || axis > 1) {
    throw std::invalid_argument("marginal requires a 2-D density and axis in {0, 1}");
  }
  const int other = 1 - axis;
  const Eigen::VectorXd w = simpson_weights(d.points(other), d.step(other));
  Eigen::VectorXd values(d.points(axis));
  for (int i = 0; i < d.points(axis); ++i) {
    double acc = 0.0;
    for (int j = 0; j < d.points(other); ++j) {
      const Eigen::Index idx = (axis == 0)
                                   ? static_cast<Eigen::Index>(i) * d.points(1) + j
                                   : static_cast<Eigen::Index>(j) * d.points(1) + i;
      acc += w(j) * d.values()(idx);
    }
    values(i) = acc;
  }
  return GriddedDensity(1, {d.lo(axis), 0.0}, {d.hi(axis), 0.0},
                        {d.points(axis), 0}, std::move(values));
}

}  // namespace cvur
