#include "cvur/states.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fock_ops.hpp"

namespace cvur {
namespace {

void check_state_shape(const GaussianState& g) {
  const auto d = g.mean.size();
  if (d == 0 || d % 2 != 0 || g.cov.rows() != d || g.cov.cols() != d) {
    throw std::invalid_argument("Gaussian state has inconsistent dimensions");
  }
}

double log_det_llt(const Eigen::LLT<Eigen::MatrixXd>& llt) {
  double log_det = 0.0;
  const auto& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < l.rows(); ++i) log_det += 2.0 * std::log(l(i, i));
  return log_det;
}

}  // namespace

GaussianState GaussianState::in_ordering(Ordering target) const {
  if (target == ordering) return *this;
  return GaussianState{convert_ordering(mean, ordering, target),
                       convert_ordering(cov, ordering, target), target};
}

GaussianState vacuum(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("vacuum requires n_modes >= 1");
  return GaussianState{Eigen::VectorXd::Zero(2 * n_modes),
                       0.5 * Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes),
                       Ordering::xxpp};
}

GaussianState coherent(std::complex<double> alpha) {
  GaussianState g = vacuum(1);
  g.mean << std::numbers::sqrt2 * alpha.real(), std::numbers::sqrt2 * alpha.imag();
  return g;
}

GaussianState thermal(double nu) {
  if (nu < 0.5) {
    throw std::invalid_argument("thermal state requires nu >= 1/2 (unphysical otherwise)");
  }
  GaussianState g = vacuum(1);
  g.cov = nu * Eigen::MatrixXd::Identity(2, 2);
  return g;
}

GaussianState squeezed_vacuum_gaussian(double r, double phi) {
  GaussianState g = vacuum(1);
  const SymplecticMatrix s = squeezer(r, phi);
  g.cov = s.entries * g.cov * s.entries.transpose();
  g.cov = 0.5 * (g.cov + g.cov.transpose());
  return g;
}

bool is_physical(const GaussianState& g, double tol) {
  check_state_shape(g);
  const auto nu = williamson_eigenvalues(g.cov, g.ordering);
  return nu.back() >= 0.5 - tol;
}

double purity(const GaussianState& g) {
  if (!is_physical(g)) {
    throw std::invalid_argument("purity is defined for physical states only");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(g.cov);
  const double log_det = log_det_llt(llt);
  return std::exp(-g.modes() * std::numbers::ln2 - 0.5 * log_det);
}

GaussianState apply_symplectic(const GaussianState& g, const SymplecticMatrix& s,
                               const Eigen::VectorXd& d) {
  check_state_shape(g);
  if (s.entries.rows() != g.mean.size()) {
    throw std::invalid_argument("symplectic matrix does not match the state dimension");
  }
  const Eigen::MatrixXd m = s.in_ordering(g.ordering).entries;
  GaussianState out = g;
  out.mean = m * g.mean;
  if (d.size() != 0) {
    if (d.size() != g.mean.size()) {
      throw std::invalid_argument("displacement does not match the state dimension");
    }
    out.mean += d;
  }
  out.cov = m * g.cov * m.transpose();
  out.cov = 0.5 * (out.cov + out.cov.transpose());
  return out;
}

Eigen::MatrixXd reduced_cov(const GaussianState& g, std::span<const int> indices) {
  check_state_shape(g);
  if (indices.empty()) {
    throw std::invalid_argument("reduced_cov requires a nonempty index set");
  }
  const int d = static_cast<int>(g.mean.size());
  Eigen::MatrixXd out(indices.size(), indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= d) {
      throw std::invalid_argument("reduced_cov index out of range");
    }
    for (std::size_t j = 0; j < indices.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          g.cov(indices[i], indices[j]);
    }
  }
  return out;
}

Eigen::MatrixXd x_block(const GaussianState& g) {
  const GaussianState gx = g.in_ordering(Ordering::xxpp);
  return gx.cov.topLeftCorner(g.modes(), g.modes());
}

Eigen::MatrixXd p_block(const GaussianState& g) {
  const GaussianState gx = g.in_ordering(Ordering::xxpp);
  return gx.cov.bottomRightCorner(g.modes(), g.modes());
}

double wigner_gaussian(const GaussianState& g, const Eigen::VectorXd& point) {
  check_state_shape(g);
  if (point.size() != g.mean.size()) {
    throw std::invalid_argument("phase-space point does not match the state dimension");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(g.cov);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("wigner_gaussian requires a non-singular covariance");
  }
  const Eigen::VectorXd d = point - g.mean;
  const double quad = d.dot(llt.solve(d));
  const double log_norm =
      g.modes() * std::log(2.0 * std::numbers::pi) + 0.5 * log_det_llt(llt);
  return std::exp(-0.5 * quad - log_norm);
}

FockState squeezed_vacuum_fock(double r, double phi, int dim) {
  if (dim < 2) throw std::invalid_argument("squeezed_vacuum_fock requires dim >= 2");
  using cd = std::complex<double>;
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
  // c_{2m} = sqrt(sech r) (-e^{i theta} tanh r)^m sqrt((2m)!)/(2^m m!) with
  // theta = -2 phi, so that the covariance matches squeezed_vacuum_gaussian.
  cd cur = std::sqrt(1.0 / std::cosh(r));
  c(0) = cur;
  double norm2 = std::norm(cur);
  const cd ratio_phase = -std::polar(std::tanh(r), -2.0 * phi);
  for (int m = 0; 2 * (m + 1) < dim; ++m) {
    cur *= ratio_phase * std::sqrt((2.0 * m + 1.0) / (2.0 * m + 2.0));
    c(2 * (m + 1)) = cur;
    norm2 += std::norm(cur);
  }
  const double loss = std::max(0.0, 1.0 - norm2);
  if (loss > 1e-6) {
    throw std::invalid_argument(
        "squeezed_vacuum_fock: truncation loss " + std::to_string(loss) + " at r=" +
        std::to_string(r) + ", dim=" + std::to_string(dim) +
        " exceeds 1e-6; increase dim");
  }
  c /= std::sqrt(norm2);
  return FockState{1, dim, std::move(c), loss};
}

FockState fock_basis_state(int n, int dim) {
  if (dim < 2 || n < 0 || n >= dim) {
    throw std::invalid_argument("fock_basis_state requires 0 <= n < dim, dim >= 2");
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
  c(n) = 1.0;
  return FockState{1, dim, std::move(c), 0.0};
}

GaussianState fock_covariance(const FockState& f) {
  if (f.n_modes < 1 || f.n_modes > 2) {
    throw std::invalid_argument("FockState supports 1 or 2 modes");
  }
  const int d = 2 * f.n_modes;
  std::vector<Eigen::VectorXcd> applied(d);
  for (int i = 0; i < d; ++i) {
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(d);
    row(i) = 1.0;
    applied[i] = fock::apply_row(f, row);
  }
  GaussianState out;
  out.ordering = Ordering::xxpp;
  out.mean.resize(d);
  out.cov.resize(d, d);
  for (int i = 0; i < d; ++i) {
    out.mean(i) = f.amplitudes.dot(applied[i]).real();
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      // 1/2 <{R_i, R_j}> = Re((R_i psi)^dag (R_j psi)) for Hermitian R.
      const double sym = applied[i].dot(applied[j]).real();
      out.cov(i, j) = out.cov(j, i) = sym - out.mean(i) * out.mean(j);
    }
  }
  return out;
}

int state_modes(const State& s) {
  if (const auto* g = std::get_if<GaussianState>(&s)) return g->modes();
  return std::get<FockState>(s).n_modes;
}

GaussianState state_moments(const State& s) {
  if (const auto* g = std::get_if<GaussianState>(&s)) {
    return g->in_ordering(Ordering::xxpp);
  }
  return fock_covariance(std::get<FockState>(s));
}

}  // namespace cvur
