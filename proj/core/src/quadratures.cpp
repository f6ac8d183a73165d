#include "cvur/quadratures.hpp"

#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fock_ops.hpp"

namespace cvur {

QuadratureSet::QuadratureSet(int modes, Eigen::MatrixXd c)
    : n_modes(modes), coeffs(std::move(c)) {
  if (n_modes < 1 || coeffs.cols() != 2 * n_modes || coeffs.rows() == 0) {
    throw std::invalid_argument("quadrature set must have shape n_out x 2*n_modes");
  }
  for (int i = 0; i < coeffs.rows(); ++i) {
    if (coeffs.row(i).norm() == 0.0) {
      throw std::invalid_argument("quadrature set row " + std::to_string(i) + " is zero");
    }
  }
}

QuadratureSet QuadratureSet::row(int i) const {
  if (i < 0 || i >= rows()) throw std::invalid_argument("quadrature row out of range");
  return QuadratureSet(n_modes, coeffs.row(i));
}

QuadratureSet rotated_quadrature(double theta) {
  Eigen::MatrixXd c(1, 2);
  c << std::cos(theta), std::sin(theta);
  return QuadratureSet(1, std::move(c));
}

QuadratureSet equidistributed_set(int m) {
  if (m < 2) throw std::invalid_argument("equidistributed_set requires m >= 2");
  // Snap roundoff at multiples of pi/2 so axis-aligned rows are exact and the
  // m = 2 wedge degeneracy is an exact zero.
  const auto snap = [](double v) { return std::abs(v) < 1e-15 ? 0.0 : v; };
  Eigen::MatrixXd c(m, 2);
  for (int i = 0; i < m; ++i) {
    const double phi = 2.0 * std::numbers::pi * i / m;
    c(i, 0) = snap(std::cos(phi));
    c(i, 1) = snap(std::sin(phi));
  }
  return QuadratureSet(1, std::move(c));
}

QuadratureSet x_set(int n_modes) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n_modes, 2 * n_modes);
  c.leftCols(n_modes) = Eigen::MatrixXd::Identity(n_modes, n_modes);
  return QuadratureSet(n_modes, std::move(c));
}

QuadratureSet p_set(int n_modes) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n_modes, 2 * n_modes);
  c.rightCols(n_modes) = Eigen::MatrixXd::Identity(n_modes, n_modes);
  return QuadratureSet(n_modes, std::move(c));
}

QuadratureSet rotated_set(int n_modes, double theta) {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n_modes, 2 * n_modes);
  c.leftCols(n_modes) =
      std::cos(theta) * Eigen::MatrixXd::Identity(n_modes, n_modes);
  c.rightCols(n_modes) =
      std::sin(theta) * Eigen::MatrixXd::Identity(n_modes, n_modes);
  return QuadratureSet(n_modes, std::move(c));
}

QuadratureSet quadratures_from_symplectic(const SymplecticMatrix& s) {
  const SymplecticMatrix sx = s.in_ordering(Ordering::xxpp);
  const int n = sx.modes();
  return QuadratureSet(n, sx.entries.topRows(n));
}

QuadratureSet stack(const QuadratureSet& y, const QuadratureSet& z) {
  if (y.n_modes != z.n_modes) {
    throw std::invalid_argument("cannot stack quadrature sets over different modes");
  }
  Eigen::MatrixXd c(y.rows() + z.rows(), y.coeffs.cols());
  c.topRows(y.rows()) = y.coeffs;
  c.bottomRows(z.rows()) = z.coeffs;
  return QuadratureSet(y.n_modes, std::move(c));
}

Eigen::MatrixXd commutator_matrix(const QuadratureSet& y, const QuadratureSet& z) {
  if (y.n_modes != z.n_modes) {
    throw std::invalid_argument("commutator_matrix requires equal mode counts");
  }
  if (y.rows() != z.rows()) {
    throw std::invalid_argument("commutator_matrix requires equal row counts");
  }
  // Ktilde_ij = a_i . b'_j - a'_i . b_j, with [y_i, z_j] = i Ktilde_ij.
  return y.a() * z.ap().transpose() - y.ap() * z.a().transpose();
}

bool pairwise_commuting(const QuadratureSet& q, double tol) {
  const Eigen::MatrixXd k = q.a() * q.ap().transpose() - q.ap() * q.a().transpose();
  return k.cwiseAbs().maxCoeff() <= tol;
}

double wedge_norm(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("wedge_norm requires vectors of equal length");
  }
  if (a.size() < 2) throw std::invalid_argument("wedge_norm requires length >= 2");
  const double g = a.squaredNorm() * b.squaredNorm() - std::pow(a.dot(b), 2);
  return std::sqrt(std::max(0.0, g));
}

GammaBlocks gamma_yz(const GaussianState& g, const QuadratureSet& y,
                     const QuadratureSet& z) {
  if (y.n_modes != g.modes() || z.n_modes != g.modes()) {
    throw std::invalid_argument("quadrature sets do not match the state's mode count");
  }
  if (!pairwise_commuting(y) || !pairwise_commuting(z)) {
    throw std::invalid_argument("gamma_yz requires pairwise commuting y and z");
  }
  const GaussianState gx = g.in_ordering(Ordering::xxpp);
  const QuadratureSet m = stack(y, z);
  Eigen::MatrixXd full = m.coeffs * gx.cov * m.coeffs.transpose();
  full = 0.5 * (full + full.transpose());
  GammaBlocks blocks;
  blocks.yy = full.topLeftCorner(y.rows(), y.rows());
  blocks.zz = full.bottomRightCorner(z.rows(), z.rows());
  blocks.yz = full.topRightCorner(y.rows(), z.rows());
  blocks.full = std::move(full);
  return blocks;
}

ObservableMoments observables_moments(const State& s, const QuadratureSet& r) {
  if (r.n_modes != state_modes(s)) {
    throw std::invalid_argument("quadrature set does not match the state's mode count");
  }
  const int m = r.rows();
  ObservableMoments out;
  out.comm = 0.5 * (r.a() * r.ap().transpose() - r.ap() * r.a().transpose());
  if (const auto* g = std::get_if<GaussianState>(&s)) {
    const GaussianState gx = g->in_ordering(Ordering::xxpp);
    out.gamma = r.coeffs * gx.cov * r.coeffs.transpose();
  } else {
    const auto& f = std::get<FockState>(s);
    std::vector<Eigen::VectorXcd> applied(m);
    Eigen::VectorXd mean(m);
    for (int i = 0; i < m; ++i) {
      applied[i] = fock::apply_row(f, r.coeffs.row(i));
      mean(i) = f.amplitudes.dot(applied[i]).real();
    }
    out.gamma.resize(m, m);
    for (int i = 0; i < m; ++i) {
      for (int j = i; j < m; ++j) {
        const double sym = applied[i].dot(applied[j]).real();
        out.gamma(i, j) = out.gamma(j, i) = sym - mean(i) * mean(j);
      }
    }
  }
  out.gamma = 0.5 * (out.gamma + out.gamma.transpose()).eval();
  return out;
}

}  // namespace cvur
