#include "fock_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace cvur::fock {

using cd = std::complex<double>;

Eigen::MatrixXcd annihilation(int dim) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::MatrixXcd position_op(int dim) {
  const Eigen::MatrixXcd a = annihilation(dim);
  return (a + a.adjoint()) / std::sqrt(2.0);
}

Eigen::MatrixXcd momentum_op(int dim) {
  const Eigen::MatrixXcd a = annihilation(dim);
  return cd(0.0, -1.0) * (a - a.adjoint()) / std::sqrt(2.0);
}

Eigen::MatrixXcd quadrature_op(double cx, double cp, int dim) {
  return cx * position_op(dim) + cp * momentum_op(dim);
}

Eigen::VectorXcd apply_mode_op(const FockState& f, const Eigen::MatrixXcd& op, int mode) {
  if (mode < 0 || mode >= f.n_modes) {
    throw std::invalid_argument("mode index out of range");
  }
  if (f.n_modes == 1) {
    return op * f.amplitudes;
  }
  // Two modes: amplitudes(n1 * dim + n2) viewed as the matrix C(n1, n2).
  using RowMajor = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> c(f.amplitudes.data(), f.dim, f.dim);
  Eigen::VectorXcd out(f.amplitudes.size());
  Eigen::Map<RowMajor> o(out.data(), f.dim, f.dim);
  if (mode == 0) {
    o = op * c;
  } else {
    o = c * op.transpose();
  }
  return out;
}

Eigen::VectorXcd apply_row(const FockState& f, const Eigen::RowVectorXd& row) {
  if (row.size() != 2 * f.n_modes) {
    throw std::invalid_argument("coefficient row does not match the mode count");
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(f.amplitudes.size());
  for (int k = 0; k < f.n_modes; ++k) {
    const double cx = row(k), cp = row(f.n_modes + k);
    if (cx == 0.0 && cp == 0.0) continue;
    out += apply_mode_op(f, quadrature_op(cx, cp, f.dim), k);
  }
  return out;
}

}  // namespace cvur::fock
