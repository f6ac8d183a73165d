#ifndef CVUR_SRC_FOCK_OPS_HPP
#define CVUR_SRC_FOCK_OPS_HPP

// Internal helpers for truncated ladder-operator algebra on FockState
// amplitude vectors. Two-mode states are handled by reshaping the amplitude
// vector to a dim x dim matrix instead of forming Kronecker products.

#include <Eigen/Core>
#include <complex>

#include "cvur/states.hpp"

namespace cvur::fock {

/// Truncated annihilation operator, a[n-1][n] = sqrt(n).
Eigen::MatrixXcd annihilation(int dim);

/// x = (a + a^dag)/sqrt(2).
Eigen::MatrixXcd position_op(int dim);

/// p = (a - a^dag)/(i sqrt(2)).
Eigen::MatrixXcd momentum_op(int dim);

/// cx * x + cp * p on one mode.
Eigen::MatrixXcd quadrature_op(double cx, double cp, int dim);

/// Applies a single-mode operator to the given mode of a 1- or 2-mode
/// amplitude vector.
Eigen::VectorXcd apply_mode_op(const FockState& f, const Eigen::MatrixXcd& op, int mode);

/// Applies the quadrature R = sum_k a_k x_k + ap_k p_k given by one
/// coefficient row (a | ap) over xxpp ordering.
Eigen::VectorXcd apply_row(const FockState& f, const Eigen::RowVectorXd& row);

}  // namespace cvur::fock

#endif
