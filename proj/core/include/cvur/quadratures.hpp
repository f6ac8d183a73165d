#ifndef CVUR_QUADRATURES_HPP
#define CVUR_QUADRATURES_HPP

#include <Eigen/Core>

#include "cvur/states.hpp"
#include "cvur/symplectic.hpp"

namespace cvur {

/// A set of quadratures R_i = sum_k a_ik x_k + a'_ik p_k, stored as the
/// n_out x 2n coefficient matrix (a | a') over xxpp ordering. Zero rows are
/// rejected on construction.
struct QuadratureSet {
  int n_modes = 0;
  Eigen::MatrixXd coeffs;  // n_out x 2*n_modes

  QuadratureSet() = default;
  QuadratureSet(int modes, Eigen::MatrixXd c);

  int rows() const { return static_cast<int>(coeffs.rows()); }
  /// x-coefficient block (rows x n_modes).
  Eigen::MatrixXd a() const { return coeffs.leftCols(n_modes); }
  /// p-coefficient block.
  Eigen::MatrixXd ap() const { return coeffs.rightCols(n_modes); }
  /// Single-row subset.
  QuadratureSet row(int i) const;
};

/// cos(theta) x + sin(theta) p on one mode.
QuadratureSet rotated_quadrature(double theta);
/// m quadratures equidistributed over the unit circle, phi_i = 2 pi (i-1)/m.
/// For m = 2 the two rows are antiparallel and every wedge bound built from
/// this set degenerates to zero.
QuadratureSet equidistributed_set(int m);
/// The x (resp. p) quadratures of n modes.
QuadratureSet x_set(int n_modes);
QuadratureSet p_set(int n_modes);
/// All modes rotated by the same angle: y_i = cos(theta) x_i + sin(theta) p_i.
QuadratureSet rotated_set(int n_modes, double theta);
/// Rows y = A_a x + A_b p taken from the upper n x 2n block of a symplectic
/// matrix; such rows always commute pairwise.
QuadratureSet quadratures_from_symplectic(const SymplecticMatrix& s);
/// Stacks the rows of two sets over the same modes.
QuadratureSet stack(const QuadratureSet& y, const QuadratureSet& z);

/// Real commutator matrix Ktilde with [y_i, z_j] = i Ktilde_ij, i.e.
/// Ktilde_ij = a_i . b'_j - a'_i . b_j. Row counts must match.
Eigen::MatrixXd commutator_matrix(const QuadratureSet& y, const QuadratureSet& z);

/// True iff max_ij |a_i . a'_j - a_j . a'_i| <= tol.
bool pairwise_commuting(const QuadratureSet& q, double tol = 1e-10);

/// sqrt(|a|^2 |b|^2 - (a.b)^2), the norm of the wedge product.
double wedge_norm(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

struct GammaBlocks {
  Eigen::MatrixXd full;  // covariance of (y, z) stacked
  Eigen::MatrixXd yy, zz, yz;
};

/// Covariance of the measured y and z quadratures, Gamma = M gamma M^T with
/// M the stacked coefficient rows. Y and Z must each be pairwise commuting.
GammaBlocks gamma_yz(const GaussianState& g, const QuadratureSet& y, const QuadratureSet& z);

struct ObservableMoments {
  Eigen::MatrixXd gamma;  // covariance of the measured observables
  Eigen::MatrixXd comm;   // C_ij = -(i/2) <[R_i, R_j]> = (a_i.a'_j - a_j.a'_i)/2
};

/// Covariance and commutator matrix of a set of observables on a state. The
/// commutator matrix is state-independent and antisymmetric.
ObservableMoments observables_moments(const State& s, const QuadratureSet& r);

}  // namespace cvur

#endif
