#ifndef CVUR_STATES_HPP
#define CVUR_STATES_HPP

#include <Eigen/Core>
#include <complex>
#include <span>
#include <variant>

#include "cvur/ordering.hpp"
#include "cvur/symplectic.hpp"

namespace cvur {

/// Gaussian state of n modes: mean vector and covariance matrix in quadrature
/// units with hbar = 1 (vacuum variance 1/2).
struct GaussianState {
  Eigen::VectorXd mean;  // 2n
  Eigen::MatrixXd cov;   // 2n x 2n, symmetric
  Ordering ordering = Ordering::xxpp;

  int modes() const { return static_cast<int>(mean.size()) / 2; }
  GaussianState in_ordering(Ordering target) const;
};

/// Pure state of 1 or 2 bosonic modes in a truncated number basis.
/// amplitudes has length dim^n_modes, lexicographic in mode indices, and unit
/// 2-norm. truncation_loss carries the probability weight discarded when the
/// state was built from an infinite expansion (0 for exact states).
struct FockState {
  int n_modes = 1;
  int dim = 0;
  Eigen::VectorXcd amplitudes;
  double truncation_loss = 0.0;
};

using State = std::variant<GaussianState, FockState>;

GaussianState vacuum(int n_modes);
GaussianState coherent(std::complex<double> alpha);
/// Thermal state with symplectic value nu >= 1/2 (nu = 1/2 is the vacuum).
GaussianState thermal(double nu);

/// Covariance of the squeezed vacuum with parameter r and angle phi:
/// 1/2 [[e^-2r cos^2 + e^2r sin^2,  (e^2r - e^-2r) cos sin],
///      [(e^2r - e^-2r) cos sin,    e^2r cos^2 + e^-2r sin^2]].
/// Pure: det cov = 1/4.
GaussianState squeezed_vacuum_gaussian(double r, double phi);

/// True iff every symplectic eigenvalue is >= 1/2 - tol, equivalently
/// gamma + i Omega / 2 >= 0.
bool is_physical(const GaussianState& g, double tol = 1e-10);

/// 1 / (2^n sqrt(det gamma)), in (0, 1]; rejects unphysical states.
double purity(const GaussianState& g);

/// mean -> S mean + d, cov -> S cov S^T. Orderings must match; d may be empty
/// for no displacement.
GaussianState apply_symplectic(const GaussianState& g, const SymplecticMatrix& s,
                               const Eigen::VectorXd& d = Eigen::VectorXd());

/// Principal submatrix of the covariance for the given quadrature indices.
Eigen::MatrixXd reduced_cov(const GaussianState& g, std::span<const int> indices);
/// Reduced covariance of all x (resp. all p) quadratures.
Eigen::MatrixXd x_block(const GaussianState& g);
Eigen::MatrixXd p_block(const GaussianState& g);

/// Gaussian Wigner function at a phase-space point (same ordering as g).
double wigner_gaussian(const GaussianState& g, const Eigen::VectorXd& point);

/// Squeezed vacuum expanded in the number basis, matching the covariance of
/// squeezed_vacuum_gaussian(r, phi) up to truncation. Rejects (r, dim)
/// combinations whose discarded weight exceeds 1e-6, reporting the loss.
FockState squeezed_vacuum_fock(double r, double phi, int dim);

/// Single Fock basis state |n> (n_modes = 1).
FockState fock_basis_state(int n, int dim);

/// First and second quadrature moments of a Fock state, computed from
/// truncated ladder operators with x = (a + a^dag)/sqrt(2),
/// p = (a - a^dag)/(i sqrt(2)). Result is in xxpp ordering.
GaussianState fock_covariance(const FockState& f);

int state_modes(const State& s);
/// Moments of either representation, xxpp ordering.
GaussianState state_moments(const State& s);

}  // namespace cvur

#endif
