#ifndef CVUR_SYMPLECTIC_HPP
#define CVUR_SYMPLECTIC_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "cvur/ordering.hpp"

namespace cvur {

/// A real 2n x 2n matrix S together with the quadrature ordering it acts on.
/// Membership in the symplectic group (S F S^T = F for the form F of the
/// ordering, det S = 1) is checked by is_symplectic, not enforced here.
struct SymplecticMatrix {
  Eigen::MatrixXd entries;
  Ordering ordering = Ordering::xxpp;

  int modes() const { return static_cast<int>(entries.rows()) / 2; }
  SymplecticMatrix in_ordering(Ordering target) const;
};

/// The symplectic form: block-diagonal omega blocks for interleaved ordering,
/// J = [[0, I], [-I, 0]] for xxpp. Antisymmetric, squares to -identity.
Eigen::MatrixXd symplectic_form(int n_modes, Ordering ordering);

/// True iff ||S F S^T - F||_max <= tol for the form F of S's ordering.
bool is_symplectic(const SymplecticMatrix& s, double tol = 1e-10);

/// Phase-space rotation by theta: [[cos, sin], [-sin, cos]]. Orthogonal and
/// symplectic for a single mode (any ordering).
SymplecticMatrix rotation(double theta);

/// Single-mode squeezer with parameter r along the axis rotated by phi,
/// R_phi diag(e^-r, e^r) R_phi^T. Applying it to the vacuum covariance gives
/// the squeezed-state covariance with x-variance e^{-2r}/2 at phi = 0 and
/// off-diagonal sinh(2r) sin(2phi)/2. det = 1.
SymplecticMatrix squeezer(double r, double phi);

/// Passive two-mode rotation (beamsplitter) between modes i and j of an
/// n-mode system, xxpp ordering: the same Givens rotation on the x and p
/// blocks. Orthogonal and symplectic.
SymplecticMatrix beamsplitter(int n_modes, int i, int j, double theta);

/// Embeds a single-mode symplectic matrix into mode `mode` of an n-mode
/// system (identity elsewhere), xxpp ordering.
SymplecticMatrix embed_single_mode(const SymplecticMatrix& s, int n_modes, int mode);

/// Seeded random symplectic in xxpp ordering: O1 (+) squeezers (+) O2 with
/// O1, O2 random passive (orthogonal-symplectic) networks of two-mode
/// rotations with uniform angles and per-mode squeezings uniform in
/// [0, r_max]. Deterministic in (n_modes, seed).
SymplecticMatrix random_symplectic(int n_modes, std::uint64_t seed, double r_max = 1.5);

/// Symplectic (Williamson) eigenvalues of a symmetric positive-definite
/// covariance matrix: the absolute values of the eigenvalues of i.F.gamma,
/// which come in pairs; pairs are matched by sorting and averaged. Returned
/// in descending order, one value per mode. Non-symmetric or non-positive-
/// definite input is rejected.
std::vector<double> williamson_eigenvalues(const Eigen::MatrixXd& gamma,
                                           Ordering ordering = Ordering::xxpp);

}  // namespace cvur

#endif
