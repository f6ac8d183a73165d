#ifndef CVUR_CONJECTURE_LAB_HPP
#define CVUR_CONJECTURE_LAB_HPP

#include <Eigen/Core>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cvur/relations.hpp"
#include "cvur/states.hpp"

namespace cvur {

/// Parameterized families of probe states. Every point of the bounding box
/// maps to a valid normalized state (Fock coefficients are normalized by
/// projection), so objective evaluations are total.
struct StateFamily {
  enum class Kind { gaussian_pure, fock_superposition };

  Kind kind = Kind::gaussian_pure;
  int n_modes = 1;  // gaussian_pure
  int cutoff = 8;   // fock_superposition: number of complex coefficients

  static StateFamily gaussian_pure(int n_modes);
  static StateFamily fock_superposition(int cutoff);

  std::string id() const;
  /// Parameter count: per-mode (r, phi) plus pairwise mixing angles for
  /// gaussian_pure; 2 * cutoff real components for fock_superposition.
  int dims() const;
  Eigen::VectorXd lower_bounds() const;
  Eigen::VectorXd upper_bounds() const;
  State make_state(const Eigen::VectorXd& params) const;
};

/// A relation evaluation bound to fixed side parameters, as used by scans.
struct RelationBinding {
  std::string id;
  RelationStatus status = RelationStatus::proven;
  std::function<RelationReport(const State&)> eval;
};

/// slack of a bound relation at a family point; degenerate bounds map to
/// +infinity so they are excluded from minimization. Out-of-bounds parameters
/// are rejected.
double slack(const RelationBinding& rel, const StateFamily& family,
             const Eigen::VectorXd& params);

struct NelderMeadOptions {
  int max_iter = 400;
  double simplex_init = 0.1;  // initial vertex offset per coordinate
  double tol = 1e-10;         // simplex diameter termination
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
};

/// Derivative-free simplex minimization with reflection/expansion/contraction/
/// shrink coefficients (1, 2, 0.5, 0.5). Deterministic in (x0, options);
/// terminates when the simplex diameter falls below tol or at max_iter.
/// Rejects a non-finite objective at the start point.
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const NelderMeadOptions& opt = {});

struct ScanResult {
  std::string relation_id;
  std::string family_id;
  int iterations = 0;
  std::uint64_t seed = 0;
  bool optimized = false;
  double best_slack = 0.0;
  Eigen::VectorXd best_params;
  int degenerate_samples = 0;
  /// min / quartiles / max of the finite sampled slacks.
  std::map<std::string, double> quantiles;
};

/// Uniform sampling of the family box with the seeded generator split per
/// sample index (schedule independent), optionally refining the best 5
/// samples by Nelder-Mead (clamped into the box). best_slack is the minimum
/// over all evaluations. For conjectured relations the result is evidence,
/// never an assertion.
ScanResult scan(const RelationBinding& rel, const StateFamily& family, int iterations,
                std::uint64_t seed, bool optimize);

struct Figure2Row {
  double theta, phi, lhs, rhs, slack;
};

/// Sum of entropies h(x) + h(x_theta) for the squeezed state of parameter r
/// and angle phi, against the bound ln(pi e |sin theta|), sampled over a phi
/// grid for each theta. At theta = pi/2 the slack vanishes exactly at
/// phi in {0, pi/2, pi, 3pi/2}.
std::vector<Figure2Row> figure2_curve(double r, const std::vector<double>& thetas,
                                      int phi_samples);

/// Residual || (1/2 r^T gamma^-1 r) psi - n psi || for a single-mode pure
/// Gaussian state: the truncated eigen-operator check with eigenvalue n = 1.
double eigen_residual(const FockState& psi, const Eigen::Matrix2d& gamma);
/// Same, with psi = squeezed_vacuum_fock(r, phi, dim) and the matching
/// covariance. dim >= 32; excessive truncation loss is rejected.
double eigen_residual(double r, double phi, int dim);

}  // namespace cvur

#endif
