#ifndef CVUR_RELATIONS_HPP
#define CVUR_RELATIONS_HPP

#include <map>
#include <string>

#include "cvur/entropy.hpp"
#include "cvur/quadratures.hpp"
#include "cvur/states.hpp"

namespace cvur {

/// One evaluated uncertainty relation. slack = lhs - rhs is nonnegative (up
/// to tolerance) for proven relations on physical states and zero at
/// saturation. Degenerate bounds (rhs = -inf from a vanishing commutator
/// determinant) are reported with degenerate = true rather than as errors,
/// so relation evaluation stays total in scan loops. meta carries the
/// intermediate quantities, including the entropy-power form (ep_lhs, ep_rhs)
/// and variance form (var_lhs, var_rhs) of the same relation where defined,
/// so one evaluation covers a full summary-table row.
struct RelationReport {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool saturated = false;
  bool degenerate = false;
  std::map<std::string, double> meta;
};

enum class EntropyPath { automatic, analytic, grid };

struct RelationOptions {
  EntropyPath path = EntropyPath::automatic;
  GridSpec grid{};
  double tol_analytic = 1e-9;  // saturation tolerance, analytic path
  double tol_grid = 1e-5;      // saturation tolerance, grid path
};

// Variance-based relations.

/// sigma_x^2 sigma_p^2 >= 1/4 per mode (product over modes for n > 1).
RelationReport heisenberg(const State& s);

/// det gamma >= 1/4^n.
RelationReport robertson_schrodinger(const State& s);

/// min_i nu_i >= 1/2: physicality as an uncertainty relation.
RelationReport simon_physicality(const State& s);

/// det Gamma >= det C for m observables; the weaker form prod sigma_i^2 >=
/// det C is reported in meta. det C = 0 for odd m.
RelationReport robertson_m(const State& s, const QuadratureSet& r);

/// prod sigma_i^2 >= (|a ^ b| / m)^m for m single-mode observables; reduces
/// to (1/2)^m for equidistributed sets.
RelationReport kw_product(const State& s, const QuadratureSet& r);

// Entropic relations. Gaussian states evaluate analytically; Fock states use
// gridded densities (n <= 2). Saturation tolerance follows the path used.

/// h(x) + h(p) >= n ln(pi e).
RelationReport bbm(const State& s, const RelationOptions& opt = {});

/// h_alpha(x) + h_beta(p) >= n ln(pi) + n ln(alpha)/(2(alpha-1))
///                         + n ln(beta)/(2(beta-1)), with 1/alpha + 1/beta = 2.
RelationReport renyi_ccv(const State& s, double alpha, double beta,
                         const RelationOptions& opt = {});

/// h(x) + h(p) - 1/2 ln(det gamma_x det gamma_p / det gamma) >= n ln(pi e);
/// saturated exactly by pure Gaussian states.
RelationReport tight_ccv(const State& s, const RelationOptions& opt = {});

/// h(x_theta) + h(x_phi) >= ln(pi e |sin(theta - phi)|) on one mode.
RelationReport guanlei(const State& s, double theta, double phi,
                       const RelationOptions& opt = {});

/// h(A) + h(B) >= ln(pi e |[A, B]|) for two scalar quadratures.
RelationReport huang(const State& s, const QuadratureSet& a, const QuadratureSet& b,
                     const RelationOptions& opt = {});

/// h(y) + h(z) >= ln((pi e)^n |det K|) for two commuting vectors.
RelationReport vector_eur(const State& s, const QuadratureSet& y, const QuadratureSet& z,
                          const RelationOptions& opt = {});

/// Renyi version of vector_eur with the conjugate-pair bound plus ln|det K|.
RelationReport renyi_vector_eur(const State& s, const QuadratureSet& y,
                                const QuadratureSet& z, double alpha, double beta,
                                const RelationOptions& opt = {});

/// h(y) + h(z) - 1/2 ln(det Gamma_y det Gamma_z / det Gamma)
///   >= ln((pi e)^n |det K|); saturated by all pure Gaussian states. The
/// equivalent commutator-free form (with det gamma in place of det Gamma and
/// bound n ln(pi e)) is evaluated alongside and reported as slack_alt.
RelationReport tight_vector_eur(const State& s, const QuadratureSet& y,
                                const QuadratureSet& z, const RelationOptions& opt = {});

/// Conjectured m-observable extension of the tight EUR:
/// sum h(R_i) - 1/2 ln(prod sigma_i^2 / det Gamma) >= 1/2 ln((2 pi e)^m det C).
/// Degenerate for m > 2n (det Gamma = 0) and for odd m (det C = 0).
RelationReport conjecture1(const State& s, const QuadratureSet& r,
                           const RelationOptions& opt = {});

/// Correlation-free weakening: sum h(R_i) >= 1/2 ln((2 pi e)^m det C).
RelationReport conjecture2(const State& s, const QuadratureSet& r,
                           const RelationOptions& opt = {});

/// One-mode, any m: sum h(R_i) >= (m/2) ln((2 pi e / m) |a ^ b|).
RelationReport conjecture3(const State& s, const QuadratureSet& r,
                           const RelationOptions& opt = {});

/// Equidistributed case of conjecture3: sum h(R_i) >= (m/2) ln(pi e).
RelationReport conjecture4(const State& s, int m, const RelationOptions& opt = {});

/// Proof status of a relation in the source material; drives whether a
/// negative scan result is a numerics alarm or merely evidence.
enum class RelationStatus { proven, conditional, conjectured };
RelationStatus relation_status(const std::string& id);

}  // namespace cvur

#endif
