#include "cvur/relations.hpp"

#include <Eigen/LU>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cvur {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLogPiE = std::log(std::numbers::pi) + 1.0;

bool use_grid(const State& s, const RelationOptions& opt) {
  switch (opt.path) {
    case EntropyPath::analytic:
      if (std::holds_alternative<FockState>(s)) {
        throw std::invalid_argument("analytic entropies require a Gaussian state");
      }
      return false;
    case EntropyPath::grid:
      return true;
    case EntropyPath::automatic:
    default:
      return std::holds_alternative<FockState>(s);
  }
}

double saturation_tol(bool grid, const RelationOptions& opt) {
  return grid ? opt.tol_grid : opt.tol_analytic;
}

/// Joint Shannon entropy of the rows of q on the state.
double shannon_of(const State& s, const QuadratureSet& q, bool grid,
                  const RelationOptions& opt) {
  if (grid) return differential_entropy(quadrature_pdf(s, q, opt.grid));
  return gaussian_entropy(observables_moments(s, q).gamma);
}

double renyi_of(const State& s, const QuadratureSet& q, double alpha, bool grid,
                const RelationOptions& opt) {
  if (grid) return renyi_entropy(quadrature_pdf(s, q, opt.grid), alpha);
  return gaussian_renyi_entropy(observables_moments(s, q).gamma, alpha);
}

double sum_row_entropies(const State& s, const QuadratureSet& r, bool grid,
                         const RelationOptions& opt) {
  double acc = 0.0;
  for (int i = 0; i < r.rows(); ++i) acc += shannon_of(s, r.row(i), grid, opt);
  return acc;
}

void check_conjugate_pair(double alpha, double beta) {
  if (alpha <= 0.0 || beta <= 0.0 || std::abs(1.0 / alpha + 1.0 / beta - 2.0) > 1e-12) {
    throw std::invalid_argument("Renyi orders must satisfy 1/alpha + 1/beta = 2");
  }
}

void check_renyi_grid_window(bool grid, double alpha, double beta) {
  if (grid && (alpha < 0.5 || beta < 0.5)) {
    throw std::invalid_argument(
        "grid-path Renyi entropies are reliable for orders >= 1/2 only");
  }
}

/// ln(alpha) / (2 (alpha - 1)) with its alpha -> 1 limit.
double renyi_bound_term(double alpha) {
  if (alpha == 1.0) return 0.5;
  return std::log(alpha) / (2.0 * (alpha - 1.0));
}

RelationReport finish(std::string id, double lhs, double rhs, bool grid,
                      const RelationOptions& opt, std::map<std::string, double> meta,
                      bool degenerate = false) {
  RelationReport r;
  r.id = std::move(id);
  r.lhs = lhs;
  r.rhs = degenerate ? -kInf : rhs;
  r.slack = degenerate ? kInf : lhs - rhs;
  const double tol = saturation_tol(grid, opt);
  r.saturated = !degenerate && std::abs(r.slack) <= tol;
  r.degenerate = degenerate;
  r.meta = std::move(meta);
  r.meta["saturation_tol"] = tol;
  r.meta["grid_path"] = grid ? 1.0 : 0.0;
  return r;
}

const RelationOptions analytic_only{};

}  // namespace

RelationReport heisenberg(const State& s) {
  const GaussianState m = state_moments(s);
  const int n = m.modes();
  double lhs = 1.0;
  for (int i = 0; i < n; ++i) lhs *= m.cov(i, i) * m.cov(n + i, n + i);
  return finish("heisenberg", lhs, std::pow(0.25, n), false, analytic_only, {});
}

RelationReport robertson_schrodinger(const State& s) {
  const GaussianState m = state_moments(s);
  const double det = m.cov.determinant();
  return finish("robertson_schrodinger", det, std::pow(0.25, m.modes()), false,
                analytic_only, {{"det_gamma", det}});
}

RelationReport simon_physicality(const State& s) {
  const GaussianState m = state_moments(s);
  const auto nu = williamson_eigenvalues(m.cov);
  return finish("simon_physicality", nu.back(), 0.5, false, analytic_only,
                {{"nu_max", nu.front()}});
}

RelationReport robertson_m(const State& s, const QuadratureSet& r) {
  const ObservableMoments m = observables_moments(s, r);
  const int rows = r.rows();
  const double det_c = (rows % 2 == 1) ? 0.0 : m.comm.determinant();
  double prod_var = 1.0;
  for (int i = 0; i < rows; ++i) prod_var *= m.gamma(i, i);
  std::map<std::string, double> meta{{"det_C", det_c},
                                     {"weak_lhs", prod_var},
                                     {"m", static_cast<double>(rows)}};
  return finish("robertson_m", m.gamma.determinant(), det_c, false, analytic_only,
                std::move(meta));
}

RelationReport kw_product(const State& s, const QuadratureSet& r) {
  if (r.n_modes != 1) {
    throw std::invalid_argument("kw_product takes single-mode observables");
  }
  const int m = r.rows();
  if (m < 2) throw std::invalid_argument("kw_product needs at least two observables");
  const ObservableMoments mom = observables_moments(s, r);
  const double wedge = wedge_norm(r.a().col(0), r.ap().col(0));
  double lhs = 1.0;
  for (int i = 0; i < m; ++i) lhs *= mom.gamma(i, i);
  const double rhs = std::pow(wedge / m, m);
  return finish("kw_product", lhs, rhs, false, analytic_only,
                {{"wedge", wedge}, {"m", static_cast<double>(m)}});
}

RelationReport bbm(const State& s, const RelationOptions& opt) {
  const bool grid = use_grid(s, opt);
  const int n = state_modes(s);
  const double hx = shannon_of(s, x_set(n), grid, opt);
  const double hp = shannon_of(s, p_set(n), grid, opt);
  const GaussianState m = state_moments(s);
  const double det_gx = x_block(m).determinant();
  const double det_gp = p_block(m).determinant();
  const double nx = entropy_power(hx, n), np = entropy_power(hp, n);
  std::map<std::string, double> meta{
      {"h_x", hx},
      {"h_p", hp},
      {"N_x", nx},
      {"N_p", np},
      {"ep_lhs", nx * np},
      {"ep_rhs", 0.25},
      {"var_lhs", std::pow(det_gx * det_gp, 1.0 / n)},
      {"var_rhs", 0.25},
  };
  return finish("bbm", hx + hp, n * kLogPiE, grid, opt, std::move(meta));
}

RelationReport renyi_ccv(const State& s, double alpha, double beta,
                         const RelationOptions& opt) {
  check_conjugate_pair(alpha, beta);
  const bool grid = use_grid(s, opt);
  check_renyi_grid_window(grid, alpha, beta);
  const int n = state_modes(s);
  const double ha = renyi_of(s, x_set(n), alpha, grid, opt);
  const double hb = renyi_of(s, p_set(n), beta, grid, opt);
  const double rhs =
      n * std::log(std::numbers::pi) + n * renyi_bound_term(alpha) + n * renyi_bound_term(beta);
  std::map<std::string, double> meta{
      {"h_alpha_x", ha}, {"h_beta_p", hb}, {"alpha", alpha}, {"beta", beta}};
  return finish("renyi_ccv", ha + hb, rhs, grid, opt, std::move(meta));
}

RelationReport tight_ccv(const State& s, const RelationOptions& opt) {
  const bool grid = use_grid(s, opt);
  const int n = state_modes(s);
  const double hx = shannon_of(s, x_set(n), grid, opt);
  const double hp = shannon_of(s, p_set(n), grid, opt);
  const GaussianState m = state_moments(s);
  const double det_g = m.cov.determinant();
  const double det_gx = x_block(m).determinant();
  const double det_gp = p_block(m).determinant();
  const double correction = 0.5 * std::log(det_gx * det_gp / det_g);
  const double nx = entropy_power(hx, n), np = entropy_power(hp, n);
  std::map<std::string, double> meta{
      {"h_x", hx},
      {"h_p", hp},
      {"correction", correction},
      {"det_gamma", det_g},
      {"det_gamma_x", det_gx},
      {"det_gamma_p", det_gp},
      {"ep_lhs", nx * np * std::pow(det_g / (det_gx * det_gp), 1.0 / n)},
      {"ep_rhs", 0.25},
      {"var_lhs", std::pow(det_g, 1.0 / n)},
      {"var_rhs", 0.25},
  };
  return finish("tight_ccv", hx + hp - correction, n * kLogPiE, grid, opt, std::move(meta));
}

RelationReport guanlei(const State& s, double theta, double phi,
                       const RelationOptions& opt) {
  if (state_modes(s) != 1) {
    throw std::invalid_argument("guanlei is a one-mode relation");
  }
  const bool grid = use_grid(s, opt);
  const QuadratureSet qt = rotated_quadrature(theta), qp = rotated_quadrature(phi);
  const double ht = shannon_of(s, qt, grid, opt);
  const double hf = shannon_of(s, qp, grid, opt);
  const double sine = std::abs(std::sin(theta - phi));
  const double st2 = observables_moments(s, qt).gamma(0, 0);
  const double sf2 = observables_moments(s, qp).gamma(0, 0);
  const double nt = entropy_power(ht, 1), nf = entropy_power(hf, 1);
  std::map<std::string, double> meta{
      {"h_theta", ht},     {"h_phi", hf},
      {"sigma2_theta", st2}, {"sigma2_phi", sf2},
      {"ep_lhs", nt * nf},   {"ep_rhs", sine * sine / 4.0},
      {"var_lhs", st2 * sf2}, {"var_rhs", sine * sine / 4.0},
  };
  const bool degenerate = sine == 0.0;
  return finish("guanlei", ht + hf, kLogPiE + std::log(sine), grid, opt,
                std::move(meta), degenerate);
}

RelationReport huang(const State& s, const QuadratureSet& a, const QuadratureSet& b,
                     const RelationOptions& opt) {
  if (a.rows() != 1 || b.rows() != 1) {
    throw std::invalid_argument("huang takes two scalar quadratures");
  }
  const bool grid = use_grid(s, opt);
  const double ha = shannon_of(s, a, grid, opt);
  const double hb = shannon_of(s, b, grid, opt);
  const double k = std::abs(commutator_matrix(a, b)(0, 0));
  const double sa2 = observables_moments(s, a).gamma(0, 0);
  const double sb2 = observables_moments(s, b).gamma(0, 0);
  const double na = entropy_power(ha, 1), nb = entropy_power(hb, 1);
  std::map<std::string, double> meta{
      {"h_A", ha},        {"h_B", hb},
      {"abs_comm", k},
      {"sigma2_A", sa2},  {"sigma2_B", sb2},
      {"ep_lhs", na * nb}, {"ep_rhs", k * k / 4.0},
      {"var_lhs", sa2 * sb2}, {"var_rhs", k * k / 4.0},
  };
  const bool degenerate = k == 0.0;
  return finish("huang", ha + hb, kLogPiE + std::log(k), grid, opt, std::move(meta),
                degenerate);
}

namespace {

struct VectorEurParts {
  int n = 0;
  double hy = 0.0, hz = 0.0;
  double abs_det_k = 0.0;
  double det_gy = 0.0, det_gz = 0.0, det_g_full = 0.0;
};

VectorEurParts vector_parts(const State& s, const QuadratureSet& y, const QuadratureSet& z,
                            bool grid, const RelationOptions& opt) {
  if (y.rows() != z.rows()) {
    throw std::invalid_argument("y and z must have the same number of quadratures");
  }
  if (!pairwise_commuting(y) || !pairwise_commuting(z)) {
    throw std::invalid_argument("y and z must each be pairwise commuting");
  }
  VectorEurParts parts;
  parts.n = y.rows();
  parts.abs_det_k = std::abs(commutator_matrix(y, z).determinant());
  parts.hy = shannon_of(s, y, grid, opt);
  parts.hz = shannon_of(s, z, grid, opt);
  const Eigen::MatrixXd gamma_full = observables_moments(s, stack(y, z)).gamma;
  parts.det_gy = gamma_full.topLeftCorner(parts.n, parts.n).determinant();
  parts.det_gz = gamma_full.bottomRightCorner(parts.n, parts.n).determinant();
  parts.det_g_full = gamma_full.determinant();
  return parts;
}

}  // namespace

RelationReport vector_eur(const State& s, const QuadratureSet& y, const QuadratureSet& z,
                          const RelationOptions& opt) {
  const bool grid = use_grid(s, opt);
  const VectorEurParts p = vector_parts(s, y, z, grid, opt);
  const double ny = entropy_power(p.hy, p.n), nz = entropy_power(p.hz, p.n);
  const double bound_var = std::pow(p.abs_det_k, 2.0 / p.n) / 4.0;
  std::map<std::string, double> meta{
      {"h_y", p.hy},
      {"h_z", p.hz},
      {"abs_det_K", p.abs_det_k},
      {"det_Gamma_y", p.det_gy},
      {"det_Gamma_z", p.det_gz},
      {"det_Gamma", p.det_g_full},
      {"ep_lhs", ny * nz},
      {"ep_rhs", bound_var},
      {"var_lhs", std::pow(p.det_gy * p.det_gz, 1.0 / p.n)},
      {"var_rhs", bound_var},
  };
  const bool degenerate = p.abs_det_k == 0.0;
  return finish("vector_eur", p.hy + p.hz, p.n * kLogPiE + std::log(p.abs_det_k), grid,
                opt, std::move(meta), degenerate);
}

RelationReport renyi_vector_eur(const State& s, const QuadratureSet& y,
                                const QuadratureSet& z, double alpha, double beta,
                                const RelationOptions& opt) {
  check_conjugate_pair(alpha, beta);
  const bool grid = use_grid(s, opt);
  check_renyi_grid_window(grid, alpha, beta);
  if (y.rows() != z.rows()) {
    throw std::invalid_argument("y and z must have the same number of quadratures");
  }
  if (!pairwise_commuting(y) || !pairwise_commuting(z)) {
    throw std::invalid_argument("y and z must each be pairwise commuting");
  }
  const int n = y.rows();
  const double ha = renyi_of(s, y, alpha, grid, opt);
  const double hb = renyi_of(s, z, beta, grid, opt);
  const double abs_det_k = std::abs(commutator_matrix(y, z).determinant());
  const double rhs = n * std::log(std::numbers::pi) + n * renyi_bound_term(alpha) +
                     n * renyi_bound_term(beta) + std::log(abs_det_k);
  std::map<std::string, double> meta{{"h_alpha_y", ha},
                                     {"h_beta_z", hb},
                                     {"alpha", alpha},
                                     {"beta", beta},
                                     {"abs_det_K", abs_det_k}};
  const bool degenerate = abs_det_k == 0.0;
  return finish("renyi_vector_eur", ha + hb, rhs, grid, opt, std::move(meta), degenerate);
}

RelationReport tight_vector_eur(const State& s, const QuadratureSet& y,
                                const QuadratureSet& z, const RelationOptions& opt) {
  const bool grid = use_grid(s, opt);
  const VectorEurParts p = vector_parts(s, y, z, grid, opt);
  const GaussianState m = state_moments(s);
  const double det_gamma = m.cov.determinant();
  const double correction = 0.5 * std::log(p.det_gy * p.det_gz / p.det_g_full);
  const double lhs = p.hy + p.hz - correction;
  const double rhs = p.n * kLogPiE + std::log(p.abs_det_k);
  const double ny = entropy_power(p.hy, p.n), nz = entropy_power(p.hz, p.n);
  const double bound_var = std::pow(p.abs_det_k, 2.0 / p.n) / 4.0;
  std::map<std::string, double> meta{
      {"h_y", p.hy},
      {"h_z", p.hz},
      {"abs_det_K", p.abs_det_k},
      {"det_Gamma_y", p.det_gy},
      {"det_Gamma_z", p.det_gz},
      {"det_Gamma", p.det_g_full},
      {"det_gamma", det_gamma},
      {"correction", correction},
      {"ep_lhs", ny * nz * std::pow(p.det_g_full / (p.det_gy * p.det_gz), 1.0 / p.n)},
      {"ep_rhs", bound_var},
      {"var_lhs", std::pow(p.det_g_full, 1.0 / p.n)},
      {"var_rhs", bound_var},
  };
  if (p.n == state_modes(s)) {
    // Commutator-free alternative: the same relation through det gamma,
    // equal by the identity det Gamma = det gamma |det K|^2 (which needs the
    // full quadrature count).
    const double lhs_alt =
        p.hy + p.hz - 0.5 * std::log(p.det_gy * p.det_gz / det_gamma);
    meta["slack_alt"] = lhs_alt - p.n * kLogPiE;
  }
  const bool degenerate = p.abs_det_k == 0.0 || p.det_g_full <= 0.0;
  return finish("tight_vector_eur", lhs, rhs, grid, opt, std::move(meta), degenerate);
}

namespace {

RelationReport conjecture_common(const char* id, bool with_correction, const State& s,
                                 const QuadratureSet& r, const RelationOptions& opt) {
  const bool grid = use_grid(s, opt);
  const int m = r.rows();
  const int n =
      state_modes(s);  // det Gamma vanishes for m > 2n, det C for odd m
  const ObservableMoments mom = observables_moments(s, r);
  const double det_c = (m % 2 == 1) ? 0.0 : mom.comm.determinant();
  const double det_gamma = mom.gamma.determinant();
  double prod_var = 1.0;
  for (int i = 0; i < m; ++i) prod_var *= mom.gamma(i, i);
  const double sum_h = sum_row_entropies(s, r, grid, opt);
  double prod_n = 1.0;
  for (int i = 0; i < m; ++i) {
    prod_n *= entropy_power(shannon_of(s, r.row(i), grid, opt), 1);
  }

  std::map<std::string, double> meta{{"sum_h", sum_h},
                                     {"det_C", det_c},
                                     {"det_Gamma", det_gamma},
                                     {"prod_var", prod_var},
                                     {"m", static_cast<double>(m)}};
  bool degenerate = det_c <= 0.0;
  double lhs = sum_h;
  if (with_correction) {
    // The correction term stays finite (and the lhs meaningful) as long as
    // Gamma is nonsingular, even when det C alone degenerates the bound.
    const bool gamma_singular = m > 2 * n || det_gamma <= 0.0;
    degenerate |= gamma_singular;
    if (!gamma_singular) {
      lhs -= 0.5 * std::log(prod_var / det_gamma);
      meta["correction"] = 0.5 * std::log(prod_var / det_gamma);
    }
    meta["ep_lhs"] = prod_n * det_gamma / prod_var;
    meta["var_lhs"] = det_gamma;
  } else {
    meta["ep_lhs"] = prod_n;
    meta["var_lhs"] = prod_var;
  }
  meta["ep_rhs"] = det_c;
  meta["var_rhs"] = det_c;
  const double rhs =
      0.5 * (m * std::log(2.0 * std::numbers::pi * std::numbers::e) + std::log(det_c));
  return finish(id, lhs, rhs, grid, opt, std::move(meta), degenerate);
}

}  // namespace

RelationReport conjecture1(const State& s, const QuadratureSet& r,
                           const RelationOptions& opt) {
  return conjecture_common("conjecture1", true, s, r, opt);
}

RelationReport conjecture2(const State& s, const QuadratureSet& r,
                           const RelationOptions& opt) {
  return conjecture_common("conjecture2", false, s, r, opt);
}

RelationReport conjecture3(const State& s, const QuadratureSet& r,
                           const RelationOptions& opt) {
  if (r.n_modes != 1) {
    throw std::invalid_argument("conjecture3 takes single-mode observables");
  }
  const bool grid = use_grid(s, opt);
  const int m = r.rows();
  const double wedge = wedge_norm(r.a().col(0), r.ap().col(0));
  const double sum_h = sum_row_entropies(s, r, grid, opt);
  const ObservableMoments mom = observables_moments(s, r);
  double prod_var = 1.0, prod_n = 1.0;
  for (int i = 0; i < m; ++i) {
    prod_var *= mom.gamma(i, i);
    prod_n *= entropy_power(shannon_of(s, r.row(i), grid, opt), 1);
  }
  const double bound_var = std::pow(wedge / m, m);
  std::map<std::string, double> meta{
      {"sum_h", sum_h},     {"wedge", wedge},
      {"m", static_cast<double>(m)},
      {"ep_lhs", prod_n},   {"ep_rhs", bound_var},
      {"var_lhs", prod_var}, {"var_rhs", bound_var},
  };
  const bool degenerate = wedge == 0.0;
  const double rhs =
      0.5 * m *
      std::log(2.0 * std::numbers::pi * std::numbers::e * wedge / m);
  return finish("conjecture3", sum_h, rhs, grid, opt, std::move(meta), degenerate);
}

RelationReport conjecture4(const State& s, int m, const RelationOptions& opt) {
  RelationReport r = conjecture3(s, equidistributed_set(m), opt);
  r.id = "conjecture4";
  if (m >= 3) {
    // |a ^ b| = m/2 exactly for equidistributed sets, so the bound is
    // (m/2) ln(pi e); stated directly to avoid the trigonometric round trip.
    const double rhs = 0.5 * m * kLogPiE;
    r.slack = r.lhs - rhs;
    r.rhs = rhs;
    r.meta["ep_rhs"] = std::pow(0.5, m);
    r.meta["var_rhs"] = std::pow(0.5, m);
    const double tol = r.meta["saturation_tol"];
    r.saturated = std::abs(r.slack) <= tol;
    r.degenerate = false;
  }
  return r;
}

RelationStatus relation_status(const std::string& id) {
  if (id == "tight_ccv" || id == "tight_vector_eur" || id == "conjecture4") {
    return RelationStatus::conditional;
  }
  if (id == "conjecture1" || id == "conjecture2" || id == "conjecture3") {
    return RelationStatus::conjectured;
  }
  return RelationStatus::proven;
}

}  // namespace cvur
