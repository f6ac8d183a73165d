#include "cvur/symplectic.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cvur/rng.hpp"

namespace cvur {
namespace {

void check_even_square(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
    throw std::invalid_argument(std::string(what) +
                                " must be square with even positive dimension");
  }
}

// Left-multiplies M by the passive beamsplitter between modes i and j (xxpp):
// a Givens rotation applied to both the x and p blocks.
void apply_beamsplitter(Eigen::MatrixXd& m, int n, int i, int j, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  for (int offset : {0, n}) {
    Eigen::RowVectorXd ri = m.row(offset + i), rj = m.row(offset + j);
    m.row(offset + i) = c * ri + s * rj;
    m.row(offset + j) = -s * ri + c * rj;
  }
}

// Left-multiplies M by the single-mode phase rotation of mode i (xxpp):
// mixes x_i and p_i by the rotation matrix.
void apply_phase(Eigen::MatrixXd& m, int n, int i, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::RowVectorXd rx = m.row(i), rp = m.row(n + i);
  m.row(i) = c * rx + s * rp;
  m.row(n + i) = -s * rx + c * rp;
}

// Random passive (orthogonal-symplectic) network: a pass of two-mode
// beamsplitters over all mode pairs followed by per-mode phase rotations,
// all angles uniform in [0, 2pi).
Eigen::MatrixXd random_passive(int n, CounterRng& rng) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      apply_beamsplitter(m, n, i, j, rng.uniform(0.0, two_pi));
    }
  }
  for (int i = 0; i < n; ++i) {
    apply_phase(m, n, i, rng.uniform(0.0, two_pi));
  }
  return m;
}

}  // namespace

SymplecticMatrix SymplecticMatrix::in_ordering(Ordering target) const {
  if (target == ordering) return *this;
  return SymplecticMatrix{convert_ordering(entries, ordering, target), target};
}

Eigen::MatrixXd symplectic_form(int n_modes, Ordering ordering) {
  if (n_modes < 1) {
    throw std::invalid_argument("symplectic_form requires n_modes >= 1");
  }
  const int d = 2 * n_modes;
  Eigen::MatrixXd form = Eigen::MatrixXd::Zero(d, d);
  if (ordering == Ordering::interleaved) {
    for (int k = 0; k < n_modes; ++k) {
      form(2 * k, 2 * k + 1) = 1.0;
      form(2 * k + 1, 2 * k) = -1.0;
    }
  } else {
    form.topRightCorner(n_modes, n_modes) = Eigen::MatrixXd::Identity(n_modes, n_modes);
    form.bottomLeftCorner(n_modes, n_modes) =
        -Eigen::MatrixXd::Identity(n_modes, n_modes);
  }
  return form;
}

bool is_symplectic(const SymplecticMatrix& s, double tol) {
  check_even_square(s.entries, "symplectic candidate");
  const Eigen::MatrixXd form = symplectic_form(s.modes(), s.ordering);
  const Eigen::MatrixXd residual = s.entries * form * s.entries.transpose() - form;
  return residual.cwiseAbs().maxCoeff() <= tol;
}

SymplecticMatrix rotation(double theta) {
  Eigen::MatrixXd r(2, 2);
  r << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return SymplecticMatrix{std::move(r), Ordering::xxpp};
}

SymplecticMatrix squeezer(double r, double phi) {
  const Eigen::MatrixXd rot = rotation(phi).entries;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  d(0, 0) = std::exp(-r);
  d(1, 1) = std::exp(r);
  return SymplecticMatrix{rot * d * rot.transpose(), Ordering::xxpp};
}

SymplecticMatrix beamsplitter(int n_modes, int i, int j, double theta) {
  if (i < 0 || j < 0 || i >= n_modes || j >= n_modes || i == j) {
    throw std::invalid_argument("beamsplitter requires two distinct modes in range");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  apply_beamsplitter(m, n_modes, i, j, theta);
  return SymplecticMatrix{std::move(m), Ordering::xxpp};
}

SymplecticMatrix embed_single_mode(const SymplecticMatrix& s, int n_modes, int mode) {
  if (s.entries.rows() != 2 || mode < 0 || mode >= n_modes) {
    throw std::invalid_argument("embed_single_mode takes a 2x2 matrix and a valid mode");
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  m(mode, mode) = s.entries(0, 0);
  m(mode, n_modes + mode) = s.entries(0, 1);
  m(n_modes + mode, mode) = s.entries(1, 0);
  m(n_modes + mode, n_modes + mode) = s.entries(1, 1);
  return SymplecticMatrix{std::move(m), Ordering::xxpp};
}

SymplecticMatrix random_symplectic(int n_modes, std::uint64_t seed, double r_max) {
  if (n_modes < 1) {
    throw std::invalid_argument("random_symplectic requires n_modes >= 1");
  }
  CounterRng rng(seed);
  const Eigen::MatrixXd o1 = random_passive(n_modes, rng);
  Eigen::VectorXd diag(2 * n_modes);
  for (int i = 0; i < n_modes; ++i) {
    const double r = rng.uniform(0.0, r_max);
    diag(i) = std::exp(-r);
    diag(n_modes + i) = std::exp(r);
  }
  const Eigen::MatrixXd o2 = random_passive(n_modes, rng);
  return SymplecticMatrix{o1 * diag.asDiagonal() * o2, Ordering::xxpp};
}

std::vector<double> williamson_eigenvalues(const Eigen::MatrixXd& gamma, Ordering ordering) {
  check_even_square(gamma, "covariance matrix");
  const double scale = std::max(1.0, gamma.cwiseAbs().maxCoeff());
  if ((gamma - gamma.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("covariance matrix is not symmetric");
  }
  const Eigen::MatrixXd sym = 0.5 * (gamma + gamma.transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(sym);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("covariance matrix is not positive definite");
  }

  const int n = static_cast<int>(gamma.rows()) / 2;
  // Eigenvalues of F.gamma are +-(i nu_k); their moduli give each nu twice.
  const Eigen::MatrixXd fg = symplectic_form(n, ordering) * sym;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(fg, /*computeEigenvectors=*/false);
  std::vector<double> moduli(2 * n);
  for (int i = 0; i < 2 * n; ++i) moduli[i] = std::abs(solver.eigenvalues()(i));
  std::sort(moduli.begin(), moduli.end(), std::greater<>());

  std::vector<double> nu(n);
  for (int k = 0; k < n; ++k) {
    const double a = moduli[2 * k], b = moduli[2 * k + 1];
    if (std::abs(a - b) > 1e-8 * std::max(1.0, a)) {
      throw std::runtime_error("symplectic eigenvalues failed to pair within tolerance");
    }
    nu[k] = 0.5 * (a + b);
  }
  return nu;
}

}  // namespace cvur
