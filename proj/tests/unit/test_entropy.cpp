#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "cvur/entropy.hpp"
#include "cvur/states.hpp"
#include "oracles.hpp"

using namespace cvur;
using Eigen::MatrixXd;
using Eigen::VectorXd;
constexpr double pi = std::numbers::pi;
constexpr double e_const = std::numbers::e;

namespace {

GriddedDensity uniform_density(int points) {
  return GriddedDensity(1, {0.0, 0.0}, {1.0, 0.0}, {points, 0},
                        VectorXd::Ones(points));
}

// Density of s * x on the vacuum: a normal with variance s^2 / 2.
GriddedDensity scaled_vacuum_density(double s, const GridSpec& spec = {}) {
  MatrixXd c(1, 2);
  c << s, 0.0;
  return quadrature_pdf(vacuum(1), QuadratureSet(1, c), spec);
}

}  // namespace

TEST_CASE("grid entropy matches the Gaussian closed form across scales") {
  for (double sigma : {0.2, 0.5, 1.0, 2.0, 5.0}) {
    const double s = sigma * std::numbers::sqrt2;
    const GriddedDensity d = scaled_vacuum_density(s);
    const double expected =
        gaussian_entropy(MatrixXd::Constant(1, 1, sigma * sigma));
    CHECK(differential_entropy(d) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(std::abs(differential_entropy(d) - expected) < 1e-6);
  }
}

TEST_CASE("uniform density has zero entropy") {
  CHECK(std::abs(differential_entropy(uniform_density(2048))) < 1e-9);
  CHECK(std::abs(renyi_entropy(uniform_density(2048), 2.0)) < 1e-9);
  CHECK(std::abs(renyi_entropy(uniform_density(2048), 0.5)) < 1e-9);
}

TEST_CASE("gaussian entropies") {
  CHECK(gaussian_entropy(MatrixXd::Constant(1, 1, 0.5)) ==
        doctest::Approx(0.5 * std::log(pi * e_const)).epsilon(1e-15));
  CHECK(gaussian_entropy(0.5 * MatrixXd::Identity(2, 2)) ==
        doctest::Approx(std::log(pi * e_const)).epsilon(1e-15));
  CHECK_THROWS_AS(gaussian_entropy(-MatrixXd::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("renyi entropy on grids matches the Gaussian closed form") {
  const GriddedDensity d = scaled_vacuum_density(std::numbers::sqrt2);  // sigma = 1
  for (double alpha : {0.5, 2.0 / 3.0, 0.6, 2.0, 3.0}) {
    const double closed = 0.5 * std::log(2.0 * pi) +
                          std::log(alpha) / (2.0 * (alpha - 1.0));
    CHECK(renyi_entropy(d, alpha) == doctest::Approx(closed).epsilon(1e-9));
    CHECK(gaussian_renyi_entropy(MatrixXd::Identity(1, 1), alpha) ==
          doctest::Approx(closed).epsilon(1e-12));
  }
  // Continuity at alpha -> 1.
  const double shannon = differential_entropy(d);
  CHECK(std::abs(renyi_entropy(d, 1.0 + 1e-4) - shannon) < 1e-3);
  CHECK(std::abs(renyi_entropy(d, 1.0 - 1e-4) - shannon) < 1e-3);
  CHECK(renyi_entropy(d, 1.0) == shannon);
  CHECK_THROWS_AS(renyi_entropy(d, -1.0), std::invalid_argument);
}

TEST_CASE("entropy power") {
  CHECK(entropy_power(0.5 * std::log(pi * e_const), 1) ==
        doctest::Approx(0.5).epsilon(1e-14));
  // Gaussian: N = (det gamma)^(1/m).
  MatrixXd cov(2, 2);
  cov << 1.3, 0.4, 0.4, 0.9;
  CHECK(entropy_power(gaussian_entropy(cov), 2) ==
        doctest::Approx(std::sqrt(cov.determinant())).epsilon(1e-12));
}

TEST_CASE("vacuum and Fock densities") {
  const GriddedDensity vac = quadrature_pdf(vacuum(1), x_set(1));
  for (int i = 0; i < vac.points(0); i += 97) {
    const double u = vac.coordinate(0, i);
    CHECK(vac.values()(i) ==
          doctest::Approx(std::exp(-u * u) / std::sqrt(pi)).epsilon(1e-12));
  }

  const GriddedDensity one = quadrature_pdf(fock_basis_state(1, 32), x_set(1));
  for (int i = 0; i < one.points(0); i += 131) {
    const double u = one.coordinate(0, i);
    const double expected = 2.0 / std::sqrt(pi) * u * u * std::exp(-u * u);
    CHECK(std::abs(one.values()(i) - expected) < 1e-12);
  }
}

TEST_CASE("fock and gaussian density paths agree on squeezed vacuum") {
  const FockState f = squeezed_vacuum_fock(0.2, pi / 4, 64);
  const GriddedDensity fock_path = quadrature_pdf(f, x_set(1));
  const GaussianState g = squeezed_vacuum_gaussian(0.2, pi / 4);
  const double s2 = g.cov(0, 0);
  for (int i = 0; i < fock_path.points(0); i += 53) {
    const double u = fock_path.coordinate(0, i);
    const double expected = std::exp(-0.5 * u * u / s2) / std::sqrt(2.0 * pi * s2);
    CHECK(std::abs(fock_path.values()(i) - expected) < 1e-6);
  }
}

TEST_CASE("fixture constants reproduce the |1> entropies") {
  const auto fixtures =
      cvur::test::load_fixtures(std::string(CVUR_TEST_DATA_DIR) + "/oracle_constants.csv");

  const GriddedDensity one = quadrature_pdf(fock_basis_state(1, 32), x_set(1));
  const auto& h1 = fixtures.at("fock1_h_x");
  CHECK(std::abs(differential_entropy(one) - h1.value) < h1.tolerance);

  const auto& r2 = fixtures.at("fock1_renyi2_x");
  CHECK(std::abs(renyi_entropy(one, 2.0) - r2.value) < r2.tolerance);

  const auto& d1 = fixtures.at("fock1_nongaussianity_x");
  CHECK(std::abs(relative_entropy_to_gaussian(one) - d1.value) < d1.tolerance);

  const auto& hv = fixtures.at("vacuum_h_x");
  CHECK(std::abs(hv.value - 0.5 * std::log(pi * e_const)) < 1e-12);

  // Independent closed form: h = ln 2 + (1/2) ln pi + gamma_Euler - 1/2.
  const double euler_gamma = 0.57721566490153286;
  const double analytic = std::log(2.0) + 0.5 * std::log(pi) + euler_gamma - 0.5;
  CHECK(std::abs(h1.value - analytic) < 5e-7);

  // N_x < sigma_x^2 strictly for the non-Gaussian |1>.
  CHECK(entropy_power(differential_entropy(one), 1) < 1.5 - 1e-3);
}

TEST_CASE("non-gaussianity") {
  CHECK(std::abs(relative_entropy_to_gaussian(scaled_vacuum_density(1.7))) < 1e-6);

  const GriddedDensity one = quadrature_pdf(fock_basis_state(1, 32), x_set(1));
  const double d = relative_entropy_to_gaussian(one);
  CHECK(d > 0.1);

  // Lifted Heisenberg bound on |1>: sigma_x^2 sigma_p^2 >= (1/4) e^{2Dx + 2Dp}.
  const GriddedDensity one_p = quadrature_pdf(fock_basis_state(1, 32), p_set(1));
  const double dp = relative_entropy_to_gaussian(one_p);
  CHECK(1.5 * 1.5 >= 0.25 * std::exp(2.0 * d + 2.0 * dp));
  CHECK(d == doctest::Approx(dp).epsilon(1e-9));
}

TEST_CASE("gaussian mutual information") {
  CHECK(gaussian_mutual_information(0.5 * Eigen::Matrix2d::Identity()) == 0.0);

  const GaussianState g = squeezed_vacuum_gaussian(0.2, pi / 4);
  const double expected =
      0.5 * std::log(4.0 * g.cov(0, 0) * g.cov(1, 1));
  CHECK(gaussian_mutual_information(g.cov) == doctest::Approx(expected).epsilon(1e-12));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GaussianState r = cvur::test::random_pure_gaussian(1, seed);
    CHECK(gaussian_mutual_information(r.cov) >= 0.0);
  }
}

TEST_CASE("translation leaves entropy unchanged") {
  const GriddedDensity centered = quadrature_pdf(vacuum(1), x_set(1));
  const GriddedDensity displaced = quadrature_pdf(coherent({2.3, -0.4}), x_set(1));
  CHECK(differential_entropy(centered) ==
        doctest::Approx(differential_entropy(displaced)).epsilon(1e-9));
}

TEST_CASE("scaling law h(aX) = h(X) + ln a") {
  const double base = differential_entropy(scaled_vacuum_density(1.0));
  for (double a : {0.5, 2.0, 3.0}) {
    const double scaled = differential_entropy(scaled_vacuum_density(a));
    CHECK(scaled == doctest::Approx(base + std::log(a)).epsilon(1e-9));
    CHECK(std::abs(scaled - base - std::log(a)) < 1e-6);
  }
  // Same law on the Fock path.
  MatrixXd row(1, 2);
  row << 2.0, 0.0;
  const double fock_base =
      differential_entropy(quadrature_pdf(fock_basis_state(1, 32), x_set(1)));
  const double fock_scaled = differential_entropy(
      quadrature_pdf(fock_basis_state(1, 32), QuadratureSet(1, row)));
  CHECK(fock_scaled == doctest::Approx(fock_base + std::log(2.0)).epsilon(1e-8));
}

TEST_CASE("two-dimensional grids: joint entropy, marginals, subadditivity") {
  // Correlated two-mode Gaussian.
  const GaussianState g = cvur::test::random_pure_gaussian(2, 21);
  const GriddedDensity joint = quadrature_pdf(g, x_set(2));
  const MatrixXd gx = x_block(g);
  CHECK(differential_entropy(joint) ==
        doctest::Approx(gaussian_entropy(gx)).epsilon(1e-7));

  const GriddedDensity m0 = marginal(joint, 0);
  CHECK(differential_entropy(m0) ==
        doctest::Approx(gaussian_entropy(MatrixXd::Constant(1, 1, gx(0, 0))))
            .epsilon(1e-7));

  const double h_joint = differential_entropy(joint);
  const double h_sum = differential_entropy(m0) + differential_entropy(marginal(joint, 1));
  CHECK(h_joint <= h_sum + 1e-8);
  // Mutual information of the Gaussian marginals matches the block formula.
  MatrixXd reduced(2, 2);
  reduced << gx(0, 0), gx(0, 1), gx(1, 0), gx(1, 1);
  CHECK(std::abs((h_sum - h_joint) - gaussian_mutual_information(reduced)) < 1e-6);

  // Entangled two-mode Fock state.
  const int dim = 8;
  FockState bell{2, dim, Eigen::VectorXcd::Zero(dim * dim), 0.0};
  bell.amplitudes(0) = bell.amplitudes(dim + 1) = 1.0 / std::sqrt(2.0);
  const GriddedDensity fock_joint = quadrature_pdf(bell, x_set(2));
  const double fock_h = differential_entropy(fock_joint);
  const double fock_sum = differential_entropy(marginal(fock_joint, 0)) +
                          differential_entropy(marginal(fock_joint, 1));
  CHECK(fock_h <= fock_sum + 1e-8);
}

TEST_CASE("grid moments of fock densities match the operator moments") {
  const FockState f = squeezed_vacuum_fock(0.8, 0.6, 64);
  const GaussianState m = fock_covariance(f);
  Eigen::MatrixXd row(1, 2);
  row << 1.3, -0.4;  // scaled, rotated quadrature
  const GriddedDensity d = quadrature_pdf(f, QuadratureSet(1, row));
  CHECK(grid_mean(d) == doctest::Approx(row.row(0) * m.mean).epsilon(1e-9));
  CHECK(grid_variance(d) ==
        doctest::Approx(row.row(0) * m.cov * row.row(0).transpose()).epsilon(1e-9));
}

TEST_CASE("two-mode marginal density matches its closed form") {
  // Tracing mode 2 of (|00> + |11>)/sqrt(2) leaves the equal mixture of the
  // first two number states: p(u) = (phi_0^2 + phi_1^2)/2.
  const int dim = 8;
  FockState bell{2, dim, Eigen::VectorXcd::Zero(dim * dim), 0.0};
  bell.amplitudes(0) = bell.amplitudes(dim + 1) = 1.0 / std::sqrt(2.0);
  const GriddedDensity d = quadrature_pdf(bell, x_set(2).row(0));
  for (int i = 0; i < d.points(0); i += 61) {
    const double u = d.coordinate(0, i);
    const double phi0 = std::pow(pi, -0.25) * std::exp(-0.5 * u * u);
    const double phi1 = std::numbers::sqrt2 * u * phi0;
    CHECK(std::abs(d.values()(i) - 0.5 * (phi0 * phi0 + phi1 * phi1)) < 1e-12);
  }
}

TEST_CASE("maximum-entropy property: N <= sigma^2 per axis") {
  for (int n = 0; n < 4; ++n) {
    const FockState f = fock_basis_state(n, 32);
    const GriddedDensity d = quadrature_pdf(f, x_set(1));
    const double power = entropy_power(differential_entropy(d), 1);
    CHECK(power <= grid_variance(d) + 1e-8);
  }
}

TEST_CASE("grid moments") {
  const GriddedDensity d = quadrature_pdf(coherent({1.0, 0.0}), x_set(1));
  CHECK(grid_mean(d) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(grid_variance(d) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("density validation") {
  CHECK_THROWS_AS(GriddedDensity(1, {0.0, 0.0}, {1.0, 0.0}, {128, 0},
                                 2.0 * VectorXd::Ones(128)),
                  std::invalid_argument);
  CHECK_THROWS_AS(GriddedDensity(1, {0.0, 0.0}, {1.0, 0.0}, {128, 0},
                                 -VectorXd::Ones(128)),
                  std::invalid_argument);
  // Two rows on one mode cannot be jointly measured.
  CHECK_THROWS_AS(quadrature_pdf(vacuum(1), stack(x_set(1), p_set(1))),
                  std::invalid_argument);
  // A row mixing both modes of a Fock state is unsupported.
  MatrixXd mixed(1, 4);
  mixed << 1, 1, 0, 0;
  FockState two{2, 4, Eigen::VectorXcd::Zero(16), 0.0};
  two.amplitudes(0) = 1.0;
  CHECK_THROWS_AS(quadrature_pdf(two, QuadratureSet(2, mixed)), std::invalid_argument);
}
