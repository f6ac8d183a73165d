#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "cvur/relations.hpp"
#include "oracles.hpp"

using namespace cvur;
using Eigen::MatrixXd;
constexpr double pi = std::numbers::pi;

namespace {

GaussianState unphysical_state() {
  GaussianState g = vacuum(1);
  g.cov = 0.1 * MatrixXd::Identity(2, 2);
  return g;
}

QuadratureSet kw_triple() {
  MatrixXd c(3, 2);
  c << 1, 0, 0, 1, -1, -1;
  return QuadratureSet(1, c);
}

}  // namespace

TEST_CASE("heisenberg") {
  const RelationReport vac = heisenberg(vacuum(1));
  CHECK(vac.slack == doctest::Approx(0.0));
  CHECK(vac.saturated);

  const RelationReport sq = heisenberg(squeezed_vacuum_gaussian(0.2, pi / 4));
  CHECK(sq.lhs == doctest::Approx(std::pow(std::cosh(0.4), 2) / 4).epsilon(1e-12));
  CHECK(sq.slack > 0.0);

  const RelationReport one = heisenberg(fock_basis_state(1, 16));
  CHECK(one.lhs == doctest::Approx(2.25).epsilon(1e-12));
}

TEST_CASE("robertson-schrodinger") {
  const RelationReport sq = robertson_schrodinger(squeezed_vacuum_gaussian(0.9, 1.2));
  CHECK(std::abs(sq.slack) < 1e-12);
  CHECK(sq.saturated);

  CHECK(robertson_schrodinger(thermal(1.0)).lhs == doctest::Approx(1.0).epsilon(1e-12));

  // The slack is invariant under symplectic conjugation.
  const GaussianState g = thermal(1.3);
  const RelationReport before = robertson_schrodinger(g);
  const RelationReport after =
      robertson_schrodinger(apply_symplectic(g, random_symplectic(1, 77)));
  CHECK(std::abs(before.slack - after.slack) < 1e-10);
}

TEST_CASE("simon physicality") {
  CHECK(simon_physicality(vacuum(1)).slack == doctest::Approx(0.0));
  CHECK(simon_physicality(thermal(0.8)).slack == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(simon_physicality(unphysical_state()).slack < 0.0);
}

TEST_CASE("robertson for m observables") {
  const RelationReport heis = robertson_m(vacuum(1), stack(x_set(1), p_set(1)));
  CHECK(heis.lhs == doctest::Approx(0.25));
  CHECK(heis.rhs == doctest::Approx(0.25));
  CHECK(heis.saturated);

  CHECK(robertson_m(vacuum(1), equidistributed_set(3)).rhs == 0.0);

  const RelationReport quad = robertson_m(vacuum(1), equidistributed_set(4));
  CHECK(quad.slack >= -1e-12);
  CHECK(quad.meta.at("weak_lhs") >= quad.rhs - 1e-12);
}

TEST_CASE("kechrimparis-weigert products") {
  const RelationReport triple = kw_product(vacuum(1), kw_triple());
  CHECK(triple.rhs == doctest::Approx(std::pow(1.0 / std::sqrt(3.0), 3)).epsilon(1e-14));
  CHECK(triple.lhs == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(triple.slack > 0.0);

  const RelationReport quad = kw_product(vacuum(1), equidistributed_set(4));
  CHECK(quad.lhs == doctest::Approx(1.0 / 16).epsilon(1e-13));
  CHECK(quad.rhs == doctest::Approx(1.0 / 16).epsilon(1e-13));
  CHECK(quad.saturated);

  const RelationReport three = kw_product(vacuum(1), equidistributed_set(3));
  CHECK(three.lhs == doctest::Approx(0.125).epsilon(1e-13));
  CHECK(three.rhs == doctest::Approx(0.125).epsilon(1e-13));
}

TEST_CASE("bbm entropic relation") {
  const RelationReport vac = bbm(vacuum(1));
  CHECK(std::abs(vac.slack) < 1e-12);
  CHECK(vac.saturated);

  const RelationReport sq = bbm(squeezed_vacuum_gaussian(0.2, pi / 4));
  CHECK(sq.slack == doctest::Approx(std::log(std::cosh(0.4))).epsilon(1e-10));

  const RelationReport one = bbm(fock_basis_state(1, 32));
  CHECK(one.slack > 0.1);
  CHECK_FALSE(one.saturated);
  CHECK(one.meta.at("grid_path") == 1.0);
}

TEST_CASE("renyi entropic relation for conjugate pairs") {
  const RelationReport limit = renyi_ccv(vacuum(1), 1.0, 1.0);
  CHECK(std::abs(limit.slack - bbm(vacuum(1)).slack) < 1e-12);

  const RelationReport pair = renyi_ccv(vacuum(1), 2.0, 2.0 / 3.0);
  CHECK(std::abs(pair.slack) < 1e-12);
  CHECK(pair.saturated);

  const RelationReport fock = renyi_ccv(fock_basis_state(1, 32), 2.0, 2.0 / 3.0);
  CHECK(fock.slack >= -1e-5);

  CHECK_THROWS_AS(renyi_ccv(vacuum(1), 2.0, 3.0), std::invalid_argument);
  CHECK_THROWS_AS(renyi_ccv(fock_basis_state(1, 16), 0.4, 1.0 / 1.2),
                  std::invalid_argument);
}

TEST_CASE("tight entropic relation for x and p") {
  const RelationReport sq = tight_ccv(squeezed_vacuum_gaussian(0.2, pi / 4));
  CHECK(std::abs(sq.slack) < 1e-12);
  CHECK(sq.saturated);

  CHECK(tight_ccv(thermal(1.0)).slack == doctest::Approx(std::numbers::ln2).epsilon(1e-12));

  CHECK(tight_ccv(fock_basis_state(1, 32)).slack >= -1e-5);

  // Gaussian branch: slack = (1/2) ln(4^n det gamma).
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    GaussianState g = cvur::test::random_pure_gaussian(n, seed);
    g.cov *= 1.0 + 0.2 * static_cast<double>(seed % 3);
    const double expected = 0.5 * std::log(std::pow(4.0, n) * g.cov.determinant());
    CHECK(tight_ccv(g).slack == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("guanlei rotated-quadrature relation") {
  const RelationReport vac = guanlei(vacuum(1), 0.0, pi / 2);
  CHECK(std::abs(vac.slack) < 1e-12);

  // theta - phi = pi/4 stays strictly away from saturation for every
  // orientation of a squeezed state.
  for (int k = 0; k < 12; ++k) {
    const GaussianState g = squeezed_vacuum_gaussian(0.2, pi * k / 12.0);
    CHECK(guanlei(g, pi / 4, 0.0).slack > 1e-3);
  }

  const RelationReport degenerate = guanlei(vacuum(1), 0.7, 0.7);
  CHECK(degenerate.degenerate);
  CHECK_FALSE(degenerate.saturated);
  CHECK(std::isinf(degenerate.slack));
}

TEST_CASE("huang two-quadrature relation") {
  const RelationReport as_bbm = huang(vacuum(1), x_set(1), p_set(1));
  CHECK(std::abs(as_bbm.slack - bbm(vacuum(1)).slack) < 1e-12);

  MatrixXd doubled(1, 2);
  doubled << 2.0, 0.0;
  const RelationReport scaled = huang(vacuum(1), QuadratureSet(1, doubled), p_set(1));
  CHECK(std::abs(scaled.slack - as_bbm.slack) < 1e-9);

  const RelationReport commuting = huang(vacuum(1), x_set(1), x_set(1));
  CHECK(commuting.degenerate);
}

TEST_CASE("vector relation for commuting quadrature vectors") {
  const RelationReport two_mode = vector_eur(vacuum(2), x_set(2), p_set(2));
  CHECK(std::abs(two_mode.slack - bbm(vacuum(2)).slack) < 1e-12);

  // On pure Gaussian states the slack equals the correlation term.
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const GaussianState g = cvur::test::random_pure_gaussian(n, seed);
    const QuadratureSet y = quadratures_from_symplectic(random_symplectic(n, 300 + seed));
    const QuadratureSet z = quadratures_from_symplectic(random_symplectic(n, 400 + seed));
    const RelationReport r = vector_eur(g, y, z);
    const double correlation_term =
        0.5 * std::log(r.meta.at("det_Gamma_y") * r.meta.at("det_Gamma_z") /
                       r.meta.at("det_Gamma"));
    CHECK(r.slack == doctest::Approx(correlation_term).epsilon(1e-9));
    CHECK(r.slack >= -1e-10);
  }

  // Uncorrelated aligned case: Gamma_yz = 0, so the bound is reached.
  const RelationReport aligned =
      vector_eur(squeezed_vacuum_gaussian(0.7, 0.0), x_set(1), p_set(1));
  CHECK(std::abs(aligned.slack) < 1e-12);
}

TEST_CASE("fewer measured quadratures than modes") {
  // One quadrature per vector on a correlated two-mode state: the bound uses
  // the measured count, not the mode count.
  const GaussianState g = cvur::test::random_pure_gaussian(2, 57);
  Eigen::MatrixXd yrow(1, 4), zrow(1, 4);
  yrow << 1, 0, 0, 0;  // x_1
  zrow << 0, 0, 1, 0;  // p_1
  const RelationReport r = vector_eur(g, QuadratureSet(2, yrow), QuadratureSet(2, zrow));
  CHECK(r.rhs == doctest::Approx(std::log(pi * std::numbers::e)).epsilon(1e-13));
  CHECK(r.slack >= -1e-10);

  const RelationReport tight =
      tight_vector_eur(g, QuadratureSet(2, yrow), QuadratureSet(2, zrow));
  CHECK(tight.slack >= -1e-10);
}

TEST_CASE("renyi vector relation") {
  const GaussianState g = cvur::test::random_pure_gaussian(2, 5);
  const QuadratureSet y = quadratures_from_symplectic(random_symplectic(2, 6));
  const QuadratureSet z = quadratures_from_symplectic(random_symplectic(2, 7));
  const RelationReport shannon_form = vector_eur(g, y, z);
  const RelationReport limit = renyi_vector_eur(g, y, z, 1.0, 1.0);
  CHECK(std::abs(limit.slack - shannon_form.slack) < 1e-12);

  // Rotated single-mode pair on the vacuum saturates the Renyi bound.
  const QuadratureSet a = rotated_quadrature(0.4);
  const QuadratureSet b = rotated_quadrature(0.4 + pi / 2);
  const RelationReport rotated = renyi_vector_eur(vacuum(1), a, b, 2.0, 2.0 / 3.0);
  CHECK(std::abs(rotated.slack) < 1e-12);

  const RelationReport analytic = renyi_vector_eur(g, y, z, 2.0, 2.0 / 3.0);
  CHECK(analytic.slack >= -1e-10);
}

TEST_CASE("tight vector relation is saturated by pure Gaussian states") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const GaussianState g = cvur::test::random_pure_gaussian(n, seed);
    const QuadratureSet y = quadratures_from_symplectic(random_symplectic(n, 500 + seed));
    const QuadratureSet z = quadratures_from_symplectic(random_symplectic(n, 600 + seed));
    const RelationReport r = tight_vector_eur(g, y, z);
    CHECK(std::abs(r.slack) <= 1e-9);
    CHECK(r.saturated);
    CHECK(std::abs(r.meta.at("slack_alt") - r.slack) <= 1e-9);
  }

  const RelationReport th = tight_vector_eur(thermal(1.0), x_set(1), p_set(1));
  CHECK(th.slack == doctest::Approx(std::numbers::ln2).epsilon(1e-12));

  // The tight slack differs from the plain vector slack by the correlation
  // term, by construction of the two left-hand sides.
  const GaussianState mixed = apply_symplectic(thermal(1.2), random_symplectic(1, 71));
  const QuadratureSet ya = quadratures_from_symplectic(random_symplectic(1, 72));
  const QuadratureSet za = quadratures_from_symplectic(random_symplectic(1, 73));
  const RelationReport tight_r = tight_vector_eur(mixed, ya, za);
  const RelationReport plain_r = vector_eur(mixed, ya, za);
  CHECK(tight_r.slack ==
        doctest::Approx(plain_r.slack - tight_r.meta.at("correction")).epsilon(1e-12));

  const RelationReport fock = tight_vector_eur(
      fock_basis_state(1, 32), rotated_quadrature(0.3), rotated_quadrature(1.1));
  CHECK(fock.slack >= -1e-5);
}

TEST_CASE("conjecture1 and conjecture2") {
  const QuadratureSet xp = stack(x_set(1), p_set(1));
  const RelationReport c1 = conjecture1(squeezed_vacuum_gaussian(0.5, 0.9), xp);
  CHECK(std::abs(c1.slack) < 1e-10);  // reduces to the tight x-p relation
  CHECK(std::abs(c1.slack - tight_ccv(squeezed_vacuum_gaussian(0.5, 0.9)).slack) < 1e-10);

  const RelationReport odd = conjecture1(vacuum(1), equidistributed_set(3));
  CHECK(odd.degenerate);
  CHECK(std::isinf(odd.rhs));

  // lhs difference between the two conjectures is the correlation term.
  const GaussianState g = cvur::test::random_pure_gaussian(1, 9);
  const RelationReport a = conjecture1(g, xp);
  const RelationReport b = conjecture2(g, xp);
  const double correction =
      0.5 * std::log(b.meta.at("prod_var") / b.meta.at("det_Gamma"));
  CHECK(a.slack == doctest::Approx(b.slack - correction).epsilon(1e-10));

  // m > 2n degenerates both forms: Gamma is rank 2n and so is the
  // single-mode commutator matrix C = (a b^T - b a^T)/2, so det C = 0 too.
  CHECK(conjecture1(vacuum(1), equidistributed_set(4)).degenerate);
  CHECK(conjecture2(vacuum(1), equidistributed_set(4)).degenerate);
  CHECK_FALSE(conjecture2(vacuum(2), stack(x_set(2), p_set(2))).degenerate);
}

TEST_CASE("conjecture3 and conjecture4") {
  const RelationReport pair = conjecture3(vacuum(1), stack(x_set(1), p_set(1)));
  CHECK(std::abs(pair.slack - huang(vacuum(1), x_set(1), p_set(1)).slack) < 1e-12);
  CHECK(pair.rhs == doctest::Approx(std::log(pi * std::numbers::e)).epsilon(1e-13));

  for (int m : {3, 4, 5}) {
    const RelationReport vac = conjecture4(vacuum(1), m);
    CHECK(std::abs(vac.slack) < 1e-12);
    CHECK(vac.saturated);
    CHECK(vac.rhs == doctest::Approx(0.5 * m * std::log(pi * std::numbers::e)));
  }

  const RelationReport fock = conjecture4(fock_basis_state(1, 32), 3);
  CHECK(fock.slack >= 0.1);  // three identical |1> marginals, far from the bound

  CHECK(conjecture4(vacuum(1), 2).degenerate);  // antiparallel pair, wedge 0

  const RelationReport kw = conjecture3(vacuum(1), kw_triple());
  CHECK(kw.rhs ==
        doctest::Approx(1.5 * std::log(2.0 * pi * std::numbers::e * std::sqrt(3.0) / 3.0))
            .epsilon(1e-13));
  CHECK(kw.slack > 0.0);
}

TEST_CASE("entropy-power and variance chains hold on the probe states") {
  FockState bell{2, 8, Eigen::VectorXcd::Zero(64), 0.0};
  bell.amplitudes(0) = bell.amplitudes(9) = 1.0 / std::sqrt(2.0);
  const std::vector<State> states = {
      vacuum(1),
      squeezed_vacuum_gaussian(0.2, pi / 4),
      thermal(1.3),
      cvur::test::random_pure_gaussian(2, 31),
      fock_basis_state(1, 32),
      bell,  // drives the 2-D joint-density path through every vector relation
  };
  for (const State& s : states) {
    const int n = state_modes(s);
    std::vector<RelationReport> reports;
    reports.push_back(bbm(s));
    reports.push_back(tight_ccv(s));
    reports.push_back(vector_eur(s, x_set(n), rotated_set(n, pi / 4)));
    reports.push_back(tight_vector_eur(s, x_set(n), rotated_set(n, pi / 4)));
    if (n == 1) {
      reports.push_back(guanlei(s, 0.0, pi / 4));
      reports.push_back(conjecture1(s, stack(x_set(1), p_set(1))));
      reports.push_back(conjecture2(s, stack(x_set(1), p_set(1))));
      reports.push_back(conjecture3(s, kw_triple()));
      reports.push_back(conjecture4(s, 3));
    }
    for (const RelationReport& r : reports) {
      REQUIRE(r.meta.count("ep_lhs") == 1);
      CHECK(r.meta.at("var_lhs") >= r.meta.at("ep_lhs") - 1e-8);
      CHECK(r.meta.at("ep_lhs") >= r.meta.at("ep_rhs") - 1e-8);
    }
  }
}

TEST_CASE("displacement leaves every slack unchanged") {
  const GaussianState g = squeezed_vacuum_gaussian(0.6, 0.8);
  Eigen::VectorXd d(2);
  d << 1.7, -0.9;
  const GaussianState moved =
      apply_symplectic(g, {MatrixXd::Identity(2, 2), Ordering::xxpp}, d);

  CHECK(std::abs(bbm(g).slack - bbm(moved).slack) < 1e-8);
  CHECK(std::abs(tight_ccv(g).slack - tight_ccv(moved).slack) < 1e-8);
  CHECK(std::abs(guanlei(g, 0.0, pi / 3).slack - guanlei(moved, 0.0, pi / 3).slack) <
        1e-8);
  CHECK(std::abs(conjecture4(g, 4).slack - conjecture4(moved, 4).slack) < 1e-8);
  CHECK(std::abs(heisenberg(g).slack - heisenberg(moved).slack) < 1e-12);
}

TEST_CASE("grid and analytic paths agree on Gaussian states") {
  RelationOptions grid_path;
  grid_path.path = EntropyPath::grid;
  const GaussianState g = squeezed_vacuum_gaussian(0.4, 1.1);
  CHECK(std::abs(bbm(g).slack - bbm(g, grid_path).slack) < 1e-7);
  CHECK(std::abs(tight_ccv(g).slack - tight_ccv(g, grid_path).slack) < 1e-7);

  // Two-mode case: the joint 2-D grids against the closed forms.
  const GaussianState g2 = cvur::test::random_pure_gaussian(2, 41);
  const QuadratureSet y = x_set(2), z = rotated_set(2, pi / 4);
  CHECK(std::abs(vector_eur(g2, y, z).slack - vector_eur(g2, y, z, grid_path).slack) <
        1e-6);
  CHECK(std::abs(tight_vector_eur(g2, y, z).slack -
                 tight_vector_eur(g2, y, z, grid_path).slack) < 1e-6);

  RelationOptions analytic;
  analytic.path = EntropyPath::analytic;
  CHECK_THROWS_AS(bbm(fock_basis_state(1, 16), analytic), std::invalid_argument);
}

TEST_CASE("tight vector slack on |1> matches its closed form") {
  // |1> is rotation invariant with sigma^2 = 3/2 on every axis and
  // cov(x_theta, x_phi) = (3/2) cos(theta - phi), so the correlation term
  // cancels the commutator in the bound and the tight slack collapses to
  // 2 h(|1>) - ln(pi e) for every angle pair.
  const auto fixtures =
      cvur::test::load_fixtures(std::string(CVUR_TEST_DATA_DIR) + "/oracle_constants.csv");
  const double expected =
      2.0 * fixtures.at("fock1_h_x").value - std::log(pi * std::numbers::e);
  const FockState one = fock_basis_state(1, 32);
  for (const auto [theta, phi] : {std::pair{0.3, 1.1}, std::pair{0.0, pi / 4}}) {
    const RelationReport r =
        tight_vector_eur(one, rotated_quadrature(theta), rotated_quadrature(phi));
    CHECK(r.slack == doctest::Approx(expected).epsilon(5e-6));
    CHECK(r.meta.at("slack_alt") == doctest::Approx(expected).epsilon(5e-6));
  }
  // With zero x-p covariance the x, p tight relation gives the same number.
  CHECK(tight_ccv(one).slack == doctest::Approx(expected).epsilon(5e-6));
}

TEST_CASE("renyi grid and analytic paths agree on a Gaussian state") {
  RelationOptions grid_path;
  grid_path.path = EntropyPath::grid;
  const GaussianState g = squeezed_vacuum_gaussian(0.6, 0.9);
  const RelationReport analytic = renyi_ccv(g, 2.0, 2.0 / 3.0);
  const RelationReport grid = renyi_ccv(g, 2.0, 2.0 / 3.0, grid_path);
  CHECK(std::abs(analytic.slack - grid.slack) < 1e-6);
}

TEST_CASE("huang with quadratures spanning several modes") {
  // A = (x_1 + p_2)/sqrt(2), B = p_1: [A, B] = i/sqrt(2).
  Eigen::MatrixXd a_row(1, 4), b_row(1, 4);
  a_row << 1.0 / std::numbers::sqrt2, 0, 0, 1.0 / std::numbers::sqrt2;
  b_row << 0, 0, 1, 0;
  const QuadratureSet a(2, a_row), b(2, b_row);
  const GaussianState g = cvur::test::random_pure_gaussian(2, 63);
  const RelationReport r = huang(g, a, b);
  CHECK(r.meta.at("abs_comm") == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-14));
  CHECK(r.slack >= -1e-10);

  // On the vacuum both marginals are N(0, 1/2); the bound sits ln sqrt(2) below.
  const RelationReport vac = huang(vacuum(2), a, b);
  CHECK(vac.slack == doctest::Approx(0.5 * std::numbers::ln2).epsilon(1e-10));
}

TEST_CASE("conjecture2 on a two-mode state with four observables") {
  const QuadratureSet xp = stack(x_set(2), p_set(2));
  const RelationReport vac = conjecture2(vacuum(2), xp);
  CHECK_FALSE(vac.degenerate);
  CHECK(vac.meta.at("det_C") == doctest::Approx(1.0 / 16).epsilon(1e-13));
  CHECK(std::abs(vac.slack) < 1e-10);  // vacuum saturates the uncorrelated bound

  const GaussianState g = cvur::test::random_pure_gaussian(2, 88);
  CHECK(conjecture2(g, xp).slack >= -1e-10);
}

TEST_CASE("relation status classification") {
  CHECK(relation_status("bbm") == RelationStatus::proven);
  CHECK(relation_status("vector_eur") == RelationStatus::proven);
  CHECK(relation_status("tight_ccv") == RelationStatus::conditional);
  CHECK(relation_status("tight_vector_eur") == RelationStatus::conditional);
  CHECK(relation_status("conjecture4") == RelationStatus::conditional);
  CHECK(relation_status("conjecture1") == RelationStatus::conjectured);
  CHECK(relation_status("conjecture3") == RelationStatus::conjectured);
}
