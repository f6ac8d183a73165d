#include "cvur/conjecture_lab.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cvur/entropy.hpp"
#include "cvur/rng.hpp"
#include "fock_ops.hpp"

namespace cvur {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

StateFamily StateFamily::gaussian_pure(int n_modes) {
  if (n_modes < 1) throw std::invalid_argument("gaussian_pure requires n_modes >= 1");
  StateFamily f;
  f.kind = Kind::gaussian_pure;
  f.n_modes = n_modes;
  return f;
}

StateFamily StateFamily::fock_superposition(int cutoff) {
  if (cutoff < 2) throw std::invalid_argument("fock_superposition requires cutoff >= 2");
  StateFamily f;
  f.kind = Kind::fock_superposition;
  f.cutoff = cutoff;
  return f;
}

std::string StateFamily::id() const {
  return kind == Kind::gaussian_pure ? "gaussian_pure" : "fock_superposition";
}

int StateFamily::dims() const {
  if (kind == Kind::gaussian_pure) {
    return 2 * n_modes + n_modes * (n_modes - 1) / 2;
  }
  return 2 * cutoff;
}

Eigen::VectorXd StateFamily::lower_bounds() const {
  Eigen::VectorXd lo(dims());
  if (kind == Kind::gaussian_pure) {
    lo.setZero();
  } else {
    lo.setConstant(-1.0);
  }
  return lo;
}

Eigen::VectorXd StateFamily::upper_bounds() const {
  Eigen::VectorXd hi(dims());
  if (kind == Kind::gaussian_pure) {
    // r in [0, 1.5], phi in [0, pi], two-mode mixing angles in [0, 2 pi].
    hi.segment(0, n_modes).setConstant(1.5);
    hi.segment(n_modes, n_modes).setConstant(std::numbers::pi);
    hi.segment(2 * n_modes, n_modes * (n_modes - 1) / 2)
        .setConstant(2.0 * std::numbers::pi);
  } else {
    hi.setConstant(1.0);
  }
  return hi;
}

State StateFamily::make_state(const Eigen::VectorXd& params) const {
  if (params.size() != dims()) {
    throw std::invalid_argument("family parameter vector has the wrong length");
  }
  if (kind == Kind::gaussian_pure) {
    const int n = n_modes;
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
      s = embed_single_mode(squeezer(params(i), params(n + i)), n, i).entries * s;
    }
    int angle = 2 * n;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        s = beamsplitter(n, i, j, params(angle++)).entries * s;
      }
    }
    return apply_symplectic(vacuum(n), SymplecticMatrix{std::move(s), Ordering::xxpp});
  }
  Eigen::VectorXcd c(cutoff);
  for (int i = 0; i < cutoff; ++i) {
    c(i) = std::complex<double>(params(i), params(cutoff + i));
  }
  const double norm = c.norm();
  if (norm < 1e-12) {
    c.setZero();
    c(0) = 1.0;
  } else {
    c /= norm;
  }
  return FockState{1, cutoff, std::move(c), 0.0};
}

double slack(const RelationBinding& rel, const StateFamily& family,
             const Eigen::VectorXd& params) {
  const Eigen::VectorXd lo = family.lower_bounds(), hi = family.upper_bounds();
  for (int i = 0; i < params.size(); ++i) {
    if (params(i) < lo(i) || params(i) > hi(i)) {
      throw std::invalid_argument("family parameter " + std::to_string(i) +
                                  " is out of bounds");
    }
  }
  const RelationReport report = rel.eval(family.make_state(params));
  return report.degenerate ? kInf : report.slack;
}

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                             const Eigen::VectorXd& x0, const NelderMeadOptions& opt) {
  const int k = static_cast<int>(x0.size());
  if (k < 1) throw std::invalid_argument("nelder_mead requires at least one dimension");
  const double f0 = f(x0);
  if (!std::isfinite(f0)) {
    throw std::invalid_argument("nelder_mead requires a finite objective at the start");
  }

  std::vector<Eigen::VectorXd> x(k + 1, x0);
  std::vector<double> fx(k + 1, f0);
  for (int i = 0; i < k; ++i) {
    x[i + 1](i) += opt.simplex_init;
    fx[i + 1] = f(x[i + 1]);
  }

  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  std::vector<int> order(k + 1);
  int iter = 0;
  for (; iter < opt.max_iter; ++iter) {
    for (int i = 0; i <= k; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fx[a] < fx[b]; });
    const int best = order[0], worst = order[k], second_worst = order[k - 1];

    double diameter = 0.0;
    for (int i = 0; i <= k; ++i) {
      diameter = std::max(diameter, (x[i] - x[best]).cwiseAbs().maxCoeff());
    }
    if (diameter < opt.tol) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(k);
    for (int i = 0; i <= k; ++i) {
      if (i != worst) centroid += x[i];
    }
    centroid /= k;

    const Eigen::VectorXd xr = centroid + alpha * (centroid - x[worst]);
    const double fr = f(xr);
    if (fr < fx[best]) {
      const Eigen::VectorXd xe = centroid + gamma * (xr - centroid);
      const double fe = f(xe);
      if (fe < fr) {
        x[worst] = xe;
        fx[worst] = fe;
      } else {
        x[worst] = xr;
        fx[worst] = fr;
      }
      continue;
    }
    if (fr < fx[second_worst]) {
      x[worst] = xr;
      fx[worst] = fr;
      continue;
    }
    if (fr < fx[worst]) {
      const Eigen::VectorXd xc = centroid + rho * (xr - centroid);
      const double fc = f(xc);
      if (fc <= fr) {
        x[worst] = xc;
        fx[worst] = fc;
        continue;
      }
    } else {
      const Eigen::VectorXd xc = centroid + rho * (x[worst] - centroid);
      const double fc = f(xc);
      if (fc < fx[worst]) {
        x[worst] = xc;
        fx[worst] = fc;
        continue;
      }
    }
    for (int i = 0; i <= k; ++i) {
      if (i == best) continue;
      x[i] = x[best] + sigma * (x[i] - x[best]);
      fx[i] = f(x[i]);
    }
  }

  NelderMeadResult result;
  int best = 0;
  for (int i = 1; i <= k; ++i) {
    if (fx[i] < fx[best]) best = i;
  }
  result.x = x[best];
  result.value = fx[best];
  result.iterations = iter;
  return result;
}

ScanResult scan(const RelationBinding& rel, const StateFamily& family, int iterations,
                std::uint64_t seed, bool optimize) {
  if (iterations < 1) throw std::invalid_argument("scan requires iterations >= 1");
  const Eigen::VectorXd lo = family.lower_bounds(), hi = family.upper_bounds();
  const int dims = family.dims();

  struct Sample {
    double slack;
    Eigen::VectorXd params;
  };
  std::vector<Sample> finite;
  finite.reserve(iterations);
  int degenerate = 0;

  CounterRng root(seed);
  for (int idx = 0; idx < iterations; ++idx) {
    CounterRng rng = root.split(static_cast<std::uint64_t>(idx));
    Eigen::VectorXd params(dims);
    for (int j = 0; j < dims; ++j) params(j) = rng.uniform(lo(j), hi(j));
    const double value = slack(rel, family, params);
    if (std::isfinite(value)) {
      finite.push_back({value, std::move(params)});
    } else {
      ++degenerate;
    }
  }

  ScanResult result;
  result.relation_id = rel.id;
  result.family_id = family.id();
  result.iterations = iterations;
  result.seed = seed;
  result.optimized = optimize;
  result.degenerate_samples = degenerate;

  if (finite.empty()) {
    result.best_slack = kInf;
    result.best_params = Eigen::VectorXd();
    return result;
  }

  std::stable_sort(finite.begin(), finite.end(),
                   [](const Sample& a, const Sample& b) { return a.slack < b.slack; });
  result.best_slack = finite.front().slack;
  result.best_params = finite.front().params;

  const auto quantile = [&](double q) {
    const auto idx = static_cast<std::size_t>(
        std::llround(q * static_cast<double>(finite.size() - 1)));
    return finite[idx].slack;
  };
  result.quantiles = {{"q00", quantile(0.0)},
                      {"q25", quantile(0.25)},
                      {"q50", quantile(0.5)},
                      {"q75", quantile(0.75)},
                      {"q100", quantile(1.0)}};

  if (optimize) {
    const auto clamp_to_box = [&](const Eigen::VectorXd& v) {
      return v.cwiseMax(lo).cwiseMin(hi).eval();
    };
    const auto objective = [&](const Eigen::VectorXd& v) {
      return slack(rel, family, clamp_to_box(v));
    };
    const std::size_t refine = std::min<std::size_t>(5, finite.size());
    for (std::size_t i = 0; i < refine; ++i) {
      const NelderMeadResult nm = nelder_mead(objective, finite[i].params);
      if (nm.value < result.best_slack) {
        result.best_slack = nm.value;
        result.best_params = clamp_to_box(nm.x);
      }
    }
  }
  return result;
}

std::vector<Figure2Row> figure2_curve(double r, const std::vector<double>& thetas,
                                      int phi_samples) {
  if (phi_samples < 2) throw std::invalid_argument("figure2_curve needs phi_samples >= 2");
  std::vector<Figure2Row> rows;
  rows.reserve(thetas.size() * static_cast<std::size_t>(phi_samples));
  for (const double theta : thetas) {
    const double rhs = std::log(std::numbers::pi * std::numbers::e *
                                std::abs(std::sin(theta)));
    Eigen::RowVector2d direction(std::cos(theta), std::sin(theta));
    for (int k = 0; k < phi_samples; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / phi_samples;
      const Eigen::Matrix2d cov = squeezed_vacuum_gaussian(r, phi).cov;
      const double sx2 = cov(0, 0);
      const double st2 = direction * cov * direction.transpose();
      const double lhs = gaussian_entropy(Eigen::MatrixXd::Constant(1, 1, sx2)) +
                         gaussian_entropy(Eigen::MatrixXd::Constant(1, 1, st2));
      rows.push_back({theta, phi, lhs, rhs, lhs - rhs});
    }
  }
  return rows;
}

double eigen_residual(const FockState& psi, const Eigen::Matrix2d& gamma) {
  if (psi.n_modes != 1) {
    throw std::invalid_argument("eigen_residual takes single-mode states");
  }
  const double det = gamma.determinant();
  if (det <= 0.0) throw std::invalid_argument("eigen_residual requires invertible gamma");
  const Eigen::Matrix2d inv = gamma.inverse();
  const Eigen::MatrixXcd x = fock::position_op(psi.dim);
  const Eigen::MatrixXcd p = fock::momentum_op(psi.dim);
  const Eigen::MatrixXcd h = 0.5 * (inv(0, 0) * x * x + inv(1, 1) * p * p +
                                    inv(0, 1) * (x * p + p * x));
  return (h * psi.amplitudes - psi.amplitudes).norm();
}

double eigen_residual(double r, double phi, int dim) {
  if (dim < 32) throw std::invalid_argument("eigen_residual requires dim >= 32");
  const FockState psi = squeezed_vacuum_fock(r, phi, dim);
  const Eigen::Matrix2d gamma = squeezed_vacuum_gaussian(r, phi).cov;
  return eigen_residual(psi, gamma);
}

}  // namespace cvur
