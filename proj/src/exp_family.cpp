#include "geoskew/exp_family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "geoskew/density.hpp"
#include "geoskew/scalar_core.hpp"
#include "geoskew/summation.hpp"

namespace geoskew {

namespace {

void require_valid(const ExpFamilySpec& fam, const Eigen::VectorXd& theta, const char* which) {
  if (theta.size() != fam.natural_dim) {
    throw DomainError(std::string(which) + " has dimension " + std::to_string(theta.size()) + ", family '" +
                      fam.name + "' expects " + std::to_string(fam.natural_dim));
  }
  if (!theta.allFinite() || (fam.valid && !fam.valid(theta)) || !std::isfinite(fam.log_partition(theta))) {
    throw DomainError(std::string(which) + " is not a valid natural parameter for family '" + fam.name + "'");
  }
}

// weights_i * exp(log_values_i), normalized; the max shift keeps the
// largest entry at 1 before scaling.
ProbVec normalize_log_masses(const Eigen::VectorXd& log_values, const OutcomeGrid& outcomes) {
  const double shift = log_values.maxCoeff();
  Eigen::VectorXd masses = outcomes.weights.array() * (log_values.array() - shift).exp();
  return normalize(masses);
}

Eigen::VectorXd log_densities(const ExpFamilySpec& fam, const Eigen::VectorXd& theta, const OutcomeGrid& grid) {
  Eigen::VectorXd out(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) out[i] = fam.log_density(theta, grid.points[i]);
  return out;
}

}  // namespace

ExpFamilySpec gaussian_family() {
  ExpFamilySpec fam;
  fam.name = "gaussian";
  fam.natural_dim = 2;
  fam.sufficient_statistic = [](double x) { return Eigen::Vector2d(x, x * x).eval(); };
  fam.log_partition = [](const Eigen::VectorXd& theta) {
    return -theta[0] * theta[0] / (4.0 * theta[1]) + 0.5 * std::log(-std::numbers::pi / theta[1]);
  };
  fam.carrier = [](double) { return 0.0; };
  fam.valid = [](const Eigen::VectorXd& theta) { return theta.size() == 2 && theta[1] < 0.0; };
  return fam;
}

Eigen::VectorXd gaussian_natural_params(double mu, double sigma2) {
  if (!(sigma2 > 0.0)) throw DomainError("gaussian variance must be > 0");
  return Eigen::Vector2d(mu / sigma2, -1.0 / (2.0 * sigma2));
}

ExpFamilySpec categorical_family(int categories) {
  if (categories < 2) throw DomainError("categorical family needs at least two categories");
  ExpFamilySpec fam;
  fam.name = "categorical";
  fam.natural_dim = categories - 1;
  fam.sufficient_statistic = [categories](double x) {
    Eigen::VectorXd t = Eigen::VectorXd::Zero(categories - 1);
    const auto k = static_cast<Eigen::Index>(std::lround(x));
    if (k < categories - 1) t[k] = 1.0;
    return t;
  };
  fam.log_partition = [](const Eigen::VectorXd& theta) {
    const double top = std::max(0.0, theta.maxCoeff());
    return top + std::log(std::exp(-top) + (theta.array() - top).exp().sum());
  };
  fam.carrier = [](double) { return 0.0; };
  fam.valid = [](const Eigen::VectorXd& theta) { return theta.allFinite(); };
  return fam;
}

OutcomeGrid gaussian_outcome_grid(const Eigen::VectorXd& theta_p, const Eigen::VectorXd& theta_q, int panels,
                                  int nodes) {
  auto support = [](const Eigen::VectorXd& theta) {
    if (theta.size() != 2 || !(theta[1] < 0.0)) throw DomainError("invalid gaussian natural parameters");
    const double sigma2 = -1.0 / (2.0 * theta[1]);
    return gaussian_density(theta[0] * sigma2, sigma2).support();
  };
  const Interval a = support(theta_p);
  const Interval b = support(theta_q);
  return composite_grid({std::min(a.lo, b.lo), std::max(a.hi, b.hi)}, panels, gauss_legendre(nodes));
}

ProbVec natural_geodesic_density(const ExpFamilySpec& fam, const Eigen::VectorXd& theta_p,
                                 const Eigen::VectorXd& theta_q, Lambda lambda, const OutcomeGrid& outcomes) {
  require_valid(fam, theta_p, "theta_p");
  require_valid(fam, theta_q, "theta_q");
  const Eigen::VectorXd theta = (1.0 - lambda.value()) * theta_p + lambda.value() * theta_q;
  require_valid(fam, theta, "theta(lambda)");
  return normalize_log_masses(log_densities(fam, theta, outcomes), outcomes);
}

ProbVec normalized_geometric_interpolation(const ExpFamilySpec& fam, const Eigen::VectorXd& theta_p,
                                           const Eigen::VectorXd& theta_q, Lambda lambda,
                                           const OutcomeGrid& outcomes) {
  require_valid(fam, theta_p, "theta_p");
  require_valid(fam, theta_q, "theta_q");
  const Eigen::VectorXd lp = log_densities(fam, theta_p, outcomes);
  const Eigen::VectorXd lq = log_densities(fam, theta_q, outcomes);
  Eigen::VectorXd mixed(lp.size());
  for (Eigen::Index i = 0; i < lp.size(); ++i) {
    mixed[i] = log_f_interpolate(Alpha(1.0), lambda, lp[i], lq[i]);
  }
  return normalize_log_masses(mixed, outcomes);
}

ScaledKlReport verify_scaled_kl(const ExpFamilySpec& fam, const Eigen::VectorXd& theta_p,
                                const Eigen::VectorXd& theta_q, Lambda lambda, const OutcomeGrid& outcomes) {
  require_valid(fam, theta_p, "theta_p");
  require_valid(fam, theta_q, "theta_q");
  const double lam = lambda.value();
  const Eigen::VectorXd theta = (1.0 - lam) * theta_p + lam * theta_q;
  require_valid(fam, theta, "theta(lambda)");

  const Eigen::VectorXd lp = log_densities(fam, theta_p, outcomes);
  const Eigen::VectorXd lq = log_densities(fam, theta_q, outcomes);
  const Eigen::VectorXd lg = log_densities(fam, theta, outcomes);
  const Eigen::VectorXd mass = outcomes.weights.array() * lp.array().exp();

  ScaledKlReport report;
  report.log_normalizer_gap =
      (1.0 - lam) * fam.log_partition(theta_p) + lam * fam.log_partition(theta_q) - fam.log_partition(theta);
  // On the geodesic ln p(x; theta(lambda)) = ln m_f^(lambda,1)(p, q) + gap.
  const Eigen::VectorXd to_geodesic = mass.array() * (lp - lg).array();
  report.geodesical_skew = stable_sum(to_geodesic) + report.log_normalizer_gap;
  const Eigen::VectorXd to_target = mass.array() * (lp - lq).array();
  report.scaled_kl = lam * stable_sum(to_target);
  report.abs_difference = std::abs(report.geodesical_skew - report.scaled_kl);
  return report;
}

}  // namespace geoskew
