#pragma once

#include <functional>
#include <string>

#include <Eigen/Core>

#include "geoskew/measures.hpp"
#include "geoskew/params.hpp"
#include "geoskew/quadrature.hpp"

namespace geoskew {

/// Exponential family p(x; theta) = exp(theta . T(x) + k(x) - psi(theta)).
struct ExpFamilySpec {
  std::string name;
  int natural_dim = 0;
  std::function<Eigen::VectorXd(double)> sufficient_statistic;
  std::function<double(const Eigen::VectorXd&)> log_partition;
  std::function<double(double)> carrier;
  /// True when theta lies in the natural parameter space (psi finite).
  std::function<bool(const Eigen::VectorXd&)> valid;

  double log_density(const Eigen::VectorXd& theta, double x) const {
    return theta.dot(sufficient_statistic(x)) + carrier(x) - log_partition(theta);
  }
};

/// Univariate Gaussian with T(x) = (x, x^2), theta = (mu / s2, -1 / (2 s2)).
ExpFamilySpec gaussian_family();

/// Natural parameters of N(mu, sigma2).
Eigen::VectorXd gaussian_natural_params(double mu, double sigma2);

/// Categorical over {0, ..., categories - 1}; theta are the first
/// categories - 1 logits with the last logit fixed to 0.
ExpFamilySpec categorical_family(int categories);

/// Grid on which a Gaussian family is discretized: the union of the
/// truncated supports of the given natural parameters.
OutcomeGrid gaussian_outcome_grid(const Eigen::VectorXd& theta_p, const Eigen::VectorXd& theta_q,
                                  int panels = 64, int nodes = 32);

/// Density at theta(lambda) = (1 - lambda) theta_p + lambda theta_q,
/// discretized on the grid (weight times density) and normalized.
ProbVec natural_geodesic_density(const ExpFamilySpec& fam, const Eigen::VectorXd& theta_p,
                                 const Eigen::VectorXd& theta_q, Lambda lambda, const OutcomeGrid& outcomes);

/// Geometric (alpha = 1) interpolation p^(1 - lambda) q^lambda of the
/// endpoint densities on the same grid, normalized.
ProbVec normalized_geometric_interpolation(const ExpFamilySpec& fam, const Eigen::VectorXd& theta_p,
                                           const Eigen::VectorXd& theta_q, Lambda lambda,
                                           const OutcomeGrid& outcomes);

struct ScaledKlReport {
  double geodesical_skew = 0.0;  // D_GS^(1, lambda)[p || q]
  double scaled_kl = 0.0;        // lambda * KL[p || q]
  double abs_difference = 0.0;
  double log_normalizer_gap = 0.0;  // (1 - lambda) psi(theta_p) + lambda psi(theta_q) - psi(theta(lambda))
};

/// Evaluates D_GS^(1, lambda) through the natural-parameter geodesic,
/// KL[p || p(theta(lambda))] + log_normalizer_gap, and compares it with
/// lambda * KL[p || q] computed directly on the grid.
ScaledKlReport verify_scaled_kl(const ExpFamilySpec& fam, const Eigen::VectorXd& theta_p,
                                const Eigen::VectorXd& theta_q, Lambda lambda, const OutcomeGrid& outcomes);

}  // namespace geoskew
