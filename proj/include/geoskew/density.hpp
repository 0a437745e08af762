#pragma once

#include <functional>
#include <optional>

#include "geoskew/quadrature.hpp"

namespace geoskew {

struct GaussianParams {
  double mu = 0.0;
  double sigma2 = 1.0;
};

/// Half-width of the Gaussian support, in standard deviations.
inline constexpr double kGaussianSupportSigmas = 12.0;

/// Continuous 1-D density with a finite support outside which its mass is
/// negligible. Evaluation goes through the log density so far tails stay
/// representable.
class DensityFn {
 public:
  DensityFn(std::function<double(double)> log_density, Interval support,
            std::optional<GaussianParams> gaussian = std::nullopt);

  double evaluate(double x) const;
  double log_evaluate(double x) const { return log_density_(x); }
  const Interval& support() const { return support_; }
  const std::optional<GaussianParams>& gaussian() const { return gaussian_; }

 private:
  std::function<double(double)> log_density_;
  Interval support_;
  std::optional<GaussianParams> gaussian_;
};

/// Normal density N(mu, sigma2) truncated to mu +/- 12 sigma.
DensityFn gaussian_density(double mu, double sigma2);

/// Closed-form KL[N(mu1, var1) || N(mu2, var2)].
double gaussian_kl(const GaussianParams& p, const GaussianParams& q);

}  // namespace geoskew
