#include "geoskew/density.hpp"

#include <cmath>
#include <numbers>

#include "geoskew/params.hpp"

namespace geoskew {

DensityFn::DensityFn(std::function<double(double)> log_density, Interval support,
                     std::optional<GaussianParams> gaussian)
    : log_density_(std::move(log_density)), support_(support), gaussian_(gaussian) {
  if (!log_density_) throw DomainError("density requires a log-density function");
  if (!(support_.hi > support_.lo)) throw DomainError("density support must be a non-empty interval");
}

double DensityFn::evaluate(double x) const { return std::exp(log_density_(x)); }

DensityFn gaussian_density(double mu, double sigma2) {
  if (!std::isfinite(mu)) throw DomainError("gaussian mean must be finite");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw DomainError("gaussian variance must be > 0");
  const double sigma = std::sqrt(sigma2);
  const double log_norm = -0.5 * std::log(2.0 * std::numbers::pi * sigma2);
  auto log_pdf = [mu, sigma2, log_norm](double x) {
    const double z = x - mu;
    return log_norm - z * z / (2.0 * sigma2);
  };
  return DensityFn(log_pdf, {mu - kGaussianSupportSigmas * sigma, mu + kGaussianSupportSigmas * sigma},
                   GaussianParams{mu, sigma2});
}

double gaussian_kl(const GaussianParams& p, const GaussianParams& q) {
  const double dmu = p.mu - q.mu;
  return 0.5 * std::log(q.sigma2 / p.sigma2) + (p.sigma2 + dmu * dmu) / (2.0 * q.sigma2) - 0.5;
}

}  // namespace geoskew
