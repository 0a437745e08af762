#include "geoskew/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geoskew/scalar_core.hpp"

namespace geoskew {

namespace {

constexpr int kCrossingScanPoints = 4096;

}  // namespace

void QuadratureConfig::validate() const {
  if (node_count < 8) throw DomainError("quadrature node_count must be >= 8");
  if (panel_count < 1) throw DomainError("quadrature panel_count must be >= 1");
  if (!(abs_tol > 0.0)) throw DomainError("quadrature abs_tol must be > 0");
  if (max_panels < panel_count) throw DomainError("quadrature max_panels must be >= panel_count");
}

double integrate_adaptive(const std::function<double(double)>& f, Interval range, const QuadratureConfig& cfg,
                          const std::vector<double>& breakpoints) {
  cfg.validate();
  const GaussLegendreRule rule = gauss_legendre(cfg.node_count);
  int panels = cfg.panel_count;
  double previous = integrate(f, composite_grid(range, panels, rule, breakpoints));
  while (panels * 2 <= cfg.max_panels) {
    panels *= 2;
    const double current = integrate(f, composite_grid(range, panels, rule, breakpoints));
    if (!std::isfinite(current)) break;
    if (std::abs(current - previous) < cfg.abs_tol) return current;
    previous = current;
  }
  throw QuadratureError("quadrature did not converge to " + std::to_string(cfg.abs_tol) + " within " +
                        std::to_string(cfg.max_panels) + " panels");
}

std::vector<double> crossing_points(const DensityFn& p, const DensityFn& q, Interval range) {
  auto gap = [&](double x) { return p.log_evaluate(x) - q.log_evaluate(x); };
  std::vector<double> roots;
  const double h = range.width() / kCrossingScanPoints;
  double x0 = range.lo;
  double g0 = gap(x0);
  for (int i = 1; i <= kCrossingScanPoints; ++i) {
    const double x1 = i == kCrossingScanPoints ? range.hi : range.lo + i * h;
    const double g1 = gap(x1);
    if ((g0 < 0.0) != (g1 < 0.0)) {
      double lo = x0;
      double hi = x1;
      double glo = g0;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = gap(mid);
        if ((gm < 0.0) == (glo < 0.0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x0 = x1;
    g0 = g1;
  }
  return roots;
}

double geodesical_skew_continuous(Alpha alpha, Lambda lambda, const DensityFn& p, const DensityFn& q,
                                  const QuadratureConfig& cfg) {
  cfg.validate();
  const Interval& sp = p.support();
  const Interval& sq = q.support();
  if (std::max(sp.lo, sq.lo) >= std::min(sp.hi, sq.hi)) {
    throw DomainError("geodesical_skew_continuous: supports do not overlap");
  }
  if (lambda.value() == 0.0) return 0.0;

  const Interval range{std::min(sp.lo, sq.lo), std::max(sp.hi, sq.hi)};
  auto integrand = [&](double x) {
    const double lp = p.log_evaluate(x);
    const double lq = q.log_evaluate(x);
    const double density = std::exp(lp);
    if (density == 0.0) return 0.0;
    return density * (lp - log_f_interpolate(alpha, lambda, lp, lq));
  };
  // The integrand has a kink where p = q for alpha = +/-inf; splitting there
  // keeps every panel smooth.
  return integrate_adaptive(integrand, range, cfg, crossing_points(p, q, range));
}

}  // namespace geoskew
