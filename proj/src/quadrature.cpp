#include "geoskew/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "geoskew/params.hpp"
#include "geoskew/summation.hpp"

namespace geoskew {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre requires at least one node");
  GaussLegendreRule rule{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th root, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / derivative;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // recompute the derivative at the converged root
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    derivative = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

OutcomeGrid composite_grid(Interval range, int panels, const GaussLegendreRule& rule,
                           const std::vector<double>& breakpoints) {
  if (!(range.hi > range.lo)) throw DomainError("composite_grid requires a non-empty interval");
  if (panels < 1) throw DomainError("composite_grid requires at least one panel");

  std::vector<double> edges{range.lo};
  std::vector<double> inner;
  for (double b : breakpoints) {
    if (b > range.lo && b < range.hi) inner.push_back(b);
  }
  std::sort(inner.begin(), inner.end());
  inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
  edges.insert(edges.end(), inner.begin(), inner.end());
  edges.push_back(range.hi);

  const Eigen::Index per_panel = rule.nodes.size();
  const auto segments = static_cast<Eigen::Index>(edges.size() - 1);
  OutcomeGrid grid{Eigen::VectorXd(segments * panels * per_panel), Eigen::VectorXd(segments * panels * per_panel)};
  Eigen::Index k = 0;
  for (Eigen::Index s = 0; s < segments; ++s) {
    const double h = (edges[s + 1] - edges[s]) / panels;
    for (int j = 0; j < panels; ++j) {
      const double mid = edges[s] + (j + 0.5) * h;
      for (Eigen::Index i = 0; i < per_panel; ++i, ++k) {
        grid.points[k] = mid + 0.5 * h * rule.nodes[i];
        grid.weights[k] = 0.5 * h * rule.weights[i];
      }
    }
  }
  return grid;
}

OutcomeGrid categorical_grid(int count) {
  if (count < 1) throw DomainError("categorical_grid requires at least one outcome");
  return {Eigen::VectorXd::LinSpaced(count, 0.0, count - 1.0), Eigen::VectorXd::Ones(count)};
}

double integrate(const std::function<double(double)>& f, const OutcomeGrid& grid) {
  Eigen::VectorXd terms(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) terms[i] = grid.weights[i] * f(grid.points[i]);
  return stable_sum(terms);
}

}  // namespace geoskew
