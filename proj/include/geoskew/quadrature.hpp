#pragma once

#include <functional>
#include <vector>

#include <Eigen/Core>

namespace geoskew {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Computes the n-point rule by Newton iteration on P_n.
GaussLegendreRule gauss_legendre(int n);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Quadrature points with their weights; integrates f as sum w_i f(x_i).
struct OutcomeGrid {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;

  Eigen::Index size() const { return points.size(); }
};

/// Composite rule: `panels` equal panels per segment between consecutive
/// breakpoints (breakpoints outside the interval are ignored).
OutcomeGrid composite_grid(Interval range, int panels, const GaussLegendreRule& rule,
                           const std::vector<double>& breakpoints = {});

/// Grid over the finite outcome set {0, 1, ..., count - 1} with unit weights.
OutcomeGrid categorical_grid(int count);

double integrate(const std::function<double(double)>& f, const OutcomeGrid& grid);

}  // namespace geoskew
