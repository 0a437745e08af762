#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "geoskew/density.hpp"
#include "geoskew/params.hpp"
#include "geoskew/quadrature.hpp"

namespace geoskew {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureConfig {
  int node_count = 32;        // Gauss-Legendre nodes per panel, >= 8
  int panel_count = 1;        // initial panels per segment
  double abs_tol = 1e-8;      // stop when successive estimates differ by less
  int max_panels = 1 << 12;   // cap on panels per segment

  void validate() const;
};

/// Integrates f over `range` by panel doubling until two successive
/// estimates agree within cfg.abs_tol. Throws QuadratureError otherwise.
double integrate_adaptive(const std::function<double(double)>& f, Interval range, const QuadratureConfig& cfg,
                          const std::vector<double>& breakpoints = {});

/// Points where log p - log q changes sign inside `range`, located on a
/// uniform scan and refined by bisection.
std::vector<double> crossing_points(const DensityFn& p, const DensityFn& q, Interval range);

/// Integral form of the alpha-geodesical skew divergence between two 1-D
/// densities, over the union of their supports.
double geodesical_skew_continuous(Alpha alpha, Lambda lambda, const DensityFn& p, const DensityFn& q,
                                  const QuadratureConfig& cfg = {});

}  // namespace geoskew
