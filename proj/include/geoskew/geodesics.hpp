#pragma once

#include <cmath>

#include <Eigen/Core>

#include "geoskew/divergences.hpp"
#include "geoskew/measures.hpp"
#include "geoskew/params.hpp"
#include "geoskew/scalar_core.hpp"

namespace geoskew {

/// Normalized point on an alpha-geodesic together with its normalizer c(t).
template <typename Scalar>
struct BasicGeodesicPoint {
  double t;
  BasicProbVec<Scalar> r;
  Scalar c;
};

using GeodesicPoint = BasicGeodesicPoint<double>;

/// r_i(t) = c(t) f_alpha^{-1}((1 - t) f_alpha(p_i) + t f_alpha(q_i)) with
/// c(t) = 1 / sum of the unnormalized interpolants.
template <typename Scalar>
BasicGeodesicPoint<Scalar> alpha_geodesic_point(Alpha alpha, double t, const BasicProbVec<Scalar>& p,
                                                const BasicProbVec<Scalar>& q) {
  detail::require_same_length(p, q, "alpha_geodesic_point");
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("alpha_geodesic_point requires t in [0, 1]");
  const Lambda weight(t);
  VectorX<Scalar> unnormalized(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    unnormalized[i] = f_interpolate(alpha, weight, p[i], q[i]);
  }
  const Scalar c = Scalar(1) / stable_sum(unnormalized);
  VectorX<Scalar> r = unnormalized * c;
  // The endpoints are the inputs themselves.
  if (t == 0.0) r = p.weights();
  if (t == 1.0) r = q.weights();
  return {t, BasicProbVec<Scalar>(std::move(r)), c};
}

/// theta^i = f_alpha(m_i).
template <typename Scalar>
struct BasicAlphaCoords {
  VectorX<Scalar> theta;
  Alpha alpha;
};

/// eta_i = f_{-alpha}(m_i), the dual coordinates of the same measure.
template <typename Scalar>
struct BasicDualCoords {
  VectorX<Scalar> eta;
  Alpha alpha;

  /// Masses recovered from eta.
  VectorX<Scalar> masses() const {
    VectorX<Scalar> m(eta.size());
    for (Eigen::Index i = 0; i < eta.size(); ++i) m[i] = f_alpha_inv(-alpha, eta[i]);
    return m;
  }

  /// psi_alpha = ((1 - alpha) / 2) * sum m_i, whose gradient generates eta.
  Scalar psi() const { return Scalar(UExponent(alpha).value()) * stable_sum(masses()); }
};

using AlphaCoords = BasicAlphaCoords<double>;
using DualCoords = BasicDualCoords<double>;

template <typename Scalar>
BasicAlphaCoords<Scalar> alpha_representation(Alpha alpha, const BasicPositiveMeasureVec<Scalar>& m) {
  if (!alpha.is_finite()) throw UnsupportedError("alpha_representation requires finite alpha");
  VectorX<Scalar> theta(m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) theta[i] = f_alpha(alpha, m[i]);
  return {std::move(theta), alpha};
}

template <typename Scalar>
BasicDualCoords<Scalar> dual_representation(Alpha alpha, const BasicPositiveMeasureVec<Scalar>& m) {
  if (!alpha.is_finite()) throw UnsupportedError("dual_representation requires finite alpha");
  VectorX<Scalar> eta(m.size());
  for (Eigen::Index i = 0; i < m.size(); ++i) eta[i] = f_alpha(-alpha, m[i]);
  return {std::move(eta), alpha};
}

/// Dual coordinates obtained from theta alone: eta_i = (theta^i)^((1 + alpha) / (1 - alpha)).
/// Only defined for alpha outside {-1, 1}.
template <typename Scalar>
BasicDualCoords<Scalar> dual_from_alpha_coords(const BasicAlphaCoords<Scalar>& coords) {
  const double a = coords.alpha.value();
  if (!coords.alpha.is_finite() || a == 1.0 || a == -1.0) {
    throw UnsupportedError("dual_from_alpha_coords requires finite alpha outside {-1, 1}");
  }
  const Scalar exponent = Scalar((1.0 + a) / (1.0 - a));
  VectorX<Scalar> eta = coords.theta.array().pow(exponent).matrix();
  return {std::move(eta), coords.alpha};
}

}  // namespace geoskew
