#pragma once

#include <algorithm>
#include <cmath>

#include "geoskew/params.hpp"

namespace geoskew {

/// Below this distance from alpha = 1 the power mean is replaced by its
/// geometric-mean limit.
inline constexpr double kGeometricThreshold = 1e-8;

inline bool near_geometric(Alpha alpha) {
  return std::abs(alpha.value() - 1.0) < kGeometricThreshold;
}

/// f_alpha(x) = x^((1 - alpha) / 2), or ln x at alpha = 1.
template <typename Scalar>
Scalar f_alpha(Alpha alpha, Scalar x) {
  if (!alpha.is_finite()) throw UnsupportedError("f_alpha is not defined for infinite alpha");
  if (!(x > Scalar(0))) throw DomainError("f_alpha requires x > 0");
  if (alpha.value() == 1.0) return std::log(x);
  const Scalar u = Scalar(UExponent(alpha).value());
  if (u == Scalar(1)) return x;
  return std::pow(x, u);
}

/// Inverse of f_alpha: y^(2 / (1 - alpha)), or exp(y) at alpha = 1.
///
/// The power is followed by one Newton step on x^u = y, which recovers the
/// last bits lost by the rounded reciprocal exponent.
template <typename Scalar>
Scalar f_alpha_inv(Alpha alpha, Scalar y) {
  if (!alpha.is_finite()) throw UnsupportedError("f_alpha_inv is not defined for infinite alpha");
  if (alpha.value() == 1.0) return std::exp(y);
  if (!(y > Scalar(0))) throw DomainError("f_alpha_inv requires y > 0 when alpha != 1");
  const Scalar u = Scalar(UExponent(alpha).value());
  if (u == Scalar(1)) return y;
  const Scalar x0 = std::pow(y, Scalar(1) / u);
  if (!std::isfinite(x0) || x0 == Scalar(0)) return x0;
  const Scalar back = std::pow(x0, u);
  if (!std::isfinite(back) || back == Scalar(0)) return x0;
  // x^u = y  =>  x = x0 * (y / x0^u)^(1/u)  ~  x0 * (1 + log(y / back) / u)
  const Scalar correction = std::log(y / back) / u;
  return x0 + x0 * correction;
}

namespace detail {

// ln((1 - lambda) e^{u la} + lambda e^{u lb}) / u - la, with the dominant
// endpoint factored out so neither large |u| nor u -> 0 loses precision.
template <typename Scalar>
Scalar log_power_mean_offset(Scalar u, Scalar lambda, Scalar log_ratio /* lb - la */) {
  const Scalar d = u * log_ratio;
  if (d <= Scalar(0)) {
    return std::log1p(lambda * std::expm1(d)) / u;
  }
  // factor out b: result relative to la is log_ratio + log1p(...)/u
  return log_ratio + std::log1p((Scalar(1) - lambda) * std::expm1(-d)) / u;
}

}  // namespace detail

/// Log of the f-interpolation evaluated from log inputs.
///
/// Works entirely in the log domain, so densities far below the smallest
/// normal double still interpolate correctly.
template <typename Scalar>
Scalar log_f_interpolate(Alpha alpha, Lambda lambda, Scalar log_a, Scalar log_b) {
  if (std::isnan(log_a) || std::isnan(log_b) || log_a == Scalar(INFINITY) || log_b == Scalar(INFINITY)) {
    throw DomainError("log_f_interpolate requires finite log inputs");
  }
  const Scalar lam = Scalar(lambda.value());
  if (lambda.value() == 0.0) return log_a;
  if (lambda.value() == 1.0) return log_b;
  if (alpha.is_plus_infinity()) return std::min(log_a, log_b);
  if (alpha.is_minus_infinity()) return std::max(log_a, log_b);
  if (log_a == log_b) return log_a;
  const Scalar log_ratio = log_b - log_a;
  Scalar result;
  if (near_geometric(alpha)) {
    result = log_a + lam * log_ratio;
  } else {
    const Scalar u = Scalar(UExponent(alpha).value());
    result = log_a + detail::log_power_mean_offset(u, lam, log_ratio);
  }
  return std::clamp(result, std::min(log_a, log_b), std::max(log_a, log_b));
}

/// Weighted power mean m_f^(lambda, alpha)(a, b) = f^{-1}((1-lambda) f(a) + lambda f(b)).
///
/// Exact branches: lambda in {0, 1} returns the endpoint, alpha = +inf/-inf
/// returns min/max, alpha = -1 the arithmetic mean and alpha near 1 the
/// geometric mean. The result always lies in [min(a, b), max(a, b)].
template <typename Scalar>
Scalar f_interpolate(Alpha alpha, Lambda lambda, Scalar a, Scalar b) {
  if (!(a > Scalar(0)) || !(b > Scalar(0)) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("f_interpolate requires finite a > 0 and b > 0");
  }
  if (lambda.value() == 0.0) return a;
  if (lambda.value() == 1.0) return b;
  if (alpha.is_plus_infinity()) return std::min(a, b);
  if (alpha.is_minus_infinity()) return std::max(a, b);
  if (a == b) return a;

  const Scalar lam = Scalar(lambda.value());
  const Scalar lo = std::min(a, b);
  const Scalar hi = std::max(a, b);
  if (alpha.value() == -1.0) {
    return std::clamp((Scalar(1) - lam) * a + lam * b, lo, hi);
  }

  Scalar log_ratio = std::log(b / a);
  if (!std::isfinite(log_ratio)) log_ratio = std::log(b) - std::log(a);

  Scalar offset;
  if (near_geometric(alpha)) {
    offset = lam * log_ratio;
  } else {
    offset = detail::log_power_mean_offset(Scalar(UExponent(alpha).value()), lam, log_ratio);
  }
  return std::clamp(a * std::exp(offset), lo, hi);
}

}  // namespace geoskew
