#pragma once

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Core>

#include "geoskew/measures.hpp"
#include "geoskew/params.hpp"
#include "geoskew/scalar_core.hpp"
#include "geoskew/summation.hpp"

namespace geoskew {

namespace detail {

template <typename A, typename B>
void require_same_length(const A& p, const B& q, const char* op) {
  if (p.size() != q.size()) {
    throw DomainError(std::string(op) + ": length mismatch (" + std::to_string(p.size()) + " vs " +
                      std::to_string(q.size()) + ")");
  }
}

// sum_i p_i * ln(p_i / m_i) for an arbitrary elementwise reference m(p_i, q_i).
template <typename Scalar, typename Reference>
Scalar relative_entropy_sum(const VectorX<Scalar>& p, const VectorX<Scalar>& q, Reference&& reference) {
  VectorX<Scalar> terms(p.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const Scalar pi = p[i];
    terms[i] = pi == Scalar(0) ? Scalar(0) : pi * std::log(pi / reference(pi, q[i]));
  }
  return stable_sum(terms);
}

}  // namespace detail

/// D_KL[p || q] = sum p ln(p / q), with 0 ln 0 = 0.
template <typename Scalar>
Scalar kl(const BasicNonnegVec<Scalar>& p, const BasicProbVec<Scalar>& q) {
  detail::require_same_length(p, q, "kl");
  const Scalar value =
      detail::relative_entropy_sum(p.weights(), q.weights(), [](Scalar, Scalar qi) { return qi; });
  return std::max(Scalar(0), value);
}

template <typename Scalar>
Scalar kl(const BasicProbVec<Scalar>& p, const BasicProbVec<Scalar>& q) {
  return kl(BasicNonnegVec<Scalar>(p), q);
}

/// Jensen-Shannon divergence, bounded by ln 2.
template <typename Scalar>
Scalar js(const BasicProbVec<Scalar>& p, const BasicProbVec<Scalar>& q) {
  detail::require_same_length(p, q, "js");
  auto mid = [](Scalar a, Scalar b) { return (a + b) / Scalar(2); };
  const Scalar forward = detail::relative_entropy_sum(p.weights(), q.weights(), mid);
  const Scalar backward = detail::relative_entropy_sum(q.weights(), p.weights(), mid);
  return std::max(Scalar(0), (forward + backward) / Scalar(2));
}

template <typename Scalar>
Scalar jeffreys(const BasicProbVec<Scalar>& p, const BasicProbVec<Scalar>& q) {
  detail::require_same_length(p, q, "jeffreys");
  return kl(p, q) + kl(q, p);
}

/// Skew divergence D_KL[p || (1 - lambda) p + lambda q].
template <typename Scalar>
Scalar skew(Lambda lambda, const BasicProbVec<Scalar>& p, const BasicProbVec<Scalar>& q) {
  detail::require_same_length(p, q, "skew");
  if (lambda.value() == 0.0) return Scalar(0);
  if (lambda.value() == 1.0) return kl(p, q);
  const Scalar lam = Scalar(lambda.value());
  const Scalar value = detail::relative_entropy_sum(
      p.weights(), q.weights(), [lam](Scalar a, Scalar b) { return (Scalar(1) - lam) * a + lam * b; });
  return std::max(Scalar(0), value);
}

/// Amari alpha-divergence between probability vectors. alpha = -1 gives
/// KL[p || q], alpha = +1 gives KL[q || p].
template <typename Scalar>
Scalar alpha_divergence(Alpha alpha, const BasicProbVec<Scalar>& p, const BasicProbVec<Scalar>& q) {
  detail::require_same_length(p, q, "alpha_divergence");
  if (!alpha.is_finite()) throw UnsupportedError("alpha_divergence requires finite alpha");
  const double a = alpha.value();
  if (a == -1.0) return kl(p, q);
  if (a == 1.0) return kl(q, p);

  // 1 - sum p^s q^(1-s) written as (1 - sum q) - sum q expm1(s ln(p/q)), with
  // the roles of p and q swapped when that keeps the exponent small.
  const bool use_q_base = a >= 0.0;
  const auto& base = use_q_base ? q.weights() : p.weights();
  const auto& other = use_q_base ? p.weights() : q.weights();
  const Scalar s = Scalar(use_q_base ? (1.0 - a) / 2.0 : (1.0 + a) / 2.0);
  VectorX<Scalar> terms(base.size());
  for (Eigen::Index i = 0; i < base.size(); ++i) {
    terms[i] = base[i] * std::expm1(s * std::log(other[i] / base[i]));
  }
  const Scalar one_minus_affinity = (Scalar(1) - stable_sum(base)) - stable_sum(terms);
  return Scalar(4.0 / (1.0 - a * a)) * one_minus_affinity;
}

/// Upper bound sum p ln(p / min(p, q)); also the alpha -> +inf limit.
template <typename Scalar>
Scalar divergence_upper_bound(const BasicProbVec<Scalar>& p, const BasicProbVec<Scalar>& q) {
  detail::require_same_length(p, q, "divergence_upper_bound");
  return detail::relative_entropy_sum(p.weights(), q.weights(),
                                      [](Scalar a, Scalar b) { return std::min(a, b); });
}

/// Lower bound sum p ln(p / max(p, q)); also the alpha -> -inf limit.
template <typename Scalar>
Scalar divergence_lower_bound(const BasicProbVec<Scalar>& p, const BasicProbVec<Scalar>& q) {
  detail::require_same_length(p, q, "divergence_lower_bound");
  return detail::relative_entropy_sum(p.weights(), q.weights(),
                                      [](Scalar a, Scalar b) { return std::max(a, b); });
}

/// alpha-geodesical skew divergence evaluated through the f-interpolation
/// kernel only, without closed-form shortcuts.
template <typename Scalar>
Scalar geodesical_skew_generic(Alpha alpha, Lambda lambda, const BasicProbVec<Scalar>& p,
                               const BasicProbVec<Scalar>& q) {
  detail::require_same_length(p, q, "geodesical_skew");
  return detail::relative_entropy_sum(p.weights(), q.weights(), [alpha, lambda](Scalar a, Scalar b) {
    return f_interpolate(alpha, lambda, a, b);
  });
}

/// alpha-geodesical skew divergence D_KL[p || m_f^(lambda, alpha)(p, q)].
///
/// Closed forms are used where they exist: lambda = 0 gives 0, lambda = 1
/// gives KL, alpha = 1 gives lambda * KL, alpha = -1 the skew divergence,
/// and alpha = +/-inf the min/max bounds.
template <typename Scalar>
Scalar geodesical_skew(Alpha alpha, Lambda lambda, const BasicProbVec<Scalar>& p,
                       const BasicProbVec<Scalar>& q) {
  detail::require_same_length(p, q, "geodesical_skew");
  if (lambda.value() == 0.0) return Scalar(0);
  if (lambda.value() == 1.0) return kl(p, q);
  if (alpha.is_plus_infinity()) return divergence_upper_bound(p, q);
  if (alpha.is_minus_infinity()) return divergence_lower_bound(p, q);
  if (alpha.value() == 1.0) return Scalar(lambda.value()) * kl(p, q);
  if (alpha.value() == -1.0) return skew(lambda, p, q);
  return geodesical_skew_generic(alpha, lambda, p, q);
}

/// Average of the two directed geodesical skew divergences.
template <typename Scalar>
Scalar symmetrized_geodesical_skew(Alpha alpha, Lambda lambda, const BasicProbVec<Scalar>& p,
                                   const BasicProbVec<Scalar>& q) {
  detail::require_same_length(p, q, "symmetrized_geodesical_skew");
  const Scalar forward = geodesical_skew(alpha, lambda, p, q);
  const Scalar backward = geodesical_skew(alpha, lambda, q, p);
  return (forward + backward) / Scalar(2);
}

}  // namespace geoskew
