#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "geoskew/params.hpp"
#include "geoskew/summation.hpp"

namespace geoskew {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Tolerance on |sum - 1| for probability vectors.
inline constexpr double kUnitSumTolerance = 1e-9;

namespace detail {

template <typename Scalar>
void require_finite(const VectorX<Scalar>& w, const char* what) {
  if (w.size() == 0) throw DomainError(std::string(what) + " must have at least one entry");
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w[i])) throw DomainError(std::string(what) + " has a non-finite entry");
  }
}

template <typename Scalar>
void require_unit_sum(const VectorX<Scalar>& w, const char* what) {
  const Scalar total = stable_sum(w);
  if (std::abs(total - Scalar(1)) > Scalar(kUnitSumTolerance)) {
    throw DomainError(std::string(what) + " does not sum to 1 (sum = " +
                      std::to_string(static_cast<double>(total)) + ")");
  }
}

}  // namespace detail

/// Probability vector with every weight strictly positive.
template <typename Scalar>
class BasicProbVec {
 public:
  using Vector = VectorX<Scalar>;

  /// Validates without rescaling; use normalize() for raw data.
  explicit BasicProbVec(Vector weights) : w_(std::move(weights)) {
    detail::require_finite(w_, "probability vector");
    for (Eigen::Index i = 0; i < w_.size(); ++i) {
      if (!(w_[i] > Scalar(0))) throw DomainError("probability vector entries must be strictly positive");
    }
    detail::require_unit_sum(w_, "probability vector");
  }

  BasicProbVec(std::initializer_list<Scalar> weights)
      : BasicProbVec(Eigen::Map<const Vector>(weights.begin(), Eigen::Index(weights.size()))) {}

  const Vector& weights() const { return w_; }
  Eigen::Index size() const { return w_.size(); }
  Scalar operator[](Eigen::Index i) const { return w_[i]; }

 private:
  Vector w_;
};

/// Probability vector that may contain zeros (first argument of KL).
template <typename Scalar>
class BasicNonnegVec {
 public:
  using Vector = VectorX<Scalar>;

  explicit BasicNonnegVec(Vector weights) : w_(std::move(weights)) {
    detail::require_finite(w_, "nonnegative vector");
    for (Eigen::Index i = 0; i < w_.size(); ++i) {
      if (w_[i] < Scalar(0)) throw DomainError("nonnegative vector has a negative entry");
    }
    detail::require_unit_sum(w_, "nonnegative vector");
  }

  BasicNonnegVec(std::initializer_list<Scalar> weights)
      : BasicNonnegVec(Eigen::Map<const Vector>(weights.begin(), Eigen::Index(weights.size()))) {}

  // Every strictly positive probability vector is also a member here.
  BasicNonnegVec(const BasicProbVec<Scalar>& p) : w_(p.weights()) {}  // NOLINT

  const Vector& weights() const { return w_; }
  Eigen::Index size() const { return w_.size(); }
  Scalar operator[](Eigen::Index i) const { return w_[i]; }

 private:
  Vector w_;
};

/// Unnormalized positive measure on a finite set.
template <typename Scalar>
class BasicPositiveMeasureVec {
 public:
  using Vector = VectorX<Scalar>;

  explicit BasicPositiveMeasureVec(Vector masses) : m_(std::move(masses)) {
    detail::require_finite(m_, "positive measure");
    for (Eigen::Index i = 0; i < m_.size(); ++i) {
      if (!(m_[i] > Scalar(0))) throw DomainError("positive measure entries must be > 0");
    }
  }

  BasicPositiveMeasureVec(std::initializer_list<Scalar> masses)
      : BasicPositiveMeasureVec(Eigen::Map<const Vector>(masses.begin(), Eigen::Index(masses.size()))) {}

  const Vector& masses() const { return m_; }
  Eigen::Index size() const { return m_.size(); }
  Scalar operator[](Eigen::Index i) const { return m_[i]; }

 private:
  Vector m_;
};

using ProbVec = BasicProbVec<double>;
using NonnegVec = BasicNonnegVec<double>;
using PositiveMeasureVec = BasicPositiveMeasureVec<double>;

enum class ZeroPolicy {
  strict,  // zero entries are rejected
  clamp,   // zero entries are raised to a floor, then the vector is renormalized
};

inline constexpr double kDefaultClampFloor = 1e-12;

/// Divides raw nonnegative weights by their total.
template <typename Derived>
BasicProbVec<typename Derived::Scalar> normalize(const Eigen::MatrixBase<Derived>& raw,
                                                 ZeroPolicy policy = ZeroPolicy::strict,
                                                 typename Derived::Scalar floor = kDefaultClampFloor) {
  using Scalar = typename Derived::Scalar;
  VectorX<Scalar> w = raw;
  detail::require_finite(w, "raw weights");
  bool any_positive = false;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w[i] < Scalar(0)) throw DomainError("raw weights must be nonnegative");
    any_positive = any_positive || w[i] > Scalar(0);
  }
  if (!any_positive) throw DomainError("raw weights are all zero");
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w[i] == Scalar(0)) {
      if (policy == ZeroPolicy::strict) {
        throw DomainError("zero weight at index " + std::to_string(i) + " (strict mode)");
      }
      if (!(floor > Scalar(0))) throw DomainError("clamp floor must be > 0");
      w[i] = floor;
    }
  }
  w /= stable_sum(w);
  return BasicProbVec<Scalar>(std::move(w));
}

inline ProbVec normalize(std::span<const double> raw, ZeroPolicy policy = ZeroPolicy::strict,
                         double floor = kDefaultClampFloor) {
  return normalize(Eigen::Map<const Eigen::VectorXd>(raw.data(), Eigen::Index(raw.size())), policy, floor);
}

/// The n + 1 probabilities of Binomial(n, prob).
inline ProbVec binomial_pmf(int n, double prob) {
  if (n < 1) throw DomainError("binomial_pmf requires n >= 1");
  if (!(prob > 0.0 && prob < 1.0)) throw DomainError("binomial_pmf requires 0 < prob < 1");
  Eigen::VectorXd log_w(n + 1);
  double log_choose = 0.0;
  const double lp = std::log(prob);
  const double lq = std::log1p(-prob);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) log_choose += std::log(double(n - k + 1)) - std::log(double(k));
    log_w[k] = log_choose + k * lp + (n - k) * lq;
  }
  Eigen::VectorXd w = (log_w.array() - log_w.maxCoeff()).exp();
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    if (!(w[k] > 0.0)) throw DomainError("binomial_pmf underflows to zero; n is too large for strict positivity");
  }
  return normalize(w);
}

/// L1 distance sum |p1_i - p0_i| (twice the usual total-variation distance).
template <typename Scalar>
Scalar tv_distance(const BasicProbVec<Scalar>& p0, const BasicProbVec<Scalar>& p1) {
  if (p0.size() != p1.size()) throw DomainError("tv_distance: length mismatch");
  return stable_sum((p1.weights() - p0.weights()).cwiseAbs());
}

/// Shannon entropy in nats.
template <typename Scalar>
Scalar shannon_entropy(const BasicProbVec<Scalar>& p) {
  const auto& w = p.weights();
  VectorX<Scalar> terms = -(w.array() * w.array().log()).matrix();
  return std::max(Scalar(0), stable_sum(terms));
}

}  // namespace geoskew
