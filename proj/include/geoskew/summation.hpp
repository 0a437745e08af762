#pragma once

#include <Eigen/Core>

namespace geoskew {

/// Vectors longer than this are summed pairwise.
inline constexpr Eigen::Index kPairwiseCutoff = 1024;

namespace detail {

template <typename Scalar>
Scalar pairwise_sum(const Scalar* data, Eigen::Index n) {
  if (n <= kPairwiseCutoff) {
    Scalar acc(0);
    for (Eigen::Index i = 0; i < n; ++i) acc += data[i];
    return acc;
  }
  const Eigen::Index half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

}  // namespace detail

/// Sum with a fixed evaluation order: a plain left-to-right loop for short
/// vectors, recursive halving above kPairwiseCutoff.
template <typename Derived>
typename Derived::Scalar stable_sum(const Eigen::DenseBase<Derived>& terms) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> flat(terms.size());
  for (Eigen::Index i = 0; i < terms.size(); ++i) flat[i] = terms.derived().coeff(i);
  return detail::pairwise_sum(flat.data(), flat.size());
}

}  // namespace geoskew
