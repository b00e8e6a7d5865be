#pragma once

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "minnorm/types.hpp"

namespace minnorm {

/// Minimum-norm point of the affine hull of a point set, expressed as an
/// affine combination of the inputs.
template <typename Scalar>
struct AffineSolution {
  VectorX<Scalar> point;         // the affine minimizer y
  VectorX<Scalar> coefficients;  // alpha with sum(alpha) = 1, y = B alpha
};

/// Raised when the point set is affinely dependent (numerically rank
/// deficient); carries the index of the first dependent point so the
/// caller can drop it and retry.
class DegenerateSetError : public std::runtime_error {
 public:
  explicit DegenerateSetError(Index dependent_index)
      : std::runtime_error("affinely dependent point at index " +
                           std::to_string(dependent_index)),
        index_(dependent_index) {}
  Index dependent_index() const { return index_; }

 private:
  Index index_;
};

/// Relative pivot threshold for declaring affine dependence.
inline constexpr double kAffinePivotTolerance = 1e-12;

namespace detail {

/// Solves min ||y|| over the affine hull via the lifted Gram matrix
/// G = B^T B + 1 1^T, the Gram matrix of the points with a unit
/// coordinate appended: G is positive definite exactly when the points
/// are affinely independent. With R^T R = G, the coefficients are
/// alpha = w / sum(w) where G w = 1.
template <typename Scalar>
AffineSolution<Scalar> solve_from_factor(const MatrixX<Scalar>& points,
                                         const MatrixX<Scalar>& r, Index m) {
  VectorX<Scalar> w = VectorX<Scalar>::Ones(m);
  r.topLeftCorner(m, m).template triangularView<Eigen::Upper>().transpose().solveInPlace(w);
  r.topLeftCorner(m, m).template triangularView<Eigen::Upper>().solveInPlace(w);
  const Scalar total = w.sum();  // = 1^T G^{-1} 1 > 0 for SPD G
  AffineSolution<Scalar> sol;
  sol.coefficients = w / total;
  sol.point.noalias() = points.leftCols(m) * sol.coefficients;
  assert(std::abs(static_cast<double>(sol.coefficients.sum()) - 1.0) <= 1e-10);
  assert(((sol.point - points.leftCols(m) * sol.coefficients).template lpNorm<Eigen::Infinity>() <=
          1e-8 * std::max(1.0, static_cast<double>(
                                   points.leftCols(m).template lpNorm<Eigen::Infinity>()))));
  return sol;
}

}  // namespace detail

/// From-scratch affine minimizer of the columns of `points` (m columns of
/// dimension n, 1 <= m <= n+1). Performs a full Cholesky factorization of
/// the lifted Gram matrix; a pivot below the relative threshold raises
/// DegenerateSetError with the offending column index. Deterministic for
/// a fixed input order.
template <typename Derived>
AffineSolution<typename Derived::Scalar> affine_minimizer(
    const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Index n = points.rows();
  const Index m = points.cols();
  if (m < 1) throw std::invalid_argument("affine minimizer needs at least one point");
  if (m > n + 1) throw std::invalid_argument("more than n+1 points cannot be affinely independent");
  if (!points.allFinite()) throw std::invalid_argument("points must be finite");

  const MatrixX<Scalar> pts = points;
  MatrixX<Scalar> gram = pts.transpose() * pts;
  gram.array() += Scalar(1);

  MatrixX<Scalar> r = MatrixX<Scalar>::Zero(m, m);
  for (Index j = 0; j < m; ++j) {
    Scalar d = gram(j, j);
    for (Index k = 0; k < j; ++k) d -= r(k, j) * r(k, j);
    if (!(d > Scalar(kAffinePivotTolerance) * gram(j, j))) throw DegenerateSetError(j);
    r(j, j) = std::sqrt(d);
    for (Index i = j + 1; i < m; ++i) {
      Scalar s = gram(j, i);
      for (Index k = 0; k < j; ++k) s -= r(k, j) * r(k, i);
      r(j, i) = s / r(j, j);
    }
  }
  return detail::solve_from_factor<Scalar>(pts, r, m);
}

/// Largest violation of the affine-minimizer property v.y = ||y||^2 over
/// the input points; a direct residual check used by tests.
template <typename Derived, typename Scalar>
Scalar affine_property_residual(const Eigen::MatrixBase<Derived>& points,
                                const AffineSolution<Scalar>& sol) {
  const Scalar norm_sq = sol.point.squaredNorm();
  return ((points.transpose() * sol.point).array() - norm_sq).abs().maxCoeff();
}

/// Maintains the triangular factor of the lifted Gram matrix under
/// single-point insertion and deletion, the access pattern of Wolfe's
/// iteration (one insert per major cycle, deletions in minor cycles).
/// Updates cost O(m^2) against O(m^3) for refactorization.
template <typename Scalar>
class IncrementalAffineMinimizer {
 public:
  explicit IncrementalAffineMinimizer(Index dimension)
      : n_(dimension),
        points_(MatrixX<Scalar>::Zero(dimension, dimension + 1)),
        r_(MatrixX<Scalar>::Zero(dimension + 1, dimension + 1)) {
    if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  }

  Index size() const { return m_; }
  Index dimension() const { return n_; }
  auto points() const { return points_.leftCols(m_); }
  auto point(Index k) const { return points_.col(k); }

  /// Appends a point; returns false (without modifying the state) when
  /// the new point is affinely dependent on the current set.
  bool try_insert(const Eigen::Ref<const VectorX<Scalar>>& p) {
    if (p.size() != n_) throw std::invalid_argument("point has wrong dimension");
    if (m_ == n_ + 1) return false;  // the affine hull is already full-dimensional
    const Scalar lifted_sq = p.squaredNorm() + Scalar(1);
    VectorX<Scalar> col(m_);
    if (m_ > 0) {
      col.noalias() = points_.leftCols(m_).transpose() * p;
      col.array() += Scalar(1);
      r_.topLeftCorner(m_, m_).template triangularView<Eigen::Upper>().transpose().solveInPlace(
          col);
    }
    const Scalar pivot_sq = lifted_sq - col.squaredNorm();
    if (!(pivot_sq > Scalar(kAffinePivotTolerance) * lifted_sq)) return false;
    points_.col(m_) = p;
    r_.col(m_).head(m_) = col;
    r_(m_, m_) = std::sqrt(pivot_sq);
    ++m_;
    return true;
  }

  /// Removes the k-th point and restores the factor with Givens
  /// rotations on the trailing Hessenberg block.
  void remove(Index k) {
    if (k < 0 || k >= m_) throw std::out_of_range("point index out of range");
    const Index last = m_ - 1;
    for (Index j = k; j < last; ++j) {
      points_.col(j) = points_.col(j + 1);
      r_.col(j).head(m_) = r_.col(j + 1).head(m_);
    }
    --m_;
    for (Index j = k; j < m_; ++j) {
      const Scalar a = r_(j, j);
      const Scalar b = r_(j + 1, j);
      const Scalar h = std::hypot(a, b);
      if (h == Scalar(0)) continue;
      const Scalar c = a / h;
      const Scalar s = b / h;
      for (Index col = j; col < m_; ++col) {
        const Scalar rj = r_(j, col);
        const Scalar rj1 = r_(j + 1, col);
        r_(j, col) = c * rj + s * rj1;
        r_(j + 1, col) = -s * rj + c * rj1;
      }
    }
    r_.row(m_).head(m_).setZero();
  }

  /// Minimum-norm point of the affine hull of the current set.
  AffineSolution<Scalar> solve() const {
    if (m_ == 0) throw std::logic_error("no points inserted");
    return detail::solve_from_factor<Scalar>(points_, r_, m_);
  }

  /// Refactorizes from the stored points; throws DegenerateSetError if
  /// accumulated updates have driven the set numerically dependent.
  void rebuild() {
    const MatrixX<Scalar> pts = points_.leftCols(m_);
    const Index m = m_;
    m_ = 0;
    for (Index j = 0; j < m; ++j) {
      if (!try_insert(pts.col(j))) {
        m_ = 0;
        throw DegenerateSetError(j);
      }
    }
  }

 private:
  Index n_;
  Index m_ = 0;
  MatrixX<Scalar> points_;
  MatrixX<Scalar> r_;
};

}  // namespace minnorm
