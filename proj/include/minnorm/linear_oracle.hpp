#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "minnorm/submodular.hpp"
#include "minnorm/types.hpp"

namespace minnorm {

/// Polytope vertex together with the sorting permutation that produced it
/// (empty for vertices of explicit polytopes).
struct Vertex {
  Vector coords;
  std::vector<int> order;
};

/// Linear-optimization oracle over a polytope: given a direction, return
/// a vertex minimizing the inner product. `norm_bound()` is an upper
/// bound Q on the Euclidean norm of every returned vertex.
class LinearOracle {
 public:
  virtual ~LinearOracle() = default;

  Vector minimize(const Eigen::Ref<const Vector>& direction) {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return do_minimize(direction);
  }

  virtual int dimension() const = 0;
  virtual double norm_bound() const = 0;

  std::int64_t call_count() const { return calls_.load(std::memory_order_relaxed); }

 protected:
  virtual Vector do_minimize(const Eigen::Ref<const Vector>& direction) = 0;

 private:
  std::atomic<std::int64_t> calls_{0};
};

/// Stable ascending order of x by (value, index); the tie-break makes
/// greedy vertices deterministic.
std::vector<int> ascending_order(const Eigen::Ref<const Vector>& x);

/// Edmonds' greedy step: sort x ascending and emit marginal gains along
/// the prefix chain. The result minimizes x.q over the base polytope and
/// costs at most n+1 oracle evaluations.
Vertex greedy_vertex(const SubmodularOracle& oracle, const Eigen::Ref<const Vector>& x);

/// Exhaustive base-polytope membership test: x(A) <= f(A) + tol for all
/// A and |x(V) - f(V)| <= tol. Refuses ground sets larger than 25.
bool verify_membership(const SubmodularOracle& oracle, const Eigen::Ref<const Vector>& x,
                       double tol);

/// Linear-optimization oracle for the base polytope of a submodular
/// function, implemented by the greedy step. Q = sqrt(n) * F.
class BasePolytopeOracle : public LinearOracle {
 public:
  explicit BasePolytopeOracle(const SubmodularOracle& oracle) : oracle_(oracle) {}

  int dimension() const override { return oracle_.ground_size(); }
  double norm_bound() const override;
  const SubmodularOracle& function() const { return oracle_; }

  Vertex greedy(const Eigen::Ref<const Vector>& x) const { return greedy_vertex(oracle_, x); }

 protected:
  Vector do_minimize(const Eigen::Ref<const Vector>& direction) override {
    return greedy_vertex(oracle_, direction).coords;
  }

 private:
  const SubmodularOracle& oracle_;
};

/// Finite vertex list with linear optimization by enumeration; ties go to
/// the lowest column index. Used for solver tests on general polytopes.
class ExplicitPolytopeOracle : public LinearOracle {
 public:
  explicit ExplicitPolytopeOracle(Matrix vertices);

  int dimension() const override { return static_cast<int>(vertices_.rows()); }
  double norm_bound() const override { return norm_bound_; }
  const Matrix& vertices() const { return vertices_; }

 protected:
  Vector do_minimize(const Eigen::Ref<const Vector>& direction) override;

 private:
  Matrix vertices_;  // one vertex per column
  double norm_bound_;
};

}  // namespace minnorm
