#include "minnorm/linear_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace minnorm {

std::vector<int> ascending_order(const Eigen::Ref<const Vector>& x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] < x[b]; });
  return order;
}

Vertex greedy_vertex(const SubmodularOracle& oracle, const Eigen::Ref<const Vector>& x) {
  const int n = oracle.ground_size();
  if (x.size() != n) throw std::invalid_argument("direction has wrong dimension");
  if (!x.allFinite()) throw std::invalid_argument("direction must be finite");

  Vertex v;
  v.order = ascending_order(x);
  v.coords.resize(n);
  Subset prefix = Subset::empty_set(n);
  double prev = 0.0;  // f(empty) of the normalized function
  for (int i = 0; i < n; ++i) {
    prefix.add(v.order[i]);
    double cur = oracle(prefix);
    v.coords[v.order[i]] = cur - prev;
    prev = cur;
  }
  return v;
}

bool verify_membership(const SubmodularOracle& oracle, const Eigen::Ref<const Vector>& x,
                       double tol) {
  const int n = oracle.ground_size();
  if (x.size() != n) throw std::invalid_argument("point has wrong dimension");
  if (n > 25)
    throw std::invalid_argument("membership check enumerates 2^n subsets; refusing n > 25");

  if (std::abs(x.sum() - oracle.full_value()) > tol) return false;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask + 1 < limit; ++mask) {
    double xs = 0.0;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) xs += x[i];
    if (xs > oracle(Subset::from_mask(n, mask)) + tol) return false;
  }
  return true;
}

double BasePolytopeOracle::norm_bound() const {
  // Every coordinate of a greedy vertex lies in [-F, F].
  return std::sqrt(static_cast<double>(oracle_.ground_size())) * oracle_.marginal_bound();
}

ExplicitPolytopeOracle::ExplicitPolytopeOracle(Matrix vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.cols() == 0) throw std::invalid_argument("polytope needs at least one vertex");
  if (!vertices_.allFinite()) throw std::invalid_argument("vertices must be finite");
  norm_bound_ = vertices_.colwise().norm().maxCoeff();
}

Vector ExplicitPolytopeOracle::do_minimize(const Eigen::Ref<const Vector>& direction) {
  if (direction.size() != vertices_.rows())
    throw std::invalid_argument("direction has wrong dimension");
  Index best = 0;
  double best_val = direction.dot(vertices_.col(0));
  for (Index j = 1; j < vertices_.cols(); ++j) {
    double val = direction.dot(vertices_.col(j));
    if (val < best_val) {
      best_val = val;
      best = j;
    }
  }
  return vertices_.col(best);
}

}  // namespace minnorm
