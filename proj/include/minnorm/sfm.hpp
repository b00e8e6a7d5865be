#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "minnorm/linear_oracle.hpp"
#include "minnorm/submodular.hpp"
#include "minnorm/subset.hpp"
#include "minnorm/types.hpp"
#include "minnorm/wolfe.hpp"

namespace minnorm {

struct SfmOptions {
  /// Solver accuracy. Defaults to 1/(4n) for integer-valued oracles
  /// (exact minimization) and to 1e-6 sqrt(n) F otherwise (heuristic).
  std::optional<double> epsilon;
  std::int64_t max_iterations = 0;  // <= 0: automatic
  bool record_trace = true;
  /// Strengthen the rounded set by sweeping all prefixes of the sorted
  /// order; costs at most n+1 evaluations and never returns worse.
  bool sweep_prefixes = true;
};

struct SfmResult {
  Subset min_set;
  double min_value = 0.0;    // oracle value of min_set, re-evaluated
  double lower_bound = 0.0;  // sum of the negative coordinates of x_final
  double gap = 0.0;          // min_value - lower_bound
  Vector x_final;
  double epsilon_used = 0.0;
  std::int64_t eo_calls = 0;
  std::int64_t iterations = 0;
  std::int64_t major_cycles = 0;
  std::int64_t minor_cycles = 0;
  Termination termination = Termination::kNormal;
  WolfeResult wolfe;
};

/// Smallest-k rounding of an approximate min-norm point: sort x
/// ascending (stable by index) and return the first k positions, where
/// k is the smallest index with x_{k+1} >= 0 and x_{k+1} - x_k >= eps/n.
/// k = 0 (empty set) applies when x_1 >= 0; if no k qualifies, the full
/// ground set is returned.
Subset robust_round(const Eigen::Ref<const Vector>& x, double epsilon);

/// Sum of the negative coordinates: a lower bound on min f for any
/// point of the base polytope, tight at the optimum.
double edmonds_lower_bound(const Eigen::Ref<const Vector>& x);

/// Best of `candidate` and every prefix of the sorted order of x.
/// Ties keep the earlier candidate, so the result never differs from
/// `candidate` unless strictly better.
Subset prefix_sweep(const Eigen::Ref<const Vector>& x, const SubmodularOracle& oracle,
                    const Subset& candidate);

/// sum_{i=1}^{n-1} (x_{(i+1)} - x_{(i)}) (f([i]) - x([i])) over the
/// sorted order; at most epsilon^2 for a certified min-norm iterate.
/// Costs n-1 evaluations.
double telescoping_residual(const SubmodularOracle& oracle, const Eigen::Ref<const Vector>& x);

/// End-to-end minimization: min-norm point on the base polytope,
/// rounding, prefix sweep, and the duality-gap certificate.
SfmResult minimize(const SubmodularOracle& oracle, const SfmOptions& options = {});

/// One-line structured record of a result (line-delimited JSON).
std::string to_json_line(const SfmResult& result, const std::string& instance_name = "");

}  // namespace minnorm
