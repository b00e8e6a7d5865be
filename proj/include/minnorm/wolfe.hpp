#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minnorm/affine_minimizer.hpp"
#include "minnorm/linear_oracle.hpp"
#include "minnorm/types.hpp"

namespace minnorm {

/// Numerical invariant violation inside the solver (theta outside [0,1),
/// a minor pass that deletes nothing).
class NumericalBreakdownError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CycleKind { kMajor, kMinor };
enum class Termination { kNormal, kIterationCap, kStall };

const char* to_string(Termination t);

/// Scalar tolerances of the solver. The algorithm's exact-arithmetic
/// sign tests need explicit thresholds in floating point.
inline constexpr double kNegativeAlphaTol = 1e-12;  // alpha_i below -this counts as negative
inline constexpr double kLambdaDeleteTol = 1e-12;   // lambda_i at or below this is deleted
inline constexpr double kStallRelativeProgress = 1e-14;
inline constexpr double kDuplicateVertexTol = 1e-12;

/// One x-update of the solver. A major cycle with k corrective passes
/// emits k minor records followed by one major record; norms refer to
/// the update the record represents.
struct IterationRecord {
  std::int64_t iter = 0;   // record index, 0-based
  std::int64_t cycle = 0;  // major-cycle number the record belongs to
  CycleKind kind = CycleKind::kMajor;
  double norm_sq_before = 0.0;
  double norm_sq_after = 0.0;
  int active_before = 0;
  int active_after = 0;
  double delta_x_q = 0.0;  // major records: Delta(x, q) at the cycle's probe
  double theta = 0.0;      // minor records: the line-search parameter
  int minor_in_cycle = 0;  // major records: corrective passes in this cycle
};

/// Online counters kept on every run; cheap scalars only.
struct TraceMonitor {
  int strict_decrease_violations = 0;
  int no_deletion_events = 0;
  int new_vertex_dropped_events = 0;  // just-added vertex missing at next probe
  int max_active_size = 0;
};

struct WolfeOptions {
  double epsilon = 1e-9;
  /// <= 0 selects an automatic cap derived from the convergence bound.
  std::int64_t max_iterations = 0;
  /// Optional start vertex; defaults to the oracle's minimizer along the
  /// all-ones direction, fixed for reproducibility.
  std::optional<Vector> start;
  bool record_trace = true;
  /// false refactorizes the affine subproblem from scratch on every call
  /// (the cross-check path for the incremental factorization).
  bool incremental_affine = true;
  /// Re-express x from (vertices, lambda) every this many records to
  /// cancel floating-point drift.
  int drift_recompute_period = 50;
};

struct WolfeResult {
  Vector x;
  /// Delta(x) = ||x||^2 - x.q from the solver's last oracle probe; at
  /// normal termination this is at most epsilon^2.
  double delta_certificate = 0.0;
  Termination termination = Termination::kNormal;
  std::int64_t major_cycles = 0;  // vertex-adding cycles completed
  std::int64_t minor_cycles = 0;
  std::int64_t iterations = 0;  // = major_cycles + minor_cycles
  std::int64_t lo_calls = 0;
  double epsilon = 0.0;
  TraceMonitor monitor;
  std::vector<IterationRecord> trace;
  std::string stall_reason;
};

/// The active set S: vertices as columns, convex coefficients lambda,
/// and the iterate x = sum lambda_i q_i.
class ActiveSet {
 public:
  ActiveSet(int dimension, bool incremental_affine = true);

  void reset(const Vector& v0);

  int size() const { return static_cast<int>(factor_.size()); }
  int dimension() const { return static_cast<int>(factor_.dimension()); }
  const Vector& x() const { return x_; }
  const Vector& lambda() const { return lambda_; }
  auto vertices() const { return factor_.points(); }
  double norm_sq() const { return x_.squaredNorm(); }

  /// Index of a stored vertex matching q within `tol` relative infinity
  /// distance, if any.
  std::optional<int> find_vertex(const Eigen::Ref<const Vector>& q, double tol) const;

  /// Appends q with coefficient 0; false when q is affinely dependent on
  /// the current set (state unchanged).
  bool insert(const Eigen::Ref<const Vector>& q);

  /// Affine minimizer of the current vertex set.
  AffineSolution<double> affine_minimize() const;

  /// Adopts a feasible affine minimizer: x = y, lambda = alpha clamped
  /// at zero and renormalized.
  void accept(const AffineSolution<double>& sol);

  struct ThetaMove {
    double theta = 0.0;
    int deleted = 0;
  };

  /// The corrective step: moves x to the boundary point between x and
  /// the infeasible affine minimizer, mixes lambda accordingly, then
  /// deletes every point whose coefficient fell to zero. Throws
  /// NumericalBreakdownError when theta leaves [0,1) or nothing is
  /// deleted.
  ThetaMove theta_move(const AffineSolution<double>& sol);

  /// x = V lambda, cancelling accumulated drift.
  void recompute_x();

  /// Overrides the convex coefficients (size-checked, nonnegative, sum 1
  /// within 1e-9) and re-expresses x; lets tests drive mid-cycle states.
  void set_coefficients(const Vector& lambda);

  std::int64_t id_of(int index) const { return ids_[index]; }
  std::int64_t last_inserted_id() const { return next_id_ - 1; }
  bool contains_id(std::int64_t id) const;

 private:
  bool incremental_;
  IncrementalAffineMinimizer<double> factor_;
  Vector lambda_;
  Vector x_;
  std::vector<std::int64_t> ids_;
  std::int64_t next_id_ = 0;
};

/// Wolfe's active-set method for the minimum-norm point of a polytope
/// given through a linear-optimization oracle.
///
/// Each major cycle probes the oracle at x, stops when
/// ||x||^2 <= x.q + epsilon^2, and otherwise adds q and re-minimizes
/// over the affine hull of S, running corrective (minor) passes until
/// the minimizer lies in the convex hull. `major_cycles` counts
/// vertex-adding cycles; the terminating probe is not counted.
class WolfeSolver {
 public:
  WolfeSolver(LinearOracle& oracle, WolfeOptions options);

  enum class StepOutcome { kContinued, kTerminated };

  /// Runs one major cycle (probe, then add-and-reminimize unless the
  /// termination test fires).
  StepOutcome step();

  WolfeResult run();

  const ActiveSet& active_set() const { return active_; }
  /// Delta(x, q) from the most recent probe.
  double last_delta() const { return last_delta_; }

 private:
  void emit(IterationRecord rec);
  void finalize(Termination t, double certificate, std::string stall_reason);
  double certificate_probe();

  LinearOracle& oracle_;
  WolfeOptions options_;
  std::int64_t max_iterations_;
  ActiveSet active_;
  WolfeResult result_;
  double last_delta_ = 0.0;
  std::int64_t pending_vertex_id_ = -1;
  bool done_ = false;
};

/// Convenience wrapper: construct, run, return.
WolfeResult min_norm_point(LinearOracle& oracle, const WolfeOptions& options = {});

/// Writes the iteration trace as CSV with columns
/// iter,kind,norm_sq,active_size,delta,theta.
void write_trace_csv(std::ostream& out, const WolfeResult& result);

/// Post-hoc validation of a recorded run: strict norm decrease, active
/// set size within bounds, minor passes delete, the just-added vertex
/// survival counter, and the good-major-cycle window property (every
/// 3n+1 consecutive records contain a major cycle with at most one
/// minor pass).
struct TraceCheckReport {
  bool ok = true;
  std::vector<std::string> violations;
};

TraceCheckReport check_trace(const WolfeResult& result, int dimension);

}  // namespace minnorm
