#include "minnorm/wolfe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace minnorm {

const char* to_string(Termination t) {
  switch (t) {
    case Termination::kNormal:
      return "normal";
    case Termination::kIterationCap:
      return "iteration_cap";
    case Termination::kStall:
      return "stall";
  }
  return "unknown";
}

ActiveSet::ActiveSet(int dimension, bool incremental_affine)
    : incremental_(incremental_affine), factor_(dimension) {}

void ActiveSet::reset(const Vector& v0) {
  factor_ = IncrementalAffineMinimizer<double>(dimension());
  ids_.clear();
  next_id_ = 0;
  if (!factor_.try_insert(v0))
    throw std::invalid_argument("start vertex rejected");  // cannot happen: single point
  ids_.push_back(next_id_++);
  lambda_ = Vector::Ones(1);
  x_ = v0;
}

std::optional<int> ActiveSet::find_vertex(const Eigen::Ref<const Vector>& q, double tol) const {
  const double scale = std::max(1.0, q.lpNorm<Eigen::Infinity>());
  for (int j = 0; j < size(); ++j) {
    if ((factor_.point(j) - q).lpNorm<Eigen::Infinity>() <= tol * scale) return j;
  }
  return std::nullopt;
}

bool ActiveSet::insert(const Eigen::Ref<const Vector>& q) {
  if (!factor_.try_insert(q)) return false;
  ids_.push_back(next_id_++);
  lambda_.conservativeResize(size());
  lambda_[size() - 1] = 0.0;
  return true;
}

AffineSolution<double> ActiveSet::affine_minimize() const {
  if (incremental_) return factor_.solve();
  return affine_minimizer(factor_.points());
}

void ActiveSet::accept(const AffineSolution<double>& sol) {
  lambda_ = sol.coefficients.cwiseMax(0.0);
  lambda_ /= lambda_.sum();
  x_ = sol.point;
}

ActiveSet::ThetaMove ActiveSet::theta_move(const AffineSolution<double>& sol) {
  const Vector& alpha = sol.coefficients;
  double theta = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i) {
    if (alpha[i] < -kNegativeAlphaTol)
      theta = std::min(theta, lambda_[i] / (lambda_[i] - alpha[i]));
  }
  if (!(theta >= 0.0 && theta < 1.0))
    throw NumericalBreakdownError("line-search parameter " + std::to_string(theta) +
                                  " outside [0,1)");

  x_ = theta * sol.point + (1.0 - theta) * x_;
  lambda_ = theta * alpha + (1.0 - theta) * lambda_;

  ThetaMove move;
  move.theta = theta;
  for (int i = size() - 1; i >= 0; --i) {
    if (lambda_[i] <= kLambdaDeleteTol) {
      factor_.remove(i);
      ids_.erase(ids_.begin() + i);
      const int m = static_cast<int>(lambda_.size());
      for (int j = i; j + 1 < m; ++j) lambda_[j] = lambda_[j + 1];
      lambda_.conservativeResize(m - 1);
      ++move.deleted;
    }
  }
  if (move.deleted == 0)
    throw NumericalBreakdownError("minor pass deleted no points");
  lambda_ /= lambda_.sum();
  return move;
}

void ActiveSet::recompute_x() { x_ = factor_.points() * lambda_; }

void ActiveSet::set_coefficients(const Vector& lambda) {
  if (lambda.size() != size()) throw std::invalid_argument("coefficient count mismatch");
  if (lambda.minCoeff() < 0.0 || std::abs(lambda.sum() - 1.0) > 1e-9)
    throw std::invalid_argument("coefficients must be a convex combination");
  lambda_ = lambda;
  recompute_x();
}

bool ActiveSet::contains_id(std::int64_t id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

namespace {

std::int64_t automatic_cap(int n, double q_bound, double epsilon) {
  if (epsilon <= 0.0 || q_bound <= 0.0) return std::int64_t{1} << 62;
  const double bound = 64.0 * n * q_bound * q_bound / (epsilon * epsilon);
  if (bound >= 9e18) return std::int64_t{1} << 62;
  return std::max<std::int64_t>(1000, static_cast<std::int64_t>(bound));
}

bool strictly_decreased(double before, double after) {
  return after < before + 1e-14 * std::max(1.0, before);
}

}  // namespace

WolfeSolver::WolfeSolver(LinearOracle& oracle, WolfeOptions options)
    : oracle_(oracle),
      options_(std::move(options)),
      active_(oracle.dimension(), options_.incremental_affine) {
  if (!(options_.epsilon >= 0.0) || !std::isfinite(options_.epsilon))
    throw std::invalid_argument("epsilon must be finite and nonnegative");
  max_iterations_ = options_.max_iterations > 0
                        ? options_.max_iterations
                        : automatic_cap(oracle_.dimension(), oracle_.norm_bound(),
                                        options_.epsilon);
  result_.epsilon = options_.epsilon;

  Vector v0;
  if (options_.start) {
    if (options_.start->size() != oracle_.dimension())
      throw std::invalid_argument("start vertex has wrong dimension");
    v0 = *options_.start;
  } else {
    ++result_.lo_calls;
    v0 = oracle_.minimize(Vector::Ones(oracle_.dimension()));
  }
  active_.reset(v0);
}

void WolfeSolver::emit(IterationRecord rec) {
  rec.iter = result_.iterations;
  ++result_.iterations;
  if (rec.kind == CycleKind::kMajor)
    ++result_.major_cycles;
  else
    ++result_.minor_cycles;
  if (!strictly_decreased(rec.norm_sq_before, rec.norm_sq_after))
    ++result_.monitor.strict_decrease_violations;
  result_.monitor.max_active_size =
      std::max(result_.monitor.max_active_size, std::max(rec.active_before, rec.active_after));
  if (options_.record_trace) result_.trace.push_back(rec);

  if (options_.drift_recompute_period > 0 &&
      result_.iterations % options_.drift_recompute_period == 0)
    active_.recompute_x();
}

double WolfeSolver::certificate_probe() {
  ++result_.lo_calls;
  Vector q = oracle_.minimize(active_.x());
  return active_.norm_sq() - active_.x().dot(q);
}

void WolfeSolver::finalize(Termination t, double certificate, std::string stall_reason) {
  result_.termination = t;
  result_.delta_certificate = certificate;
  result_.stall_reason = std::move(stall_reason);
  result_.x = active_.x();
  done_ = true;
}

WolfeSolver::StepOutcome WolfeSolver::step() {
  if (done_) return StepOutcome::kTerminated;

  // Probe: q minimizes x.p over the polytope.
  ++result_.lo_calls;
  const Vector x_start = active_.x();
  const double norm_sq_start = x_start.squaredNorm();
  Vector q = oracle_.minimize(x_start);
  last_delta_ = norm_sq_start - x_start.dot(q);

  // The just-added vertex of the previous cycle must still be active.
  if (pending_vertex_id_ >= 0 && !active_.contains_id(pending_vertex_id_))
    ++result_.monitor.new_vertex_dropped_events;
  pending_vertex_id_ = -1;

  if (last_delta_ <= options_.epsilon * options_.epsilon) {
    finalize(Termination::kNormal, last_delta_, {});
    return StepOutcome::kTerminated;
  }

  // A returned vertex that is already active cannot improve x: x is the
  // affine minimizer of S, so x.q = ||x||^2 on S up to roundoff and the
  // failed test above is floating-point noise. Stop with the honest
  // certificate instead of looping.
  if (active_.find_vertex(q, kDuplicateVertexTol)) {
    finalize(Termination::kStall, last_delta_,
             "oracle returned an already-active vertex without meeting the termination test");
    return StepOutcome::kTerminated;
  }
  if (!active_.insert(q)) {
    finalize(Termination::kStall, last_delta_,
             "new vertex is affinely dependent on the active set");
    return StepOutcome::kTerminated;
  }
  pending_vertex_id_ = active_.last_inserted_id();
  const std::int64_t cycle = result_.major_cycles;

  int minors_this_cycle = 0;
  while (true) {
    AffineSolution<double> sol;
    try {
      sol = active_.affine_minimize();
    } catch (const DegenerateSetError& e) {
      finalize(Termination::kStall, certificate_probe(),
               std::string("affine subproblem became degenerate: ") + e.what());
      return StepOutcome::kTerminated;
    }

    if (sol.coefficients.minCoeff() >= -kNegativeAlphaTol) {
      IterationRecord rec;
      rec.cycle = cycle;
      rec.kind = CycleKind::kMajor;
      rec.norm_sq_before = active_.norm_sq();
      rec.norm_sq_after = sol.point.squaredNorm();
      rec.active_before = active_.size();
      rec.active_after = active_.size();
      rec.delta_x_q = last_delta_;
      rec.minor_in_cycle = minors_this_cycle;
      active_.accept(sol);
      emit(rec);
      break;
    }

    IterationRecord rec;
    rec.cycle = cycle;
    rec.kind = CycleKind::kMinor;
    rec.norm_sq_before = active_.norm_sq();
    rec.active_before = active_.size();
    ActiveSet::ThetaMove move = active_.theta_move(sol);
    rec.norm_sq_after = active_.norm_sq();
    rec.active_after = active_.size();
    rec.theta = move.theta;
    ++minors_this_cycle;
    emit(rec);

    if (result_.iterations >= max_iterations_) {
      finalize(Termination::kIterationCap, certificate_probe(), {});
      return StepOutcome::kTerminated;
    }
  }

  if (result_.iterations >= max_iterations_) {
    finalize(Termination::kIterationCap, certificate_probe(), {});
    return StepOutcome::kTerminated;
  }

  // A cycle that moved x by essentially nothing will reproduce the same
  // probe forever; report the current certificate instead.
  if (norm_sq_start - active_.norm_sq() < kStallRelativeProgress * norm_sq_start) {
    finalize(Termination::kStall, certificate_probe(),
             "major cycle made no measurable progress");
    return StepOutcome::kTerminated;
  }
  return StepOutcome::kContinued;
}

WolfeResult WolfeSolver::run() {
  while (step() == StepOutcome::kContinued) {
  }
  return result_;
}

WolfeResult min_norm_point(LinearOracle& oracle, const WolfeOptions& options) {
  WolfeSolver solver(oracle, options);
  return solver.run();
}

void write_trace_csv(std::ostream& out, const WolfeResult& result) {
  out << "iter,kind,norm_sq,active_size,delta,theta\n";
  out.precision(17);
  for (const IterationRecord& rec : result.trace) {
    out << rec.iter << ',' << (rec.kind == CycleKind::kMajor ? "major" : "minor") << ','
        << rec.norm_sq_after << ',' << rec.active_after << ',';
    if (rec.kind == CycleKind::kMajor) out << rec.delta_x_q;
    out << ',';
    if (rec.kind == CycleKind::kMinor) out << rec.theta;
    out << '\n';
  }
}

TraceCheckReport check_trace(const WolfeResult& result, int dimension) {
  TraceCheckReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };

  const auto& trace = result.trace;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const IterationRecord& rec = trace[i];
    if (!strictly_decreased(rec.norm_sq_before, rec.norm_sq_after))
      fail("record " + std::to_string(rec.iter) + ": norm did not strictly decrease");
    if (i + 1 < trace.size() &&
        !(trace[i + 1].norm_sq_before <= rec.norm_sq_after + 1e-9 * std::max(1.0, rec.norm_sq_after)))
      fail("record " + std::to_string(rec.iter) + ": norm rose between records");
    if (std::max(rec.active_before, rec.active_after) > dimension)
      fail("record " + std::to_string(rec.iter) + ": active set exceeded the dimension");
    if (rec.kind == CycleKind::kMinor && rec.active_after > rec.active_before - 1)
      fail("record " + std::to_string(rec.iter) + ": minor pass deleted nothing");
  }
  if (result.monitor.new_vertex_dropped_events > 0)
    fail("a just-added vertex was dropped before the next major cycle");
  if (result.monitor.strict_decrease_violations > 0 && trace.empty())
    fail("online monitor observed a norm increase");

  // Window property: every 3n+1 consecutive records contain a major
  // record whose cycle had at most one minor pass.
  const std::int64_t window = 3 * static_cast<std::int64_t>(dimension) + 1;
  if (static_cast<std::int64_t>(trace.size()) >= window) {
    std::vector<std::int64_t> good_positions;
    for (const IterationRecord& rec : trace)
      if (rec.kind == CycleKind::kMajor && rec.minor_in_cycle <= 1)
        good_positions.push_back(rec.iter);
    std::int64_t prev = -1;
    for (std::int64_t pos : good_positions) {
      if (pos - prev > window)
        fail("records (" + std::to_string(prev) + ", " + std::to_string(pos) +
             "] form a window without a good major cycle");
      prev = pos;
    }
    if (static_cast<std::int64_t>(trace.size()) - prev > window)
      fail("trailing records form a window without a good major cycle");
  }
  return report;
}

}  // namespace minnorm
