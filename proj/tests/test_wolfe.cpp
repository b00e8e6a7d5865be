#include <doctest.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "minnorm/brute_force.hpp"
#include "minnorm/functions.hpp"
#include "minnorm/rng.hpp"
#include "minnorm/wolfe.hpp"

using namespace minnorm;

namespace {

OraclePtr two_element_symmetric() {
  return std::make_shared<FunctionOracle>(
      2, [](const Subset& s) { return s.size() == 1 ? 1.0 : 0.0; }, true);
}

}  // namespace

TEST_CASE("one major cycle on the two-vertex segment") {
  auto oracle = two_element_symmetric();
  BasePolytopeOracle lo(*oracle);
  for (double eps : {0.5, 1e-9, 0.0}) {
    WolfeOptions options;
    options.epsilon = eps;
    options.start = (Vector(2) << 1, -1).finished();
    const WolfeResult result = min_norm_point(lo, options);
    CHECK(result.termination == Termination::kNormal);
    CHECK(result.x.lpNorm<Eigen::Infinity>() <= 1e-14);
    CHECK(result.major_cycles == 1);
    CHECK(result.minor_cycles == 0);
    CHECK(result.delta_certificate <= eps * eps + 1e-15);
  }
}

TEST_CASE("singleton polytope terminates immediately") {
  Vector w(3);
  w << 3, -1, 2;
  ModularOracle oracle(w);
  BasePolytopeOracle lo(oracle);
  const WolfeResult result = min_norm_point(lo, {});
  CHECK(result.termination == Termination::kNormal);
  CHECK(result.x == w);
  CHECK(result.delta_certificate == 0.0);
  CHECK(result.iterations == 0);  // the probe fires during the first cycle
}

TEST_CASE("stepwise major cycles") {
  auto oracle = two_element_symmetric();
  BasePolytopeOracle lo(*oracle);
  WolfeOptions options;
  options.epsilon = 1e-9;
  options.start = (Vector(2) << 1, -1).finished();
  WolfeSolver solver(lo, options);
  CHECK(solver.active_set().size() == 1);

  // First cycle: q = (-1,1) joins S and the affine minimizer is 0.
  CHECK(solver.step() == WolfeSolver::StepOutcome::kContinued);
  CHECK(solver.last_delta() == doctest::Approx(4.0));  // 2 - (-2)
  CHECK(solver.active_set().size() == 2);
  CHECK(solver.active_set().x().lpNorm<Eigen::Infinity>() <= 1e-15);

  // Second probe fires the termination test: Delta(0) = 0.
  CHECK(solver.step() == WolfeSolver::StepOutcome::kTerminated);
  CHECK(solver.last_delta() == 0.0);
}

TEST_CASE("termination on an exact tie") {
  // Probe from x = (0.5, 0.5) returns a vertex with x.q = 0.5 = ||x||^2.
  Matrix vertices(2, 2);
  vertices.col(0) << 1, 0;
  vertices.col(1) << 0, 1;
  ExplicitPolytopeOracle lo(vertices);
  WolfeOptions options;
  options.epsilon = 0.25;
  options.start = vertices.col(0);
  const WolfeResult result = min_norm_point(lo, options);
  CHECK(result.termination == Termination::kNormal);
  CHECK(result.x[0] == doctest::Approx(0.5));
  CHECK(result.x[1] == doctest::Approx(0.5));
  CHECK(result.major_cycles == 1);
  CHECK(result.delta_certificate == 0.0);
}

TEST_CASE("theta move follows the closed form") {
  ActiveSet active(2);
  active.reset((Vector(2) << 1, 0).finished());
  REQUIRE(active.insert((Vector(2) << 0, 1).finished()));
  active.set_coefficients((Vector(2) << 0.5, 0.5).finished());

  AffineSolution<double> sol;
  sol.point = Vector::Zero(2);
  sol.coefficients = (Vector(2) << 1.5, -0.5).finished();
  const auto move = active.theta_move(sol);
  CHECK(move.theta == doctest::Approx(0.5));
  CHECK(move.deleted == 1);
  CHECK(active.size() == 1);
  CHECK(active.lambda()[0] == doctest::Approx(1.0));
}

TEST_CASE("minor pass on a planar triangle") {
  // Points (1,0), (0,1), (0.9,0.9): the affine minimizer of all three is
  // the origin with coefficients (1.125, 1.125, -1.25); from the
  // centroid, theta = 4/19 and x lands on the boundary segment at
  // (0.5, 0.5) with the third point deleted.
  ActiveSet active(2);
  active.reset((Vector(2) << 1, 0).finished());
  REQUIRE(active.insert((Vector(2) << 0, 1).finished()));
  REQUIRE(active.insert((Vector(2) << 0.9, 0.9).finished()));
  active.set_coefficients(Vector::Constant(3, 1.0 / 3.0));

  const auto sol = active.affine_minimize();
  CHECK(sol.point.lpNorm<Eigen::Infinity>() <= 1e-12);
  CHECK(sol.coefficients[0] == doctest::Approx(1.125));
  CHECK(sol.coefficients[1] == doctest::Approx(1.125));
  CHECK(sol.coefficients[2] == doctest::Approx(-1.25));

  const auto move = active.theta_move(sol);
  CHECK(move.theta == doctest::Approx(4.0 / 19.0));
  CHECK(active.size() == 2);
  CHECK(active.x()[0] == doctest::Approx(0.5));
  CHECK(active.x()[1] == doctest::Approx(0.5));

  // The loop guard: the affine minimizer of the survivors is feasible.
  const auto next = active.affine_minimize();
  CHECK(next.coefficients.minCoeff() >= -kNegativeAlphaTol);
  CHECK(next.point[0] == doctest::Approx(0.5));
}

TEST_CASE("epsilon zero terminates exactly at a vertex optimum") {
  // f({1}) = 2, f({2}) = -1, f({1,2}) = 0: vertices (2,-2) and (1,-1);
  // the min-norm point of the segment is the vertex (1,-1).
  auto oracle = std::make_shared<FunctionOracle>(
      2,
      [](const Subset& s) {
        if (s.size() == 2) return 0.0;
        if (s.size() == 0) return 0.0;
        return s.contains(0) ? 2.0 : -1.0;
      },
      true);
  BasePolytopeOracle lo(*oracle);
  WolfeOptions options;
  options.epsilon = 0.0;
  const WolfeResult result = min_norm_point(lo, options);
  CHECK(result.termination == Termination::kNormal);
  CHECK(result.x[0] == 1.0);  // exact: integer marginals all the way
  CHECK(result.x[1] == -1.0);
  CHECK(result.major_cycles == 1);
  CHECK(result.minor_cycles == 1);
}

TEST_CASE("wolfe matches a simplex-grid search over vertex combinations") {
  // Independent ground truth: dense grid over convex combinations of
  // all base-polytope vertices of a 3-element cut instance.
  WeightedGraph g;
  g.num_vertices = 5;
  g.source = 0;
  g.sink = 4;
  g.edges = {{0, 1, 3.0}, {1, 2, 2.0}, {2, 3, 1.0}, {3, 4, 5.0}, {0, 2, 1.0}};
  CutOracle oracle(g);
  REQUIRE(oracle.ground_size() == 3);

  // Enumerate the (at most 6) greedy vertices.
  std::vector<Vector> vertices;
  {
    std::vector<int> perm = {0, 1, 2};
    do {
      Vector v(3);
      Subset prefix(3);
      double prev = 0.0;
      for (int i : perm) {
        prefix.add(i);
        const double cur = oracle(prefix);
        v[i] = cur - prev;
        prev = cur;
      }
      bool seen = false;
      for (const Vector& w : vertices) seen = seen || (w - v).lpNorm<Eigen::Infinity>() == 0.0;
      if (!seen) vertices.push_back(v);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  // Grid over the simplex with step 1/40.
  const int steps = 40;
  double best = std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, int, Vector)> scan = [&](std::size_t j, int left, Vector acc) {
    if (j + 1 == vertices.size()) {
      acc += (static_cast<double>(left) / steps) * vertices[j];
      best = std::min(best, acc.squaredNorm());
      return;
    }
    for (int take = 0; take <= left; ++take)
      scan(j + 1, left - take, acc + (static_cast<double>(take) / steps) * vertices[j]);
  };
  scan(0, steps, Vector::Zero(3));

  BasePolytopeOracle lo(oracle);
  WolfeOptions options;
  options.epsilon = 1e-9;
  const WolfeResult result = min_norm_point(lo, options);
  CHECK(result.termination == Termination::kNormal);
  // The grid point is feasible, so ||x*|| <= grid best; the certificate
  // bounds the other direction.
  CHECK(result.x.squaredNorm() <= best + 1e-12);
  CHECK(best <= result.x.squaredNorm() + 0.1);  // grid resolution slack
}

TEST_CASE("known min-norm fixtures reached within the certificate bound") {
  for (const MinNormFixture& fixture : known_minnorm_cases()) {
    CAPTURE(fixture.name);
    BasePolytopeOracle lo(*fixture.oracle);
    WolfeOptions options;
    options.epsilon = 1e-6;
    const WolfeResult result = min_norm_point(lo, options);
    CHECK(result.termination == Termination::kNormal);
    CHECK(result.x.squaredNorm() <=
          fixture.min_norm_point.squaredNorm() + 2 * options.epsilon * options.epsilon + 1e-10);
    // One extra probe confirms the certificate.
    const Vector q = lo.minimize(result.x);
    CHECK(result.x.squaredNorm() <=
          result.x.dot(q) + options.epsilon * options.epsilon + 1e-10);
  }
}

TEST_CASE("stall on a nearly duplicate vertex") {
  Matrix vertices(2, 2);
  vertices.col(0) << 1, 0;
  vertices.col(1) << 1 - 5e-13, 0;
  ExplicitPolytopeOracle lo(vertices);
  WolfeOptions options;
  options.epsilon = 0.0;
  options.start = vertices.col(0);
  const WolfeResult result = min_norm_point(lo, options);
  CHECK(result.termination == Termination::kStall);
  CHECK(result.delta_certificate == doctest::Approx(5e-13));
  CHECK_FALSE(result.stall_reason.empty());
}

TEST_CASE("stall on an affinely dependent vertex") {
  Matrix vertices(2, 2);
  vertices.col(0) << 1, 1e-7;
  vertices.col(1) << 1, 0;
  ExplicitPolytopeOracle lo(vertices);
  WolfeOptions options;
  options.epsilon = 0.0;
  options.start = vertices.col(0);
  const WolfeResult result = min_norm_point(lo, options);
  CHECK(result.termination == Termination::kStall);
  CHECK(result.stall_reason.find("dependent") != std::string::npos);
}

TEST_CASE("iteration cap reports a partial certificate") {
  IwataOracle oracle(8);
  BasePolytopeOracle lo(oracle);
  WolfeOptions options;
  options.epsilon = 1e-9;
  options.max_iterations = 1;
  const WolfeResult result = min_norm_point(lo, options);
  CHECK(result.termination == Termination::kIterationCap);
  CHECK(result.iterations == 1);
  CHECK(result.delta_certificate > 0.0);
}

TEST_CASE("trace invariants hold on assorted runs") {
  std::vector<OraclePtr> oracles;
  oracles.push_back(std::make_shared<IwataOracle>(7));
  oracles.push_back(std::make_shared<IwataBlockOracle>(9, 3));
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    oracles.push_back(std::make_shared<CutOracle>(random_cut_instance(9, 0.8, 8, seed)));
  oracles.push_back(random_concave_instance(8, 3));
  for (const MinNormFixture& fixture : known_minnorm_cases()) oracles.push_back(fixture.oracle);

  for (const auto& oracle : oracles) {
    const int n = oracle->ground_size();
    BasePolytopeOracle lo(*oracle);
    WolfeOptions options;
    options.epsilon = 1.0 / (4.0 * n);
    const WolfeResult result = min_norm_point(lo, options);
    const TraceCheckReport report = check_trace(result, n);
    CAPTURE(oracle->family());
    if (!report.ok) CAPTURE(report.violations.front());
    CHECK(report.ok);
    CHECK(result.monitor.strict_decrease_violations == 0);
    CHECK(result.monitor.new_vertex_dropped_events == 0);
    CHECK(result.monitor.max_active_size <= n);
    CHECK(result.iterations == result.major_cycles + result.minor_cycles);
    // Final x stays inside the base polytope.
    if (n <= 12) CHECK(verify_membership(*oracle, result.x, 1e-7));
  }
}

TEST_CASE("incremental and from-scratch affine paths agree end to end") {
  IwataOracle oracle(9);
  BasePolytopeOracle lo1(oracle);
  WolfeOptions fast;
  fast.epsilon = 1e-8;
  const WolfeResult a = min_norm_point(lo1, fast);
  BasePolytopeOracle lo2(oracle);
  WolfeOptions scratch = fast;
  scratch.incremental_affine = false;
  const WolfeResult b = min_norm_point(lo2, scratch);
  CHECK(a.iterations == b.iterations);
  CHECK((a.x - b.x).lpNorm<Eigen::Infinity>() <= 1e-9);
}

TEST_CASE("trace CSV export") {
  auto oracle = two_element_symmetric();
  BasePolytopeOracle lo(*oracle);
  WolfeOptions options;
  options.epsilon = 1e-9;
  options.start = (Vector(2) << 1, -1).finished();
  const WolfeResult result = min_norm_point(lo, options);
  std::ostringstream out;
  write_trace_csv(out, result);
  CHECK(out.str().rfind("iter,kind,norm_sq,active_size,delta,theta\n", 0) == 0);
  CHECK(out.str().find("major") != std::string::npos);
}

TEST_CASE("solver rejects invalid options") {
  auto oracle = two_element_symmetric();
  BasePolytopeOracle lo(*oracle);
  WolfeOptions bad;
  bad.epsilon = -1.0;
  CHECK_THROWS_AS(min_norm_point(lo, bad), std::invalid_argument);
  WolfeOptions wrong_start;
  wrong_start.start = Vector::Zero(5);
  CHECK_THROWS_AS(min_norm_point(lo, wrong_start), std::invalid_argument);
}
