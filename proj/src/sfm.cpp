#include "minnorm/sfm.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace minnorm {

Subset robust_round(const Eigen::Ref<const Vector>& x, double epsilon) {
  const int n = static_cast<int>(x.size());
  if (n == 0) return Subset(0);
  if (!x.allFinite()) throw std::invalid_argument("point must be finite");
  const std::vector<int> order = ascending_order(x);
  const double min_jump = epsilon / n;
  for (int k = 0; k < n; ++k) {
    const bool nonnegative_next = x[order[k]] >= 0.0;           // C1 at index k+1
    const bool jump_ok = k == 0 || x[order[k]] - x[order[k - 1]] >= min_jump;  // C2
    if (nonnegative_next && jump_ok) {
      Subset s(n);
      for (int i = 0; i < k; ++i) s.add(order[i]);
      return s;
    }
  }
  return Subset::full_set(n);
}

double edmonds_lower_bound(const Eigen::Ref<const Vector>& x) {
  double sum = 0.0;
  for (Index i = 0; i < x.size(); ++i)
    if (x[i] < 0.0) sum += x[i];
  return sum;
}

Subset prefix_sweep(const Eigen::Ref<const Vector>& x, const SubmodularOracle& oracle,
                    const Subset& candidate) {
  const int n = oracle.ground_size();
  if (x.size() != n || candidate.ground_size() != n)
    throw std::invalid_argument("dimension mismatch");
  Subset best = candidate;
  double best_value = oracle(candidate);
  Subset prefix(n);
  if (oracle(prefix) < best_value) {  // the empty prefix
    best = prefix;
    best_value = 0.0;
  }
  for (int i : ascending_order(x)) {
    prefix.add(i);
    const double value = oracle(prefix);
    if (value < best_value) {
      best = prefix;
      best_value = value;
    }
  }
  return best;
}

double telescoping_residual(const SubmodularOracle& oracle, const Eigen::Ref<const Vector>& x) {
  const int n = oracle.ground_size();
  if (x.size() != n) throw std::invalid_argument("dimension mismatch");
  const std::vector<int> order = ascending_order(x);
  Subset prefix(n);
  double residual = 0.0;
  double prefix_mass = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    prefix.add(order[i]);
    prefix_mass += x[order[i]];
    residual += (x[order[i + 1]] - x[order[i]]) * (oracle(prefix) - prefix_mass);
  }
  return residual;
}

SfmResult minimize(const SubmodularOracle& oracle, const SfmOptions& options) {
  const int n = oracle.ground_size();
  SfmResult result;
  if (n == 0) {
    result.min_set = Subset(0);
    result.x_final = Vector(0);
    return result;
  }

  const std::int64_t eo_before = oracle.eo_count();
  const double epsilon =
      options.epsilon.value_or(oracle.integer_valued()
                                   ? 1.0 / (4.0 * n)
                                   : 1e-6 * std::sqrt(static_cast<double>(n)) *
                                         oracle.marginal_bound());

  BasePolytopeOracle lo(oracle);
  WolfeOptions wolfe_options;
  wolfe_options.epsilon = epsilon;
  wolfe_options.max_iterations = options.max_iterations;
  wolfe_options.record_trace = options.record_trace;
  result.wolfe = min_norm_point(lo, wolfe_options);

  result.x_final = result.wolfe.x;
  result.epsilon_used = epsilon;
  result.termination = result.wolfe.termination;
  result.iterations = result.wolfe.iterations;
  result.major_cycles = result.wolfe.major_cycles;
  result.minor_cycles = result.wolfe.minor_cycles;

  Subset rounded = robust_round(result.x_final, epsilon);
  result.min_set = options.sweep_prefixes
                       ? prefix_sweep(result.x_final, oracle, rounded)
                       : rounded;
  result.min_value = oracle(result.min_set);
  result.lower_bound = edmonds_lower_bound(result.x_final);
  result.gap = result.min_value - result.lower_bound;
  result.eo_calls = oracle.eo_count() - eo_before;
  return result;
}

std::string to_json_line(const SfmResult& result, const std::string& instance_name) {
  nlohmann::json j;
  if (!instance_name.empty()) j["instance"] = instance_name;
  j["n"] = result.min_set.ground_size();
  nlohmann::json set = nlohmann::json::array();
  for (int e : result.min_set.elements()) set.push_back(e + 1);
  j["min_set"] = std::move(set);
  j["min_value"] = result.min_value;
  j["lower_bound"] = result.lower_bound;
  j["gap"] = result.gap;
  j["epsilon"] = result.epsilon_used;
  j["eo_calls"] = result.eo_calls;
  j["iterations"] = {{"major", result.major_cycles},
                     {"minor", result.minor_cycles},
                     {"total", result.iterations}};
  j["lo_calls"] = result.wolfe.lo_calls;
  j["delta_certificate"] = result.wolfe.delta_certificate;
  j["terminated"] = to_string(result.termination);
  return j.dump();
}

}  // namespace minnorm
