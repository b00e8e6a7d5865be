#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minnorm/submodular.hpp"
#include "minnorm/subset.hpp"
#include "minnorm/types.hpp"

namespace minnorm {

/// Exhaustive minimization result; the independent ground truth for
/// small instances.
struct BruteForceResult {
  double min_value = 0.0;
  std::vector<Subset> minimizers;  // every subset achieving min_value
  std::int64_t evaluations = 0;    // 2^n

  bool is_minimizer(const Subset& s) const;
};

/// Enumerates all 2^n subsets in plain binary-counter order. Refuses
/// n > 22.
BruteForceResult brute_min(const SubmodularOracle& oracle);

/// First violation of the diminishing-returns inequality, with all four
/// function values for debuggability.
struct SubmodularityViolation {
  Subset s;
  Subset t;
  int element = 0;
  double f_s = 0.0, f_s_plus = 0.0, f_t = 0.0, f_t_plus = 0.0;
  std::string to_string() const;
};

/// Checks f(S u i) - f(S) >= f(T u i) - f(T) for every S subset of T and
/// i outside T. Returns the first violating triple, or nullopt when the
/// function is submodular. Refuses n > 10.
std::optional<SubmodularityViolation> check_submodular(const SubmodularOracle& oracle);

/// Instances whose minimum-norm point is known analytically.
struct MinNormFixture {
  OraclePtr oracle;
  Vector min_norm_point;
  std::string name;
};

std::vector<MinNormFixture> known_minnorm_cases();

}  // namespace minnorm
