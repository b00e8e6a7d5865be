#include "minnorm/brute_force.hpp"

#include <sstream>
#include <stdexcept>

namespace minnorm {

bool BruteForceResult::is_minimizer(const Subset& s) const {
  for (const Subset& m : minimizers)
    if (m == s) return true;
  return false;
}

BruteForceResult brute_min(const SubmodularOracle& oracle) {
  const int n = oracle.ground_size();
  if (n > 22) throw std::invalid_argument("brute-force enumeration refuses n > 22");
  BruteForceResult result;
  const std::uint64_t limit = std::uint64_t{1} << n;
  result.min_value = 0.0;  // f(empty) of the normalized function
  result.minimizers.push_back(Subset::empty_set(n));
  result.evaluations = static_cast<std::int64_t>(limit);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const Subset s = Subset::from_mask(n, mask);
    const double value = oracle(s);
    if (value < result.min_value) {
      result.min_value = value;
      result.minimizers.clear();
      result.minimizers.push_back(s);
    } else if (value == result.min_value) {
      result.minimizers.push_back(s);
    }
  }
  return result;
}

std::string SubmodularityViolation::to_string() const {
  std::ostringstream os;
  os << "f(S+i) - f(S) < f(T+i) - f(T) for S=" << s.to_string() << " T=" << t.to_string()
     << " i=" << (element + 1) << ": f(S)=" << f_s << " f(S+i)=" << f_s_plus << " f(T)=" << f_t
     << " f(T+i)=" << f_t_plus;
  return os.str();
}

std::optional<SubmodularityViolation> check_submodular(const SubmodularOracle& oracle) {
  const int n = oracle.ground_size();
  if (n > 10) throw std::invalid_argument("submodularity check refuses n > 10");
  const std::uint64_t limit = std::uint64_t{1} << n;
  // Table of all values first: 2^n evaluations, then pure arithmetic.
  std::vector<double> value(limit);
  for (std::uint64_t mask = 0; mask < limit; ++mask)
    value[mask] = oracle(Subset::from_mask(n, mask));

  for (std::uint64_t t = 0; t < limit; ++t) {
    // Enumerate subsets s of t.
    std::uint64_t s = t;
    while (true) {
      for (int i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (t & bit) continue;
        const double lhs = value[s | bit] - value[s];
        const double rhs = value[t | bit] - value[t];
        if (lhs < rhs - 1e-9) {
          SubmodularityViolation v;
          v.s = Subset::from_mask(n, s);
          v.t = Subset::from_mask(n, t);
          v.element = i;
          v.f_s = value[s];
          v.f_s_plus = value[s | bit];
          v.f_t = value[t];
          v.f_t_plus = value[t | bit];
          return v;
        }
      }
      if (s == 0) break;
      s = (s - 1) & t;
    }
  }
  return std::nullopt;
}

std::vector<MinNormFixture> known_minnorm_cases() {
  std::vector<MinNormFixture> fixtures;

  {
    // f({1}) = f({2}) = 1, f({1,2}) = 0: the base polytope is the
    // segment from (1,-1) to (-1,1) and the min-norm point is the origin.
    auto fn = [](const Subset& s) { return static_cast<double>(std::min(s.size(), 2 - s.size())); };
    MinNormFixture f;
    f.oracle = std::make_shared<FunctionOracle>(2, fn, true, "two-element-symmetric");
    f.min_norm_point = Vector::Zero(2);
    f.name = "two-element-symmetric";
    fixtures.push_back(std::move(f));
  }
  {
    // Modular: the base polytope is the single point w.
    Vector w(3);
    w << 3, -1, 2;
    MinNormFixture f;
    f.oracle = std::make_shared<FunctionOracle>(
        3,
        [w](const Subset& s) {
          double sum = 0.0;
          for (int i : s.elements()) sum += w[i];
          return sum;
        },
        true, "modular");
    f.min_norm_point = w;
    f.name = "modular-(3,-1,2)";
    fixtures.push_back(std::move(f));
  }
  {
    // Fully symmetric with f(V) = 0: g(k) = k (n - k), n = 4. The
    // min-norm point is the origin.
    const int n = 4;
    auto fn = [n](const Subset& s) {
      return static_cast<double>(s.size() * (n - s.size()));
    };
    MinNormFixture f;
    f.oracle = std::make_shared<FunctionOracle>(n, fn, true, "symmetric-zero");
    f.min_norm_point = Vector::Zero(n);
    f.name = "symmetric-g(k)=k(4-k)";
    fixtures.push_back(std::move(f));
  }
  {
    // Symmetric with f(V) = 6, n = 3, g = (0, 4, 6, 6): by symmetry the
    // min-norm point has equal coordinates f(V)/n = 2.
    const std::vector<double> g = {0, 4, 6, 6};
    auto fn = [g](const Subset& s) { return g[s.size()]; };
    MinNormFixture f;
    f.oracle = std::make_shared<FunctionOracle>(3, fn, true, "symmetric-plateau");
    f.min_norm_point = Vector::Constant(3, 2.0);
    f.name = "symmetric-g=(0,4,6,6)";
    fixtures.push_back(std::move(f));
  }
  return fixtures;
}

}  // namespace minnorm
