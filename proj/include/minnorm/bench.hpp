#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "minnorm/sfm.hpp"

namespace minnorm {

/// One benchmark trial. `wall_ms` is environmental and therefore kept
/// out of the CSV unless timing is requested, so that fixed-seed runs
/// produce byte-identical files.
struct BenchRecord {
  std::string instance;
  std::string family;  // cut | iwata | path | concave
  int n = 0;
  double marginal_bound = 0.0;  // F
  double epsilon = 0.0;
  std::int64_t major = 0;
  std::int64_t minor = 0;
  std::int64_t total = 0;
  std::int64_t eo_calls = 0;
  double min_value = 0.0;
  double lower_bound = 0.0;
  double gap = 0.0;
  std::string terminated;
  double wall_ms = 0.0;
};

struct BenchOptions {
  int threads = 0;     // <= 0: MINNORM_THREADS env var, else 1
  bool timing = true;  // include the wall_ms column in CSV output
  int max_capacity = 10;
};

/// Worker count resolution: explicit option, else MINNORM_THREADS, else 1.
int resolve_thread_count(int requested);

/// Seeded Erdos-Renyi cut suite over n in [n_min, n_max] stepping
/// `n_step`, `trials` instances per size. Every trial with ground size
/// small enough for enumeration is cross-checked against an independent
/// max-flow computation; a mismatch throws.
std::vector<BenchRecord> bench_er(int n_min, int n_max, int n_step, double p, int trials,
                                  std::uint64_t seed, const BenchOptions& options = {});

/// Path-graph capacity-scaling suite: one record per scale, fixed
/// interior size. Iteration counts across rows expose the solver's
/// insensitivity to the marginal bound F.
std::vector<BenchRecord> bench_scaling(int path_n, const std::vector<std::int64_t>& scales,
                                       const BenchOptions& options = {});

BenchRecord run_instance(const std::string& id, const std::string& family,
                         const SubmodularOracle& oracle, const SfmOptions& sfm_options,
                         bool timing);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records, bool timing);
std::vector<BenchRecord> read_bench_csv(std::istream& in);

}  // namespace minnorm
