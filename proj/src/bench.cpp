#include "minnorm/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "minnorm/brute_force.hpp"
#include "minnorm/functions.hpp"
#include "minnorm/maxflow.hpp"

namespace minnorm {

namespace {

void parallel_for(std::int64_t count, int threads, const std::function<void(std::int64_t)>& body) {
  if (threads <= 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::int64_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  // splitmix64 over a simple combination; stable across platforms.
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (a * 1000003ULL + b + 1ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MINNORM_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  return 1;
}

BenchRecord run_instance(const std::string& id, const std::string& family,
                         const SubmodularOracle& oracle, const SfmOptions& sfm_options,
                         bool timing) {
  BenchRecord rec;
  rec.instance = id;
  rec.family = family;
  rec.n = oracle.ground_size();
  rec.marginal_bound = oracle.marginal_bound();

  const auto start = std::chrono::steady_clock::now();
  const SfmResult result = minimize(oracle, sfm_options);
  const auto stop = std::chrono::steady_clock::now();

  rec.epsilon = result.epsilon_used;
  rec.major = result.major_cycles;
  rec.minor = result.minor_cycles;
  rec.total = result.iterations;
  rec.eo_calls = result.eo_calls;
  rec.min_value = result.min_value;
  rec.lower_bound = result.lower_bound;
  rec.gap = result.gap;
  rec.terminated = to_string(result.termination);
  if (timing)
    rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return rec;
}

std::vector<BenchRecord> bench_er(int n_min, int n_max, int n_step, double p, int trials,
                                  std::uint64_t seed, const BenchOptions& options) {
  if (n_min < 2 || n_max < n_min || n_step < 1) throw std::invalid_argument("bad n range");
  if (trials < 1) throw std::invalid_argument("trials must be positive");

  std::vector<std::pair<int, int>> plan;  // (n, trial)
  for (int n = n_min; n <= n_max; n += n_step)
    for (int t = 0; t < trials; ++t) plan.emplace_back(n, t);

  std::vector<BenchRecord> records(plan.size());
  parallel_for(static_cast<std::int64_t>(plan.size()), resolve_thread_count(options.threads),
               [&](std::int64_t i) {
                 const auto [n, trial] = plan[static_cast<std::size_t>(i)];
                 const std::uint64_t s = instance_seed(seed, static_cast<std::uint64_t>(n),
                                                       static_cast<std::uint64_t>(trial));
                 const WeightedGraph graph = random_cut_instance(n, p, options.max_capacity, s);
                 CutOracle oracle(graph);
                 std::ostringstream id;
                 id << "er-n" << n << "-t" << trial;
                 records[static_cast<std::size_t>(i)] =
                     run_instance(id.str(), "cut", oracle, {}, options.timing);

                 if (n <= 12) {
                   const double mincut =
                       records[static_cast<std::size_t>(i)].min_value + oracle.normalization_offset();
                   const double flow = max_flow_value(graph);
                   if (std::abs(mincut - flow) > 1e-6)
                     throw std::logic_error("cut/flow mismatch on " + id.str());
                 }
               });
  return records;
}

std::vector<BenchRecord> bench_scaling(int path_n, const std::vector<std::int64_t>& scales,
                                       const BenchOptions& options) {
  if (scales.empty()) throw std::invalid_argument("need at least one scale");
  for (std::int64_t s : scales)
    if (s < 1) throw std::invalid_argument("scales must be positive");

  std::vector<BenchRecord> records(scales.size());
  parallel_for(static_cast<std::int64_t>(scales.size()), resolve_thread_count(options.threads),
               [&](std::int64_t i) {
                 const WeightedGraph graph = path_instance(path_n, scales[static_cast<std::size_t>(i)]);
                 CutOracle oracle(graph);
                 std::ostringstream id;
                 id << "path-n" << path_n << "-x" << scales[static_cast<std::size_t>(i)];
                 records[static_cast<std::size_t>(i)] =
                     run_instance(id.str(), "path", oracle, {}, options.timing);
               });
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records, bool timing) {
  out << "# minnorm bench csv v1\n";
  out << "instance,family,n,F,epsilon,major,minor,total,eo_calls,min_value,lower_bound,gap,"
         "terminated";
  if (timing) out << ",wall_ms";
  out << '\n';
  out.precision(17);
  for (const BenchRecord& r : records) {
    out << r.instance << ',' << r.family << ',' << r.n << ',' << r.marginal_bound << ','
        << r.epsilon << ',' << r.major << ',' << r.minor << ',' << r.total << ',' << r.eo_calls
        << ',' << r.min_value << ',' << r.lower_bound << ',' << r.gap << ',' << r.terminated;
    if (timing) out << ',' << r.wall_ms;
    out << '\n';
  }
}

std::vector<BenchRecord> read_bench_csv(std::istream& in) {
  std::string line;
  std::vector<std::string> header;
  std::vector<BenchRecord> records;
  auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(s);
    while (std::getline(is, field, ',')) fields.push_back(field);
    return fields;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line);
    if (header.empty()) {
      header = fields;
      if (header.size() < 13 || header[0] != "instance" || header[12] != "terminated")
        throw std::runtime_error("unrecognized bench CSV header");
      continue;
    }
    if (fields.size() < 13) throw std::runtime_error("short bench CSV row");
    BenchRecord r;
    r.instance = fields[0];
    r.family = fields[1];
    r.n = std::stoi(fields[2]);
    r.marginal_bound = std::stod(fields[3]);
    r.epsilon = std::stod(fields[4]);
    r.major = std::stoll(fields[5]);
    r.minor = std::stoll(fields[6]);
    r.total = std::stoll(fields[7]);
    r.eo_calls = std::stoll(fields[8]);
    r.min_value = std::stod(fields[9]);
    r.lower_bound = std::stod(fields[10]);
    r.gap = std::stod(fields[11]);
    r.terminated = fields[12];
    if (fields.size() > 13 && header.size() > 13 && header[13] == "wall_ms")
      r.wall_ms = std::stod(fields[13]);
    records.push_back(std::move(r));
  }
  if (header.empty()) throw std::runtime_error("empty bench CSV");
  return records;
}

}  // namespace minnorm
