#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minnorm/bench.hpp"
#include "minnorm/brute_force.hpp"
#include "minnorm/instance_io.hpp"
#include "minnorm/sfm.hpp"
#include "minnorm/svg_plot.hpp"

namespace {

using namespace minnorm;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUncertified = 2;

void print_text_result(const Instance& inst, const SfmResult& result) {
  std::cout << "instance:       " << inst.name << " (n = " << result.min_set.ground_size()
            << ")\n";
  std::cout << "min set:        " << result.min_set.to_string() << "\n";
  if (inst.graph) {
    const auto& cut = dynamic_cast<const CutOracle&>(*inst.oracle);
    std::cout << "  graph nodes:  {";
    bool first = true;
    for (int e : result.min_set.elements()) {
      if (!first) std::cout << ',';
      std::cout << (cut.vertex_of(e) + 1);
      first = false;
    }
    std::cout << "} plus source " << (*inst.graph->source + 1) << "\n";
    std::cout << "min cut value:  " << result.min_value + cut.normalization_offset()
              << " (normalization offset " << cut.normalization_offset() << ")\n";
  }
  std::cout << "min value:      " << result.min_value << "\n";
  std::cout << "lower bound:    " << result.lower_bound << "\n";
  std::cout << "duality gap:    " << result.gap << " (certified <= " << std::setprecision(6)
            << 2.0 * result.min_set.ground_size() * result.epsilon_used << ")\n";
  std::cout << "epsilon:        " << result.epsilon_used << "\n";
  std::cout << "iterations:     " << result.iterations << " (major " << result.major_cycles
            << ", minor " << result.minor_cycles << ")\n";
  std::cout << "oracle calls:   " << result.eo_calls << "\n";
  std::cout << "certificate:    " << result.wolfe.delta_certificate << "\n";
  std::cout << "terminated:     " << to_string(result.termination) << "\n";
}

int cmd_solve(const std::string& path, std::optional<double> epsilon, std::int64_t max_iter,
              const std::string& format, const std::string& trace_path) {
  Instance inst = read_instance_file(path);
  SfmOptions options;
  options.epsilon = epsilon;
  options.max_iterations = max_iter;
  const SfmResult result = minimize(*inst.oracle, options);

  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw std::runtime_error("cannot write '" + trace_path + "'");
    write_trace_csv(out, result.wolfe);
  }

  if (format == "jsonl") {
    std::cout << to_json_line(result, inst.name) << "\n";
  } else if (format == "csv") {
    BenchRecord rec;
    rec.instance = inst.name;
    rec.family = inst.oracle->family();
    rec.n = inst.oracle->ground_size();
    rec.marginal_bound = inst.oracle->marginal_bound();
    rec.epsilon = result.epsilon_used;
    rec.major = result.major_cycles;
    rec.minor = result.minor_cycles;
    rec.total = result.iterations;
    rec.eo_calls = result.eo_calls;
    rec.min_value = result.min_value;
    rec.lower_bound = result.lower_bound;
    rec.gap = result.gap;
    rec.terminated = to_string(result.termination);
    write_bench_csv(std::cout, {rec}, /*timing=*/false);
  } else {
    print_text_result(inst, result);
  }
  return result.termination == Termination::kNormal ? kExitOk : kExitUncertified;
}

int cmd_verify(const std::string& path, int n_limit, std::optional<double> epsilon) {
  Instance inst = read_instance_file(path);
  const SubmodularOracle& oracle = *inst.oracle;
  const int n = oracle.ground_size();
  if (n > n_limit)
    throw std::runtime_error("instance has n = " + std::to_string(n) +
                             ", above the enumeration limit " + std::to_string(n_limit) +
                             " (raise with --n-limit, hard cap 22)");
  if (n_limit > 22) throw std::runtime_error("enumeration limit cannot exceed 22");

  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << "\n";
    all_ok = all_ok && ok;
  };

  if (n <= 10) {
    const auto violation = check_submodular(oracle);
    report("submodularity", !violation, violation ? violation->to_string() : "");
  } else {
    std::cout << "SKIP submodularity (needs n <= 10)\n";
  }

  SfmOptions options;
  options.epsilon = epsilon;
  const SfmResult result = minimize(oracle, options);
  const BruteForceResult brute = brute_min(oracle);

  const bool exact = oracle.integer_valued()
                         ? std::llround(result.min_value) == std::llround(brute.min_value)
                         : std::abs(result.min_value - brute.min_value) <=
                               2.0 * n * result.epsilon_used + 1e-9;
  report("minimum matches brute force", exact,
         "solver " + std::to_string(result.min_value) + ", brute " +
             std::to_string(brute.min_value));
  report("set value re-evaluates to reported minimum",
         oracle(result.min_set) == result.min_value);
  report("lower bound below brute minimum",
         result.lower_bound <= brute.min_value + 1e-9,
         "bound " + std::to_string(result.lower_bound));
  report("duality gap within certificate",
         result.gap <= 2.0 * n * result.epsilon_used + 1e-9,
         "gap " + std::to_string(result.gap));

  const double membership_tol = 1e-7 * std::max(1.0, oracle.marginal_bound());
  report("final point lies in the base polytope",
         verify_membership(oracle, result.x_final, membership_tol));

  const double residual = telescoping_residual(oracle, result.x_final);
  const double allowance =
      std::max(result.epsilon_used * result.epsilon_used, result.wolfe.delta_certificate) + 1e-9;
  report("telescoping identity", residual <= allowance,
         "residual " + std::to_string(residual));

  const TraceCheckReport trace = check_trace(result.wolfe, n);
  report("trace invariants", trace.ok,
         trace.ok ? "" : trace.violations.front());

  return all_ok ? kExitOk : kExitError;
}

int cmd_plot(const std::string& csv_path, const std::string& kind, const std::string& out_path) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open '" + csv_path + "'");
  const std::vector<BenchRecord> records = read_bench_csv(in);
  if (records.empty()) throw std::runtime_error("CSV has no data rows");

  PlotSpec spec;
  PlotSeries series;
  if (kind == "runtime") {
    spec.title = "Solve time vs ground-set size";
    spec.x_label = "n";
    spec.y_label = "wall time (ms, mean)";
    std::map<int, std::pair<double, int>> by_n;
    for (const BenchRecord& r : records) {
      by_n[r.n].first += r.wall_ms;
      by_n[r.n].second += 1;
    }
    for (auto& [n, acc] : by_n)
      series.points.emplace_back(n, acc.first / acc.second);
    if (std::all_of(series.points.begin(), series.points.end(),
                    [](auto p) { return p.second == 0.0; }))
      throw std::runtime_error("CSV has no timing data (bench was run with --no-timing)");
  } else if (kind == "iterations") {
    spec.title = "Solver iterations vs marginal bound";
    spec.x_label = "F";
    spec.y_label = "total iterations";
    spec.log_x = true;
    for (const BenchRecord& r : records)
      series.points.emplace_back(r.marginal_bound, static_cast<double>(r.total));
  } else {
    throw std::runtime_error("unknown plot kind '" + kind + "'");
  }

  const std::string svg = render_line_chart(spec, {series});
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << svg;
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

void write_csv_out(const std::vector<BenchRecord>& records, const std::string& out_path,
                   bool timing) {
  if (out_path.empty() || out_path == "-") {
    write_bench_csv(std::cout, records, timing);
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  write_bench_csv(out, records, timing);
  std::cerr << "wrote " << records.size() << " records to " << out_path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-norm-point solver and exact submodular function minimization"};
  app.require_subcommand(1);

  // solve
  std::string solve_path, solve_format = "text", solve_trace;
  double solve_epsilon = -1.0;
  std::int64_t solve_max_iter = 0;
  auto* solve = app.add_subcommand("solve", "Minimize an instance file (DIMACS graph or 'f' header)");
  solve->add_option("path", solve_path, "instance file")->required();
  solve->add_option("--epsilon", solve_epsilon, "solver accuracy (default: 1/(4n) when integer-valued)");
  solve->add_option("--max-iter", solve_max_iter, "iteration cap (0 = automatic)");
  solve->add_option("--format", solve_format, "text | jsonl | csv")
      ->check(CLI::IsMember({"text", "jsonl", "csv"}));
  solve->add_option("--trace", solve_trace, "write the iteration trace CSV here");

  // bench-er
  int er_nmin = 10, er_nmax = 40, er_nstep = 5, er_trials = 3, er_threads = 0, er_cap = 10;
  double er_p = 0.8;
  std::uint64_t er_seed = 1;
  std::string er_out = "-";
  bool er_no_timing = false;
  auto* ber = app.add_subcommand("bench-er", "Seeded Erdos-Renyi cut benchmark suite");
  ber->add_option("--n-min", er_nmin);
  ber->add_option("--n-max", er_nmax);
  ber->add_option("--n-step", er_nstep);
  ber->add_option("--p", er_p, "edge probability");
  ber->add_option("--trials", er_trials, "instances per size");
  ber->add_option("--seed", er_seed);
  ber->add_option("--max-capacity", er_cap);
  ber->add_option("--threads", er_threads, "worker count (or MINNORM_THREADS)");
  ber->add_option("--out", er_out, "output CSV ('-' for stdout)");
  ber->add_flag("--no-timing", er_no_timing, "omit wall_ms for byte-identical output");

  // bench-scaling
  int sc_n = 25, sc_threads = 0;
  std::vector<std::int64_t> sc_scales;
  std::string sc_out = "-";
  bool sc_no_timing = false;
  auto* bsc = app.add_subcommand("bench-scaling", "Path-graph capacity scaling suite");
  bsc->add_option("--n", sc_n, "interior path vertices");
  bsc->add_option("--scales", sc_scales, "capacity multipliers (default 1 10 ... 1e6)");
  bsc->add_option("--threads", sc_threads);
  bsc->add_option("--out", sc_out, "output CSV ('-' for stdout)");
  bsc->add_flag("--no-timing", sc_no_timing);

  // verify
  std::string verify_path;
  int verify_limit = 20;
  double verify_epsilon = -1.0;
  auto* ver = app.add_subcommand("verify", "Brute-force checks on a small instance");
  ver->add_option("path", verify_path)->required();
  ver->add_option("--n-limit", verify_limit, "enumeration limit (<= 22)");
  ver->add_option("--epsilon", verify_epsilon);

  // plot
  std::string plot_csv, plot_kind = "runtime", plot_out = "plot.svg";
  auto* plt = app.add_subcommand("plot", "Render a bench CSV as an SVG chart");
  plt->add_option("csv", plot_csv)->required();
  plt->add_option("--kind", plot_kind, "runtime | iterations")
      ->check(CLI::IsMember({"runtime", "iterations"}));
  plt->add_option("--out", plot_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve)
      return cmd_solve(solve_path,
                       solve_epsilon >= 0.0 ? std::optional<double>(solve_epsilon) : std::nullopt,
                       solve_max_iter, solve_format, solve_trace);
    if (*ber) {
      BenchOptions options;
      options.threads = er_threads;
      options.timing = !er_no_timing;
      options.max_capacity = er_cap;
      const auto records = bench_er(er_nmin, er_nmax, er_nstep, er_p, er_trials, er_seed, options);
      write_csv_out(records, er_out, options.timing);
      return kExitOk;
    }
    if (*bsc) {
      if (sc_scales.empty())
        sc_scales = {1, 10, 100, 1000, 10000, 100000, 1000000};
      BenchOptions options;
      options.threads = sc_threads;
      options.timing = !sc_no_timing;
      const auto records = bench_scaling(sc_n, sc_scales, options);
      write_csv_out(records, sc_out, options.timing);
      return kExitOk;
    }
    if (*ver)
      return cmd_verify(verify_path, verify_limit,
                        verify_epsilon >= 0.0 ? std::optional<double>(verify_epsilon)
                                              : std::nullopt);
    if (*plt) return cmd_plot(plot_csv, plot_kind, plot_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
