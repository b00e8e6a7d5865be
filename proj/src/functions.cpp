#include "minnorm/functions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "minnorm/rng.hpp"

namespace minnorm {

namespace {

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

}  // namespace

void WeightedGraph::validate() const {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= num_vertices || e.v < 0 || e.v >= num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (!(e.capacity >= 0.0) || !std::isfinite(e.capacity))
      throw std::invalid_argument("capacity must be finite and nonnegative");
  }
  auto check_terminal = [&](const std::optional<int>& t) {
    if (t && (*t < 0 || *t >= num_vertices))
      throw std::invalid_argument("terminal out of range");
  };
  check_terminal(source);
  check_terminal(sink);
  if (source && sink && *source == *sink)
    throw std::invalid_argument("source and sink must differ");
}

bool WeightedGraph::integer_capacities() const {
  return std::all_of(edges.begin(), edges.end(),
                     [](const Edge& e) { return is_integer(e.capacity); });
}

ModularOracle::ModularOracle(Vector weights)
    : SubmodularOracle(static_cast<int>(weights.size())), weights_(std::move(weights)) {
  if (!weights_.allFinite()) throw std::invalid_argument("weights must be finite");
  integer_ = std::all_of(weights_.begin(), weights_.end(), is_integer);
}

double ModularOracle::evaluate_raw(const Subset& s) const {
  double sum = 0.0;
  for (int i = 0; i < ground_size(); ++i)
    if (s.contains(i)) sum += weights_[i];
  return sum;
}

namespace {

int cut_ground_size(const WeightedGraph& g) {
  g.validate();
  if (!g.source || !g.sink)
    throw std::invalid_argument("cut oracle needs both source and sink");
  return g.num_vertices - 2;
}

}  // namespace

CutOracle::CutOracle(WeightedGraph graph)
    : SubmodularOracle(cut_ground_size(graph)), graph_(std::move(graph)) {
  vertex_to_ground_.assign(graph_.num_vertices, -1);
  for (int v = 0; v < graph_.num_vertices; ++v) {
    if (v == *graph_.source || v == *graph_.sink) continue;
    vertex_to_ground_[v] = static_cast<int>(ground_to_vertex_.size());
    ground_to_vertex_.push_back(v);
  }
  integer_ = graph_.integer_capacities();
}

double CutOracle::evaluate_raw(const Subset& s) const {
  // Side of the cut: s-terminal plus the selected ground elements.
  auto on_source_side = [&](int v) {
    if (v == *graph_.source) return true;
    if (v == *graph_.sink) return false;
    return s.contains(vertex_to_ground_[v]);
  };
  double total = 0.0;
  for (const WeightedGraph::Edge& e : graph_.edges) {
    bool su = on_source_side(e.u);
    bool sv = on_source_side(e.v);
    if (su == sv) continue;
    if (graph_.directed) {
      if (su && !sv) total += e.capacity;
    } else {
      total += e.capacity;
    }
  }
  return total;
}

IwataOracle::IwataOracle(int n) : SubmodularOracle(n) {
  if (n < 1) throw std::invalid_argument("iwata oracle needs n >= 1");
}

double IwataOracle::evaluate_raw(const Subset& s) const {
  const std::int64_t n = ground_size();
  const std::int64_t k = s.size();
  std::int64_t modular = 0;
  for (int i = 0; i < ground_size(); ++i)
    if (s.contains(i)) modular += 5 * static_cast<std::int64_t>(i + 1) - 2 * n;
  return static_cast<double>(k * (n - k) - modular);
}

IwataBlockOracle::IwataBlockOracle(int n, int groups) : SubmodularOracle(n) {
  if (n < 1 || groups < 1 || groups > n)
    throw std::invalid_argument("iwata block oracle needs 1 <= groups <= n");
  block_of_.resize(n);
  rank_in_block_.resize(n);
  block_size_.assign(groups, 0);
  for (int i = 0; i < n; ++i) {
    int b = static_cast<int>((static_cast<std::int64_t>(i) * groups) / n);
    block_of_[i] = b;
    rank_in_block_[i] = block_size_[b]++;
  }
}

double IwataBlockOracle::evaluate_raw(const Subset& s) const {
  std::vector<std::int64_t> picked(block_size_.size(), 0);
  std::int64_t modular = 0;
  for (int i = 0; i < ground_size(); ++i) {
    if (!s.contains(i)) continue;
    int b = block_of_[i];
    ++picked[b];
    modular += 5 * static_cast<std::int64_t>(rank_in_block_[i] + 1) -
               2 * static_cast<std::int64_t>(block_size_[b]);
  }
  std::int64_t value = -modular;
  for (std::size_t b = 0; b < block_size_.size(); ++b)
    value += picked[b] * (block_size_[b] - picked[b]);
  return static_cast<double>(value);
}

ConcaveCardinalityOracle::ConcaveCardinalityOracle(std::vector<double> g_table, Vector weights)
    : SubmodularOracle(static_cast<int>(weights.size())),
      g_(std::move(g_table)),
      weights_(std::move(weights)) {
  if (static_cast<int>(g_.size()) != ground_size() + 1)
    throw std::invalid_argument("g table must have n+1 entries");
  if (!weights_.allFinite()) throw std::invalid_argument("weights must be finite");
  if (g_[0] != 0.0) throw std::invalid_argument("g(0) must be 0");
  for (double v : g_)
    if (!std::isfinite(v)) throw std::invalid_argument("g table must be finite");
  for (std::size_t k = 0; k + 2 < g_.size(); ++k) {
    if (g_[k + 1] - g_[k] < g_[k + 2] - g_[k + 1] - 1e-12)
      throw std::invalid_argument("g table is not concave");
  }
  integer_ = std::all_of(g_.begin(), g_.end(), is_integer) &&
             std::all_of(weights_.begin(), weights_.end(), is_integer);
}

double ConcaveCardinalityOracle::evaluate_raw(const Subset& s) const {
  double sum = g_[s.size()];
  for (int i = 0; i < ground_size(); ++i)
    if (s.contains(i)) sum += weights_[i];
  return sum;
}

WeightedGraph random_cut_instance(int n, double p, int max_capacity, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random cut instance needs n >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must lie in [0, 1]");
  if (max_capacity < 1) throw std::invalid_argument("max_capacity must be >= 1");
  Rng rng(seed);
  WeightedGraph g;
  g.num_vertices = n;
  g.directed = false;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) {
        double cap = static_cast<double>(rng.uniform_int(1, max_capacity));
        g.edges.push_back({u, v, cap});
      }
    }
  }
  g.source = static_cast<int>(rng.uniform_int(0, n - 1));
  int sink = static_cast<int>(rng.uniform_int(0, n - 2));
  if (sink >= *g.source) ++sink;
  g.sink = sink;
  return g;
}

WeightedGraph path_instance(int n, std::int64_t scale) {
  if (n < 2) throw std::invalid_argument("path instance needs n >= 2");
  if (scale < 1) throw std::invalid_argument("scale must be >= 1");
  // Vertices: 0 = s, 1..n interior, n+1 = t. Base capacities cycle over
  // {3,4,5,6} except a single bottleneck of 1 after the middle vertex,
  // so the minimum cut and its arg are unique at every scale.
  WeightedGraph g;
  g.num_vertices = n + 2;
  g.directed = false;
  g.source = 0;
  g.sink = n + 1;
  const int bottleneck = n / 2;  // edge between vertex `bottleneck` and the next
  for (int j = 0; j <= n; ++j) {
    double base = (j == bottleneck) ? 1.0 : static_cast<double>(3 + (j % 4));
    g.edges.push_back({j, j + 1, base * static_cast<double>(scale)});
  }
  return g;
}

OraclePtr random_concave_instance(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("concave instance needs n >= 1");
  Rng rng(seed);
  // Sorted integer increments make g concave; integer weights keep the
  // function in the exact-minimization regime.
  std::vector<std::int64_t> inc(n);
  for (auto& d : inc) d = rng.uniform_int(-3, 6);
  std::sort(inc.begin(), inc.end(), std::greater<>());
  std::vector<double> g(n + 1, 0.0);
  for (int k = 0; k < n; ++k) g[k + 1] = g[k] + static_cast<double>(inc[k]);
  Vector w(n);
  for (int i = 0; i < n; ++i) w[i] = static_cast<double>(rng.uniform_int(-4, 4));
  return std::make_shared<ConcaveCardinalityOracle>(std::move(g), std::move(w));
}

}  // namespace minnorm
