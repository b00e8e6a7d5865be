#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minnorm/submodular.hpp"
#include "minnorm/types.hpp"

namespace minnorm {

/// Capacitated graph with optional source/sink terminals.
struct WeightedGraph {
  struct Edge {
    int u = 0;
    int v = 0;
    double capacity = 0.0;
  };

  int num_vertices = 0;
  bool directed = false;
  std::vector<Edge> edges;
  std::optional<int> source;
  std::optional<int> sink;

  /// Throws std::invalid_argument on negative/non-finite capacities,
  /// self-loops, out-of-range endpoints, or source == sink.
  void validate() const;

  bool integer_capacities() const;
};

/// f(S) = sum of weights over S. The base polytope degenerates to the
/// single point w.
class ModularOracle : public SubmodularOracle {
 public:
  explicit ModularOracle(Vector weights);
  bool integer_valued() const override { return integer_; }
  std::string family() const override { return "modular"; }
  const Vector& weights() const { return weights_; }

 protected:
  double evaluate_raw(const Subset& s) const override;

 private:
  Vector weights_;
  bool integer_;
};

/// s-t cut function over the ground set V \ {s, t}.
///
/// The raw value of S is the capacity of the cut separating S u {s} from
/// the rest; the inherited normalization subtracts the cut at {s}, so
/// f(empty) == 0 and min f + offset equals the minimum s-t cut value.
/// Undirected edges count when cut in either direction; directed graphs
/// use out-capacity of the s-side.
class CutOracle : public SubmodularOracle {
 public:
  explicit CutOracle(WeightedGraph graph);

  bool integer_valued() const override { return integer_; }
  std::string family() const override { return "cut"; }

  const WeightedGraph& graph() const { return graph_; }
  /// Graph vertex id of ground element i.
  int vertex_of(int ground_index) const { return ground_to_vertex_[ground_index]; }
  /// Cut value of S u {s} in original units: f(S) + normalization offset.
  double cut_value(const Subset& s) const { return (*this)(s) + normalization_offset(); }

 protected:
  double evaluate_raw(const Subset& s) const override;

 private:
  WeightedGraph graph_;
  std::vector<int> ground_to_vertex_;
  std::vector<int> vertex_to_ground_;  // -1 for s and t
  bool integer_;
};

/// Standard Iwata test function f(S) = |S| |V\S| - sum_{j in S} (5j - 2n),
/// with 1-based j. Integer-valued and submodular for every n >= 1.
class IwataOracle : public SubmodularOracle {
 public:
  explicit IwataOracle(int n);
  bool integer_valued() const override { return true; }
  std::string family() const override { return "iwata"; }

 protected:
  double evaluate_raw(const Subset& s) const override;
};

/// Block-separable variant: the ground set is split into `groups`
/// contiguous blocks and f is the sum of independent Iwata functions on
/// the blocks. Groups == 1 reduces to IwataOracle.
class IwataBlockOracle : public SubmodularOracle {
 public:
  IwataBlockOracle(int n, int groups);
  bool integer_valued() const override { return true; }
  std::string family() const override { return "iwata"; }

 protected:
  double evaluate_raw(const Subset& s) const override;

 private:
  std::vector<int> block_of_;
  std::vector<int> rank_in_block_;
  std::vector<int> block_size_;
};

/// f(S) = g(|S|) + sum_{i in S} w_i with concave g, g(0) = 0.
class ConcaveCardinalityOracle : public SubmodularOracle {
 public:
  /// `g_table` holds g(0..n); rejected unless g(0)=0 and the increments
  /// g(k+1)-g(k) are nonincreasing.
  ConcaveCardinalityOracle(std::vector<double> g_table, Vector weights);
  bool integer_valued() const override { return integer_; }
  std::string family() const override { return "concave"; }

 protected:
  double evaluate_raw(const Subset& s) const override;

 private:
  std::vector<double> g_;
  Vector weights_;
  bool integer_;
};

/// Seeded Erdos-Renyi G(n, p) with integer capacities uniform in
/// [1, max_capacity] and s, t drawn by the same generator.
WeightedGraph random_cut_instance(int n, double p, int max_capacity, std::uint64_t seed);

/// Path s - v1 - ... - vn - t whose base capacities are a fixed small
/// pattern with a unique bottleneck edge; all capacities are multiplied
/// by `scale`, so the marginal bound F grows proportionally while the
/// minimizing set stays the same.
WeightedGraph path_instance(int n, std::int64_t scale);

/// Seeded integer concave-cardinality instance used by benchmark suites.
OraclePtr random_concave_instance(int n, std::uint64_t seed);

}  // namespace minnorm
