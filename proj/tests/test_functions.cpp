#include <doctest.h>

#include "minnorm/brute_force.hpp"
#include "minnorm/functions.hpp"
#include "minnorm/maxflow.hpp"

using namespace minnorm;

namespace {

WeightedGraph small_path_sat() {
  // s - a - t with capacities 2 and 1; ground set is {a}.
  WeightedGraph g;
  g.num_vertices = 3;
  g.source = 0;
  g.sink = 2;
  g.edges = {{0, 1, 2.0}, {1, 2, 1.0}};
  return g;
}

}  // namespace

TEST_CASE("modular oracle") {
  Vector w(3);
  w << 3, -1, 2;
  ModularOracle f(w);
  CHECK(f(Subset::of(3, {0, 2})) == 5.0);
  CHECK(f(Subset::empty_set(3)) == 0.0);
  const BruteForceResult brute = brute_min(f);
  CHECK(brute.min_value == -1.0);
  REQUIRE(brute.minimizers.size() == 1);
  CHECK(brute.minimizers[0] == Subset::of(3, {1}));
}

TEST_CASE("cut oracle on the tiny path") {
  CutOracle f(small_path_sat());
  REQUIRE(f.ground_size() == 1);
  CHECK(f(Subset::empty_set(1)) == 0.0);
  CHECK(f(Subset::of(1, {0})) == -1.0);  // cut 1 minus offset 2
  CHECK(f.normalization_offset() == 2.0);
  CHECK(f.cut_value(Subset::of(1, {0})) == 1.0);
}

TEST_CASE("cut oracle on the unit triangle") {
  // s - a, a - t, s - t, unit capacities: f({a}) = 2 - 2 = 0.
  WeightedGraph g;
  g.num_vertices = 3;
  g.source = 0;
  g.sink = 2;
  g.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}};
  CutOracle f(g);
  CHECK(f(Subset::of(1, {0})) == 0.0);
  CHECK(max_flow_value(g) == 2.0);
}

TEST_CASE("directed cut uses out-capacity") {
  WeightedGraph g;
  g.num_vertices = 3;
  g.directed = true;
  g.source = 0;
  g.sink = 2;
  g.edges = {{0, 1, 5.0}, {2, 1, 7.0}, {1, 2, 3.0}};
  CutOracle f(g);
  // cut({s}) = 5 (arc into a); cut({s,a}) = 3 (arc a->t; arc t->a points in).
  CHECK(f.normalization_offset() == 5.0);
  CHECK(f(Subset::of(1, {0})) == -2.0);
}

TEST_CASE("cut oracles are submodular") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const WeightedGraph g = random_cut_instance(8, 0.7, 5, seed);
    CutOracle f(g);
    CHECK_FALSE(check_submodular(f).has_value());
  }
}

TEST_CASE("iwata function values") {
  IwataOracle f2(2);
  CHECK(f2(Subset::of(2, {0})) == 0.0);      // 1*1 - (5-4)
  CHECK(f2(Subset::of(2, {0, 1})) == -7.0);  // 0 - (1 + 6)
  CHECK(f2(Subset::empty_set(2)) == 0.0);

  IwataOracle f7(7);
  CHECK_FALSE(check_submodular(f7).has_value());
}

TEST_CASE("iwata block variant") {
  // One block reduces to the plain function.
  IwataOracle base(6);
  IwataBlockOracle blocked(6, 1);
  for (std::uint64_t mask = 0; mask < (1u << 6); ++mask) {
    const Subset s = Subset::from_mask(6, mask);
    CHECK(base(s) == blocked(s));
  }
  IwataBlockOracle three(9, 3);
  CHECK(three(Subset::empty_set(9)) == 0.0);
  CHECK(three.integer_valued());
  CHECK_FALSE(check_submodular(three).has_value());
  CHECK_THROWS_AS(IwataBlockOracle(3, 4), std::invalid_argument);
}

TEST_CASE("concave cardinality oracle") {
  SUBCASE("rank of the 1-uniform matroid") {
    ConcaveCardinalityOracle f({0, 1, 1, 1}, Vector::Zero(3));
    const BruteForceResult brute = brute_min(f);
    CHECK(brute.min_value == 0.0);
    CHECK(brute.is_minimizer(Subset::empty_set(3)));
  }
  SUBCASE("non-concave table rejected") {
    CHECK_THROWS_AS(ConcaveCardinalityOracle({0, 1, 3}, Vector::Zero(2)), std::invalid_argument);
    CHECK_THROWS_AS(ConcaveCardinalityOracle({1, 2, 3}, Vector::Zero(2)), std::invalid_argument);
  }
  SUBCASE("linear g degenerates to modular") {
    Vector w(3);
    w << -1, 0, 2;
    ConcaveCardinalityOracle f({0, 5, 10, 15}, w);
    ModularOracle m((Vector(3) << 4, 5, 7).finished());
    for (std::uint64_t mask = 0; mask < 8; ++mask) {
      const Subset s = Subset::from_mask(3, mask);
      CHECK(f(s) == m(s));
    }
  }
  SUBCASE("submodular with negative weights") {
    Vector w = Vector::Zero(6);
    w[0] = -1;
    ConcaveCardinalityOracle f({0, 3, 5, 6, 6, 6, 6}, w);
    CHECK_FALSE(check_submodular(f).has_value());
  }
}

TEST_CASE("random cut instance generation") {
  const WeightedGraph a = random_cut_instance(12, 0.6, 9, 42);
  const WeightedGraph b = random_cut_instance(12, 0.6, 9, 42);
  REQUIRE(a.edges.size() == b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    CHECK(a.edges[i].u == b.edges[i].u);
    CHECK(a.edges[i].v == b.edges[i].v);
    CHECK(a.edges[i].capacity == b.edges[i].capacity);
  }
  CHECK(*a.source == *b.source);
  CHECK(*a.sink == *b.sink);
  CHECK(*a.source != *a.sink);
  for (const auto& e : a.edges) {
    CHECK(e.capacity >= 1.0);
    CHECK(e.capacity <= 9.0);
    CHECK(e.capacity == static_cast<double>(static_cast<std::int64_t>(e.capacity)));
  }

  CHECK(random_cut_instance(4, 1.0, 3, 7).edges.size() == 6);
  CHECK(random_cut_instance(5, 0.0, 3, 7).edges.empty());

  // Different seeds change the draw somewhere.
  const WeightedGraph c = random_cut_instance(12, 0.6, 9, 43);
  bool differs = c.edges.size() != a.edges.size() || *c.source != *a.source;
  for (std::size_t i = 0; !differs && i < std::min(a.edges.size(), c.edges.size()); ++i)
    differs = a.edges[i].u != c.edges[i].u || a.edges[i].capacity != c.edges[i].capacity;
  CHECK(differs);
}

TEST_CASE("path instance scaling") {
  const WeightedGraph base = path_instance(6, 1);
  REQUIRE(base.edges.size() == 7);
  const double base_cut = max_flow_value(base);
  CHECK(base_cut == 1.0);  // unique bottleneck capacity
  for (std::int64_t scale : {10, 100, 1000000}) {
    const WeightedGraph scaled = path_instance(6, scale);
    CHECK(max_flow_value(scaled) == doctest::Approx(base_cut * scale));
  }

  // The minimizing set is the same prefix at every scale.
  const BruteForceResult b1 = brute_min(CutOracle(path_instance(4, 1)));
  const BruteForceResult b2 = brute_min(CutOracle(path_instance(4, 1000)));
  REQUIRE(b1.minimizers.size() == 1);
  REQUIRE(b2.minimizers.size() == 1);
  CHECK(b1.minimizers[0] == b2.minimizers[0]);
  CHECK(b2.min_value == doctest::Approx(1000.0 * b1.min_value));
}

TEST_CASE("max flow agrees with brute-force cuts") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const WeightedGraph g = random_cut_instance(7, 0.8, 6, seed);
    CutOracle f(g);
    const BruteForceResult brute = brute_min(f);
    CHECK(brute.min_value + f.normalization_offset() == doctest::Approx(max_flow_value(g)));
  }
}

TEST_CASE("graph validation") {
  WeightedGraph g;
  g.num_vertices = 2;
  g.edges = {{0, 0, 1.0}};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.edges = {{0, 5, 1.0}};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.edges = {{0, 1, -2.0}};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
  g.edges = {{0, 1, 1.0}};
  g.source = 1;
  g.sink = 1;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}
