#include <doctest.h>

#include <fstream>
#include <sstream>

#include "minnorm/instance_io.hpp"

using namespace minnorm;

TEST_CASE("dimacs round trip") {
  WeightedGraph g;
  g.num_vertices = 4;
  g.source = 0;
  g.sink = 3;
  g.edges = {{0, 1, 2.5}, {1, 2, 1.0}, {2, 3, 4.0}};
  std::stringstream buf;
  write_dimacs(buf, g);
  const WeightedGraph back = read_dimacs(buf);
  CHECK(back.num_vertices == 4);
  CHECK(*back.source == 0);
  CHECK(*back.sink == 3);
  REQUIRE(back.edges.size() == 3);
  CHECK(back.edges[1].capacity == 1.0);
  CHECK_FALSE(back.directed);
}

TEST_CASE("dimacs directed flag") {
  std::istringstream in(
      "c directed\n"
      "p max 2 1\n"
      "n 1 s\nn 2 t\n"
      "a 1 2 3\n");
  CHECK(read_dimacs(in).directed);
}

TEST_CASE("dimacs parse errors carry line numbers") {
  auto expect_line = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      read_dimacs(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_line("p max 2 1\nn 1 s\nn 2 t\na 1 x 3\n", 4);          // bad token
  expect_line("a 1 2 3\n", 1);                                   // arc before problem line
  expect_line("p max 2 1\np max 2 1\n", 2);                      // duplicate problem line
  expect_line("p max 2 1\nn 1 s\nn 2 t\na 1 1 3\n", 4);          // self loop
  expect_line("p max 2 1\nn 1 s\nn 2 t\na 1 9 3\n", 4);          // out of range
  expect_line("p max 2 2\nn 1 s\nn 2 t\na 1 2 3\n", 4);          // edge count mismatch
  expect_line("p max 2 1\nn 1 s\na 1 2 3\n", 3);                 // missing sink
  expect_line("p max 2 1\nn 1 s\nn 2 t\nq 1 2\n", 4);            // unknown kind
  expect_line("", 1);                                            // empty file
}

TEST_CASE("function instance files") {
  SUBCASE("modular") {
    std::ofstream("/tmp/minnorm_mod.txt") << "c test\nf modular 3 3 -1 2\n";
    const Instance inst = read_instance_file("/tmp/minnorm_mod.txt");
    CHECK(inst.oracle->ground_size() == 3);
    CHECK(inst.oracle->family() == "modular");
    CHECK((*inst.oracle)(Subset::of(3, {1})) == -1.0);
  }
  SUBCASE("iwata with groups") {
    std::ofstream("/tmp/minnorm_iw.txt") << "f iwata 6 2\n";
    const Instance inst = read_instance_file("/tmp/minnorm_iw.txt");
    CHECK(inst.oracle->ground_size() == 6);
    CHECK(inst.oracle->integer_valued());
  }
  SUBCASE("concave") {
    std::ofstream("/tmp/minnorm_cc.txt") << "f concave 2 3 5 -1 1\n";
    const Instance inst = read_instance_file("/tmp/minnorm_cc.txt");
    CHECK((*inst.oracle)(Subset::of(2, {0})) == 2.0);  // g(1) + w_1 = 3 - 1
  }
  SUBCASE("bad family") {
    std::ofstream("/tmp/minnorm_bad.txt") << "f parabola 3 1 2 3\n";
    CHECK_THROWS_AS(read_instance_file("/tmp/minnorm_bad.txt"), ParseError);
  }
  SUBCASE("non-concave table reported with line number") {
    std::ofstream("/tmp/minnorm_cc2.txt") << "c leading comment\nf concave 2 1 3 0 0\n";
    try {
      read_instance_file("/tmp/minnorm_cc2.txt");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("dimacs dispatch") {
    std::ofstream("/tmp/minnorm_g.txt") << "p max 3 2\nn 1 s\nn 3 t\na 1 2 2\na 2 3 1\n";
    const Instance inst = read_instance_file("/tmp/minnorm_g.txt");
    REQUIRE(inst.graph.has_value());
    CHECK(inst.oracle->ground_size() == 1);
  }
  SUBCASE("missing file") {
    CHECK_THROWS(read_instance_file("/tmp/does_not_exist_minnorm.txt"));
  }
}
