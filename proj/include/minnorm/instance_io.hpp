#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "minnorm/functions.hpp"
#include "minnorm/submodular.hpp"

namespace minnorm {

/// Parse failure carrying the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// DIMACS max-flow format:
///   c <comment>
///   p max <num_vertices> <num_edges>
///   n <vertex> s        / n <vertex> t
///   a <u> <v> <capacity>
/// Vertex ids are 1-based in the file. An optional "c directed" comment
/// before the problem line switches arc interpretation to directed.
WeightedGraph read_dimacs(std::istream& in);
WeightedGraph read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const WeightedGraph& graph);

/// Text instance files for non-graph oracles, one header line:
///   f modular <n> <w_1> ... <w_n>
///   f iwata <n> [groups]
///   f concave <n> <g_1> ... <g_n> <w_1> ... <w_n>   (g_0 = 0 implied)
struct Instance {
  OraclePtr oracle;
  /// Present when the instance is a graph; used to report cut values in
  /// original units.
  std::optional<WeightedGraph> graph;
  std::string name;
};

/// Dispatches on content: DIMACS problem lines load as cut instances,
/// "f ..." headers as function instances.
Instance read_instance_file(const std::string& path);

}  // namespace minnorm
