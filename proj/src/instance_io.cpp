#include "minnorm/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace minnorm {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

double parse_number(const std::string& tok, int line) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line, "trailing characters in number '" + tok + "'");
  return v;
}

int parse_int(const std::string& tok, int line) {
  double v = parse_number(tok, line);
  int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return i;
}

}  // namespace

WeightedGraph read_dimacs(std::istream& in) {
  WeightedGraph g;
  bool saw_problem = false;
  int declared_edges = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    const std::string& kind = toks[0];
    if (kind == "c") {
      if (toks.size() >= 2 && toks[1] == "directed") g.directed = true;
      continue;
    }
    if (kind == "p") {
      if (saw_problem) throw ParseError(lineno, "duplicate problem line");
      if (toks.size() != 4 || toks[1] != "max")
        throw ParseError(lineno, "expected 'p max <n> <m>'");
      g.num_vertices = parse_int(toks[2], lineno);
      declared_edges = parse_int(toks[3], lineno);
      if (g.num_vertices < 0 || declared_edges < 0)
        throw ParseError(lineno, "negative size in problem line");
      saw_problem = true;
      continue;
    }
    if (!saw_problem) throw ParseError(lineno, "'" + kind + "' before problem line");
    if (kind == "n") {
      if (toks.size() != 3) throw ParseError(lineno, "expected 'n <vertex> s|t'");
      int v = parse_int(toks[1], lineno) - 1;
      if (v < 0 || v >= g.num_vertices) throw ParseError(lineno, "vertex id out of range");
      if (toks[2] == "s")
        g.source = v;
      else if (toks[2] == "t")
        g.sink = v;
      else
        throw ParseError(lineno, "terminal must be 's' or 't'");
      continue;
    }
    if (kind == "a") {
      if (toks.size() != 4) throw ParseError(lineno, "expected 'a <u> <v> <capacity>'");
      int u = parse_int(toks[1], lineno) - 1;
      int v = parse_int(toks[2], lineno) - 1;
      double cap = parse_number(toks[3], lineno);
      if (u < 0 || u >= g.num_vertices || v < 0 || v >= g.num_vertices)
        throw ParseError(lineno, "arc endpoint out of range");
      if (u == v) throw ParseError(lineno, "self-loop");
      if (!(cap >= 0.0)) throw ParseError(lineno, "capacity must be nonnegative");
      g.edges.push_back({u, v, cap});
      continue;
    }
    throw ParseError(lineno, "unrecognized line kind '" + kind + "'");
  }
  if (!saw_problem) throw ParseError(lineno == 0 ? 1 : lineno, "missing problem line");
  if (static_cast<int>(g.edges.size()) != declared_edges)
    throw ParseError(lineno, "edge count mismatch: declared " + std::to_string(declared_edges) +
                                 ", found " + std::to_string(g.edges.size()));
  if (!g.source || !g.sink)
    throw ParseError(lineno, "missing source or sink designation");
  g.validate();
  return g;
}

WeightedGraph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const WeightedGraph& graph) {
  if (graph.directed) out << "c directed\n";
  out << "p max " << graph.num_vertices << ' ' << graph.edges.size() << '\n';
  if (graph.source) out << "n " << (*graph.source + 1) << " s\n";
  if (graph.sink) out << "n " << (*graph.sink + 1) << " t\n";
  for (const WeightedGraph::Edge& e : graph.edges)
    out << "a " << (e.u + 1) << ' ' << (e.v + 1) << ' ' << e.capacity << '\n';
}

namespace {

Instance parse_function_line(const std::vector<std::string>& toks, int lineno) {
  Instance inst;
  if (toks.size() < 3) throw ParseError(lineno, "expected 'f <family> <n> ...'");
  const std::string& family = toks[1];
  int n = parse_int(toks[2], lineno);
  if (n < 1) throw ParseError(lineno, "ground set size must be >= 1");
  std::size_t rest = toks.size() - 3;
  if (family == "modular") {
    if (static_cast<int>(rest) != n)
      throw ParseError(lineno, "modular expects n weights");
    Vector w(n);
    for (int i = 0; i < n; ++i) w[i] = parse_number(toks[3 + i], lineno);
    inst.oracle = std::make_shared<ModularOracle>(std::move(w));
    inst.name = "modular-n" + std::to_string(n);
  } else if (family == "iwata") {
    if (rest > 1) throw ParseError(lineno, "iwata expects at most one groups argument");
    int groups = rest == 1 ? parse_int(toks[3], lineno) : 1;
    if (groups == 1)
      inst.oracle = std::make_shared<IwataOracle>(n);
    else
      inst.oracle = std::make_shared<IwataBlockOracle>(n, groups);
    inst.name = "iwata-n" + std::to_string(n) +
                (groups > 1 ? "-g" + std::to_string(groups) : "");
  } else if (family == "concave") {
    if (static_cast<int>(rest) != 2 * n)
      throw ParseError(lineno, "concave expects n g-values followed by n weights");
    std::vector<double> g(n + 1, 0.0);
    for (int k = 0; k < n; ++k) g[k + 1] = parse_number(toks[3 + k], lineno);
    Vector w(n);
    for (int i = 0; i < n; ++i) w[i] = parse_number(toks[3 + n + i], lineno);
    try {
      inst.oracle = std::make_shared<ConcaveCardinalityOracle>(std::move(g), std::move(w));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    inst.name = "concave-n" + std::to_string(n);
  } else {
    throw ParseError(lineno, "unknown function family '" + family + "'");
  }
  return inst;
}

}  // namespace

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  // Peek at the first meaningful line to pick the format.
  std::string line;
  int lineno = 0;
  std::streampos start = in.tellg();
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "f") return parse_function_line(toks, lineno);
    if (toks[0] == "p") {
      in.clear();
      in.seekg(start);
      Instance inst;
      inst.graph = read_dimacs(in);
      inst.oracle = std::make_shared<CutOracle>(*inst.graph);
      inst.name = "cut-n" + std::to_string(inst.graph->num_vertices);
      return inst;
    }
    throw ParseError(lineno, "expected a DIMACS problem line or an 'f' header");
  }
  throw ParseError(lineno == 0 ? 1 : lineno, "empty instance file");
}

}  // namespace minnorm
