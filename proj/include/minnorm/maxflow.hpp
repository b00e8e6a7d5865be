#pragma once

#include "minnorm/functions.hpp"

namespace minnorm {

/// Maximum s-t flow value by Dinic's algorithm. Undirected edges become
/// a pair of opposing arcs with the full capacity each. Serves as the
/// independent ground truth for cut-oracle minimization.
double max_flow_value(const WeightedGraph& graph);

}  // namespace minnorm
