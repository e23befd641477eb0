#pragma once

#include "knowmap/graph.hpp"

#include <map>
#include <string>

namespace knowmap {

struct CentralityScores {
    std::map<std::string, double> scores; // label -> raw betweenness
    bool normalized = false;
};

// Raw betweenness via per-source dependency accumulation (Brandes).
// Unweighted mode counts hops; weighted mode runs shortest paths on
// distance = 1/weight. Each unordered pair contributes once. The parallel
// version accumulates per fixed source blocks, so its result is bit-identical
// to betweenness_serial regardless of thread count.
CentralityScores betweenness(const WeightedGraph& graph, bool use_weights);
CentralityScores betweenness_serial(const WeightedGraph& graph, bool use_weights);

// Unweighted edge-count degree per node, for the centrality report.
std::map<std::string, long> degree_centrality(const WeightedGraph& graph);

} // namespace knowmap
