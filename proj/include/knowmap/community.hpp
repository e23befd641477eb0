#pragma once

#include "knowmap/graph.hpp"

#include <map>
#include <string>

namespace knowmap {

struct Partition {
    std::map<std::string, int> assignment; // label -> dense cluster id from 0
    double modularity = 0;
};

// Newman modularity Q = sum_c [ w_in_c / W - (deg_c / 2W)^2 ].
// Throws Error(EmptyGraph) when the graph has no edge weight.
double modularity(const WeightedGraph& graph, const std::map<std::string, int>& assignment);

// Greedy local moving with coarsening (the Louvain scheme). Visit order is a
// Fisher-Yates shuffle driven by a seeded mt19937 (std::shuffle is not
// cross-implementation reproducible); moves need strictly positive gain;
// gain ties go to the lowest community id. Deterministic for a fixed
// (graph, seed, resolution). Throws Error(NoEdges) on an edgeless graph.
Partition detect_communities(const WeightedGraph& graph, unsigned seed, double resolution = 1.0);

} // namespace knowmap
