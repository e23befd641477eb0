#pragma once

#include "knowmap/betweenness.hpp"
#include "knowmap/community.hpp"
#include "knowmap/graph.hpp"
#include "knowmap/mds.hpp"

namespace knowmap {

struct ConceptualMap {
    WeightedGraph graph;
    Partition partition;
    std::map<std::string, std::array<double, 2>> points;
    double stress = 0;
    bool degenerate = false;
};

// cooccurrence_graph -> detect_communities -> mds_layout, packaged together.
// Propagates NoTerms / NoEdges from the stages.
ConceptualMap conceptual_map(const Corpus& corpus, TermLayer layer, const TermConfig& config, int min_df,
                             unsigned seed, double resolution = 1.0);

} // namespace knowmap
