#include "knowmap/netlab.hpp"

namespace knowmap {

ConceptualMap conceptual_map(const Corpus& corpus, TermLayer layer, const TermConfig& config, int min_df,
                             unsigned seed, double resolution) {
    ConceptualMap map;
    map.graph = cooccurrence_graph(corpus, layer, config, min_df);
    map.partition = detect_communities(map.graph, seed, resolution);
    MdsLayout layout = mds_layout(map.graph);
    map.points = std::move(layout.points);
    map.stress = layout.stress;
    map.degenerate = layout.degenerate;
    return map;
}

} // namespace knowmap
