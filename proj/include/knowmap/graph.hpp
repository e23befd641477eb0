#pragma once

#include "knowmap/record.hpp"
#include "knowmap/termspace.hpp"

#include <string>
#include <vector>

namespace knowmap {

struct GraphNode {
    std::string label;
    long occurrence = 0; // document frequency / publication count
};

struct GraphEdge {
    int a = 0; // a < b, each unordered pair stored once, no self loops
    int b = 0;
    double weight = 0; // > 0
};

struct WeightedGraph {
    enum class Kind { TermCooccurrence, Coauthorship };

    Kind kind = Kind::TermCooccurrence;
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges; // sorted by (a, b)
    long corpus_documents = 0;    // corpus size behind the graph (association strength)

    int node_count() const { return static_cast<int>(nodes.size()); }
    double total_weight() const;
    int index_of(std::string_view label) const; // -1 when absent
    // Symmetric adjacency lists, neighbor indices ascending.
    std::vector<std::vector<std::pair<int, double>>> adjacency() const;
};

// Nodes: terms with document frequency >= min_df (occurrence = df); edge
// weight = number of records whose layer contains both endpoint terms.
// Throws Error(NoTerms) when the filter removes everything.
WeightedGraph cooccurrence_graph(const Corpus& corpus, TermLayer layer, const TermConfig& config,
                                 int min_df);
WeightedGraph cooccurrence_graph_serial(const Corpus& corpus, TermLayer layer, const TermConfig& config,
                                        int min_df);

// Nodes: author keys with publication counts; edge weight = number of
// jointly authored records.
WeightedGraph coauthorship_graph(const Corpus& corpus);

} // namespace knowmap
