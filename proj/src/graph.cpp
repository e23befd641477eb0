#include "knowmap/graph.hpp"

#include "knowmap/error.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knowmap {

double WeightedGraph::total_weight() const {
    double w = 0;
    for (const auto& e : edges)
        w += e.weight;
    return w;
}

int WeightedGraph::index_of(std::string_view label) const {
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].label == label)
            return static_cast<int>(i);
    }
    return -1;
}

std::vector<std::vector<std::pair<int, double>>> WeightedGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, double>>> adj(nodes.size());
    for (const auto& e : edges) {
        adj[static_cast<size_t>(e.a)].emplace_back(e.b, e.weight);
        adj[static_cast<size_t>(e.b)].emplace_back(e.a, e.weight);
    }
    for (auto& list : adj)
        std::sort(list.begin(), list.end());
    return adj;
}

namespace {

using PairTally = std::unordered_map<std::uint64_t, long>;

std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32)
           | static_cast<std::uint32_t>(b);
}

// Shared skeleton: pick nodes by document frequency, then count per-record
// presence pairs into `tally` (the loop body differs serial/parallel).
struct CoocBase {
    std::vector<GraphNode> nodes;
    std::unordered_map<std::string, int> index;
};

CoocBase cooc_nodes(const Corpus& corpus, TermLayer layer, const TermConfig& config, int min_df,
                    bool serial) {
    const OccurrenceTable df = serial ? document_frequency_serial(corpus, layer, config)
                                      : document_frequency(corpus, layer, config);
    CoocBase base;
    for (const auto& [term, count] : df.rows) {
        if (count >= min_df)
            base.nodes.push_back({term, count});
    }
    // df.rows is already (count desc, term asc); keep that node order
    if (base.nodes.empty())
        throw Error(Errc::NoTerms, "no terms left after document-frequency filter (min_df="
                                       + std::to_string(min_df) + ")");
    base.index.reserve(base.nodes.size());
    for (size_t i = 0; i < base.nodes.size(); ++i)
        base.index.emplace(base.nodes[i].label, static_cast<int>(i));
    return base;
}

std::vector<int> record_presence(const BibRecord& record, TermLayer layer, const TermConfig& config,
                                 const std::unordered_map<std::string, int>& index) {
    ExtractedTerms et = extract_terms(record, layer, config);
    std::vector<int> present;
    present.reserve(et.terms.size());
    for (const auto& [term, freq] : et.terms) {
        const auto it = index.find(term);
        if (it != index.end())
            present.push_back(it->second);
    }
    std::sort(present.begin(), present.end());
    return present;
}

void count_pairs(const std::vector<int>& present, PairTally& tally) {
    for (size_t i = 0; i < present.size(); ++i)
        for (size_t j = i + 1; j < present.size(); ++j)
            ++tally[pair_key(present[i], present[j])];
}

WeightedGraph finish_cooc(CoocBase&& base, PairTally&& tally, long documents) {
    WeightedGraph g;
    g.kind = WeightedGraph::Kind::TermCooccurrence;
    g.nodes = std::move(base.nodes);
    g.corpus_documents = documents;
    g.edges.reserve(tally.size());
    for (const auto& [key, count] : tally) {
        GraphEdge e;
        e.a = static_cast<int>(key >> 32);
        e.b = static_cast<int>(key & 0xFFFFFFFFu);
        e.weight = static_cast<double>(count);
        g.edges.push_back(e);
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
        if (x.a != y.a)
            return x.a < y.a;
        return x.b < y.b;
    });
    return g;
}

} // namespace

WeightedGraph cooccurrence_graph_serial(const Corpus& corpus, TermLayer layer, const TermConfig& config,
                                        int min_df) {
    CoocBase base = cooc_nodes(corpus, layer, config, min_df, /*serial=*/true);
    PairTally tally;
    for (const auto& record : corpus.records)
        count_pairs(record_presence(record, layer, config, base.index), tally);
    return finish_cooc(std::move(base), std::move(tally), static_cast<long>(corpus.records.size()));
}

WeightedGraph cooccurrence_graph(const Corpus& corpus, TermLayer layer, const TermConfig& config,
                                 int min_df) {
#ifdef _OPENMP
    CoocBase base = cooc_nodes(corpus, layer, config, min_df, /*serial=*/false);
    const long n = static_cast<long>(corpus.records.size());
    std::vector<PairTally> partials;
    #pragma omp parallel
    {
        #pragma omp single
        partials.resize(static_cast<size_t>(omp_get_num_threads()));
        PairTally& mine = partials[static_cast<size_t>(omp_get_thread_num())];
        #pragma omp for schedule(static)
        for (long i = 0; i < n; ++i)
            count_pairs(record_presence(corpus.records[static_cast<size_t>(i)], layer, config, base.index),
                        mine);
    }
    PairTally tally;
    for (auto& part : partials)
        for (const auto& [key, count] : part)
            tally[key] += count;
    return finish_cooc(std::move(base), std::move(tally), n);
#else
    return cooccurrence_graph_serial(corpus, layer, config, min_df);
#endif
}

WeightedGraph coauthorship_graph(const Corpus& corpus) {
    // author key -> (publication count, first-seen order irrelevant: sorted later)
    std::unordered_map<std::string, long> pubs;
    for (const auto& r : corpus.records)
        for (const auto& a : r.authors)
            ++pubs[a.key()];

    std::vector<GraphNode> nodes;
    nodes.reserve(pubs.size());
    for (const auto& [key, count] : pubs)
        nodes.push_back({key, count});
    std::sort(nodes.begin(), nodes.end(), [](const GraphNode& a, const GraphNode& b) {
        if (a.occurrence != b.occurrence)
            return a.occurrence > b.occurrence;
        return a.label < b.label;
    });
    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < nodes.size(); ++i)
        index.emplace(nodes[i].label, static_cast<int>(i));

    PairTally tally;
    for (const auto& r : corpus.records) {
        std::vector<int> present;
        present.reserve(r.authors.size());
        for (const auto& a : r.authors)
            present.push_back(index.at(a.key()));
        std::sort(present.begin(), present.end());
        count_pairs(present, tally);
    }

    CoocBase base;
    base.nodes = std::move(nodes);
    WeightedGraph g = finish_cooc(std::move(base), std::move(tally),
                                  static_cast<long>(corpus.records.size()));
    g.kind = WeightedGraph::Kind::Coauthorship;
    return g;
}

} // namespace knowmap
