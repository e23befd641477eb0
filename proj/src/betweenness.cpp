#include "knowmap/betweenness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace knowmap {

namespace {

using Adjacency = std::vector<std::vector<std::pair<int, double>>>;

// Dependency accumulation for one source (Brandes 2001), added into `bc`.
void accumulate_source(const Adjacency& adj, int n, int source, bool use_weights,
                       std::vector<double>& bc) {
    std::vector<double> sigma(static_cast<size_t>(n), 0.0);
    std::vector<double> delta(static_cast<size_t>(n), 0.0);
    std::vector<std::vector<int>> preds(static_cast<size_t>(n));
    std::vector<int> order; // nodes in nondecreasing distance
    order.reserve(static_cast<size_t>(n));
    sigma[static_cast<size_t>(source)] = 1.0;

    if (!use_weights) {
        std::vector<long> dist(static_cast<size_t>(n), -1);
        dist[static_cast<size_t>(source)] = 0;
        std::queue<int> frontier;
        frontier.push(source);
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            order.push_back(u);
            for (const auto& [v, w] : adj[static_cast<size_t>(u)]) {
                if (dist[static_cast<size_t>(v)] < 0) {
                    dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                    frontier.push(v);
                }
                if (dist[static_cast<size_t>(v)] == dist[static_cast<size_t>(u)] + 1) {
                    sigma[static_cast<size_t>(v)] += sigma[static_cast<size_t>(u)];
                    preds[static_cast<size_t>(v)].push_back(u);
                }
            }
        }
    } else {
        // Heavier co-occurrence means closer: traversal distance is 1/weight.
        constexpr double kInf = std::numeric_limits<double>::infinity();
        const auto eps = [](double d) { return 1e-12 * std::max(1.0, std::abs(d)); };
        std::vector<double> dist(static_cast<size_t>(n), kInf);
        std::vector<char> settled(static_cast<size_t>(n), 0);
        dist[static_cast<size_t>(source)] = 0.0;
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        heap.emplace(0.0, source);
        while (!heap.empty()) {
            const auto [d, u] = heap.top();
            heap.pop();
            if (settled[static_cast<size_t>(u)])
                continue;
            settled[static_cast<size_t>(u)] = 1;
            order.push_back(u);
            for (const auto& [v, w] : adj[static_cast<size_t>(u)]) {
                if (settled[static_cast<size_t>(v)])
                    continue;
                const double cand = d + 1.0 / w;
                if (cand < dist[static_cast<size_t>(v)] - eps(cand)) {
                    dist[static_cast<size_t>(v)] = cand;
                    sigma[static_cast<size_t>(v)] = sigma[static_cast<size_t>(u)];
                    preds[static_cast<size_t>(v)].assign(1, u);
                    heap.emplace(cand, v);
                } else if (std::abs(cand - dist[static_cast<size_t>(v)]) <= eps(cand)) {
                    sigma[static_cast<size_t>(v)] += sigma[static_cast<size_t>(u)];
                    preds[static_cast<size_t>(v)].push_back(u);
                }
            }
        }
    }

    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int w = *it;
        for (const int v : preds[static_cast<size_t>(w)]) {
            delta[static_cast<size_t>(v)] += sigma[static_cast<size_t>(v)] / sigma[static_cast<size_t>(w)]
                                             * (1.0 + delta[static_cast<size_t>(w)]);
        }
        if (w != source)
            bc[static_cast<size_t>(w)] += delta[static_cast<size_t>(w)];
    }
}

constexpr int kSourceBlock = 32;

CentralityScores finish(const WeightedGraph& graph, std::vector<double>& bc) {
    CentralityScores out;
    out.normalized = false;
    for (size_t v = 0; v < bc.size(); ++v) {
        // each unordered pair was counted from both endpoints
        out.scores[graph.nodes[v].label] = bc[v] / 2.0;
    }
    return out;
}

} // namespace

CentralityScores betweenness_serial(const WeightedGraph& graph, bool use_weights) {
    const int n = graph.node_count();
    const Adjacency adj = graph.adjacency();
    std::vector<double> bc(static_cast<size_t>(n), 0.0);

    // Same block-partial accumulation as the parallel path, so the two are
    // bit-identical: per-block sums in source order, blocks summed in order.
    const int blocks = (n + kSourceBlock - 1) / kSourceBlock;
    std::vector<std::vector<double>> partial(static_cast<size_t>(blocks));
    for (int b = 0; b < blocks; ++b) {
        auto& acc = partial[static_cast<size_t>(b)];
        acc.assign(static_cast<size_t>(n), 0.0);
        const int lo = b * kSourceBlock;
        const int hi = std::min(n, lo + kSourceBlock);
        for (int s = lo; s < hi; ++s)
            accumulate_source(adj, n, s, use_weights, acc);
    }
    for (int b = 0; b < blocks; ++b)
        for (int v = 0; v < n; ++v)
            bc[static_cast<size_t>(v)] += partial[static_cast<size_t>(b)][static_cast<size_t>(v)];
    return finish(graph, bc);
}

CentralityScores betweenness(const WeightedGraph& graph, bool use_weights) {
    const int n = graph.node_count();
    const Adjacency adj = graph.adjacency();
    std::vector<double> bc(static_cast<size_t>(n), 0.0);

    const int blocks = (n + kSourceBlock - 1) / kSourceBlock;
    std::vector<std::vector<double>> partial(static_cast<size_t>(blocks));
    #pragma omp parallel for schedule(dynamic)
    for (int b = 0; b < blocks; ++b) {
        auto& acc = partial[static_cast<size_t>(b)];
        acc.assign(static_cast<size_t>(n), 0.0);
        const int lo = b * kSourceBlock;
        const int hi = std::min(n, lo + kSourceBlock);
        for (int s = lo; s < hi; ++s)
            accumulate_source(adj, n, s, use_weights, acc);
    }
    for (int b = 0; b < blocks; ++b)
        for (int v = 0; v < n; ++v)
            bc[static_cast<size_t>(v)] += partial[static_cast<size_t>(b)][static_cast<size_t>(v)];
    return finish(graph, bc);
}

std::map<std::string, long> degree_centrality(const WeightedGraph& graph) {
    std::vector<long> deg(graph.nodes.size(), 0);
    for (const auto& e : graph.edges) {
        ++deg[static_cast<size_t>(e.a)];
        ++deg[static_cast<size_t>(e.b)];
    }
    std::map<std::string, long> out;
    for (size_t v = 0; v < graph.nodes.size(); ++v)
        out[graph.nodes[v].label] = deg[v];
    return out;
}

} // namespace knowmap
