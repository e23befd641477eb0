// Independent reference computations for the graph algorithms under test.
// Everything here enumerates exhaustively; nothing reuses the library's
// algorithmic code paths.
#pragma once

#include "knowmap/community.hpp"
#include "knowmap/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

namespace oracles {

// Exact rational with gcd reduction; denominators stay tiny on small graphs.
struct Rat {
    long long num = 0;
    long long den = 1;

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(std::llabs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    Rat& operator+=(const Rat& o) {
        num = num * o.den + o.num * den;
        den = den * o.den;
        reduce();
        return *this;
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool integral() const { return den == 1; }
};

// All-shortest-paths enumeration by exhaustive DFS over simple paths;
// fractional pair credit sigma_st(v)/sigma_st summed exactly.
inline std::vector<Rat> brute_betweenness(const knowmap::WeightedGraph& g) {
    const int n = g.node_count();
    const auto adj = g.adjacency();
    std::vector<Rat> score(static_cast<size_t>(n));

    std::vector<std::vector<int>> best_paths;
    long best_len = 0;
    std::vector<int> path;
    std::vector<char> used(static_cast<size_t>(n), 0);

    std::function<void(int, int, long)> dfs = [&](int u, int t, long len) {
        if (len > best_len)
            return;
        if (u == t) {
            if (len < best_len) {
                best_len = len;
                best_paths.clear();
            }
            best_paths.push_back(path);
            return;
        }
        for (const auto& [v, w] : adj[static_cast<size_t>(u)]) {
            if (used[static_cast<size_t>(v)])
                continue;
            used[static_cast<size_t>(v)] = 1;
            path.push_back(v);
            dfs(v, t, len + 1);
            path.pop_back();
            used[static_cast<size_t>(v)] = 0;
        }
    };

    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            best_paths.clear();
            best_len = n;
            path = {s};
            std::fill(used.begin(), used.end(), 0);
            used[static_cast<size_t>(s)] = 1;
            dfs(s, t, 0);
            if (best_paths.empty())
                continue; // unreachable pair
            const long long sigma = static_cast<long long>(best_paths.size());
            std::vector<long long> through(static_cast<size_t>(n), 0);
            for (const auto& p : best_paths)
                for (size_t k = 1; k + 1 < p.size(); ++k)
                    ++through[static_cast<size_t>(p[k])];
            for (int v = 0; v < n; ++v) {
                if (through[static_cast<size_t>(v)] > 0) {
                    Rat r{through[static_cast<size_t>(v)], sigma};
                    r.reduce();
                    score[static_cast<size_t>(v)] += r;
                }
            }
        }
    }
    return score;
}

// Exhaustive best-modularity partition via restricted growth strings.
inline double best_partition_q(const knowmap::WeightedGraph& g) {
    const int n = g.node_count();
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    double best = -1e9;
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == n) {
            std::map<std::string, int> assign;
            for (int v = 0; v < n; ++v)
                assign[g.nodes[static_cast<size_t>(v)].label] = rgs[static_cast<size_t>(v)];
            best = std::max(best, knowmap::modularity(g, assign));
            return;
        }
        for (int c = 0; c <= max_used + 1 && c < n; ++c) {
            rgs[static_cast<size_t>(i)] = c;
            rec(i + 1, std::max(max_used, c));
        }
    };
    rec(1, 0); // node 0 pinned to cluster 0
    return best;
}

inline knowmap::WeightedGraph graph_of(int n, std::vector<std::tuple<int, int, double>> edges,
                                       long docs = 0) {
    knowmap::WeightedGraph g;
    for (int i = 0; i < n; ++i)
        g.nodes.push_back({std::string(1, static_cast<char>('a' + i)), 1});
    for (auto& [a, b, w] : edges)
        g.edges.push_back({a, b, w});
    std::sort(g.edges.begin(), g.edges.end(),
              [](const knowmap::GraphEdge& x, const knowmap::GraphEdge& y) {
                  return std::pair(x.a, x.b) < std::pair(y.a, y.b);
              });
    g.corpus_documents = docs ? docs : n;
    return g;
}

// Random spanning tree plus extra edges: connected, unweighted.
inline knowmap::WeightedGraph random_connected_graph(int n, std::mt19937& rng) {
    std::vector<std::tuple<int, int, double>> edges;
    std::set<std::pair<int, int>> seen;
    for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(rng() % static_cast<unsigned>(v));
        edges.emplace_back(u, v, 1.0);
        seen.insert({u, v});
    }
    const int extra = static_cast<int>(rng() % static_cast<unsigned>(n));
    for (int k = 0; k < extra; ++k) {
        int a = static_cast<int>(rng() % static_cast<unsigned>(n));
        int b = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (a == b)
            continue;
        if (a > b)
            std::swap(a, b);
        if (seen.insert({a, b}).second)
            edges.emplace_back(a, b, 1.0);
    }
    return graph_of(n, std::move(edges));
}

} // namespace oracles
