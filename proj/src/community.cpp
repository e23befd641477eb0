#include "knowmap/community.hpp"

#include "knowmap/error.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace knowmap {

double modularity(const WeightedGraph& graph, const std::map<std::string, int>& assignment) {
    const double W = graph.total_weight();
    if (W <= 0)
        throw Error(Errc::EmptyGraph, "modularity undefined: graph has no edge weight");

    std::vector<int> comm(graph.nodes.size(), -1);
    int max_comm = -1;
    for (size_t v = 0; v < graph.nodes.size(); ++v) {
        const auto it = assignment.find(graph.nodes[v].label);
        if (it == assignment.end())
            throw Error(Errc::ConfigError, "assignment misses node '" + graph.nodes[v].label + "'");
        comm[v] = it->second;
        max_comm = std::max(max_comm, it->second);
    }

    std::vector<double> w_in(static_cast<size_t>(max_comm + 1), 0.0);
    std::vector<double> deg(static_cast<size_t>(max_comm + 1), 0.0);
    for (const auto& e : graph.edges) {
        const int ca = comm[static_cast<size_t>(e.a)];
        const int cb = comm[static_cast<size_t>(e.b)];
        if (ca == cb)
            w_in[static_cast<size_t>(ca)] += e.weight;
        deg[static_cast<size_t>(ca)] += e.weight;
        deg[static_cast<size_t>(cb)] += e.weight;
    }

    double q = 0;
    for (size_t c = 0; c < w_in.size(); ++c) {
        const double frac = deg[c] / (2.0 * W);
        q += w_in[c] / W - frac * frac;
    }
    return q;
}

namespace {

// Coarsenable working graph for the Louvain levels.
struct LevelGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> adj; // no self loops here
    std::vector<double> self;                             // self-loop weight (counted once)
    std::vector<double> ktot;                             // weighted degree incl. 2*self
    double two_w = 0;                                     // sum of ktot
};

LevelGraph level_from(const WeightedGraph& g) {
    LevelGraph lg;
    lg.n = g.node_count();
    lg.adj.resize(static_cast<size_t>(lg.n));
    lg.self.assign(static_cast<size_t>(lg.n), 0.0);
    for (const auto& e : g.edges) {
        lg.adj[static_cast<size_t>(e.a)].emplace_back(e.b, e.weight);
        lg.adj[static_cast<size_t>(e.b)].emplace_back(e.a, e.weight);
    }
    lg.ktot.assign(static_cast<size_t>(lg.n), 0.0);
    for (int u = 0; u < lg.n; ++u) {
        double k = 2.0 * lg.self[static_cast<size_t>(u)];
        for (const auto& [v, w] : lg.adj[static_cast<size_t>(u)])
            k += w;
        lg.ktot[static_cast<size_t>(u)] = k;
        lg.two_w += k;
    }
    return lg;
}

// Deterministic Fisher-Yates; mt19937 output is fully specified by the
// standard, so the permutation is identical on every platform.
void shuffle_order(std::vector<int>& order, std::mt19937& rng) {
    for (size_t i = order.size(); i > 1; --i) {
        const size_t j = static_cast<size_t>(rng() % i);
        std::swap(order[i - 1], order[j]);
    }
}

// One level of local moving. Returns true if any node moved.
bool local_moving(const LevelGraph& lg, std::vector<int>& comm, double resolution, std::mt19937& rng) {
    const int n = lg.n;
    std::vector<double> comm_tot(static_cast<size_t>(n), 0.0);
    for (int u = 0; u < n; ++u)
        comm_tot[static_cast<size_t>(comm[static_cast<size_t>(u)])] += lg.ktot[static_cast<size_t>(u)];

    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        order[static_cast<size_t>(i)] = i;
    shuffle_order(order, rng);

    std::vector<double> link(static_cast<size_t>(n), 0.0); // weight from u to community
    std::vector<int> touched;

    bool any_move = false;
    bool moved = true;
    int passes = 0;
    while (moved && ++passes < 10000) {
        moved = false;
        for (const int u : order) {
            const int old_c = comm[static_cast<size_t>(u)];

            touched.clear();
            for (const auto& [v, w] : lg.adj[static_cast<size_t>(u)]) {
                const int c = comm[static_cast<size_t>(v)];
                if (link[static_cast<size_t>(c)] == 0.0)
                    touched.push_back(c);
                link[static_cast<size_t>(c)] += w;
            }
            if (link[static_cast<size_t>(old_c)] == 0.0)
                touched.push_back(old_c); // staying is always a candidate

            comm_tot[static_cast<size_t>(old_c)] -= lg.ktot[static_cast<size_t>(u)];

            // gain(c) ~ link(u,c) - resolution * ktot_u * tot_c / 2W, up to a
            // constant factor; candidates scanned in ascending id so ties
            // break toward the lowest community id.
            std::sort(touched.begin(), touched.end());
            const double ku = lg.ktot[static_cast<size_t>(u)];
            double best_gain = 0;
            int best_c = -1;
            double old_gain = 0;
            for (const int c : touched) {
                const double gain = link[static_cast<size_t>(c)]
                                    - resolution * ku * comm_tot[static_cast<size_t>(c)] / lg.two_w;
                if (c == old_c)
                    old_gain = gain;
                if (best_c < 0 || gain > best_gain) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            for (const int c : touched)
                link[static_cast<size_t>(c)] = 0.0;

            // strictly positive improvement over staying put
            if (best_c != old_c && best_gain > old_gain) {
                comm[static_cast<size_t>(u)] = best_c;
                moved = true;
                any_move = true;
            }
            comm_tot[static_cast<size_t>(comm[static_cast<size_t>(u)])] += ku;
        }
    }
    return any_move;
}

// Renumber communities densely by first appearance over node index order.
int densify(std::vector<int>& comm) {
    std::vector<int> remap(comm.size(), -1);
    int next = 0;
    for (auto& c : comm) {
        if (remap[static_cast<size_t>(c)] < 0)
            remap[static_cast<size_t>(c)] = next++;
        c = remap[static_cast<size_t>(c)];
    }
    return next;
}

LevelGraph coarsen(const LevelGraph& lg, const std::vector<int>& comm, int n_comm) {
    LevelGraph out;
    out.n = n_comm;
    out.adj.resize(static_cast<size_t>(n_comm));
    out.self.assign(static_cast<size_t>(n_comm), 0.0);

    std::vector<std::vector<std::pair<int, double>>> buckets(static_cast<size_t>(n_comm));
    for (int u = 0; u < lg.n; ++u) {
        const int cu = comm[static_cast<size_t>(u)];
        out.self[static_cast<size_t>(cu)] += lg.self[static_cast<size_t>(u)];
        for (const auto& [v, w] : lg.adj[static_cast<size_t>(u)]) {
            if (v < u)
                continue; // each undirected edge once
            const int cv = comm[static_cast<size_t>(v)];
            if (cu == cv)
                out.self[static_cast<size_t>(cu)] += w;
            else
                buckets[static_cast<size_t>(std::min(cu, cv))].emplace_back(std::max(cu, cv), w);
        }
    }
    for (int a = 0; a < n_comm; ++a) {
        auto& list = buckets[static_cast<size_t>(a)];
        std::sort(list.begin(), list.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        size_t i = 0;
        while (i < list.size()) {
            size_t j = i;
            double w = 0;
            while (j < list.size() && list[j].first == list[i].first) {
                w += list[j].second;
                ++j;
            }
            out.adj[static_cast<size_t>(a)].emplace_back(list[i].first, w);
            out.adj[static_cast<size_t>(list[i].first)].emplace_back(a, w);
            i = j;
        }
    }
    out.ktot.assign(static_cast<size_t>(n_comm), 0.0);
    for (int u = 0; u < n_comm; ++u) {
        double k = 2.0 * out.self[static_cast<size_t>(u)];
        for (const auto& [v, w] : out.adj[static_cast<size_t>(u)])
            k += w;
        out.ktot[static_cast<size_t>(u)] = k;
        out.two_w += k;
    }
    return out;
}

} // namespace

namespace {

// One full Louvain run (local moving to a fixed point, coarsen, repeat),
// consuming shuffles from the shared generator.
std::vector<int> louvain_run(const WeightedGraph& graph, double resolution, std::mt19937& rng) {
    LevelGraph level = level_from(graph);

    std::vector<int> membership(static_cast<size_t>(level.n));
    for (int i = 0; i < level.n; ++i)
        membership[static_cast<size_t>(i)] = i;

    while (true) {
        std::vector<int> comm(static_cast<size_t>(level.n));
        for (int i = 0; i < level.n; ++i)
            comm[static_cast<size_t>(i)] = i;

        const bool improved = local_moving(level, comm, resolution, rng);
        if (!improved)
            break;
        const int n_comm = densify(comm);
        for (auto& m : membership)
            m = comm[static_cast<size_t>(m)];
        if (n_comm == level.n)
            break;
        level = coarsen(level, comm, n_comm);
    }
    return membership;
}

} // namespace

Partition detect_communities(const WeightedGraph& graph, unsigned seed, double resolution) {
    if (graph.edges.empty())
        throw Error(Errc::NoEdges, "community detection needs at least one edge");

    std::mt19937 rng(seed);

    // Greedy local moving can stall in a local optimum on small graphs, so
    // small instances rerun the scheme under fresh shuffles from the same
    // generator and keep the best partition. Deterministic for fixed
    // (graph, seed, resolution) either way.
    const int n = graph.node_count();
    const int restarts = n <= 16 ? 160 : (n <= 64 ? 32 : 1);

    std::vector<int> best;
    double best_q = 0;
    for (int r = 0; r < restarts; ++r) {
        std::vector<int> membership = louvain_run(graph, resolution, rng);
        Partition candidate;
        for (size_t v = 0; v < graph.nodes.size(); ++v)
            candidate.assignment[graph.nodes[v].label] = membership[v];
        const double q = modularity(graph, candidate.assignment);
        if (best.empty() || q > best_q) {
            best = std::move(membership);
            best_q = q;
        }
    }

    // dense ids by first appearance over original node order
    densify(best);

    Partition part;
    for (size_t v = 0; v < graph.nodes.size(); ++v)
        part.assignment[graph.nodes[v].label] = best[v];
    part.modularity = modularity(graph, part.assignment);
    return part;
}

} // namespace knowmap
