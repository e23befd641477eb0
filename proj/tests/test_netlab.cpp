#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "knowmap/error.hpp"
#include "knowmap/netlab.hpp"

#include "test_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace knowmap;

namespace {

BibRecord keyword_record(std::string id, std::vector<std::string> keywords) {
    BibRecord r;
    r.record_id = std::move(id);
    r.title = "t" + r.record_id;
    r.author_keywords = std::move(keywords);
    return r;
}

Corpus keyword_corpus(std::vector<std::vector<std::string>> docs) {
    Corpus c;
    int id = 0;
    for (auto& kws : docs)
        c.records.push_back(keyword_record(std::to_string(id++), std::move(kws)));
    return c;
}

TermConfig kw_config() {
    TermConfig cfg;
    cfg.min_length = 1;
    return cfg;
}

double dist(const std::array<double, 2>& p, const std::array<double, 2>& q) {
    return std::hypot(p[0] - q[0], p[1] - q[1]);
}

} // namespace

// ---------------------------------------------------------------------------
// graph construction
// ---------------------------------------------------------------------------

TEST_CASE("cooccurrence_graph: one record gives a weight-1 clique") {
    const Corpus c = keyword_corpus({{"a", "b", "c"}});
    const WeightedGraph g = cooccurrence_graph(c, TermLayer::AuthorKeywords, kw_config(), 1);
    CHECK(g.nodes.size() == 3);
    REQUIRE(g.edges.size() == 3);
    for (const auto& e : g.edges)
        CHECK(e.weight == 1.0);
}

TEST_CASE("cooccurrence_graph: repeated pair accumulates weight") {
    const Corpus c = keyword_corpus({{"a", "b"}, {"a", "b"}});
    const WeightedGraph g = cooccurrence_graph(c, TermLayer::AuthorKeywords, kw_config(), 1);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].weight == 2.0);
    CHECK(g.corpus_documents == 2);
}

TEST_CASE("cooccurrence_graph: min_df filter keeps df>=2 triangle") {
    const Corpus c = keyword_corpus({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    const WeightedGraph g = cooccurrence_graph(c, TermLayer::AuthorKeywords, kw_config(), 2);
    CHECK(g.nodes.size() == 3);
    for (const auto& node : g.nodes)
        CHECK(node.occurrence == 2);
    REQUIRE(g.edges.size() == 3);
    for (const auto& e : g.edges)
        CHECK(e.weight == 1.0);
}

TEST_CASE("cooccurrence_graph: NoTerms when filter removes everything") {
    const Corpus c = keyword_corpus({{"a"}, {"b"}});
    CHECK_THROWS_AS(cooccurrence_graph(c, TermLayer::AuthorKeywords, kw_config(), 5), Error);
}

TEST_CASE("cooccurrence_graph: serial matches parallel, permutation invariant") {
    std::mt19937 rng(41);
    std::vector<std::vector<std::string>> docs;
    for (int i = 0; i < 80; ++i) {
        std::vector<std::string> kws;
        const int k = 2 + static_cast<int>(rng() % 5);
        for (int j = 0; j < k; ++j)
            kws.push_back("t" + std::to_string(rng() % 25));
        docs.push_back(kws);
    }
    Corpus a = keyword_corpus(docs);
    const WeightedGraph gp = cooccurrence_graph(a, TermLayer::AuthorKeywords, kw_config(), 1);
    const WeightedGraph gs = cooccurrence_graph_serial(a, TermLayer::AuthorKeywords, kw_config(), 1);
    REQUIRE(gp.nodes.size() == gs.nodes.size());
    REQUIRE(gp.edges.size() == gs.edges.size());
    for (size_t i = 0; i < gp.edges.size(); ++i) {
        CHECK(gp.edges[i].a == gs.edges[i].a);
        CHECK(gp.edges[i].b == gs.edges[i].b);
        CHECK(gp.edges[i].weight == gs.edges[i].weight);
    }

    std::shuffle(a.records.begin(), a.records.end(), rng);
    const WeightedGraph gshuf = cooccurrence_graph(a, TermLayer::AuthorKeywords, kw_config(), 1);
    REQUIRE(gshuf.nodes.size() == gp.nodes.size());
    for (size_t i = 0; i < gp.nodes.size(); ++i) {
        CHECK(gshuf.nodes[i].label == gp.nodes[i].label);
        CHECK(gshuf.nodes[i].occurrence == gp.nodes[i].occurrence);
    }
    REQUIRE(gshuf.edges.size() == gp.edges.size());
    for (size_t i = 0; i < gp.edges.size(); ++i)
        CHECK(gshuf.edges[i].weight == gp.edges[i].weight);

    // presence bound: weight(a,b) <= min(occ(a), occ(b))
    for (const auto& e : gp.edges) {
        CHECK(e.weight <= gp.nodes[static_cast<size_t>(e.a)].occurrence);
        CHECK(e.weight <= gp.nodes[static_cast<size_t>(e.b)].occurrence);
    }
}

TEST_CASE("coauthorship_graph: triangle, repeat pairs, all-solo corpus") {
    Corpus c;
    BibRecord r1 = keyword_record("1", {});
    r1.authors = {NormalizedAuthor{"Aa", "A", "Aa A"}, NormalizedAuthor{"Bb", "B", "Bb B"},
                  NormalizedAuthor{"Cc", "C", "Cc C"}};
    c.records.push_back(r1);
    const WeightedGraph tri = coauthorship_graph(c);
    CHECK(tri.kind == WeightedGraph::Kind::Coauthorship);
    CHECK(tri.nodes.size() == 3);
    CHECK(tri.edges.size() == 3);

    BibRecord r2 = keyword_record("2", {});
    r2.authors = {NormalizedAuthor{"Aa", "A", "Aa A"}, NormalizedAuthor{"Bb", "B", "Bb B"}};
    c.records.push_back(r2);
    const WeightedGraph g = coauthorship_graph(c);
    double w_ab = 0;
    for (const auto& e : g.edges) {
        const auto& la = g.nodes[static_cast<size_t>(e.a)].label;
        const auto& lb = g.nodes[static_cast<size_t>(e.b)].label;
        if ((la == "aa a" && lb == "bb b") || (la == "bb b" && lb == "aa a"))
            w_ab = e.weight;
    }
    CHECK(w_ab == 2.0);

    Corpus solo;
    BibRecord r3 = keyword_record("3", {});
    r3.authors = {NormalizedAuthor{"Zz", "Z", "Zz Z"}};
    solo.records.push_back(r3);
    const WeightedGraph sg = coauthorship_graph(solo);
    CHECK(sg.nodes.size() == 1);
    CHECK(sg.edges.empty());
}

// ---------------------------------------------------------------------------
// betweenness
// ---------------------------------------------------------------------------

TEST_CASE("betweenness: path graph a-b-c-d-e") {
    const WeightedGraph g = oracles::graph_of(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
    const CentralityScores s = betweenness(g, false);
    CHECK(s.normalized == false);
    CHECK(s.scores.at("a") == 0.0);
    CHECK(s.scores.at("b") == 3.0);
    CHECK(s.scores.at("c") == 4.0);
    CHECK(s.scores.at("d") == 3.0);
    CHECK(s.scores.at("e") == 0.0);
}

TEST_CASE("betweenness: complete graph is all zeros") {
    std::vector<std::tuple<int, int, double>> edges;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            edges.emplace_back(a, b, 1.0);
    const CentralityScores s = betweenness(oracles::graph_of(4, edges), false);
    for (const auto& [label, v] : s.scores)
        CHECK(v == 0.0);
}

TEST_CASE("betweenness: star center carries every pair") {
    const WeightedGraph g = oracles::graph_of(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    const CentralityScores s = betweenness(g, false);
    CHECK(s.scores.at("a") == 3.0);
    CHECK(s.scores.at("b") == 0.0);
}

TEST_CASE("betweenness: disconnected graphs contribute only within components") {
    const WeightedGraph g = oracles::graph_of(5, {{0, 1, 1}, {1, 2, 1}}); // d, e isolated
    const CentralityScores s = betweenness(g, false);
    CHECK(s.scores.at("b") == 1.0);
    CHECK(s.scores.at("d") == 0.0);
    CHECK(s.scores.at("e") == 0.0);
}

TEST_CASE("betweenness: weighted mode shifts shortest paths to heavy edges") {
    // a-b-c via weights: direct a-c weight 1 (distance 1), a-b and b-c
    // weight 4 each (distance 0.25+0.25) -> shortest a..c runs through b.
    const WeightedGraph g = oracles::graph_of(3, {{0, 1, 4}, {1, 2, 4}, {0, 2, 1}});
    const CentralityScores s = betweenness(g, true);
    CHECK(s.scores.at("b") == 1.0);
    const CentralityScores unweighted = betweenness(g, false);
    CHECK(unweighted.scores.at("b") == 0.0);
}

TEST_CASE("betweenness: oracle agreement on 200 random connected graphs") {
    std::mt19937 rng(20200214);
    double max_diff = 0;
    for (int round = 0; round < 200; ++round) {
        const int n = 3 + static_cast<int>(rng() % 5); // 3..7
        const WeightedGraph g = oracles::random_connected_graph(n, rng);
        const auto oracle = oracles::brute_betweenness(g);
        const CentralityScores par = betweenness(g, false);
        const CentralityScores ser = betweenness_serial(g, false);
        for (int v = 0; v < n; ++v) {
            const std::string& label = g.nodes[static_cast<size_t>(v)].label;
            const double expect = oracle[static_cast<size_t>(v)].value();
            max_diff = std::max(max_diff, std::abs(par.scores.at(label) - expect));
            CHECK(par.scores.at(label) == doctest::Approx(expect).epsilon(1e-12));
            if (oracle[static_cast<size_t>(v)].integral())
                CHECK(par.scores.at(label) == expect); // exact on unique-path cases
            CHECK(par.scores.at(label) == ser.scores.at(label)); // bitwise
        }
    }
    CHECK(max_diff <= 1e-9);
}

TEST_CASE("betweenness: parallel is bit-identical to serial on a large weighted graph") {
    std::mt19937 rng(777);
    std::vector<std::tuple<int, int, double>> edges;
    const int n = 260; // spans multiple source blocks
    std::set<std::pair<int, int>> seen;
    for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(rng() % static_cast<unsigned>(v));
        edges.emplace_back(u, v, 1.0 + static_cast<double>(rng() % 9));
        seen.insert({u, v});
    }
    for (int k = 0; k < 3 * n; ++k) {
        int a = static_cast<int>(rng() % static_cast<unsigned>(n));
        int b = static_cast<int>(rng() % static_cast<unsigned>(n));
        if (a == b)
            continue;
        if (a > b)
            std::swap(a, b);
        if (seen.insert({a, b}).second)
            edges.emplace_back(a, b, 1.0 + static_cast<double>(rng() % 9));
    }
    WeightedGraph g;
    for (int i = 0; i < n; ++i)
        g.nodes.push_back({"n" + std::to_string(i), 1});
    for (auto& [a, b, w] : edges)
        g.edges.push_back({a, b, w});
    std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });

    for (const bool weighted : {false, true}) {
        const CentralityScores par = betweenness(g, weighted);
        const CentralityScores ser = betweenness_serial(g, weighted);
        for (const auto& [label, score] : par.scores)
            CHECK(score == ser.scores.at(label)); // exactly equal, not approximately
    }
}

// ---------------------------------------------------------------------------
// modularity + communities
// ---------------------------------------------------------------------------

TEST_CASE("modularity: single edge, one block vs singletons") {
    const WeightedGraph g = oracles::graph_of(2, {{0, 1, 1}});
    CHECK(modularity(g, {{"a", 0}, {"b", 0}}) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(modularity(g, {{"a", 0}, {"b", 1}}) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("modularity: two disjoint triangles split by component = 0.5") {
    const WeightedGraph g =
        oracles::graph_of(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
    const std::map<std::string, int> assign = {{"a", 0}, {"b", 0}, {"c", 0},
                                               {"d", 1}, {"e", 1}, {"f", 1}};
    CHECK(modularity(g, assign) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("modularity: singleton partition is never positive") {
    std::mt19937 rng(99);
    for (int round = 0; round < 20; ++round) {
        const WeightedGraph g = oracles::random_connected_graph(3 + static_cast<int>(rng() % 5), rng);
        std::map<std::string, int> singles;
        int c = 0;
        for (const auto& node : g.nodes)
            singles[node.label] = c++;
        CHECK(modularity(g, singles) <= 1e-15);
    }
}

TEST_CASE("modularity: empty graph throws") {
    WeightedGraph g;
    g.nodes.push_back({"a", 1});
    CHECK_THROWS_AS(modularity(g, {{"a", 0}}), Error);
}

TEST_CASE("detect_communities: two disjoint triangles -> exactly two components, any seed") {
    const WeightedGraph g =
        oracles::graph_of(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
    for (unsigned seed : {0u, 1u, 7u, 42u, 123456u}) {
        const Partition p = detect_communities(g, seed);
        CHECK(p.modularity == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(p.assignment.at("a") == p.assignment.at("b"));
        CHECK(p.assignment.at("a") == p.assignment.at("c"));
        CHECK(p.assignment.at("d") == p.assignment.at("e"));
        CHECK(p.assignment.at("d") == p.assignment.at("f"));
        CHECK(p.assignment.at("a") != p.assignment.at("d"));
    }
}

TEST_CASE("detect_communities: single edge joins into one cluster") {
    const Partition p = detect_communities(oracles::graph_of(2, {{0, 1, 1}}), 1);
    CHECK(p.assignment.at("a") == p.assignment.at("b"));
    CHECK(p.modularity == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("detect_communities: clique stays one cluster") {
    std::vector<std::tuple<int, int, double>> edges;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            edges.emplace_back(a, b, 1.0);
    const Partition p = detect_communities(oracles::graph_of(5, edges), 3);
    for (const auto& [label, c] : p.assignment)
        CHECK(c == 0);
}

TEST_CASE("detect_communities: edgeless graph throws NoEdges") {
    WeightedGraph g;
    g.nodes.push_back({"a", 1});
    g.nodes.push_back({"b", 1});
    CHECK_THROWS_AS(detect_communities(g, 1), Error);
}

TEST_CASE("detect_communities: matches exhaustive optimum on 50 seeded random graphs") {
    std::mt19937 rng(505);
    for (int round = 0; round < 50; ++round) {
        const int n = 3 + static_cast<int>(rng() % 6); // 3..8
        const WeightedGraph g = oracles::random_connected_graph(n, rng);
        const Partition p = detect_communities(g, 1000u + static_cast<unsigned>(round));
        const double best = oracles::best_partition_q(g);
        CHECK(p.modularity <= best + 1e-12);
        CHECK(p.modularity >= best - 1e-9);

        // dense cluster ids from 0
        std::set<int> ids;
        for (const auto& [label, c] : p.assignment)
            ids.insert(c);
        CHECK(*ids.begin() == 0);
        CHECK(*ids.rbegin() == static_cast<int>(ids.size()) - 1);

        // never worse than the trivial partitions
        std::map<std::string, int> one_block, singles;
        int c = 0;
        for (const auto& node : g.nodes) {
            one_block[node.label] = 0;
            singles[node.label] = c++;
        }
        CHECK(p.modularity >= modularity(g, one_block) - 1e-12);
        CHECK(p.modularity >= modularity(g, singles) - 1e-12);
    }
}

TEST_CASE("detect_communities: deterministic for fixed inputs, modularity recompute matches") {
    std::mt19937 rng(606);
    const WeightedGraph g = oracles::random_connected_graph(12, rng);
    const Partition p1 = detect_communities(g, 99, 1.0);
    const Partition p2 = detect_communities(g, 99, 1.0);
    CHECK(p1.assignment == p2.assignment);
    CHECK(p1.modularity == p2.modularity);
    CHECK(p1.modularity == doctest::Approx(modularity(g, p1.assignment)).epsilon(1e-12));
}

TEST_CASE("detect_communities: higher resolution splits no less finely") {
    const WeightedGraph g = oracles::graph_of(
        6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, 0.2}});
    const Partition coarse = detect_communities(g, 5, 0.3);
    const Partition fine = detect_communities(g, 5, 1.0);
    std::set<int> coarse_ids, fine_ids;
    for (const auto& [l, c] : coarse.assignment)
        coarse_ids.insert(c);
    for (const auto& [l, c] : fine.assignment)
        fine_ids.insert(c);
    CHECK(coarse_ids.size() <= fine_ids.size());
}

// ---------------------------------------------------------------------------
// MDS
// ---------------------------------------------------------------------------

TEST_CASE("classical_mds: two points at dissimilarity 1") {
    const MdsResult r = classical_mds({{0, 1}, {1, 0}});
    CHECK_FALSE(r.degenerate);
    CHECK(dist(r.coords[0], r.coords[1]) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("classical_mds: three equidistant points embed as a unit equilateral triangle") {
    const MdsResult r = classical_mds({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(r.stress <= 1e-9);
    CHECK(dist(r.coords[0], r.coords[1]) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(dist(r.coords[0], r.coords[2]) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(dist(r.coords[1], r.coords[2]) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("classical_mds: duplicate points land on identical coordinates") {
    const MdsResult r = classical_mds({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
    CHECK(r.coords[0][0] == doctest::Approx(r.coords[1][0]).epsilon(1e-9));
    CHECK(r.coords[0][1] == doctest::Approx(r.coords[1][1]).epsilon(1e-9));
}

TEST_CASE("classical_mds: all-identical points are degenerate with zero coords") {
    const MdsResult r = classical_mds({{0, 0}, {0, 0}});
    CHECK(r.degenerate);
    CHECK(r.coords[0][0] == 0.0);
    CHECK(r.coords[1][1] == 0.0);
}

TEST_CASE("classical_mds: sign convention makes the largest coordinate positive") {
    const MdsResult r = classical_mds({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
    for (int axis = 0; axis < 2; ++axis) {
        double best = -1, val = 0;
        for (const auto& p : r.coords) {
            if (std::abs(p[static_cast<size_t>(axis)]) > best) {
                best = std::abs(p[static_cast<size_t>(axis)]);
                val = p[static_cast<size_t>(axis)];
            }
        }
        CHECK(val >= 0.0);
    }
}

TEST_CASE("classical_mds: 100 random planar configurations reconstruct distances") {
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    double worst = 0;
    for (int round = 0; round < 100; ++round) {
        const int n = 3 + static_cast<int>(rng() % 8); // 3..10
        std::vector<std::array<double, 2>> pts(static_cast<size_t>(n));
        for (auto& p : pts)
            p = {uni(rng), uni(rng)};
        std::vector<std::vector<double>> d(static_cast<size_t>(n),
                                           std::vector<double>(static_cast<size_t>(n), 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    dist(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)]);
        const MdsResult r = classical_mds(d);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double got = dist(r.coords[static_cast<size_t>(i)], r.coords[static_cast<size_t>(j)]);
                worst = std::max(worst,
                                 std::abs(got - d[static_cast<size_t>(i)][static_cast<size_t>(j)]));
            }
    }
    CHECK(worst <= 1e-6);
}

TEST_CASE("mds_layout: association strength dissimilarity on a graph") {
    // two tightly co-occurring terms plus one stranger
    const Corpus c = keyword_corpus({{"a", "b"}, {"a", "b"}, {"c", "a"}});
    const WeightedGraph g = cooccurrence_graph(c, TermLayer::AuthorKeywords, kw_config(), 1);
    const MdsLayout layout = mds_layout(g);
    REQUIRE(layout.points.size() == 3);
    const double d_ab = dist(layout.points.at("a"), layout.points.at("b"));
    const double d_bc = dist(layout.points.at("b"), layout.points.at("c"));
    CHECK(d_ab < d_bc);
}

// ---------------------------------------------------------------------------
// conceptual map composition
// ---------------------------------------------------------------------------

TEST_CASE("conceptual_map: disjoint topics separate into clusters and in space") {
    const Corpus c = keyword_corpus({{"a", "b"}, {"a", "b"}, {"c", "d"}, {"c", "d"}});
    const ConceptualMap m = conceptual_map(c, TermLayer::AuthorKeywords, kw_config(), 1, 42);
    std::set<int> ids;
    for (const auto& [label, cluster] : m.partition.assignment)
        ids.insert(cluster);
    CHECK(ids.size() == 2);
    CHECK(m.partition.assignment.at("a") == m.partition.assignment.at("b"));
    CHECK(m.partition.assignment.at("c") == m.partition.assignment.at("d"));

    const double intra = dist(m.points.at("a"), m.points.at("b"));
    const double inter = dist(m.points.at("a"), m.points.at("c"));
    CHECK(intra < inter);
}

TEST_CASE("conceptual_map: single record clique is one cluster") {
    const Corpus c = keyword_corpus({{"a", "b", "c"}});
    const ConceptualMap m = conceptual_map(c, TermLayer::AuthorKeywords, kw_config(), 1, 7);
    for (const auto& [label, cluster] : m.partition.assignment)
        CHECK(cluster == 0);
}

TEST_CASE("conceptual_map: empty layer propagates NoTerms") {
    Corpus c;
    BibRecord r;
    r.record_id = "1";
    r.title = "only a title";
    c.records.push_back(r);
    CHECK_THROWS_AS(conceptual_map(c, TermLayer::AuthorKeywords, kw_config(), 1, 1), Error);
}
