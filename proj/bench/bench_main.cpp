// Compares the serial reference kernels against their OpenMP versions:
// occurrence tables, co-occurrence graph construction, and betweenness.

#include "knowmap/betweenness.hpp"
#include "knowmap/graph.hpp"
#include "knowmap/synth.hpp"
#include "knowmap/termspace.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_best_of(int reps, F&& fn) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        const double t0 = now_s();
        fn();
        best = std::min(best, now_s() - t0);
    }
    return best;
}

knowmap::WeightedGraph random_graph(int n, double avg_degree, unsigned seed) {
    std::mt19937 rng(seed);
    knowmap::WeightedGraph g;
    g.nodes.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        g.nodes[static_cast<size_t>(i)].label = "n" + std::to_string(i);
        g.nodes[static_cast<size_t>(i)].occurrence = 1;
    }
    const double p = avg_degree / static_cast<double>(n - 1);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (uni(rng) < p)
                g.edges.push_back({a, b, 1.0 + static_cast<double>(rng() % 5)});
    g.corpus_documents = n;
    return g;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx\n", name, serial * 1e3,
                parallel * 1e3, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel entry points fall back to serial\n");
#endif

    knowmap::SynthSpec spec;
    spec.documents = 6000;
    spec.single_authored = 1200;
    spec.author_appearances = 30000;
    spec.authors = 12000;
    spec.topics = 8;
    spec.words_per_topic = 60;
    spec.seed = 7;
    const knowmap::Corpus corpus = knowmap::synthesize(spec);
    const knowmap::TermConfig tc = knowmap::default_term_config();

    std::printf("corpus: %zu records\n\n", corpus.records.size());

    {
        knowmap::OccurrenceTable a, b;
        const double ts = time_best_of(3, [&] { a = knowmap::occurrence_table_serial(corpus, knowmap::TermLayer::Abstract, tc); });
        const double tp = time_best_of(3, [&] { b = knowmap::occurrence_table(corpus, knowmap::TermLayer::Abstract, tc); });
        report("occurrence_table", ts, tp);
        if (a.rows != b.rows)
            std::printf("  MISMATCH between serial and parallel tables!\n");
    }
    {
        knowmap::OccurrenceTable a, b;
        const double ts = time_best_of(3, [&] { a = knowmap::document_frequency_serial(corpus, knowmap::TermLayer::Abstract, tc); });
        const double tp = time_best_of(3, [&] { b = knowmap::document_frequency(corpus, knowmap::TermLayer::Abstract, tc); });
        report("document_frequency", ts, tp);
        if (a.rows != b.rows)
            std::printf("  MISMATCH between serial and parallel tables!\n");
    }
    {
        knowmap::WeightedGraph a, b;
        const double ts = time_best_of(3, [&] { a = knowmap::cooccurrence_graph_serial(corpus, knowmap::TermLayer::Abstract, tc, 2); });
        const double tp = time_best_of(3, [&] { b = knowmap::cooccurrence_graph(corpus, knowmap::TermLayer::Abstract, tc, 2); });
        report("cooccurrence_graph", ts, tp);
        if (a.edges.size() != b.edges.size())
            std::printf("  MISMATCH between serial and parallel graphs!\n");
    }
    {
        const knowmap::WeightedGraph g = random_graph(1200, 10.0, 99);
        std::printf("\nrandom graph: %zu nodes, %zu edges\n", g.nodes.size(), g.edges.size());
        knowmap::CentralityScores a, b;
        const double ts = time_best_of(2, [&] { a = knowmap::betweenness_serial(g, false); });
        const double tp = time_best_of(2, [&] { b = knowmap::betweenness(g, false); });
        report("betweenness (unweighted)", ts, tp);
        double max_diff = 0;
        for (const auto& [label, score] : a.scores)
            max_diff = std::max(max_diff, std::abs(score - b.scores.at(label)));
        std::printf("  max |serial - parallel| = %.3g (expected exactly 0)\n", max_diff);

        const double tws = time_best_of(2, [&] { a = knowmap::betweenness_serial(g, true); });
        const double twp = time_best_of(2, [&] { b = knowmap::betweenness(g, true); });
        report("betweenness (weighted)", tws, twp);
    }
    return 0;
}
