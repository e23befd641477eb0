#include "knowmap/synth.hpp"

#include "knowmap/error.hpp"

#include <array>
#include <string>
#include <vector>

namespace knowmap {

namespace {

constexpr std::array<const char*, 40> kSurnames = {
    "Alvarez", "Baker",  "Chen",   "Diallo", "Eriksen", "Fischer", "Garcia",  "Huang",
    "Ivanov",  "Jensen", "Kumar",  "Lopez",  "Mbeki",   "Nakamura", "Okafor", "Patel",
    "Quinn",   "Rossi",  "Santos", "Tanaka", "Umar",    "Varga",    "Weber",  "Xu",
    "Yamada",  "Zhao",   "Ahmed",  "Brown",  "Costa",   "Dubois",   "Evans",  "Ferrari",
    "Gruber",  "Hansen", "Ito",    "Jones",  "Kim",     "Larsen",   "Moreau", "Novak",
};

constexpr std::array<const char*, 24> kRoots = {
    "signal",  "pathway", "vector",  "kernel",  "cluster", "network", "antigen", "protein",
    "genome",  "lattice", "gradient", "spectrum", "membrane", "plasma", "neuron", "enzyme",
    "crystal", "polymer", "isotope", "catalyst", "receptor", "microbe", "tissue", "serum",
};

NormalizedAuthor author_for(long idx) {
    const auto base = static_cast<size_t>(idx) % kSurnames.size();
    const long block = idx / static_cast<long>(kSurnames.size());
    const char initial = static_cast<char>('A' + (block % 26));
    const long suffix = block / 26;
    NormalizedAuthor a;
    a.surname = kSurnames[base];
    if (suffix > 0)
        a.surname += std::to_string(suffix);
    a.initials = std::string(1, initial);
    a.display = a.surname + " " + a.initials;
    return a;
}

std::string topic_word(int topic, int k, int roots) {
    const int r = k % roots;
    const int rep = k / roots;
    std::string w = kRoots[static_cast<size_t>(r) % kRoots.size()];
    if (rep > 0)
        w += std::to_string(rep);
    w += "t";
    w += std::to_string(topic);
    return w;
}

std::string two_digits(long v) {
    std::string s = std::to_string(v);
    return s.size() < 2 ? "0" + s : s;
}

} // namespace

Corpus synthesize(const SynthSpec& spec) {
    const long docs = spec.documents;
    const long single = spec.single_authored;
    const long appearances = spec.author_appearances;
    const long authors = spec.authors;

    if (docs < 1 || authors < 1 || spec.topics < 1 || spec.sources < 1 || spec.words_per_topic < 4)
        throw Error(Errc::InfeasibleSpec, "synth: counts must be positive");
    if (single < 0 || single > docs)
        throw Error(Errc::InfeasibleSpec, "synth: single_authored must be in [0, documents]");
    if (appearances < docs)
        throw Error(Errc::InfeasibleSpec, "synth: author_appearances < documents");

    const long multi_docs = docs - single;
    if (multi_docs == 0 && appearances != docs)
        throw Error(Errc::InfeasibleSpec, "synth: all-single corpus needs author_appearances == documents");
    const long multi_slots = appearances - single;
    if (multi_docs > 0 && multi_slots < 2 * multi_docs)
        throw Error(Errc::InfeasibleSpec, "synth: multi-authored documents need >= 2 authors each");

    long pool_multi = spec.authors_multi;
    if (pool_multi < 0) {
        if (multi_docs == 0)
            pool_multi = 0;
        else
            pool_multi = std::min(multi_slots, single > 0 ? std::max<long>(2, authors - std::min(single, authors / 4 + 1))
                                                          : authors);
    }
    const long pool_single = authors - pool_multi;
    if (pool_multi < 0 || pool_single < 0)
        throw Error(Errc::InfeasibleSpec, "synth: authors_multi out of range");
    if (multi_docs == 0 && pool_multi > 0)
        throw Error(Errc::InfeasibleSpec, "synth: multi-pool authors but no multi-authored documents");
    if (pool_single > single)
        throw Error(Errc::InfeasibleSpec, "synth: more single-only authors than single-authored documents");
    if (single > 0 && pool_single == 0 && pool_multi == 0)
        throw Error(Errc::InfeasibleSpec, "synth: no author pool for single-authored documents");
    if (multi_docs > 0 && pool_multi > multi_slots)
        throw Error(Errc::InfeasibleSpec, "synth: not enough appearances to use every multi-pool author");

    // per-document author counts: 2 each, remainder spread round-robin
    std::vector<long> sizes(static_cast<size_t>(multi_docs), 2);
    if (multi_docs > 0) {
        const long extra = multi_slots - 2 * multi_docs;
        const long base = extra / multi_docs;
        const long rem = extra % multi_docs;
        long max_size = 0;
        for (long j = 0; j < multi_docs; ++j) {
            sizes[static_cast<size_t>(j)] += base + (j < rem ? 1 : 0);
            max_size = std::max(max_size, sizes[static_cast<size_t>(j)]);
        }
        if (max_size > pool_multi)
            throw Error(Errc::InfeasibleSpec,
                        "synth: a document would need " + std::to_string(max_size)
                            + " distinct authors but the multi pool has " + std::to_string(pool_multi));
    }

    const int year_span = spec.year_max >= spec.year_min ? spec.year_max - spec.year_min + 1 : 1;
    const long offset = spec.seed;

    Corpus corpus;
    corpus.records.reserve(static_cast<size_t>(docs));
    long multi_cursor = 0; // rolling slot counter over the multi pool

    for (long i = 0; i < docs; ++i) {
        BibRecord r;
        const int topic = static_cast<int>((i + offset) % spec.topics);
        r.record_id = "synth-" + std::string(6 - std::min<size_t>(6, std::to_string(i).size()), '0')
                      + std::to_string(i);
        r.doi = "10.9999/synth." + std::to_string(i);

        const int w0 = static_cast<int>((i * 3 + offset) % spec.words_per_topic);
        const std::string a = topic_word(topic, w0, spec.words_per_topic);
        const std::string b = topic_word(topic, (w0 + 1) % spec.words_per_topic, spec.words_per_topic);
        const std::string c = topic_word(topic, (w0 + 2) % spec.words_per_topic, spec.words_per_topic);
        const std::string d = topic_word(topic, (w0 + 3) % spec.words_per_topic, spec.words_per_topic);

        r.title = "Synthetic study " + std::to_string(i) + " of " + a + " and " + b;
        r.abstract = "This synthetic record discusses " + a + " " + b + " " + c + " " + d + " within topic "
                     + std::to_string(topic) + ".";
        if ((i + offset) % 7 == 0)
            r.abstract += " It also touches crosslink dynamics.";
        r.author_keywords = {a, b};
        r.source_title = "Journal of Synthetic Studies " + two_digits((i + offset) % spec.sources);
        r.year = spec.year_min + static_cast<int>(i % year_span);
        switch (i % 3) {
        case 0: r.origin = Origin::Medline; break;
        case 1: r.origin = Origin::WebOfScience; break;
        default: r.origin = Origin::Scopus; break;
        }

        if (i < single) {
            const long idx = pool_single > 0 ? pool_multi + (i + offset) % pool_single
                                             : (i + offset) % pool_multi;
            r.authors.push_back(author_for(idx));
        } else {
            const long sz = sizes[static_cast<size_t>(i - single)];
            for (long k = 0; k < sz; ++k) {
                const long idx = (multi_cursor + offset) % pool_multi;
                ++multi_cursor;
                r.authors.push_back(author_for(idx));
            }
        }
        corpus.records.push_back(std::move(r));
    }

    for (const auto& r : corpus.records)
        ++corpus.origin_counts[r.origin];
    return corpus;
}

} // namespace knowmap
