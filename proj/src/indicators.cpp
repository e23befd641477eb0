#include "knowmap/indicators.hpp"

#include "knowmap/error.hpp"
#include "knowmap/text.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace knowmap {

namespace {

// Deterministic display form for a normalized key: the most frequent raw
// spelling, ties to the lexicographically smallest.
class DisplayPicker {
public:
    void see(const std::string& raw) {
        auto [it, inserted] = counts_.try_emplace(raw, 0);
        ++it->second;
    }
    std::string best() const {
        std::string name;
        long best_count = -1;
        for (const auto& [raw, count] : counts_) {
            if (count > best_count) {
                name = raw;
                best_count = count;
            }
        }
        return name;
    }

private:
    std::map<std::string, long> counts_; // ordered: first max wins ties
};

} // namespace

IndicatorSummary summarize(const Corpus& corpus) {
    if (corpus.records.empty())
        throw Error(Errc::EmptyCorpus, "summarize: corpus is empty");

    IndicatorSummary s;
    s.documents = static_cast<long>(corpus.records.size());

    std::set<std::string> source_keys;
    std::set<std::string> keyword_set;
    std::set<std::string> author_keys;
    std::set<std::string> on_multi; // author keys seen on a multi-authored doc
    int ymin = 0, ymax = 0;
    bool any_year = false;

    for (const auto& r : corpus.records) {
        if (!r.source_title.empty())
            source_keys.insert(text::fold_key(r.source_title));
        for (const auto& k : r.author_keywords)
            keyword_set.insert(text::fold_key(k));
        if (r.year) {
            if (!any_year) {
                ymin = ymax = *r.year;
                any_year = true;
            } else {
                ymin = std::min(ymin, *r.year);
                ymax = std::max(ymax, *r.year);
            }
        }
        const bool multi = r.authors.size() >= 2;
        if (r.authors.size() == 1)
            ++s.single_authored_docs;
        s.author_appearances += static_cast<long>(r.authors.size());
        for (const auto& a : r.authors) {
            const std::string key = a.key();
            author_keys.insert(key);
            if (multi)
                on_multi.insert(key);
        }
    }

    s.sources = static_cast<long>(source_keys.size());
    s.keywords = static_cast<long>(keyword_set.size());
    if (any_year)
        s.period = {ymin, ymax};
    s.authors = static_cast<long>(author_keys.size());
    // Partition: an author on any multi-authored doc counts as multi only.
    s.authors_multi = static_cast<long>(on_multi.size());
    s.authors_single = s.authors - s.authors_multi;

    if (s.authors > 0) {
        s.documents_per_author = static_cast<double>(s.documents) / static_cast<double>(s.authors);
        s.authors_per_document = static_cast<double>(s.authors) / static_cast<double>(s.documents);
    }
    s.coauthors_per_document = static_cast<double>(s.author_appearances) / static_cast<double>(s.documents);

    const long multi_docs = s.documents - s.single_authored_docs;
    if (multi_docs > 0)
        s.collaboration_index = static_cast<double>(s.authors_multi) / static_cast<double>(multi_docs);

    return s;
}

AnnualProduction annual_production(const Corpus& corpus) {
    AnnualProduction p;
    for (const auto& r : corpus.records) {
        if (r.year)
            ++p.counts[*r.year];
        else
            ++p.unknown_year;
    }
    return p;
}

namespace {

RankingReport build_ranking(RankingReport::Kind kind,
                            std::map<std::string, std::pair<long, DisplayPicker>>& tallies, int top_k,
                            bool want_names_from_picker) {
    RankingReport rep;
    rep.kind = kind;

    std::vector<std::pair<std::string, long>> rows;
    rows.reserve(tallies.size());
    for (auto& [key, entry] : tallies) {
        const std::string name = want_names_from_picker ? entry.second.best() : key;
        rows.emplace_back(name, entry.first);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second > b.second;
        return a.first < b.first;
    });
    if (top_k >= 0 && rows.size() > static_cast<size_t>(top_k))
        rows.resize(static_cast<size_t>(top_k));
    rep.rows = std::move(rows);
    return rep;
}

} // namespace

RankingReport rank_sources(const Corpus& corpus, int top_k) {
    std::map<std::string, std::pair<long, DisplayPicker>> tallies;
    for (const auto& r : corpus.records) {
        if (r.source_title.empty())
            continue;
        auto& entry = tallies[text::fold_key(r.source_title)];
        ++entry.first;
        entry.second.see(r.source_title);
    }
    RankingReport rep = build_ranking(RankingReport::Kind::Source, tallies, top_k, true);

    // Cumulative per-year counts for the ranked sources (time evolution).
    std::map<std::string, std::string> display_to_key;
    for (auto& [key, entry] : tallies)
        display_to_key[entry.second.best()] = key;

    int ymin = 0, ymax = 0;
    bool any_year = false;
    std::map<std::string, std::map<int, long>> yearly; // key -> year -> count
    for (const auto& r : corpus.records) {
        if (r.source_title.empty() || !r.year)
            continue;
        ++yearly[text::fold_key(r.source_title)][*r.year];
        if (!any_year) {
            ymin = ymax = *r.year;
            any_year = true;
        } else {
            ymin = std::min(ymin, *r.year);
            ymax = std::max(ymax, *r.year);
        }
    }
    if (any_year) {
        for (const auto& [name, count] : rep.rows) {
            const auto kit = display_to_key.find(name);
            if (kit == display_to_key.end())
                continue;
            const auto& per_year = yearly[kit->second];
            long running = 0;
            for (int y = ymin; y <= ymax; ++y) {
                const auto it = per_year.find(y);
                if (it != per_year.end())
                    running += it->second;
                rep.cumulative_by_year[name][y] = running;
            }
        }
    }
    return rep;
}

RankingReport rank_authors(const Corpus& corpus, int top_k) {
    std::map<std::string, std::pair<long, DisplayPicker>> tallies;
    for (const auto& r : corpus.records) {
        for (const auto& a : r.authors) {
            auto& entry = tallies[a.key()];
            ++entry.first; // per-record dedup already guaranteed by BibRecord
            entry.second.see(a.display);
        }
    }
    // Author rows are named by the normalized key itself.
    return build_ranking(RankingReport::Kind::Author, tallies, top_k, false);
}

} // namespace knowmap
