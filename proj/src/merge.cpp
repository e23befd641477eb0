#include "knowmap/normalize.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace knowmap {

namespace {

int origin_priority(Origin o) {
    switch (o) {
    case Origin::Medline: return 0;
    case Origin::WebOfScience: return 1;
    case Origin::Scopus: return 2;
    case Origin::Other: return 3;
    }
    return 3;
}

int field_count(const BibRecord& r) {
    int n = 0;
    n += !r.doi.empty();
    n += !r.title.empty();
    n += !r.abstract.empty();
    n += r.year.has_value();
    n += !r.source_title.empty();
    n += !r.authors.empty();
    n += !r.author_keywords.empty();
    return n;
}

// Total preference order for choosing which duplicate survives.
bool prefer(const BibRecord& a, const BibRecord& b) {
    const int fa = field_count(a), fb = field_count(b);
    if (fa != fb)
        return fa > fb;
    const int pa = origin_priority(a.origin), pb = origin_priority(b.origin);
    if (pa != pb)
        return pa < pb;
    return a.record_id < b.record_id;
}

// Kept record inherits what it lacks from a dropped duplicate.
void inherit(BibRecord& kept, const BibRecord& dropped) {
    if (kept.doi.empty())
        kept.doi = dropped.doi;
    if (kept.abstract.empty())
        kept.abstract = dropped.abstract;
    if (!kept.year)
        kept.year = dropped.year;
    if (kept.source_title.empty())
        kept.source_title = dropped.source_title;
    if (kept.authors.empty())
        kept.authors = dropped.authors;
    if (kept.author_keywords.empty())
        kept.author_keywords = dropped.author_keywords;
}

// One dedup pass: records with equal non-empty key collapse to the preferred
// one. Returns survivors; appends to the merge log.
std::vector<BibRecord> dedup_pass(std::vector<BibRecord> records,
                                  const std::function<std::string(const BibRecord&)>& key_of,
                                  MergeReason reason, std::vector<MergeEvent>& log) {
    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < records.size(); ++i) {
        const std::string key = key_of(records[i]);
        if (!key.empty())
            groups[key].push_back(i);
    }

    std::vector<bool> dropped(records.size(), false);
    for (auto& [key, idxs] : groups) {
        if (idxs.size() < 2)
            continue;
        std::sort(idxs.begin(), idxs.end(),
                  [&](size_t x, size_t y) { return prefer(records[x], records[y]); });
        BibRecord& kept = records[idxs.front()];
        for (size_t k = 1; k < idxs.size(); ++k) {
            const BibRecord& loser = records[idxs[k]];
            inherit(kept, loser);
            log.push_back({kept.record_id, loser.record_id, reason});
            dropped[idxs[k]] = true;
        }
    }

    std::vector<BibRecord> out;
    out.reserve(records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        if (!dropped[i])
            out.push_back(std::move(records[i]));
    }
    return out;
}

} // namespace

Corpus merge_corpora(const std::vector<std::pair<Origin, std::vector<BibRecord>>>& inputs) {
    Corpus corpus;

    std::vector<BibRecord> all;
    for (const auto& [declared_origin, list] : inputs) {
        (void)declared_origin; // records already carry their origin
        for (const auto& rec : list) {
            ++corpus.origin_counts[rec.origin];
            all.push_back(rec);
        }
    }

    // Sort up front so group processing below never depends on input order.
    std::sort(all.begin(), all.end(),
              [](const BibRecord& a, const BibRecord& b) { return prefer(a, b); });

    all = dedup_pass(std::move(all), [](const BibRecord& r) { return r.doi; },
                     MergeReason::DoiMatch, corpus.merge_log);
    all = dedup_pass(
        std::move(all),
        [](const BibRecord& r) {
            std::string key = title_key(r.title);
            key += '|';
            key += r.year ? std::to_string(*r.year) : std::string("?");
            return key;
        },
        MergeReason::TitleYearMatch, corpus.merge_log);

    std::sort(all.begin(), all.end(), [](const BibRecord& a, const BibRecord& b) {
        if (a.record_id != b.record_id)
            return a.record_id < b.record_id;
        return title_key(a.title) < title_key(b.title);
    });
    corpus.records = std::move(all);

    std::sort(corpus.merge_log.begin(), corpus.merge_log.end(), [](const MergeEvent& a, const MergeEvent& b) {
        if (a.reason != b.reason)
            return a.reason == MergeReason::DoiMatch;
        if (a.kept_id != b.kept_id)
            return a.kept_id < b.kept_id;
        return a.dropped_id < b.dropped_id;
    });
    return corpus;
}

} // namespace knowmap
