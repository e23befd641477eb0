#pragma once

#include "knowmap/record.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace knowmap {

// The descriptive statistics block: document/source/keyword/author counts and
// the collaboration ratios. Ratios carry full precision; display rounding is
// the CLI's concern.
struct IndicatorSummary {
    long documents = 0;
    long sources = 0;  // distinct source titles
    long keywords = 0; // distinct author keywords
    std::optional<std::pair<int, int>> period;
    long authors = 0;            // distinct author keys
    long author_appearances = 0; // sum of per-record author list lengths
    long authors_single = 0;     // authors appearing only on single-authored docs
    long authors_multi = 0;      // authors appearing on >=1 multi-authored doc
    long single_authored_docs = 0;
    double documents_per_author = 0;
    double authors_per_document = 0;
    double coauthors_per_document = 0;
    // Mean authors per multi-authored document; absent when every document is
    // single-authored.
    std::optional<double> collaboration_index;
};

struct AnnualProduction {
    std::map<int, long> counts;
    long unknown_year = 0; // records excluded for having no year
};

struct RankingReport {
    enum class Kind { Source, Author };
    Kind kind = Kind::Source;
    std::vector<std::pair<std::string, long>> rows; // count desc, name asc
    // Cumulative production per ranked name per year (time-evolution curves).
    std::map<std::string, std::map<int, long>> cumulative_by_year;
};

// Throws Error(EmptyCorpus) on an empty corpus.
IndicatorSummary summarize(const Corpus& corpus);

AnnualProduction annual_production(const Corpus& corpus);

RankingReport rank_sources(const Corpus& corpus, int top_k);
RankingReport rank_authors(const Corpus& corpus, int top_k);

} // namespace knowmap
