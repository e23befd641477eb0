#pragma once

#include "knowmap/record.hpp"

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace knowmap {

enum class TermLayer { Title, Abstract, AuthorKeywords };

const char* to_string(TermLayer layer);
std::optional<TermLayer> parse_layer(std::string_view s);

struct TermConfig {
    std::set<std::string> stopwords; // all lowercase
    int min_length = 2;              // codepoints
    std::map<std::string, std::string> merge_rules;
    bool keep_hyphenated = true;
};

// Built-in English stopword list (175 entries, mirrored in
// data/stopwords_en.txt).
const std::vector<std::string>& default_stopwords();
TermConfig default_term_config();

// Throws Error(ConfigError) on uppercase stopwords or chained merge rules
// (a rule's target appearing as another rule's source).
void validate_term_config(const TermConfig& config);

// One entry per line; blank lines and '#' comments skipped.
std::set<std::string> load_stopwords(const std::filesystem::path& path);
// Lines "from<TAB>to".
std::map<std::string, std::string> load_merge_rules(const std::filesystem::path& path);

struct ExtractedTerms {
    // (term, frequency in this record), frequency desc then term asc.
    std::vector<std::pair<std::string, long>> terms;
    bool layer_empty = false; // record lacks the layer's field
};

// Title/Abstract: lowercase, split on non-alphanumeric (internal hyphens kept
// when configured), drop short tokens and stopwords, then apply merge rules.
// AuthorKeywords: each stored keyword is one term, phrases intact.
ExtractedTerms extract_terms(const BibRecord& record, TermLayer layer, const TermConfig& config);

struct OccurrenceTable {
    TermLayer layer = TermLayer::Abstract;
    std::vector<std::pair<std::string, long>> rows; // occurrences desc, term asc
    long total = 0;
};

// Raw token frequency summed over records (parallel when OpenMP is enabled).
OccurrenceTable occurrence_table(const Corpus& corpus, TermLayer layer, const TermConfig& config);
// Serial reference implementation; must agree with occurrence_table exactly.
OccurrenceTable occurrence_table_serial(const Corpus& corpus, TermLayer layer, const TermConfig& config);

// Number of distinct records whose layer contains the term.
OccurrenceTable document_frequency(const Corpus& corpus, TermLayer layer, const TermConfig& config);
OccurrenceTable document_frequency_serial(const Corpus& corpus, TermLayer layer, const TermConfig& config);

} // namespace knowmap
