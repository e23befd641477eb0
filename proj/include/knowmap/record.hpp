#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knowmap {

enum class Format { BibTex, Ris, Medline, Tabular };
enum class Origin { Medline, WebOfScience, Scopus, Other };

const char* to_string(Format f);
const char* to_string(Origin o);
std::optional<Format> parse_format(std::string_view s);
// Accepts common spellings ("medline", "pubmed", "wos", "web of science", ...).
Origin parse_origin(std::string_view s);

// A structured warning tied to a position in an input file. Rendered as
// "WARN <file>:<line> <code> <message>" on the diagnostic stream.
struct Diagnostic {
    std::string file;
    int line = 0;
    std::string code;
    std::string message;
};

// One syntactic entry as it came out of a format parser, before any
// normalization. Field tags are format-specific (lowercased names for BibTeX
// and tabular, native tags for RIS/MEDLINE).
struct RawEntry {
    Format format = Format::BibTex;
    std::vector<std::pair<std::string, std::string>> fields;
    std::string source_file;
    int line_start = 0;
    int line_end = 0;
    std::string entry_key; // BibTeX citation key; empty for other formats

    const std::string* find(std::string_view tag) const;
    std::vector<std::string> all(std::string_view tag) const;
};

struct NormalizedAuthor {
    std::string surname;
    std::string initials; // uppercase letters, no periods
    std::string display;  // "Surname I"

    // Identity key: diacritic-stripped lowercase surname + initials.
    std::string key() const;

    bool operator==(const NormalizedAuthor&) const = default;
};

struct BibRecord {
    std::string record_id;
    std::string doi; // normalized: lowercase, no URL prefix; empty = absent
    std::string title;
    std::string abstract; // empty = absent
    std::optional<int> year;
    std::string source_title;
    std::vector<NormalizedAuthor> authors;
    std::vector<std::string> author_keywords; // lowercased
    Origin origin = Origin::Other;

    bool operator==(const BibRecord&) const = default;
};

enum class MergeReason { DoiMatch, TitleYearMatch };

struct MergeEvent {
    std::string kept_id;
    std::string dropped_id;
    MergeReason reason = MergeReason::DoiMatch;
};

struct Corpus {
    std::vector<BibRecord> records;
    std::vector<MergeEvent> merge_log;
    std::map<Origin, long> origin_counts; // pre-merge input tallies
};

} // namespace knowmap
