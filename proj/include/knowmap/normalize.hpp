#pragma once

#include "knowmap/parsers.hpp"
#include "knowmap/record.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knowmap {

struct NormalizeResult {
    std::optional<BibRecord> record; // nullopt on NoTitle
    std::vector<Diagnostic> diagnostics;
};

// Turns one raw entry into a normalized record: whitespace collapsed,
// compatibility normalization applied, DOI lowercased and de-prefixed,
// author names parsed, keywords lowercased. Entries without a title are
// rejected with a NoTitle diagnostic.
NormalizeResult normalize(const RawEntry& entry, Origin default_origin = Origin::Other);

// Convenience: normalize a whole parse result, folding diagnostics together.
std::vector<BibRecord> normalize_all(const ParseResult& parsed, Origin default_origin,
                                     std::vector<Diagnostic>& diagnostics);

// Handles "Surname, Given", "Given Surname", and the bibliographic
// "Surname XY" initials form; lowercase particles (van, de, ...) attach to
// the surname.
NormalizedAuthor parse_author_name(std::string_view raw);

// Lowercase, strip https://doi.org/ style prefixes and a doi: scheme.
std::string normalize_doi(std::string_view raw);

// Matching key for titles: compat fold + diacritics stripped + lowercase.
std::string title_key(std::string_view title);

// First plausible 4-digit year in the string, if within [1800, 2100].
std::optional<int> extract_year(std::string_view raw);

// Dedup + field-union merge across databases: first pass on equal DOI,
// second pass on equal (title key, year). The kept record is the one with
// more non-empty fields; ties go to origin priority
// Medline > WebOfScience > Scopus > Other, then lexicographic record_id.
// Records end up sorted by record_id, so the result is independent of input
// order.
Corpus merge_corpora(const std::vector<std::pair<Origin, std::vector<BibRecord>>>& inputs);

} // namespace knowmap
