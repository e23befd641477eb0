#pragma once

#include "knowmap/record.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace knowmap {

struct ParseResult {
    std::vector<RawEntry> entries;
    std::vector<Diagnostic> diagnostics;
};

// BibTeX: one RawEntry per @type{key, ...} block. Field names lowercased,
// braces/quotes stripped, LaTeX accents decoded. A brace-unbalanced entry is
// reported (UnbalancedBraces) and skipped; parsing continues at the next '@'.
ParseResult parse_bibtex(std::string_view input, const std::string& source_file = "<memory>");

// RIS: records end at "ER  -". Repeated tags (AU, KW) keep file order.
// Trailing tags with no ER record yield MissingEndRecord and are dropped.
ParseResult parse_ris(std::string_view input, const std::string& source_file = "<memory>");

// PubMed/nbib tagged MEDLINE: blocks separated by blank lines, continuation
// lines (6 leading spaces) folded with a single space. A block without PMID
// yields NoPmid and is dropped.
ParseResult parse_medline(std::string_view input, const std::string& source_file = "<memory>");

// Tabular CSV: header + RFC-4180 rows. The column map sends header names to
// record fields (title, abstract, year, doi, source_title, authors,
// author_keywords, origin, record_id); multi-valued fields split on "; ".
using ColumnMap = std::vector<std::pair<std::string, std::string>>;

// The canonical corpus schema used by the round-trip CSV format.
ColumnMap canonical_columns();

ParseResult parse_tabular(std::string_view input, const ColumnMap& column_map,
                          const std::string& source_file = "<memory>");

} // namespace knowmap
