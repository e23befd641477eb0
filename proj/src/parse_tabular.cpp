#include "knowmap/csv.hpp"
#include "knowmap/parsers.hpp"
#include "knowmap/text.hpp"

#include <algorithm>

namespace knowmap {

ColumnMap canonical_columns() {
    return {
        {"record_id", "record_id"},
        {"doi", "doi"},
        {"title", "title"},
        {"abstract", "abstract"},
        {"year", "year"},
        {"source_title", "source_title"},
        {"authors", "authors"},
        {"author_keywords", "author_keywords"},
        {"origin", "origin"},
    };
}

ParseResult parse_tabular(std::string_view input, const ColumnMap& column_map,
                          const std::string& source_file) {
    ParseResult result;
    const auto rows = csv::parse(text::strip_bom(input));
    if (rows.empty())
        return result;

    const auto& header = rows.front().cells;

    // column index -> target record field, resolved case-insensitively
    std::vector<std::pair<size_t, std::string>> mapping;
    for (const auto& [col, field] : column_map) {
        const std::string want = text::fold_key(col);
        auto it = std::find_if(header.begin(), header.end(), [&](const std::string& h) {
            return text::fold_key(h) == want;
        });
        if (it == header.end()) {
            result.diagnostics.push_back({source_file, rows.front().line, "MissingColumn",
                                          "mapped column '" + col + "' not in header"});
            continue;
        }
        mapping.emplace_back(static_cast<size_t>(it - header.begin()), field);
    }

    const auto multi_valued = [](const std::string& field) {
        return field == "authors" || field == "author_keywords";
    };

    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.cells.size() != header.size()) {
            result.diagnostics.push_back({source_file, row.line, "RaggedRow",
                                          "expected " + std::to_string(header.size()) + " cells, got "
                                              + std::to_string(row.cells.size()) + "; row skipped"});
            continue;
        }
        RawEntry entry;
        entry.format = Format::Tabular;
        entry.source_file = source_file;
        entry.line_start = entry.line_end = row.line;
        for (const auto& [idx, field] : mapping) {
            const std::string& cell = row.cells[idx];
            if (cell.empty())
                continue;
            if (multi_valued(field)) {
                size_t pos = 0;
                while (pos <= cell.size()) {
                    size_t sep = cell.find("; ", pos);
                    std::string part = cell.substr(pos, sep == std::string::npos ? std::string::npos : sep - pos);
                    if (!part.empty())
                        entry.fields.emplace_back(field, part);
                    if (sep == std::string::npos)
                        break;
                    pos = sep + 2;
                }
            } else {
                entry.fields.emplace_back(field, cell);
            }
        }
        if (!entry.fields.empty())
            result.entries.push_back(std::move(entry));
    }
    return result;
}

} // namespace knowmap
