#include "knowmap/corpus_io.hpp"

#include "knowmap/csv.hpp"
#include "knowmap/error.hpp"
#include "knowmap/normalize.hpp"
#include "knowmap/parsers.hpp"

#include <fstream>
#include <sstream>

namespace knowmap {

namespace {

std::string join_authors(const std::vector<NormalizedAuthor>& authors) {
    std::string out;
    for (size_t i = 0; i < authors.size(); ++i) {
        if (i)
            out += "; ";
        out += authors[i].surname;
        out += ',';
        if (!authors[i].initials.empty()) {
            out += ' ';
            out += authors[i].initials;
        }
    }
    return out;
}

std::string join_keywords(const std::vector<std::string>& kws) {
    std::string out;
    for (size_t i = 0; i < kws.size(); ++i) {
        if (i)
            out += "; ";
        out += kws[i];
    }
    return out;
}

} // namespace

std::string corpus_to_csv(const Corpus& corpus) {
    std::string out;
    std::vector<std::string> header;
    for (const auto& [col, field] : canonical_columns())
        header.push_back(col);
    out += csv::join_row(header);
    for (const auto& r : corpus.records) {
        out += csv::join_row({
            r.record_id,
            r.doi,
            r.title,
            r.abstract,
            r.year ? std::to_string(*r.year) : std::string(),
            r.source_title,
            join_authors(r.authors),
            join_keywords(r.author_keywords),
            to_string(r.origin),
        });
    }
    return out;
}

CorpusLoad corpus_from_csv(std::string_view csv_text, const std::string& source_name) {
    CorpusLoad load;
    ParseResult parsed = parse_tabular(csv_text, canonical_columns(), source_name);
    load.corpus.records = normalize_all(parsed, Origin::Other, load.diagnostics);
    for (const auto& r : load.corpus.records)
        ++load.corpus.origin_counts[r.origin];
    return load;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::InputError, "cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(Errc::InputError, "cannot write '" + path.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

} // namespace knowmap
