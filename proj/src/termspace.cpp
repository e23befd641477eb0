#include "knowmap/termspace.hpp"

#include "knowmap/error.hpp"
#include "knowmap/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace knowmap {

const char* to_string(TermLayer layer) {
    switch (layer) {
    case TermLayer::Title: return "title";
    case TermLayer::Abstract: return "abstract";
    case TermLayer::AuthorKeywords: return "author_keywords";
    }
    return "?";
}

std::optional<TermLayer> parse_layer(std::string_view s) {
    const std::string k = text::fold_key(s);
    if (k == "title" || k == "titles")
        return TermLayer::Title;
    if (k == "abstract" || k == "abstracts")
        return TermLayer::Abstract;
    if (k == "keywords" || k == "author_keywords" || k == "author keywords" || k == "authorkeywords")
        return TermLayer::AuthorKeywords;
    return std::nullopt;
}

void validate_term_config(const TermConfig& config) {
    for (const auto& w : config.stopwords) {
        for (char c : w) {
            if (std::isupper(static_cast<unsigned char>(c)))
                throw Error(Errc::ConfigError, "stopword '" + w + "' is not lowercase");
        }
    }
    if (config.min_length < 1)
        throw Error(Errc::ConfigError, "min_length must be >= 1");
    for (const auto& [from, to] : config.merge_rules) {
        if (config.merge_rules.count(to))
            throw Error(Errc::ConfigError,
                        "merge rule chain: '" + from + "' -> '" + to + "' -> '" + config.merge_rules.at(to) + "'");
    }
}

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
    std::set<std::string> out;
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::InputError, "cannot read stopword file '" + path.string() + "'");
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const std::string w = text::collapse_ws(line);
        if (w.empty() || w.front() == '#')
            continue;
        out.insert(text::to_lower(w));
    }
    return out;
}

std::map<std::string, std::string> load_merge_rules(const std::filesystem::path& path) {
    std::map<std::string, std::string> rules;
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::InputError, "cannot read merge-rule file '" + path.string() + "'");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw Error(Errc::ConfigError,
                        "merge-rule line " + std::to_string(line_no) + " has no tab separator");
        const std::string from = text::to_lower(text::collapse_ws(line.substr(0, tab)));
        const std::string to = text::to_lower(text::collapse_ws(line.substr(tab + 1)));
        if (from.empty() || to.empty())
            throw Error(Errc::ConfigError, "merge-rule line " + std::to_string(line_no) + " is incomplete");
        rules[from] = to;
    }
    return rules;
}

namespace {

bool is_token_cp(char32_t cp) {
    return text::is_ascii_alnum(cp) || cp >= 0x80;
}

// Tokenize free text: split on non-alphanumerics, optionally keeping hyphens
// that are surrounded by token characters.
std::vector<std::string> tokenize(std::string_view raw, const TermConfig& config) {
    const std::string lowered = text::to_lower(text::normalize_compat(raw));
    const std::u32string cps = text::decode_utf8(lowered);

    std::vector<std::string> tokens;
    std::u32string cur;
    size_t cur_len = 0; // codepoints
    const auto flush = [&] {
        if (cur.empty())
            return;
        if (cur_len >= static_cast<size_t>(config.min_length)) {
            std::string tok = text::encode_utf8(cur);
            if (!config.stopwords.count(tok))
                tokens.push_back(std::move(tok));
        }
        cur.clear();
        cur_len = 0;
    };

    for (size_t i = 0; i < cps.size(); ++i) {
        const char32_t cp = cps[i];
        if (is_token_cp(cp)) {
            cur.push_back(cp);
            ++cur_len;
        } else if (cp == U'-' && config.keep_hyphenated && !cur.empty() && i + 1 < cps.size()
                   && is_token_cp(cps[i + 1])) {
            cur.push_back(cp);
            ++cur_len;
        } else {
            flush();
        }
    }
    flush();

    if (!config.merge_rules.empty()) {
        for (auto& tok : tokens) {
            const auto it = config.merge_rules.find(tok);
            if (it != config.merge_rules.end())
                tok = it->second;
        }
    }
    return tokens;
}

std::vector<std::string> layer_tokens(const BibRecord& record, TermLayer layer, const TermConfig& config,
                                      bool& layer_empty) {
    layer_empty = false;
    switch (layer) {
    case TermLayer::Title:
        if (record.title.empty()) {
            layer_empty = true;
            return {};
        }
        return tokenize(record.title, config);
    case TermLayer::Abstract:
        if (record.abstract.empty()) {
            layer_empty = true;
            return {};
        }
        return tokenize(record.abstract, config);
    case TermLayer::AuthorKeywords: {
        if (record.author_keywords.empty()) {
            layer_empty = true;
            return {};
        }
        std::vector<std::string> out;
        out.reserve(record.author_keywords.size());
        for (const auto& kw : record.author_keywords) {
            std::string term = text::to_lower(kw);
            const auto it = config.merge_rules.find(term);
            if (it != config.merge_rules.end())
                term = it->second;
            out.push_back(std::move(term));
        }
        return out;
    }
    }
    return {};
}

using Tally = std::unordered_map<std::string, long>;

void sort_rows(std::vector<std::pair<std::string, long>>& rows) {
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second > b.second;
        return a.first < b.first;
    });
}

OccurrenceTable finish_table(TermLayer layer, Tally&& tally) {
    OccurrenceTable table;
    table.layer = layer;
    table.rows.assign(tally.begin(), tally.end());
    sort_rows(table.rows);
    for (const auto& [term, n] : table.rows)
        table.total += n;
    return table;
}

// Per-record tally; `presence` counts each term once per record.
void tally_record(const BibRecord& record, TermLayer layer, const TermConfig& config, bool presence,
                  Tally& into) {
    bool layer_empty = false;
    const auto tokens = layer_tokens(record, layer, config, layer_empty);
    if (presence) {
        std::set<std::string> uniq(tokens.begin(), tokens.end());
        for (const auto& t : uniq)
            ++into[t];
    } else {
        for (const auto& t : tokens)
            ++into[t];
    }
}

OccurrenceTable build_table_serial(const Corpus& corpus, TermLayer layer, const TermConfig& config,
                                   bool presence) {
    Tally tally;
    for (const auto& record : corpus.records)
        tally_record(record, layer, config, presence, tally);
    return finish_table(layer, std::move(tally));
}

OccurrenceTable build_table_parallel(const Corpus& corpus, TermLayer layer, const TermConfig& config,
                                     bool presence) {
#ifdef _OPENMP
    const long n = static_cast<long>(corpus.records.size());
    std::vector<Tally> partials;
    #pragma omp parallel
    {
        #pragma omp single
        partials.resize(static_cast<size_t>(omp_get_num_threads()));
        Tally& mine = partials[static_cast<size_t>(omp_get_thread_num())];
        #pragma omp for schedule(static)
        for (long i = 0; i < n; ++i)
            tally_record(corpus.records[static_cast<size_t>(i)], layer, config, presence, mine);
    }
    Tally tally;
    for (auto& part : partials)
        for (auto& [term, count] : part)
            tally[term] += count; // integer add: merge order irrelevant
    return finish_table(layer, std::move(tally));
#else
    return build_table_serial(corpus, layer, config, presence);
#endif
}

} // namespace

ExtractedTerms extract_terms(const BibRecord& record, TermLayer layer, const TermConfig& config) {
    ExtractedTerms out;
    const auto tokens = layer_tokens(record, layer, config, out.layer_empty);
    Tally tally;
    for (const auto& t : tokens)
        ++tally[t];
    out.terms.assign(tally.begin(), tally.end());
    sort_rows(out.terms);
    return out;
}

OccurrenceTable occurrence_table(const Corpus& corpus, TermLayer layer, const TermConfig& config) {
    return build_table_parallel(corpus, layer, config, /*presence=*/false);
}

OccurrenceTable occurrence_table_serial(const Corpus& corpus, TermLayer layer, const TermConfig& config) {
    return build_table_serial(corpus, layer, config, /*presence=*/false);
}

OccurrenceTable document_frequency(const Corpus& corpus, TermLayer layer, const TermConfig& config) {
    return build_table_parallel(corpus, layer, config, /*presence=*/true);
}

OccurrenceTable document_frequency_serial(const Corpus& corpus, TermLayer layer, const TermConfig& config) {
    return build_table_serial(corpus, layer, config, /*presence=*/true);
}

} // namespace knowmap
