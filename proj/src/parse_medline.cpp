#include "knowmap/parsers.hpp"
#include "knowmap/text.hpp"

#include <cctype>

namespace knowmap {

namespace {

// "TAG - value" with the tag padded to four columns ("PMID- x", "TI  - y").
bool is_tag_line(std::string_view line, std::string& tag, std::string& value) {
    if (line.size() < 6)
        return false;
    size_t i = 0;
    while (i < 4 && i < line.size()) {
        const auto c = static_cast<unsigned char>(line[i]);
        if (std::isupper(c) || std::isdigit(c))
            ++i;
        else
            break;
    }
    if (i == 0)
        return false;
    size_t j = i;
    while (j < line.size() && line[j] == ' ')
        ++j;
    if (j >= line.size() || line[j] != '-')
        return false;
    if (j > 4)
        return false;
    tag.assign(line.substr(0, i));
    size_t v = j + 1;
    if (v < line.size() && line[v] == ' ')
        ++v;
    value = std::string(line.substr(v));
    return true;
}

bool is_continuation(std::string_view line) {
    return line.size() > 6 && line.substr(0, 6) == "      ";
}

} // namespace

ParseResult parse_medline(std::string_view input, const std::string& source_file) {
    ParseResult result;
    const std::string_view body = text::strip_bom(input);

    RawEntry entry;
    entry.format = Format::Medline;
    entry.source_file = source_file;
    bool open = false;
    int line_no = 0;

    const auto flush = [&](int end_line) {
        if (!open)
            return;
        entry.line_end = end_line;
        for (auto& [tag, value] : entry.fields)
            value = text::collapse_ws(text::normalize_compat(value));
        if (entry.find("PMID") != nullptr) {
            result.entries.push_back(std::move(entry));
        } else {
            result.diagnostics.push_back(
                {source_file, entry.line_start, "NoPmid", "block without PMID dropped"});
        }
        entry = RawEntry{};
        entry.format = Format::Medline;
        entry.source_file = source_file;
        open = false;
    };

    size_t pos = 0;
    while (pos <= body.size()) {
        size_t eol = body.find('\n', pos);
        std::string_view line =
            body.substr(pos, (eol == std::string_view::npos ? body.size() : eol) - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        ++line_no;

        if (line.empty()) {
            flush(line_no - 1);
        } else if (is_continuation(line)) {
            if (open && !entry.fields.empty()) {
                auto& last = entry.fields.back().second;
                last += ' ';
                last += std::string(line.substr(6));
            }
        } else {
            std::string tag, value;
            if (is_tag_line(line, tag, value)) {
                if (!open) {
                    open = true;
                    entry.line_start = line_no;
                }
                entry.fields.emplace_back(tag, value);
            }
            // anything else between blocks is ignored
        }

        if (eol == std::string_view::npos)
            break;
        pos = eol + 1;
    }
    flush(line_no);
    return result;
}

} // namespace knowmap
