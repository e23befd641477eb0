#include "knowmap/parsers.hpp"
#include "knowmap/text.hpp"

#include <cctype>

namespace knowmap {

namespace {

bool is_tag_line(std::string_view line, std::string& tag, std::string& value) {
    // "XY  - value": two uppercase letters/digits, two spaces, dash, space.
    if (line.size() < 5)
        return false;
    const auto t0 = static_cast<unsigned char>(line[0]);
    const auto t1 = static_cast<unsigned char>(line[1]);
    if (!(std::isupper(t0) || std::isdigit(t0)) || !(std::isupper(t1) || std::isdigit(t1)))
        return false;
    if (line[2] != ' ' || line[3] != ' ' || line[4] != '-')
        return false;
    tag.assign(line.substr(0, 2));
    value = line.size() > 5 ? std::string(line.substr(line[5] == ' ' ? 6 : 5)) : std::string();
    return true;
}

} // namespace

ParseResult parse_ris(std::string_view input, const std::string& source_file) {
    ParseResult result;
    const std::string_view body = text::strip_bom(input);

    RawEntry entry;
    entry.format = Format::Ris;
    entry.source_file = source_file;
    bool open = false;
    int line_no = 0;

    size_t pos = 0;
    while (pos <= body.size()) {
        size_t eol = body.find('\n', pos);
        std::string_view line =
            body.substr(pos, (eol == std::string_view::npos ? body.size() : eol) - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        ++line_no;

        std::string tag, value;
        if (is_tag_line(line, tag, value)) {
            if (tag == "ER") {
                if (open) {
                    entry.line_end = line_no;
                    result.entries.push_back(std::move(entry));
                }
                entry = RawEntry{};
                entry.format = Format::Ris;
                entry.source_file = source_file;
                open = false;
            } else {
                if (!open) {
                    open = true;
                    entry.line_start = line_no;
                }
                entry.fields.emplace_back(tag, text::collapse_ws(text::normalize_compat(value)));
            }
        } else if (open && !line.empty()) {
            // wrapped continuation of the previous value
            if (!entry.fields.empty()) {
                std::string extra = text::collapse_ws(text::normalize_compat(std::string(line)));
                if (!extra.empty()) {
                    auto& last = entry.fields.back().second;
                    if (!last.empty())
                        last += ' ';
                    last += extra;
                }
            }
        }

        if (eol == std::string_view::npos)
            break;
        pos = eol + 1;
    }

    if (open && !entry.fields.empty()) {
        result.diagnostics.push_back({source_file, entry.line_start, "MissingEndRecord",
                                      "trailing record without 'ER  -' dropped"});
    }
    return result;
}

} // namespace knowmap
