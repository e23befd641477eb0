#include "knowmap/parsers.hpp"
#include "knowmap/text.hpp"

#include <cctype>

namespace knowmap {

namespace {

// Accent commands map to combining marks; text::normalize_compat composes
// them onto the preceding base letter afterwards.
bool accent_mark(char cmd, std::string& mark_utf8) {
    char32_t mark = 0;
    switch (cmd) {
    case '`': mark = 0x300; break;
    case '\'': mark = 0x301; break;
    case '^': mark = 0x302; break;
    case '~': mark = 0x303; break;
    case '=': mark = 0x304; break;
    case '.': mark = 0x307; break;
    case '"': mark = 0x308; break;
    case 'u': mark = 0x306; break;
    case 'v': mark = 0x30C; break;
    case 'r': mark = 0x30A; break;
    case 'H': mark = 0x30B; break;
    case 'c': mark = 0x327; break;
    case 'k': mark = 0x328; break;
    default: return false;
    }
    mark_utf8 = text::encode_utf8(std::u32string(1, mark));
    return true;
}

const char* letter_command(std::string_view name) {
    if (name == "o") return "ø";
    if (name == "O") return "Ø";
    if (name == "ss") return "ß";
    if (name == "ae") return "æ";
    if (name == "AE") return "Æ";
    if (name == "oe") return "œ";
    if (name == "OE") return "Œ";
    if (name == "aa") return "å";
    if (name == "AA") return "Å";
    if (name == "l") return "ł";
    if (name == "L") return "Ł";
    if (name == "i") return "i"; // dotless i, fine as plain i
    if (name == "j") return "j";
    return nullptr;
}

// Decodes a raw BibTeX field value: outer delimiters are already removed.
// Grouping braces are dropped, accent sequences become base+combining-mark,
// known letter commands are substituted, unknown commands are removed.
std::string decode_value(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    std::string pending_mark; // set when an accent command awaits its base
    for (size_t i = 0; i < raw.size(); ++i) {
        const char c = raw[i];
        if (c == '{' || c == '}')
            continue;
        if (c == '~') {
            out.push_back(' ');
            continue;
        }
        if (c != '\\') {
            out.push_back(c);
            if (!pending_mark.empty() && !std::isspace(static_cast<unsigned char>(c))) {
                out += pending_mark;
                pending_mark.clear();
            }
            continue;
        }
        if (i + 1 >= raw.size())
            break;
        const char next = raw[i + 1];
        std::string mark;
        if (!std::isalpha(static_cast<unsigned char>(next))) {
            if (accent_mark(next, mark)) {
                pending_mark = mark;
            } else {
                out.push_back(next); // \&, \%, \_, \$, \#, \{, \}
            }
            ++i;
            continue;
        }
        size_t j = i + 1;
        while (j < raw.size() && std::isalpha(static_cast<unsigned char>(raw[j])))
            ++j;
        const std::string_view name = raw.substr(i + 1, j - i - 1);
        if (name.size() == 1 && accent_mark(name[0], mark)) {
            pending_mark = mark;
        } else if (const char* lit = letter_command(name)) {
            out += lit;
            if (!pending_mark.empty()) {
                out += pending_mark;
                pending_mark.clear();
            }
        }
        // other commands (\emph, \textit, ...) vanish; their argument stays
        i = j - 1;
    }
    return text::collapse_ws(text::normalize_compat(out));
}

struct Cursor {
    std::string_view s;
    size_t pos = 0;
    int line = 1;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    char get() {
        const char c = s[pos++];
        if (c == '\n')
            ++line;
        return c;
    }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            get();
    }
};

} // namespace

ParseResult parse_bibtex(std::string_view input, const std::string& source_file) {
    ParseResult result;
    Cursor cur{text::strip_bom(input)};

    while (true) {
        while (!cur.eof() && cur.peek() != '@')
            cur.get();
        if (cur.eof())
            break;

        const int entry_line = cur.line;
        cur.get(); // '@'
        std::string type;
        while (!cur.eof() && cur.peek() != '{' && cur.peek() != '(' && !std::isspace(static_cast<unsigned char>(cur.peek())))
            type.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(cur.get()))));
        cur.skip_ws();
        if (cur.eof() || (cur.peek() != '{' && cur.peek() != '(')) {
            result.diagnostics.push_back({source_file, entry_line, "UnbalancedBraces", "entry '@" + type + "' has no body"});
            continue;
        }
        const char open = cur.get();
        const char close = (open == '{') ? '}' : ')';
        const Cursor resume = cur; // rescan point if this entry turns out malformed

        if (type == "comment" || type == "preamble" || type == "string") {
            // skip balanced body
            int depth = 1;
            while (!cur.eof() && depth > 0) {
                const char c = cur.get();
                if (c == open)
                    ++depth;
                else if (c == close)
                    --depth;
            }
            continue;
        }

        RawEntry entry;
        entry.format = Format::BibTex;
        entry.source_file = source_file;
        entry.line_start = entry_line;

        // citation key
        cur.skip_ws();
        std::string key;
        while (!cur.eof() && cur.peek() != ',' && cur.peek() != close && !std::isspace(static_cast<unsigned char>(cur.peek())))
            key.push_back(cur.get());
        entry.entry_key = key;

        bool balanced = true;
        bool done = false;
        while (!done) {
            cur.skip_ws();
            if (cur.eof()) {
                balanced = false;
                break;
            }
            if (cur.peek() == ',') {
                cur.get();
                continue;
            }
            if (cur.peek() == close) {
                cur.get();
                done = true;
                break;
            }
            // field name
            std::string name;
            while (!cur.eof() && cur.peek() != '=' && cur.peek() != ',' && cur.peek() != close
                   && !std::isspace(static_cast<unsigned char>(cur.peek())))
                name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(cur.get()))));
            cur.skip_ws();
            if (cur.eof() || cur.peek() != '=') {
                balanced = false;
                break;
            }
            cur.get(); // '='
            cur.skip_ws();
            if (cur.eof()) {
                balanced = false;
                break;
            }
            // field value: braced, quoted, or bare
            std::string raw;
            if (cur.peek() == '{') {
                cur.get();
                int depth = 1;
                while (!cur.eof()) {
                    const char c = cur.get();
                    if (c == '{') {
                        ++depth;
                    } else if (c == '}') {
                        if (--depth == 0)
                            break;
                    }
                    if (depth > 0)
                        raw.push_back(c);
                }
                if (depth != 0) {
                    balanced = false;
                    break;
                }
            } else if (cur.peek() == '"') {
                cur.get();
                int depth = 0;
                bool closed = false;
                while (!cur.eof()) {
                    const char c = cur.get();
                    if (c == '{') {
                        ++depth;
                    } else if (c == '}') {
                        --depth;
                    } else if (c == '"' && depth == 0) {
                        closed = true;
                        break;
                    }
                    raw.push_back(c);
                }
                if (!closed) {
                    balanced = false;
                    break;
                }
            } else {
                while (!cur.eof() && cur.peek() != ',' && cur.peek() != close
                       && !std::isspace(static_cast<unsigned char>(cur.peek())))
                    raw.push_back(cur.get());
            }
            if (!name.empty())
                entry.fields.emplace_back(name, decode_value(raw));
        }

        if (!balanced) {
            result.diagnostics.push_back(
                {source_file, entry_line, "UnbalancedBraces", "entry '@" + type + "{" + key + "' is unbalanced; skipped"});
            cur = resume; // a later entry may have been swallowed by the bad value
            continue;
        }
        entry.line_end = cur.line;
        if (!entry.fields.empty())
            result.entries.push_back(std::move(entry));
    }
    return result;
}

} // namespace knowmap
