#include "knowmap/normalize.hpp"

#include "knowmap/text.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>

namespace knowmap {

namespace {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xF];
        v >>= 4;
    }
    return out;
}

std::string clean(std::string_view v) {
    return text::collapse_ws(text::normalize_compat(v));
}

bool is_particle(std::string_view tok) {
    static const std::set<std::string_view> particles = {"van", "von", "der", "den", "de", "del",
                                                         "della", "di", "da", "dos", "du", "la",
                                                         "le", "ter", "ten", "el", "al", "bin"};
    return particles.count(tok) > 0;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ' ') {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

bool all_caps_letters(std::string_view tok) {
    if (tok.empty())
        return false;
    for (char c : tok) {
        if (!std::isupper(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

// Initials: first letter of each given-name part; a short all-caps token is
// already an initials string ("JP"); lowercase particles contribute none.
std::string initials_of(std::string_view given) {
    std::string normalized;
    for (char c : given) {
        if (c == '.' )
            normalized.push_back(' ');
        else if (c == '-')
            normalized.push_back(' ');
        else
            normalized.push_back(c);
    }
    std::string initials;
    for (const auto& tok : split_ws(normalized)) {
        if (is_particle(text::to_lower(tok)))
            continue;
        const std::string folded = text::strip_diacritics(tok);
        if (all_caps_letters(folded) && folded.size() <= 4) {
            initials += folded;
            continue;
        }
        for (char c : folded) {
            if (std::isalpha(static_cast<unsigned char>(c))) {
                initials.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
                break;
            }
        }
    }
    return initials;
}

std::vector<std::string> split_on(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

// Splits a BibTeX author field on the word "and".
std::vector<std::string> split_bibtex_authors(std::string_view value) {
    std::vector<std::string> out;
    const auto toks = split_ws(std::string(value));
    std::string cur;
    for (const auto& t : toks) {
        if (t == "and" || t == "AND") {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            if (!cur.empty())
                cur += ' ';
            cur += t;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

struct FieldView {
    std::string title;
    std::string abstract;
    std::string source;
    std::string doi;
    std::string year_raw;
    std::string id;
    std::vector<std::string> authors;
    std::vector<std::string> keywords;
    std::string origin_raw;
};

FieldView collect_bibtex(const RawEntry& e) {
    FieldView f;
    for (const auto& [tag, value] : e.fields) {
        if (tag == "title")
            f.title = value;
        else if (tag == "abstract")
            f.abstract = value;
        else if (tag == "journal" || (tag == "booktitle" && f.source.empty()))
            f.source = value;
        else if (tag == "year")
            f.year_raw = value;
        else if (tag == "doi")
            f.doi = value;
        else if (tag == "author")
            for (auto& a : split_bibtex_authors(value))
                f.authors.push_back(a);
        else if (tag == "keywords")
            for (auto& k : split_on(value, value.find(';') != std::string::npos ? ';' : ','))
                if (!k.empty())
                    f.keywords.push_back(k);
    }
    f.id = e.entry_key;
    return f;
}

FieldView collect_ris(const RawEntry& e) {
    FieldView f;
    bool have_fau = false;
    (void)have_fau;
    for (const auto& [tag, value] : e.fields) {
        if (tag == "TI" || (tag == "T1" && f.title.empty()))
            f.title = value;
        else if (tag == "AB" || (tag == "N2" && f.abstract.empty()))
            f.abstract = value;
        else if (tag == "JO" || tag == "JF" || (f.source.empty() && (tag == "T2" || tag == "JA")))
            f.source = value;
        else if (tag == "PY" || (f.year_raw.empty() && (tag == "Y1" || tag == "DA")))
            f.year_raw = value;
        else if (tag == "DO")
            f.doi = value;
        else if (tag == "AU" || tag == "A1")
            f.authors.push_back(value);
        else if (tag == "KW")
            f.keywords.push_back(value);
        else if (tag == "ID" && f.id.empty())
            f.id = value;
        else if (tag == "DB" && f.origin_raw.empty())
            f.origin_raw = value;
    }
    return f;
}

FieldView collect_medline(const RawEntry& e) {
    FieldView f;
    std::vector<std::string> au;
    for (const auto& [tag, value] : e.fields) {
        if (tag == "TI")
            f.title = value;
        else if (tag == "AB")
            f.abstract = value;
        else if (tag == "JT")
            f.source = value;
        else if (tag == "TA" && f.source.empty())
            f.source = value;
        else if (tag == "DP")
            f.year_raw = value;
        else if (tag == "FAU")
            f.authors.push_back(value);
        else if (tag == "AU")
            au.push_back(value);
        else if (tag == "OT")
            f.keywords.push_back(value);
        else if (tag == "PMID")
            f.id = "pmid:" + value;
        else if (tag == "AID" || tag == "LID") {
            // "10.1056/NEJMc2004973 [doi]"
            const auto pos = value.find(" [doi]");
            if (pos != std::string::npos && f.doi.empty())
                f.doi = value.substr(0, pos);
        }
    }
    if (f.authors.empty())
        f.authors = std::move(au); // fall back to abbreviated AU lines
    return f;
}

FieldView collect_tabular(const RawEntry& e) {
    FieldView f;
    for (const auto& [tag, value] : e.fields) {
        if (tag == "title")
            f.title = value;
        else if (tag == "abstract")
            f.abstract = value;
        else if (tag == "source_title")
            f.source = value;
        else if (tag == "year")
            f.year_raw = value;
        else if (tag == "doi")
            f.doi = value;
        else if (tag == "authors")
            f.authors.push_back(value);
        else if (tag == "author_keywords")
            f.keywords.push_back(value);
        else if (tag == "record_id")
            f.id = value;
        else if (tag == "origin")
            f.origin_raw = value;
    }
    return f;
}

} // namespace

NormalizedAuthor parse_author_name(std::string_view raw) {
    NormalizedAuthor a;
    const std::string s = clean(raw);
    if (s.empty())
        return a;

    const auto comma = s.find(',');
    std::string surname, given;
    if (comma != std::string::npos) {
        surname = trim(s.substr(0, comma));
        given = trim(s.substr(comma + 1));
    } else {
        auto toks = split_ws(s);
        if (toks.size() == 1) {
            surname = toks[0];
        } else {
            const std::string last_folded = text::strip_diacritics(toks.back());
            if (all_caps_letters(last_folded) && last_folded.size() <= 4) {
                // MEDLINE style "Wang Y" / "van Doremalen N"
                given = toks.back();
                toks.pop_back();
                for (size_t i = 0; i < toks.size(); ++i)
                    surname += (i ? " " : "") + toks[i];
            } else {
                // "Given Surname"; keep lowercase particles with the surname
                size_t start = toks.size() - 1;
                while (start > 1 && is_particle(text::to_lower(toks[start - 1])))
                    --start;
                for (size_t i = start; i < toks.size(); ++i)
                    surname += (i > start ? " " : "") + toks[i];
                for (size_t i = 0; i < start; ++i)
                    given += (i ? " " : "") + toks[i];
            }
        }
    }
    a.surname = surname;
    a.initials = initials_of(given);
    a.display = a.initials.empty() ? a.surname : a.surname + " " + a.initials;
    return a;
}

std::string normalize_doi(std::string_view raw) {
    std::string d = text::to_lower(clean(raw));
    static const char* prefixes[] = {"https://doi.org/", "http://doi.org/",  "https://dx.doi.org/",
                                     "http://dx.doi.org/", "doi.org/",       "doi:"};
    bool again = true;
    while (again) {
        again = false;
        for (const char* p : prefixes) {
            const std::string_view pv(p);
            if (d.size() > pv.size() && d.compare(0, pv.size(), pv) == 0) {
                d.erase(0, pv.size());
                again = true;
            }
        }
        while (!d.empty() && d.front() == ' ') {
            d.erase(d.begin());
            again = true;
        }
    }
    return d;
}

std::string title_key(std::string_view title) {
    return text::fold_key(title);
}

std::optional<int> extract_year(std::string_view raw) {
    for (size_t i = 0; i + 4 <= raw.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(raw[i])) && std::isdigit(static_cast<unsigned char>(raw[i + 1]))
            && std::isdigit(static_cast<unsigned char>(raw[i + 2]))
            && std::isdigit(static_cast<unsigned char>(raw[i + 3]))) {
            const bool left_ok = (i == 0) || !std::isdigit(static_cast<unsigned char>(raw[i - 1]));
            const bool right_ok = (i + 4 == raw.size()) || !std::isdigit(static_cast<unsigned char>(raw[i + 4]));
            if (left_ok && right_ok) {
                const int y = (raw[i] - '0') * 1000 + (raw[i + 1] - '0') * 100 + (raw[i + 2] - '0') * 10
                              + (raw[i + 3] - '0');
                if (y >= 1800 && y <= 2100)
                    return y;
                return std::nullopt;
            }
        }
    }
    return std::nullopt;
}

NormalizeResult normalize(const RawEntry& entry, Origin default_origin) {
    NormalizeResult result;

    FieldView f;
    switch (entry.format) {
    case Format::BibTex: f = collect_bibtex(entry); break;
    case Format::Ris: f = collect_ris(entry); break;
    case Format::Medline: f = collect_medline(entry); break;
    case Format::Tabular: f = collect_tabular(entry); break;
    }

    BibRecord rec;
    rec.title = clean(f.title);
    if (rec.title.empty()) {
        result.diagnostics.push_back(
            {entry.source_file, entry.line_start, "NoTitle", "entry has no title; rejected"});
        return result;
    }
    rec.abstract = clean(f.abstract);
    rec.source_title = clean(f.source);
    rec.doi = normalize_doi(f.doi);

    if (!f.year_raw.empty()) {
        rec.year = extract_year(clean(f.year_raw));
        if (!rec.year) {
            result.diagnostics.push_back({entry.source_file, entry.line_start, "BadYear",
                                          "unparseable or out-of-range year '" + f.year_raw + "'"});
        }
    }

    std::set<std::string> seen_keys;
    for (const auto& raw : f.authors) {
        NormalizedAuthor a = parse_author_name(raw);
        if (a.surname.empty())
            continue;
        if (seen_keys.insert(a.key()).second)
            rec.authors.push_back(std::move(a));
    }

    for (const auto& kw : f.keywords) {
        std::string k = text::to_lower(clean(kw));
        if (!k.empty())
            rec.author_keywords.push_back(std::move(k));
    }

    rec.origin = f.origin_raw.empty() ? default_origin : parse_origin(f.origin_raw);

    if (!f.id.empty()) {
        rec.record_id = clean(f.id);
    } else {
        std::string basis = title_key(rec.title);
        basis += '|';
        if (rec.year)
            basis += std::to_string(*rec.year);
        basis += '|';
        basis += rec.doi;
        rec.record_id = "h" + hex64(fnv1a64(basis));
    }

    result.record = std::move(rec);
    return result;
}

std::vector<BibRecord> normalize_all(const ParseResult& parsed, Origin default_origin,
                                     std::vector<Diagnostic>& diagnostics) {
    std::vector<BibRecord> records;
    records.reserve(parsed.entries.size());
    diagnostics.insert(diagnostics.end(), parsed.diagnostics.begin(), parsed.diagnostics.end());
    for (const auto& entry : parsed.entries) {
        auto r = normalize(entry, default_origin);
        diagnostics.insert(diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
        if (r.record)
            records.push_back(std::move(*r.record));
    }
    return records;
}

} // namespace knowmap
