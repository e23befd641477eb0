#include "knowmap/record.hpp"

#include "knowmap/text.hpp"

namespace knowmap {

const char* to_string(Format f) {
    switch (f) {
    case Format::BibTex: return "bibtex";
    case Format::Ris: return "ris";
    case Format::Medline: return "medline";
    case Format::Tabular: return "tabular";
    }
    return "?";
}

const char* to_string(Origin o) {
    switch (o) {
    case Origin::Medline: return "medline";
    case Origin::WebOfScience: return "webofscience";
    case Origin::Scopus: return "scopus";
    case Origin::Other: return "other";
    }
    return "?";
}

std::optional<Format> parse_format(std::string_view s) {
    const std::string k = text::fold_key(s);
    if (k == "bibtex" || k == "bib")
        return Format::BibTex;
    if (k == "ris")
        return Format::Ris;
    if (k == "medline" || k == "nbib" || k == "pubmed")
        return Format::Medline;
    if (k == "tabular" || k == "csv")
        return Format::Tabular;
    return std::nullopt;
}

Origin parse_origin(std::string_view s) {
    const std::string k = text::fold_key(s);
    if (k == "medline" || k == "pubmed")
        return Origin::Medline;
    if (k == "wos" || k == "webofscience" || k == "web of science" || k == "isi")
        return Origin::WebOfScience;
    if (k == "scopus")
        return Origin::Scopus;
    return Origin::Other;
}

const std::string* RawEntry::find(std::string_view tag) const {
    for (const auto& [t, v] : fields) {
        if (t == tag)
            return &v;
    }
    return nullptr;
}

std::vector<std::string> RawEntry::all(std::string_view tag) const {
    std::vector<std::string> out;
    for (const auto& [t, v] : fields) {
        if (t == tag)
            out.push_back(v);
    }
    return out;
}

std::string NormalizedAuthor::key() const {
    std::string k = text::fold_key(surname);
    if (!initials.empty()) {
        k += ' ';
        k += text::to_lower(initials);
    }
    return k;
}

} // namespace knowmap
