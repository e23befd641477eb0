#include "knowmap/text.hpp"

#include <cstdint>

namespace knowmap::text {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// (base, combining mark) -> precomposed codepoint. Covers the accents that
// actually occur in bibliographic exports.
struct Compose {
    char32_t base;
    char32_t mark;
    char32_t out;
};

constexpr Compose kCompose[] = {
    // grave U+0300
    {U'a', 0x300, 0xE0}, {U'e', 0x300, 0xE8}, {U'i', 0x300, 0xEC}, {U'o', 0x300, 0xF2},
    {U'u', 0x300, 0xF9}, {U'A', 0x300, 0xC0}, {U'E', 0x300, 0xC8}, {U'I', 0x300, 0xCC},
    {U'O', 0x300, 0xD2}, {U'U', 0x300, 0xD9},
    // acute U+0301
    {U'a', 0x301, 0xE1}, {U'e', 0x301, 0xE9}, {U'i', 0x301, 0xED}, {U'o', 0x301, 0xF3},
    {U'u', 0x301, 0xFA}, {U'y', 0x301, 0xFD}, {U'c', 0x301, 0x107}, {U'n', 0x301, 0x144},
    {U's', 0x301, 0x15B}, {U'z', 0x301, 0x17A}, {U'A', 0x301, 0xC1}, {U'E', 0x301, 0xC9},
    {U'I', 0x301, 0xCD}, {U'O', 0x301, 0xD3}, {U'U', 0x301, 0xDA}, {U'Y', 0x301, 0xDD},
    {U'C', 0x301, 0x106}, {U'N', 0x301, 0x143}, {U'S', 0x301, 0x15A}, {U'Z', 0x301, 0x179},
    // circumflex U+0302
    {U'a', 0x302, 0xE2}, {U'e', 0x302, 0xEA}, {U'i', 0x302, 0xEE}, {U'o', 0x302, 0xF4},
    {U'u', 0x302, 0xFB}, {U'A', 0x302, 0xC2}, {U'E', 0x302, 0xCA}, {U'I', 0x302, 0xCE},
    {U'O', 0x302, 0xD4}, {U'U', 0x302, 0xDB},
    // tilde U+0303
    {U'a', 0x303, 0xE3}, {U'n', 0x303, 0xF1}, {U'o', 0x303, 0xF5}, {U'A', 0x303, 0xC3},
    {U'N', 0x303, 0xD1}, {U'O', 0x303, 0xD5},
    // macron U+0304
    {U'a', 0x304, 0x101}, {U'e', 0x304, 0x113}, {U'i', 0x304, 0x12B}, {U'o', 0x304, 0x14D},
    {U'u', 0x304, 0x16B},
    // breve U+0306
    {U'a', 0x306, 0x103}, {U'g', 0x306, 0x11F}, {U'G', 0x306, 0x11E},
    // dot above U+0307
    {U'z', 0x307, 0x17C}, {U'Z', 0x307, 0x17B},
    // diaeresis U+0308
    {U'a', 0x308, 0xE4}, {U'e', 0x308, 0xEB}, {U'i', 0x308, 0xEF}, {U'o', 0x308, 0xF6},
    {U'u', 0x308, 0xFC}, {U'y', 0x308, 0xFF}, {U'A', 0x308, 0xC4}, {U'E', 0x308, 0xCB},
    {U'I', 0x308, 0xCF}, {U'O', 0x308, 0xD6}, {U'U', 0x308, 0xDC},
    // ring above U+030A
    {U'a', 0x30A, 0xE5}, {U'A', 0x30A, 0xC5}, {U'u', 0x30A, 0x16F},
    // double acute U+030B
    {U'o', 0x30B, 0x151}, {U'u', 0x30B, 0x171}, {U'O', 0x30B, 0x150}, {U'U', 0x30B, 0x170},
    // caron U+030C
    {U'c', 0x30C, 0x10D}, {U's', 0x30C, 0x161}, {U'z', 0x30C, 0x17E}, {U'r', 0x30C, 0x159},
    {U'e', 0x30C, 0x11B}, {U'C', 0x30C, 0x10C}, {U'S', 0x30C, 0x160}, {U'Z', 0x30C, 0x17D},
    {U'R', 0x30C, 0x158}, {U'E', 0x30C, 0x11A},
    // cedilla U+0327
    {U'c', 0x327, 0xE7}, {U's', 0x327, 0x15F}, {U't', 0x327, 0x163}, {U'C', 0x327, 0xC7},
    {U'S', 0x327, 0x15E}, {U'T', 0x327, 0x162},
    // ogonek U+0328
    {U'a', 0x328, 0x105}, {U'e', 0x328, 0x119}, {U'A', 0x328, 0x104}, {U'E', 0x328, 0x118},
};

char32_t compose(char32_t base, char32_t mark) {
    for (const auto& c : kCompose) {
        if (c.base == base && c.mark == mark)
            return c.out;
    }
    return 0;
}

bool is_combining_mark(char32_t cp) {
    return cp >= 0x0300 && cp <= 0x036F;
}

// ASCII folds for precomposed Latin letters.
const char* ascii_fold(char32_t cp) {
    switch (cp) {
    case 0xC0: case 0xC1: case 0xC2: case 0xC3: case 0xC4: case 0xC5:
    case 0x100: case 0x102: case 0x104: return "A";
    case 0xE0: case 0xE1: case 0xE2: case 0xE3: case 0xE4: case 0xE5:
    case 0x101: case 0x103: case 0x105: return "a";
    case 0xC6: return "AE";
    case 0xE6: return "ae";
    case 0xC7: case 0x106: case 0x108: case 0x10A: case 0x10C: return "C";
    case 0xE7: case 0x107: case 0x109: case 0x10B: case 0x10D: return "c";
    case 0x10E: case 0x110: return "D";
    case 0x10F: case 0x111: return "d";
    case 0xC8: case 0xC9: case 0xCA: case 0xCB:
    case 0x112: case 0x114: case 0x116: case 0x118: case 0x11A: return "E";
    case 0xE8: case 0xE9: case 0xEA: case 0xEB:
    case 0x113: case 0x115: case 0x117: case 0x119: case 0x11B: return "e";
    case 0x11C: case 0x11E: case 0x120: case 0x122: return "G";
    case 0x11D: case 0x11F: case 0x121: case 0x123: return "g";
    case 0x124: case 0x126: return "H";
    case 0x125: case 0x127: return "h";
    case 0xCC: case 0xCD: case 0xCE: case 0xCF:
    case 0x128: case 0x12A: case 0x12C: case 0x12E: case 0x130: return "I";
    case 0xEC: case 0xED: case 0xEE: case 0xEF:
    case 0x129: case 0x12B: case 0x12D: case 0x12F: case 0x131: return "i";
    case 0x134: return "J";
    case 0x135: return "j";
    case 0x136: return "K";
    case 0x137: return "k";
    case 0x139: case 0x13B: case 0x13D: case 0x141: return "L";
    case 0x13A: case 0x13C: case 0x13E: case 0x142: return "l";
    case 0xD1: case 0x143: case 0x145: case 0x147: return "N";
    case 0xF1: case 0x144: case 0x146: case 0x148: return "n";
    case 0xD2: case 0xD3: case 0xD4: case 0xD5: case 0xD6: case 0xD8:
    case 0x14C: case 0x14E: case 0x150: return "O";
    case 0xF2: case 0xF3: case 0xF4: case 0xF5: case 0xF6: case 0xF8:
    case 0x14D: case 0x14F: case 0x151: return "o";
    case 0x152: return "OE";
    case 0x153: return "oe";
    case 0x154: case 0x156: case 0x158: return "R";
    case 0x155: case 0x157: case 0x159: return "r";
    case 0x15A: case 0x15C: case 0x15E: case 0x160: case 0x218: return "S";
    case 0x15B: case 0x15D: case 0x15F: case 0x161: case 0x219: return "s";
    case 0xDF: return "ss";
    case 0x162: case 0x164: case 0x166: case 0x21A: return "T";
    case 0x163: case 0x165: case 0x167: case 0x21B: return "t";
    case 0xD9: case 0xDA: case 0xDB: case 0xDC:
    case 0x168: case 0x16A: case 0x16C: case 0x16E: case 0x170: case 0x172: return "U";
    case 0xF9: case 0xFA: case 0xFB: case 0xFC:
    case 0x169: case 0x16B: case 0x16D: case 0x16F: case 0x171: case 0x173: return "u";
    case 0x174: return "W";
    case 0x175: return "w";
    case 0xDD: case 0x176: case 0x178: return "Y";
    case 0xFD: case 0xFF: case 0x177: return "y";
    case 0x179: case 0x17B: case 0x17D: return "Z";
    case 0x17A: case 0x17C: case 0x17E: return "z";
    case 0xD0: return "D"; // Eth
    case 0xF0: return "d";
    case 0xDE: return "TH"; // Thorn
    case 0xFE: return "th";
    default: return nullptr;
    }
}

// Punctuation/compatibility folds applied before composing accents.
bool compat_map(char32_t cp, std::u32string& out) {
    switch (cp) {
    case 0x00A0: case 0x2000: case 0x2001: case 0x2002: case 0x2003: case 0x2004:
    case 0x2005: case 0x2006: case 0x2007: case 0x2008: case 0x2009: case 0x200A:
    case 0x202F: case 0x3000:
        out.push_back(U' ');
        return true;
    case 0x200B: case 0x200C: case 0x200D: case 0xFEFF: // zero width
        return true;
    case 0x2010: case 0x2011: case 0x2012: case 0x2013: case 0x2014: case 0x2015:
    case 0x2212:
        out.push_back(U'-');
        return true;
    case 0x2018: case 0x2019: case 0x201A: case 0x2032:
        out.push_back(U'\'');
        return true;
    case 0x201C: case 0x201D: case 0x201E: case 0x2033:
        out.push_back(U'"');
        return true;
    case 0x2026:
        out.append(U"...");
        return true;
    case 0x2044:
        out.push_back(U'/');
        return true;
    case 0xFB00:
        out.append(U"ff");
        return true;
    case 0xFB01:
        out.append(U"fi");
        return true;
    case 0xFB02:
        out.append(U"fl");
        return true;
    case 0xFB03:
        out.append(U"ffi");
        return true;
    case 0xFB04:
        out.append(U"ffl");
        return true;
    default:
        break;
    }
    if (cp >= 0xFF01 && cp <= 0xFF5E) { // fullwidth ASCII
        out.push_back(static_cast<char32_t>(cp - 0xFF01 + 0x21));
        return true;
    }
    return false;
}

} // namespace

std::u32string decode_utf8(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    size_t i = 0;
    const auto n = s.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len = 0;
        char32_t cp = 0;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        if (i + len > n) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        bool ok = true;
        for (int k = 1; k < len; ++k) {
            const auto b = static_cast<unsigned char>(s[i + k]);
            if ((b & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (b & 0x3F);
        }
        if (!ok || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string encode_utf8(const std::u32string& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

std::string_view strip_bom(std::string_view s) {
    if (s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xEF && static_cast<unsigned char>(s[1]) == 0xBB
        && static_cast<unsigned char>(s[2]) == 0xBF)
        return s.substr(3);
    return s;
}

std::string normalize_compat(std::string_view s) {
    const auto cps = decode_utf8(strip_bom(s));
    std::u32string folded;
    folded.reserve(cps.size());
    for (char32_t cp : cps) {
        if (!compat_map(cp, folded))
            folded.push_back(cp);
    }
    std::u32string composed;
    composed.reserve(folded.size());
    for (char32_t cp : folded) {
        if (is_combining_mark(cp) && !composed.empty()) {
            if (char32_t pre = compose(composed.back(), cp); pre != 0) {
                composed.back() = pre;
                continue;
            }
            continue; // unknown mark: drop it
        }
        composed.push_back(cp);
    }
    return encode_utf8(composed);
}

std::string collapse_ws(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending = false;
    for (char ch : s) {
        const auto u = static_cast<unsigned char>(ch);
        if (u == ' ' || u == '\t' || u == '\n' || u == '\r' || u == '\f' || u == '\v') {
            pending = !out.empty();
            continue;
        }
        if (pending) {
            out.push_back(' ');
            pending = false;
        }
        out.push_back(ch);
    }
    return out;
}

std::string to_lower(std::string_view s) {
    auto cps = decode_utf8(s);
    for (auto& cp : cps) {
        if (cp >= U'A' && cp <= U'Z') {
            cp += 0x20;
        } else if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) {
            cp += 0x20;
        } else if (cp == 0x178) {
            cp = 0xFF;
        } else if (cp >= 0x100 && cp <= 0x177 && (cp % 2) == 0) {
            cp += 1; // Latin Extended-A upper/lower pairs
        } else if (cp >= 0x179 && cp <= 0x17D && (cp % 2) == 1) {
            cp += 1;
        }
    }
    return encode_utf8(cps);
}

std::string strip_diacritics(std::string_view s) {
    const auto cps = decode_utf8(s);
    std::string out;
    out.reserve(s.size());
    for (char32_t cp : cps) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
            continue;
        }
        if (is_combining_mark(cp))
            continue;
        if (const char* fold = ascii_fold(cp)) {
            out += fold;
            continue;
        }
        out += encode_utf8(std::u32string(1, cp));
    }
    return out;
}

std::string fold_key(std::string_view s) {
    return collapse_ws(to_lower(strip_diacritics(normalize_compat(s))));
}

bool is_ascii_alnum(char32_t cp) {
    return (cp >= U'0' && cp <= U'9') || (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}

bool is_space(char32_t cp) {
    return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\f' || cp == U'\v';
}

} // namespace knowmap::text
