#include "hinglish/unicode.hpp"

#include <algorithm>
#include <array>

namespace hinglish {

namespace {

constexpr char32_t kReplacement = 0xFFFD;
constexpr char32_t kNukta = 0x093C;

// Canonical decompositions inside the Devanagari block: precomposed
// consonant+nukta letters. U+0929/0931/0934 recompose under NFC; the
// U+0958..U+095F range is composition-excluded and stays decomposed.
struct NuktaForm {
    char32_t precomposed;
    char32_t base;
    bool excluded;
};

constexpr std::array<NuktaForm, 11> kNuktaForms = {{
    {0x0929, 0x0928, false},
    {0x0931, 0x0930, false},
    {0x0934, 0x0933, false},
    {0x0958, 0x0915, true},
    {0x0959, 0x0916, true},
    {0x095A, 0x0917, true},
    {0x095B, 0x091C, true},
    {0x095C, 0x0921, true},
    {0x095D, 0x0922, true},
    {0x095E, 0x092B, true},
    {0x095F, 0x092F, true},
}};

int combining_class(char32_t c) {
    switch (c) {
        case 0x093C: return 7;    // nukta
        case 0x094D: return 9;    // virama
        case 0x0951: return 230;  // udatta
        case 0x0952: return 220;  // anudatta
        case 0x0953: return 230;  // grave accent
        case 0x0954: return 230;  // acute accent
        default: return 0;
    }
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view text, bool* ok) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    bool clean = true;
    size_t i = 0;
    const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
    while (i < text.size()) {
        unsigned char b = bytes[i];
        char32_t cp = 0;
        size_t len = 0;
        if (b < 0x80) {
            cp = b;
            len = 1;
        } else if ((b & 0xE0) == 0xC0) {
            cp = b & 0x1F;
            len = 2;
        } else if ((b & 0xF0) == 0xE0) {
            cp = b & 0x0F;
            len = 3;
        } else if ((b & 0xF8) == 0xF0) {
            cp = b & 0x07;
            len = 4;
        } else {
            out.push_back(kReplacement);
            clean = false;
            ++i;
            continue;
        }
        if (i + len > text.size()) {
            out.push_back(kReplacement);
            clean = false;
            ++i;
            continue;
        }
        bool valid = true;
        for (size_t k = 1; k < len; ++k) {
            if ((bytes[i + k] & 0xC0) != 0x80) {
                valid = false;
                break;
            }
            cp = (cp << 6) | (bytes[i + k] & 0x3F);
        }
        // Reject overlongs, surrogates, and out-of-range values.
        if (valid) {
            if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
                (cp >= 0xD800 && cp <= 0xDFFF)) {
                valid = false;
            }
        }
        if (!valid) {
            out.push_back(kReplacement);
            clean = false;
            ++i;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    if (ok) *ok = clean;
    return out;
}

void append_utf8(std::string& out, char32_t c) {
    if (c < 0x80) {
        out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (c >> 6)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (c >> 12)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (c >> 18)));
        out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t c : cps) append_utf8(out, c);
    return out;
}

size_t codepoint_count(std::string_view text) {
    size_t n = 0;
    for (unsigned char b : text) {
        if ((b & 0xC0) != 0x80) ++n;
    }
    return n;
}

bool contains_devanagari(std::string_view text) {
    for (char32_t c : decode_utf8(text)) {
        if (is_devanagari(c)) return true;
    }
    return false;
}

bool contains_ascii_letter(std::string_view text) {
    return std::any_of(text.begin(), text.end(), [](char c) {
        return is_ascii_letter(static_cast<unsigned char>(c));
    });
}

std::string to_lower_ascii(std::string_view text) {
    std::string out(text);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    return out;
}

std::string nfc(std::string_view text) {
    std::vector<char32_t> cps = decode_utf8(text);

    // 1. Canonical decomposition of Devanagari precomposed forms.
    std::vector<char32_t> dec;
    dec.reserve(cps.size());
    for (char32_t c : cps) {
        bool expanded = false;
        if (is_devanagari(c)) {
            for (const auto& f : kNuktaForms) {
                if (f.precomposed == c) {
                    dec.push_back(f.base);
                    dec.push_back(kNukta);
                    expanded = true;
                    break;
                }
            }
        }
        if (!expanded) dec.push_back(c);
    }

    // 2. Canonical ordering: stable-sort runs of nonzero-ccc marks.
    for (size_t i = 1; i < dec.size(); ++i) {
        int cc = combining_class(dec[i]);
        if (cc == 0) continue;
        size_t j = i;
        while (j > 0 && combining_class(dec[j - 1]) > cc) {
            std::swap(dec[j - 1], dec[j]);
            --j;
        }
    }

    // 3. Canonical composition. Only the three non-excluded base+nukta pairs
    // compose; a mark with ccc >= ccc(nukta) between base and nukta blocks it.
    std::vector<char32_t> out;
    out.reserve(dec.size());
    for (size_t i = 0; i < dec.size(); ++i) {
        char32_t c = dec[i];
        if (c == kNukta && !out.empty()) {
            // Find the last starter; composition is blocked if any mark in
            // between has ccc >= 7.
            size_t si = out.size();
            bool blocked = false;
            while (si > 0 && combining_class(out[si - 1]) != 0) {
                if (combining_class(out[si - 1]) >= 7) blocked = true;
                --si;
            }
            if (si > 0 && !blocked) {
                char32_t base = out[si - 1];
                const NuktaForm* hit = nullptr;
                for (const auto& f : kNuktaForms) {
                    if (f.base == base && !f.excluded) {
                        hit = &f;
                        break;
                    }
                }
                if (hit) {
                    out[si - 1] = hit->precomposed;
                    continue;
                }
            }
        }
        out.push_back(c);
    }
    return encode_utf8(out);
}

std::vector<std::string> split_whitespace(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (is_ascii_space(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) {
                tokens.push_back(std::move(cur));
                cur.clear();
            }
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

}  // namespace hinglish
