#include "hinglish/translit.hpp"

#include <algorithm>
#include <array>
#include <fstream>

#include "hinglish/errors.hpp"
#include "hinglish/unicode.hpp"

namespace hinglish {

std::string_view to_string(TransformVariant v) {
    switch (v) {
        case TransformVariant::Moh: return "moh";
        case TransformVariant::Indic: return "indic";
        case TransformVariant::IndicP: return "indic-p";
        case TransformVariant::IndicSkipEnP: return "indic-skip-en-p";
    }
    return "moh";
}

TransformVariant variant_from_string(std::string_view s) {
    if (s == "moh") return TransformVariant::Moh;
    if (s == "indic") return TransformVariant::Indic;
    if (s == "indic-p") return TransformVariant::IndicP;
    if (s == "indic-skip-en-p") return TransformVariant::IndicSkipEnP;
    throw ValidationError("unknown variant: '" + std::string(s) +
                          "' (expected moh|indic|indic-p|indic-skip-en-p)");
}

namespace {

bool valid_pattern(std::string_view p) {
    if (p.empty() || p.size() > 3) return false;
    return std::all_of(p.begin(), p.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

}  // namespace

CharRuleTable::CharRuleTable(std::vector<std::pair<std::string, std::string>> rules)
    : rules_(std::move(rules)) {
    validate();
    // longest-match-first; equal lengths keep declaration order
    std::stable_sort(rules_.begin(), rules_.end(), [](const auto& a, const auto& b) {
        return a.first.size() > b.first.size();
    });
    for (const auto& [pattern, _] : rules_) {
        max_pattern_ = std::max(max_pattern_, pattern.size());
    }
}

void CharRuleTable::validate() const {
    std::array<bool, 26> covered{};
    for (const auto& [pattern, replacement] : rules_) {
        if (!valid_pattern(pattern)) {
            throw ValidationError("rule pattern must be 1-3 lowercase Latin chars: '" +
                                  pattern + "'");
        }
        if (replacement.empty() || contains_ascii_letter(replacement)) {
            throw ValidationError("rule replacement must be non-Latin, nonempty: '" +
                                  replacement + "'");
        }
        if (pattern.size() == 1) covered[pattern[0] - 'a'] = true;
    }
    for (int i = 0; i < 26; ++i) {
        if (!covered[i]) {
            throw ValidationError(std::string("rule table is not total: no rule for '") +
                                  static_cast<char>('a' + i) + "'");
        }
    }
}

const CharRuleTable& CharRuleTable::default_table() {
    static const CharRuleTable table({
        // trigraphs
        {"chh", "छ"},
        {"shr", "श्र"},
        // long vowels and diphthongs
        {"aa", "ा"},
        {"ee", "ी"},
        {"ii", "ी"},
        {"oo", "ू"},
        {"uu", "ू"},
        {"ai", "ै"},
        {"au", "ौ"},
        {"ou", "ौ"},
        {"ei", "े"},
        {"ea", "ी"},
        {"ae", "े"},
        {"oa", "ो"},
        // aspirated and compound consonants
        {"kh", "ख"},
        {"gh", "घ"},
        {"ch", "च"},
        {"jh", "झ"},
        {"th", "थ"},
        {"dh", "ध"},
        {"ph", "फ"},
        {"bh", "भ"},
        {"sh", "श"},
        {"gy", "ज्ञ"},
        {"ny", "ञ"},
        {"ng", "ंग"},
        {"ck", "क"},
        {"ks", "क्स"},
        {"tr", "त्र"},
        // short vowels as matras
        {"a", "ा"},
        {"e", "े"},
        {"i", "ि"},
        {"o", "ो"},
        {"u", "ु"},
        // single consonants
        {"b", "ब"},
        {"c", "क"},
        {"d", "द"},
        {"f", "फ"},
        {"g", "ग"},
        {"h", "ह"},
        {"j", "ज"},
        {"k", "क"},
        {"l", "ल"},
        {"m", "म"},
        {"n", "न"},
        {"p", "प"},
        {"q", "क"},
        {"r", "र"},
        {"s", "स"},
        {"t", "त"},
        {"v", "व"},
        {"w", "व"},
        {"x", "क्स"},
        {"y", "य"},
        {"z", "ज"},
    });
    return table;
}

CharRuleTable CharRuleTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open rule table: " + path);
    std::vector<std::pair<std::string, std::string>> rules;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError(path, line_no, "expected pattern<TAB>replacement");
        }
        rules.emplace_back(line.substr(0, tab), nfc(line.substr(tab + 1)));
    }
    return CharRuleTable(std::move(rules));
}

void CharRuleTable::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write rule table: " + path);
    for (const auto& [pattern, replacement] : rules_) {
        out << pattern << '\t' << replacement << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

std::string CharRuleTable::translit(std::string_view word) const {
    std::string out;
    size_t i = 0;
    while (i < word.size()) {
        char c = word[i];
        if (!(c >= 'a' && c <= 'z')) {
            // digits, apostrophe and non-ASCII bytes pass through
            out.push_back(c);
            ++i;
            continue;
        }
        bool matched = false;
        size_t longest = std::min(max_pattern_, word.size() - i);
        for (size_t len = longest; len >= 1 && !matched; --len) {
            std::string_view piece = word.substr(i, len);
            for (const auto& [pattern, replacement] : rules_) {
                if (pattern.size() < len) break;  // sorted longest-first
                if (pattern.size() == len && pattern == piece) {
                    out += replacement;
                    i += len;
                    matched = true;
                    break;
                }
            }
        }
        // totality guarantees a single-char rule matched
    }
    return out;
}

std::string moh_transform(const std::vector<TaggedToken>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const TaggedToken& t : tokens) {
        switch (t.tag) {
            case LanguageTag::RomHindi:
                if (!t.devanagari) {
                    throw ContractViolation("ROM_HINDI token without Devanagari form: '" +
                                            t.surface + "'");
                }
                out.push_back(*t.devanagari);
                break;
            case LanguageTag::DevHindi:
            case LanguageTag::English:
                out.push_back(t.corrected);
                break;
            case LanguageTag::Na:
                out.push_back(t.surface);
                break;
            case LanguageTag::Oov:
                throw ContractViolation("OOV token reached moh_transform: '" + t.surface +
                                        "' (run rescue first)");
        }
    }
    return join_tokens(out);
}

std::string simulate(TransformVariant variant, const std::vector<TaggedToken>& tokens,
                     const KnowledgeBase& profanity, const CharRuleTable& rules) {
    if (variant == TransformVariant::Moh) return moh_transform(tokens);

    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const TaggedToken& t : tokens) {
        if (variant == TransformVariant::IndicSkipEnP && t.tag == LanguageTag::English) {
            out.push_back(t.surface);
            continue;
        }
        if (variant != TransformVariant::Indic) {
            if (auto hit = profanity.lookup(t.surface)) {
                out.push_back(*hit);
                continue;
            }
        }
        if (contains_ascii_letter(t.surface)) {
            out.push_back(rules.translit(t.surface));
        } else {
            out.push_back(t.surface);
        }
    }
    return join_tokens(out);
}

}  // namespace hinglish
