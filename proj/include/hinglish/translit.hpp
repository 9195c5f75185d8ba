#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hinglish/kb.hpp"
#include "hinglish/langid.hpp"

namespace hinglish {

enum class TransformVariant { Moh, Indic, IndicP, IndicSkipEnP };

// CLI values: moh, indic, indic-p, indic-skip-en-p.
std::string_view to_string(TransformVariant v);
TransformVariant variant_from_string(std::string_view s);

// Ordered Latin->Devanagari character rules, longest match first. Every
// letter a-z has a single-char rule, so transliteration always consumes its
// input. This deliberately naive table stands in for character-level
// transliterators and reproduces their failure mode: output need not be a
// real Hindi word.
class CharRuleTable {
public:
    CharRuleTable() = default;
    explicit CharRuleTable(std::vector<std::pair<std::string, std::string>> rules);

    // The committed default table (vowel signs, consonants, common digraphs).
    static const CharRuleTable& default_table();

    // TSV `pattern<TAB>replacement`, UTF-8, no header.
    static CharRuleTable load(const std::string& path);
    void save(const std::string& path) const;

    // Greedy longest-match left-to-right. Latin letters are always consumed;
    // other codepoints pass through.
    std::string translit(std::string_view word) const;

    const std::vector<std::pair<std::string, std::string>>& rules() const { return rules_; }

private:
    void validate() const;
    std::vector<std::pair<std::string, std::string>> rules_;  // sorted: longer patterns first
    size_t max_pattern_ = 1;
};

// Final text assembly: ROM_HINDI -> Devanagari mapping, DEV_HINDI/ENGLISH ->
// corrected form, NA -> surface unchanged; single-space joined, order kept.
// An OOV tag is a contract violation (rescue must run first).
std::string moh_transform(const std::vector<TaggedToken>& tokens);

// Simulation variants over the same token stream:
//   INDIC           char-transliterate every Latin token, keep Devanagari
//   INDIC_P         profane tokens (profanity keys) map through the pair list
//                   first, rest as INDIC
//   INDIC_SKIP_EN_P ENGLISH-tagged tokens kept verbatim, profanity via the
//                   pair list, remaining Latin tokens char-transliterated
//   MOH             moh_transform
std::string simulate(TransformVariant variant, const std::vector<TaggedToken>& tokens,
                     const KnowledgeBase& profanity, const CharRuleTable& rules);

}  // namespace hinglish
