#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hinglish/corpus.hpp"
#include "hinglish/kb.hpp"
#include "hinglish/lexicon.hpp"

namespace hinglish {

enum class LanguageTag { English, DevHindi, RomHindi, Oov, Na };

// Wire strings: ENGLISH, DEV_HINDI, ROM_HINDI, OOV, NA.
std::string_view to_string(LanguageTag tag);
LanguageTag tag_from_string(std::string_view s);

struct TaggedToken {
    std::string surface;                    // original token
    std::string corrected;                  // post-spell-check form
    LanguageTag tag = LanguageTag::Oov;
    std::optional<std::string> devanagari;  // set for DEV_HINDI / ROM_HINDI
    std::vector<std::string> trace;         // decision branches, in order taken
};

struct LangidResources {
    const KnowledgeBase* kb = nullptr;
    const Dictionary* en_dict = nullptr;
    const Dictionary* hi_dict = nullptr;
    const FrequencyModel* freq_en = nullptr;
    const FrequencyModel* freq_hi = nullptr;
};

// Per-word language identification and disambiguation. Branch order:
//   1. Hindi dictionary detects       -> DEV_HINDI
//   2. Hindi dictionary suggests      -> corrected, DEV_HINDI
//   3. English detect/suggest sets the English candidate
//   4. knowledge-base hit sets the Hindi candidate
//   5. English only -> ENGLISH; Hindi only -> ROM_HINDI;
//      both -> ENGLISH iff freq_en(candidate) > freq_hi(word), else ROM_HINDI;
//      neither -> OOV
// Tokens containing Devanagari never reach the English/KB branches: they are
// DEV_HINDI via 1/2 or OOV.
TaggedToken tag_word(std::string_view word, const LangidResources& res);

// Whitespace-tokenizes cleaned text and tags each token, order preserved.
std::vector<TaggedToken> tag_tokens(std::string_view text, const LangidResources& res);
std::vector<TaggedToken> tag_post(const Post& post, const LangidResources& res);

// Recomputes the tag a trace encodes; tests assert it matches the token's tag.
LanguageTag replay_trace(const std::vector<std::string>& trace);

}  // namespace hinglish
