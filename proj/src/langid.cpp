#include "hinglish/langid.hpp"

#include "hinglish/errors.hpp"
#include "hinglish/unicode.hpp"

namespace hinglish {

std::string_view to_string(LanguageTag tag) {
    switch (tag) {
        case LanguageTag::English: return "ENGLISH";
        case LanguageTag::DevHindi: return "DEV_HINDI";
        case LanguageTag::RomHindi: return "ROM_HINDI";
        case LanguageTag::Oov: return "OOV";
        case LanguageTag::Na: return "NA";
    }
    return "OOV";
}

LanguageTag tag_from_string(std::string_view s) {
    if (s == "ENGLISH") return LanguageTag::English;
    if (s == "DEV_HINDI") return LanguageTag::DevHindi;
    if (s == "ROM_HINDI") return LanguageTag::RomHindi;
    if (s == "OOV") return LanguageTag::Oov;
    if (s == "NA") return LanguageTag::Na;
    throw ValidationError("unknown language tag: '" + std::string(s) + "'");
}

TaggedToken tag_word(std::string_view word, const LangidResources& res) {
    TaggedToken t;
    t.surface = std::string(word);
    t.corrected = t.surface;

    // Branches 1+2: Hindi dictionary. Devanagari-bearing tokens are decided
    // here; the English dictionary and the KB only hold Latin keys.
    if (res.hi_dict->detect(word)) {
        t.trace = {"hi_detect", "tag_dev_hindi"};
        t.tag = LanguageTag::DevHindi;
        t.devanagari = t.corrected;
        return t;
    }
    if (auto fixed = res.hi_dict->suggest(word, res.freq_hi)) {
        t.trace = {"hi_suggest", "tag_dev_hindi"};
        t.tag = LanguageTag::DevHindi;
        t.corrected = *fixed;
        t.devanagari = t.corrected;
        return t;
    }
    if (contains_devanagari(word)) {
        t.trace = {"devanagari_undetected", "tag_oov"};
        t.tag = LanguageTag::Oov;
        return t;
    }

    // Branches 3+4: collect the English and Hindi candidates.
    std::optional<std::string> english_candidate;
    if (res.en_dict->detect(word)) {
        t.trace.push_back("en_detect");
        english_candidate = to_lower_ascii(word);
    } else if (auto fixed = res.en_dict->suggest(word, res.freq_en)) {
        t.trace.push_back("en_suggest");
        english_candidate = *fixed;
    }

    std::optional<std::string> hindi_candidate = res.kb->lookup(word);
    if (hindi_candidate) t.trace.push_back("kb_hit");

    // Branch 5: resolve.
    if (english_candidate && !hindi_candidate) {
        t.trace.push_back("tag_english");
        t.tag = LanguageTag::English;
        t.corrected = *english_candidate;
        return t;
    }
    if (!english_candidate && hindi_candidate) {
        t.trace.push_back("tag_rom_hindi");
        t.tag = LanguageTag::RomHindi;
        t.devanagari = *hindi_candidate;
        return t;
    }
    if (english_candidate && hindi_candidate) {
        int64_t freq_en = res.freq_en->frequency(*english_candidate);
        int64_t freq_hi = res.freq_hi->frequency(word);
        if (freq_en > freq_hi) {
            t.trace.push_back("freq_en_gt_freq_hi");
            t.trace.push_back("tag_english");
            t.tag = LanguageTag::English;
            t.corrected = *english_candidate;
        } else {
            t.trace.push_back("freq_en_le_freq_hi");
            t.trace.push_back("tag_rom_hindi");
            t.tag = LanguageTag::RomHindi;
            t.devanagari = *hindi_candidate;
        }
        return t;
    }

    t.trace.push_back("tag_oov");
    t.tag = LanguageTag::Oov;
    return t;
}

std::vector<TaggedToken> tag_tokens(std::string_view text, const LangidResources& res) {
    std::vector<TaggedToken> out;
    for (const std::string& token : split_whitespace(text)) {
        out.push_back(tag_word(token, res));
    }
    return out;
}

std::vector<TaggedToken> tag_post(const Post& post, const LangidResources& res) {
    return tag_tokens(post.text, res);
}

LanguageTag replay_trace(const std::vector<std::string>& trace) {
    if (trace.empty()) throw ValidationError("empty trace");
    const std::string& outcome = trace.back();
    if (outcome == "tag_dev_hindi") return LanguageTag::DevHindi;
    if (outcome == "tag_english") return LanguageTag::English;
    if (outcome == "tag_rom_hindi") return LanguageTag::RomHindi;
    if (outcome == "tag_oov") return LanguageTag::Oov;
    if (outcome == "tag_na") return LanguageTag::Na;
    throw ValidationError("trace does not end in an outcome branch: " + outcome);
}

}  // namespace hinglish
