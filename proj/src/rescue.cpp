#include "hinglish/rescue.hpp"

#include <algorithm>

#include "hinglish/distance.hpp"
#include "hinglish/errors.hpp"
#include "hinglish/unicode.hpp"

namespace hinglish {

void RescueConfig::validate() const {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw ValidationError("rescue threshold must be in (0,1), got " +
                              std::to_string(threshold));
    }
}

namespace {

// The strict similarity test sim > t with sim = 1 - d/max_len, evaluated as
// max_len - d > t * max_len so the prefilter (which substitutes the length
// gap, a lower bound on d, for d) shares the exact same arithmetic and can
// never exclude a key the scan would accept.
bool above_threshold(size_t distance, size_t max_len, double threshold) {
    return static_cast<double>(max_len - distance) > threshold * static_cast<double>(max_len);
}

bool length_compatible(size_t key_len, size_t word_len, double threshold) {
    size_t gap = key_len > word_len ? key_len - word_len : word_len - key_len;
    size_t max_len = std::max(key_len, word_len);
    return above_threshold(gap, max_len, threshold);
}

std::optional<RescueResult> scan(const std::vector<const std::string*>& keys,
                                 std::string_view word, const KnowledgeBase& kb,
                                 const RescueConfig& cfg) {
    std::vector<char32_t> word_cps = decode_utf8(word);
    double max_sim = 0.0;
    const std::string* best = nullptr;
    for (const std::string* key : keys) {
        std::vector<char32_t> key_cps = decode_utf8(*key);
        size_t max_len = std::max(word_cps.size(), key_cps.size());
        if (max_len == 0) continue;
        size_t d = lev_distance(word_cps, key_cps);
        double sim = 1.0 - static_cast<double>(d) / static_cast<double>(max_len);
        if (above_threshold(d, max_len, cfg.threshold) && sim > max_sim) {
            max_sim = sim;
            best = key;
        }
    }
    if (!best) return std::nullopt;
    return RescueResult{*best, *kb.lookup(*best), max_sim};
}

}  // namespace

std::vector<std::string> fuzzy_candidates(std::string_view word, const KnowledgeBase& kb,
                                          const RescueConfig& cfg) {
    cfg.validate();
    size_t word_len = codepoint_count(word);
    std::vector<std::string> out;
    for (const auto& [key_len, keys] : kb.length_index()) {
        if (!length_compatible(key_len, word_len, cfg.threshold)) continue;
        out.insert(out.end(), keys.begin(), keys.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<RescueResult> best_match(std::string_view word, const KnowledgeBase& kb,
                                       const RescueConfig& cfg) {
    cfg.validate();
    size_t word_len = codepoint_count(word);
    std::vector<const std::string*> keys;
    for (const auto& [key_len, bucket] : kb.length_index()) {
        if (!length_compatible(key_len, word_len, cfg.threshold)) continue;
        for (const std::string& k : bucket) keys.push_back(&k);
    }
    std::sort(keys.begin(), keys.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    return scan(keys, word, kb, cfg);
}

std::optional<RescueResult> best_match_exhaustive(std::string_view word,
                                                  const KnowledgeBase& kb,
                                                  const RescueConfig& cfg) {
    cfg.validate();
    std::vector<const std::string*> keys;
    for (const auto& [key, _] : kb.entries()) keys.push_back(&key);
    return scan(keys, word, kb, cfg);
}

TaggedToken rescue_token(const TaggedToken& token, const KnowledgeBase& kb,
                         const RescueConfig& cfg) {
    if (token.tag != LanguageTag::Oov) return token;

    TaggedToken out = token;
    if (contains_devanagari(token.corrected)) {
        out.tag = LanguageTag::Na;
        out.trace.push_back("tag_na");
        return out;
    }
    if (auto hit = best_match(token.corrected, kb, cfg)) {
        out.tag = LanguageTag::RomHindi;
        out.corrected = hit->matched_key;
        out.devanagari = hit->devanagari;
        out.trace.push_back("rescue_match");
        out.trace.push_back("tag_rom_hindi");
    } else {
        out.tag = LanguageTag::Na;
        out.trace.push_back("tag_na");
    }
    return out;
}

std::vector<TaggedToken> rescue_all(const std::vector<TaggedToken>& tokens,
                                    const KnowledgeBase& kb, const RescueConfig& cfg) {
    std::vector<TaggedToken> out;
    out.reserve(tokens.size());
    for (const TaggedToken& t : tokens) out.push_back(rescue_token(t, kb, cfg));
    return out;
}

}  // namespace hinglish
