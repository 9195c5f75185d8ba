#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hinglish/kb.hpp"
#include "hinglish/langid.hpp"

namespace hinglish {

struct RescueConfig {
    double threshold = 0.70;  // similarity must be strictly greater

    void validate() const;
};

struct RescueResult {
    std::string matched_key;
    std::string devanagari;
    double similarity = 0.0;
};

// Keys worth scoring for `word`: exactly those with
//   |len(k) - len(word)| < (1 - threshold) * max(len(k), len(word)),
// in lexicographic order. Sound because distance >= length difference, so
// every excluded key sits at or below the threshold.
std::vector<std::string> fuzzy_candidates(std::string_view word, const KnowledgeBase& kb,
                                          const RescueConfig& cfg);

// Best KB key by similarity (first in lexicographic order on ties), accepted
// only when strictly above the threshold.
std::optional<RescueResult> best_match(std::string_view word, const KnowledgeBase& kb,
                                       const RescueConfig& cfg);

// Same scan without the length prefilter; the reference path the prefiltered
// one is checked against.
std::optional<RescueResult> best_match_exhaustive(std::string_view word,
                                                  const KnowledgeBase& kb,
                                                  const RescueConfig& cfg);

// OOV -> ROM_HINDI transfer. Latin OOV tokens are matched against the KB via
// the corrected form; below-threshold tokens and Devanagari OOV tokens become
// NA with their surface preserved. Tokens not tagged OOV pass through.
TaggedToken rescue_token(const TaggedToken& token, const KnowledgeBase& kb,
                         const RescueConfig& cfg);

// Applies rescue_token to each token. Afterwards no token carries OOV.
std::vector<TaggedToken> rescue_all(const std::vector<TaggedToken>& tokens,
                                    const KnowledgeBase& kb, const RescueConfig& cfg);

}  // namespace hinglish
