#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace hinglish {

enum class Lang { English, DevanagariHindi };

// Per-word frequency table backing the disambiguation step. Loaded from a
// `word<TAB>count` TSV; unseen words count 0.
class FrequencyModel {
public:
    FrequencyModel() = default;
    FrequencyModel(Lang language, std::map<std::string, int64_t> counts)
        : language_(language), counts_(std::move(counts)) {}

    static FrequencyModel load(const std::string& path, Lang language);

    int64_t frequency(std::string_view word) const;
    int64_t total() const;
    Lang language() const { return language_; }
    size_t size() const { return counts_.size(); }

private:
    Lang language_ = Lang::English;
    std::map<std::string, int64_t> counts_;
};

// Explicit wordlist dictionary with edit-distance-1 spelling suggestion
// (distance cap configurable). English words are stored lowercase and
// detection is case-insensitive; Hindi entries are Devanagari, NFC.
class Dictionary {
public:
    Dictionary() = default;
    Dictionary(Lang language, std::set<std::string> words, int max_suggest_distance = 1);

    // One word per line, UTF-8. Throws ParseError on entries that violate the
    // script constraint (English: Latin letters/apostrophe; Hindi: Devanagari
    // block only).
    static Dictionary load(const std::string& path, Lang language,
                           int max_suggest_distance = 1);

    // Exact membership, after the language's canonical form (lowercase for
    // English, NFC for both).
    bool detect(std::string_view word) const;

    // Closest dictionary word within max_suggest_distance edits, or nullopt.
    // Ties at equal distance prefer the higher frequency count (when a model
    // is supplied), then the lexicographically smaller word.
    std::optional<std::string> suggest(std::string_view word,
                                       const FrequencyModel* freq = nullptr) const;

    Lang language() const { return language_; }
    size_t size() const { return words_.size(); }
    int max_suggest_distance() const { return max_suggest_distance_; }
    const std::set<std::string>& words() const { return words_; }

private:
    std::string canonical(std::string_view word) const;

    Lang language_ = Lang::English;
    std::set<std::string> words_;
    int max_suggest_distance_ = 1;
};

}  // namespace hinglish
