#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hinglish/lexicon.hpp"

namespace hinglish {

struct KbSources {
    std::vector<std::string> pair_files;           // roman<TAB>devanagari words
    std::vector<std::string> sentence_pair_files;  // roman<TAB>devanagari sentences
    std::string profanity_file;                    // optional, same pair format
};

struct BuildReport {
    size_t loaded = 0;             // pairs taken from pair/profanity files
    size_t from_sentences = 0;     // pairs derived from aligned sentence pairs
    size_t skipped_unaligned = 0;  // sentence pairs with unequal token counts
    size_t malformed = 0;          // lines that were not valid two-column TSV
    size_t conflicts = 0;          // duplicate keys with a different value (first wins)
    size_t pruned = 0;             // entries removed by the English-only pruning pass
    size_t final_entries = 0;
};

// Immutable Roman-Hindi -> Devanagari word map with a codepoint-length index
// over its keys for fuzzy search. Keys are lowercase NFC Latin, values NFC
// Devanagari.
class KnowledgeBase {
public:
    KnowledgeBase() = default;

    // Union of all sources; sentence pairs contribute position-aligned tokens
    // when both sides tokenize to the same length; then the pruning pass drops
    // every entry whose key the English dictionary detects while the Hindi
    // dictionary does not detect its value.
    static KnowledgeBase build(const KbSources& sources, const Dictionary& en_dict,
                               const Dictionary& hi_dict, BuildReport* report = nullptr);

    // Builds from in-memory pairs (fixtures, tests). Entries violating the
    // key/value invariants throw ValidationError.
    static KnowledgeBase from_pairs(
        const std::vector<std::pair<std::string, std::string>>& pairs);

    // KB TSV: `roman<TAB>devanagari`, one pair per line, UTF-8, NFC, no header.
    static KnowledgeBase load(const std::string& path);
    void save(const std::string& path) const;

    std::optional<std::string> lookup(std::string_view word) const;

    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Lexicographically ordered entries; also the candidate order for rescue.
    const std::map<std::string, std::string>& entries() const { return entries_; }

    // Keys bucketed by codepoint length, each bucket lexicographically sorted.
    const std::map<size_t, std::vector<std::string>>& length_index() const {
        return length_index_;
    }

private:
    void index_keys();

    std::map<std::string, std::string> entries_;
    std::map<size_t, std::vector<std::string>> length_index_;
};

}  // namespace hinglish
