#include "hinglish/kb.hpp"

#include <fstream>

#include "hinglish/errors.hpp"
#include "hinglish/unicode.hpp"

namespace hinglish {

namespace {

bool has_whitespace(std::string_view s) {
    for (char c : s) {
        if (is_ascii_space(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

bool valid_key(std::string_view key) {
    if (key.empty() || has_whitespace(key)) return false;
    for (char c : key) {
        if (c >= 'A' && c <= 'Z') return false;
    }
    return true;
}

bool valid_value(std::string_view value) {
    return !value.empty() && contains_devanagari(value);
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

struct PairLine {
    std::string key;
    std::string value;
};

// Splits a two-column TSV line; nullopt when the line is not usable.
std::optional<PairLine> parse_pair_line(const std::string& line) {
    size_t tab = line.find('\t');
    if (tab == std::string::npos) return std::nullopt;
    std::string key = to_lower_ascii(nfc(line.substr(0, tab)));
    std::string value = nfc(line.substr(tab + 1));
    if (!valid_key(key) || !valid_value(value)) return std::nullopt;
    return PairLine{std::move(key), std::move(value)};
}

}  // namespace

void KnowledgeBase::index_keys() {
    length_index_.clear();
    for (const auto& [key, _] : entries_) {
        length_index_[codepoint_count(key)].push_back(key);
    }
    // map iteration is lexicographic, so each bucket is already sorted
}

std::optional<std::string> KnowledgeBase::lookup(std::string_view word) const {
    auto it = entries_.find(std::string(word));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

KnowledgeBase KnowledgeBase::from_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    KnowledgeBase kb;
    for (const auto& [raw_key, raw_value] : pairs) {
        std::string key = to_lower_ascii(nfc(raw_key));
        std::string value = nfc(raw_value);
        if (!valid_key(key)) throw ValidationError("invalid KB key: '" + raw_key + "'");
        if (!valid_value(value)) {
            throw ValidationError("KB value has no Devanagari codepoint: '" + raw_value + "'");
        }
        kb.entries_.emplace(std::move(key), std::move(value));
    }
    kb.index_keys();
    return kb;
}

KnowledgeBase KnowledgeBase::build(const KbSources& sources, const Dictionary& en_dict,
                                   const Dictionary& hi_dict, BuildReport* report) {
    BuildReport rep;
    KnowledgeBase kb;

    auto insert_pair = [&](std::string key, std::string value) {
        auto [it, inserted] = kb.entries_.emplace(std::move(key), value);
        if (!inserted && it->second != value) ++rep.conflicts;
        return inserted;
    };

    auto ingest_pair_file = [&](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open KB source: " + path);
        std::string line;
        while (std::getline(in, line)) {
            line = strip_cr(std::move(line));
            if (line.empty()) continue;
            auto pair = parse_pair_line(line);
            if (!pair) {
                ++rep.malformed;
                continue;
            }
            ++rep.loaded;
            insert_pair(std::move(pair->key), std::move(pair->value));
        }
    };

    for (const auto& path : sources.pair_files) ingest_pair_file(path);
    if (!sources.profanity_file.empty()) ingest_pair_file(sources.profanity_file);

    for (const auto& path : sources.sentence_pair_files) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open KB sentence source: " + path);
        std::string line;
        while (std::getline(in, line)) {
            line = strip_cr(std::move(line));
            if (line.empty()) continue;
            size_t tab = line.find('\t');
            if (tab == std::string::npos) {
                ++rep.malformed;
                continue;
            }
            auto roman = split_whitespace(to_lower_ascii(nfc(line.substr(0, tab))));
            auto devanagari = split_whitespace(nfc(line.substr(tab + 1)));
            if (roman.empty() || roman.size() != devanagari.size()) {
                ++rep.skipped_unaligned;
                continue;
            }
            for (size_t i = 0; i < roman.size(); ++i) {
                if (!valid_key(roman[i]) || !valid_value(devanagari[i])) continue;
                ++rep.from_sentences;
                insert_pair(roman[i], devanagari[i]);
            }
        }
    }

    // Pruning pass: keys that are English-only (detected by the English
    // dictionary, value not detected by the Hindi dictionary) are noise.
    for (auto it = kb.entries_.begin(); it != kb.entries_.end();) {
        if (en_dict.detect(it->first) && !hi_dict.detect(it->second)) {
            it = kb.entries_.erase(it);
            ++rep.pruned;
        } else {
            ++it;
        }
    }

    kb.index_keys();
    rep.final_entries = kb.entries_.size();
    if (report) *report = rep;
    return kb;
}

KnowledgeBase KnowledgeBase::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open KB file: " + path);
    KnowledgeBase kb;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(std::move(line));
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError(path, line_no, "expected roman<TAB>devanagari");
        }
        std::string key = to_lower_ascii(nfc(line.substr(0, tab)));
        std::string value = nfc(line.substr(tab + 1));
        if (!valid_key(key)) throw ParseError(path, line_no, "invalid roman key");
        if (!valid_value(value)) {
            throw ParseError(path, line_no, "value has no Devanagari codepoint");
        }
        kb.entries_.emplace(std::move(key), std::move(value));
    }
    kb.index_keys();
    return kb;
}

void KnowledgeBase::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write KB file: " + path);
    for (const auto& [key, value] : entries_) {
        out << key << '\t' << value << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace hinglish
