#include "hinglish/lexicon.hpp"

#include <fstream>

#include "hinglish/distance.hpp"
#include "hinglish/errors.hpp"
#include "hinglish/unicode.hpp"

namespace hinglish {

namespace {

bool valid_english_word(std::string_view w) {
    if (w.empty()) return false;
    for (char c : w) {
        if (!is_ascii_letter(static_cast<unsigned char>(c)) && c != '\'') return false;
    }
    return true;
}

bool valid_hindi_word(std::string_view w) {
    if (w.empty()) return false;
    for (char32_t c : decode_utf8(w)) {
        if (!is_devanagari(c)) return false;
    }
    return true;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

FrequencyModel FrequencyModel::load(const std::string& path, Lang language) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open frequency file: " + path);
    std::map<std::string, int64_t> counts;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(std::move(line));
        if (line.empty()) continue;
        size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError(path, line_no, "expected word<TAB>count");
        }
        std::string word = nfc(line.substr(0, tab));
        if (language == Lang::English) word = to_lower_ascii(word);
        int64_t count = 0;
        try {
            count = std::stoll(line.substr(tab + 1));
        } catch (const std::exception&) {
            throw ParseError(path, line_no, "count is not an integer");
        }
        if (count < 0) throw ParseError(path, line_no, "count is negative");
        counts[word] += count;
    }
    return FrequencyModel(language, std::move(counts));
}

int64_t FrequencyModel::frequency(std::string_view word) const {
    std::string key = nfc(word);
    if (language_ == Lang::English) key = to_lower_ascii(key);
    auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
}

int64_t FrequencyModel::total() const {
    int64_t sum = 0;
    for (const auto& [_, c] : counts_) sum += c;
    return sum;
}

Dictionary::Dictionary(Lang language, std::set<std::string> words, int max_suggest_distance)
    : language_(language), max_suggest_distance_(max_suggest_distance) {
    for (const std::string& w : words) {
        std::string c = canonical(w);
        bool valid = language_ == Lang::English ? valid_english_word(c) : valid_hindi_word(c);
        if (!valid) {
            throw ValidationError("word violates the dictionary's script: '" + w + "'");
        }
        words_.insert(std::move(c));
    }
}

Dictionary Dictionary::load(const std::string& path, Lang language, int max_suggest_distance) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open dictionary file: " + path);
    std::set<std::string> words;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(std::move(line));
        if (line.empty()) continue;
        std::string word = nfc(line);
        if (language == Lang::English) {
            word = to_lower_ascii(word);
            if (!valid_english_word(word)) {
                throw ParseError(path, line_no, "not a Latin-letter word: '" + word + "'");
            }
        } else {
            if (!valid_hindi_word(word)) {
                throw ParseError(path, line_no, "not a Devanagari word: '" + word + "'");
            }
        }
        words.insert(std::move(word));
    }
    Dictionary d;
    d.language_ = language;
    d.words_ = std::move(words);
    d.max_suggest_distance_ = max_suggest_distance;
    return d;
}

std::string Dictionary::canonical(std::string_view word) const {
    std::string w = nfc(word);
    if (language_ == Lang::English) w = to_lower_ascii(w);
    return w;
}

bool Dictionary::detect(std::string_view word) const {
    if (word.empty()) return false;
    return words_.count(canonical(word)) > 0;
}

std::optional<std::string> Dictionary::suggest(std::string_view word,
                                               const FrequencyModel* freq) const {
    if (word.empty()) return std::nullopt;
    std::string w = canonical(word);
    size_t wlen = codepoint_count(w);

    size_t best_distance = static_cast<size_t>(max_suggest_distance_) + 1;
    int64_t best_freq = -1;
    const std::string* best = nullptr;

    for (const std::string& cand : words_) {
        size_t clen = codepoint_count(cand);
        size_t len_gap = clen > wlen ? clen - wlen : wlen - clen;
        if (len_gap > static_cast<size_t>(max_suggest_distance_)) continue;
        size_t d = lev_distance(w, cand);
        if (d > static_cast<size_t>(max_suggest_distance_) || d > best_distance) continue;
        int64_t f = freq ? freq->frequency(cand) : 0;
        if (d < best_distance || (d == best_distance && f > best_freq)) {
            best_distance = d;
            best_freq = f;
            best = &cand;
        }
        // equal distance and frequency: the set iterates in lexicographic
        // order, so the first seen already wins
    }
    if (!best) return std::nullopt;
    return *best;
}

}  // namespace hinglish
