#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hinglish {

enum class FeatureScheme { Count, TfidfWord, TfidfWordNgram, TfidfCharNgram };

// CLI values: count, tfidf_word, tfidf_word_ngram, tfidf_char_ngram.
std::string_view to_string(FeatureScheme s);
FeatureScheme scheme_from_string(std::string_view s);

struct NgramRange {
    int lo = 2;
    int hi = 3;
};

// Deterministic term -> column map; terms sorted lexicographically.
struct Vocabulary {
    std::vector<std::string> terms;
    std::unordered_map<std::string, size_t> index;

    size_t size() const { return terms.size(); }
    bool contains(const std::string& t) const { return index.count(t) > 0; }
};

struct Triple {
    size_t doc;
    size_t term;
    double weight;
};

struct FeatureMatrix {
    size_t rows = 0;
    FeatureScheme scheme = FeatureScheme::Count;
    Vocabulary vocab;
    std::vector<Triple> values;  // ordered by (doc, term), zero weights omitted
};

// The terms a scheme extracts from one document: word unigrams, word n-grams
// over whitespace tokens, or character n-grams over the raw string (spaces
// included).
std::vector<std::string> extract_terms(std::string_view text, FeatureScheme scheme,
                                       const NgramRange& range);

// All terms with document frequency >= min_df, sorted. Empty corpus is an
// error.
Vocabulary fit_vocabulary(const std::vector<std::string>& corpus, FeatureScheme scheme,
                          const NgramRange& range = {}, size_t min_df = 1);

// Count scheme: raw term counts. Tfidf schemes: tf * (ln((1+N)/(1+df)) + 1)
// with L2 row normalization; df/N are taken over this corpus. Terms outside
// the vocabulary are ignored.
FeatureMatrix transform(const std::vector<std::string>& corpus, const Vocabulary& vocab,
                        FeatureScheme scheme, const NgramRange& range = {});

// Sparse export: `doc<TAB>term_index<TAB>weight` and `term<TAB>index` TSVs.
void write_matrix_tsv(const std::string& path, const FeatureMatrix& m);
void write_vocab_tsv(const std::string& path, const Vocabulary& vocab);

// Row slice, preserving vocabulary and scheme; used to split train/test.
FeatureMatrix select_rows(const FeatureMatrix& m, const std::vector<size_t>& rows);

}  // namespace hinglish
