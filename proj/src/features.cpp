#include "hinglish/features.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "hinglish/errors.hpp"
#include "hinglish/unicode.hpp"

namespace hinglish {

std::string_view to_string(FeatureScheme s) {
    switch (s) {
        case FeatureScheme::Count: return "count";
        case FeatureScheme::TfidfWord: return "tfidf_word";
        case FeatureScheme::TfidfWordNgram: return "tfidf_word_ngram";
        case FeatureScheme::TfidfCharNgram: return "tfidf_char_ngram";
    }
    return "count";
}

FeatureScheme scheme_from_string(std::string_view s) {
    if (s == "count") return FeatureScheme::Count;
    if (s == "tfidf_word") return FeatureScheme::TfidfWord;
    if (s == "tfidf_word_ngram") return FeatureScheme::TfidfWordNgram;
    if (s == "tfidf_char_ngram") return FeatureScheme::TfidfCharNgram;
    throw ValidationError("unknown feature scheme: '" + std::string(s) +
                          "' (expected count|tfidf_word|tfidf_word_ngram|tfidf_char_ngram)");
}

std::vector<std::string> extract_terms(std::string_view text, FeatureScheme scheme,
                                       const NgramRange& range) {
    std::vector<std::string> terms;
    switch (scheme) {
        case FeatureScheme::Count:
        case FeatureScheme::TfidfWord:
            return split_whitespace(text);
        case FeatureScheme::TfidfWordNgram: {
            auto tokens = split_whitespace(text);
            for (int n = range.lo; n <= range.hi; ++n) {
                if (n <= 0 || tokens.size() < static_cast<size_t>(n)) continue;
                for (size_t i = 0; i + n <= tokens.size(); ++i) {
                    std::string gram = tokens[i];
                    for (int k = 1; k < n; ++k) {
                        gram.push_back(' ');
                        gram += tokens[i + k];
                    }
                    terms.push_back(std::move(gram));
                }
            }
            return terms;
        }
        case FeatureScheme::TfidfCharNgram: {
            std::vector<char32_t> cps = decode_utf8(text);
            for (int n = range.lo; n <= range.hi; ++n) {
                if (n <= 0 || cps.size() < static_cast<size_t>(n)) continue;
                for (size_t i = 0; i + n <= cps.size(); ++i) {
                    std::string gram;
                    for (int k = 0; k < n; ++k) append_utf8(gram, cps[i + k]);
                    terms.push_back(std::move(gram));
                }
            }
            return terms;
        }
    }
    return terms;
}

Vocabulary fit_vocabulary(const std::vector<std::string>& corpus, FeatureScheme scheme,
                          const NgramRange& range, size_t min_df) {
    if (corpus.empty()) throw ValidationError("cannot fit a vocabulary on an empty corpus");

    std::map<std::string, size_t> doc_freq;
    for (const std::string& doc : corpus) {
        std::set<std::string> seen;
        for (std::string& t : extract_terms(doc, scheme, range)) {
            seen.insert(std::move(t));
        }
        for (const std::string& t : seen) ++doc_freq[t];
    }

    Vocabulary vocab;
    for (const auto& [term, df] : doc_freq) {
        if (df >= min_df) vocab.terms.push_back(term);
    }
    vocab.index.reserve(vocab.terms.size());
    for (size_t i = 0; i < vocab.terms.size(); ++i) vocab.index.emplace(vocab.terms[i], i);
    return vocab;
}

FeatureMatrix transform(const std::vector<std::string>& corpus, const Vocabulary& vocab,
                        FeatureScheme scheme, const NgramRange& range) {
    FeatureMatrix m;
    m.rows = corpus.size();
    m.scheme = scheme;
    m.vocab = vocab;

    // First pass: per-document counts restricted to the vocabulary.
    std::vector<std::map<size_t, double>> row_counts(corpus.size());
    std::vector<size_t> doc_freq(vocab.size(), 0);
    for (size_t d = 0; d < corpus.size(); ++d) {
        for (const std::string& t : extract_terms(corpus[d], scheme, range)) {
            auto it = vocab.index.find(t);
            if (it == vocab.index.end()) continue;
            row_counts[d][it->second] += 1.0;
        }
        for (const auto& [term_idx, _] : row_counts[d]) ++doc_freq[term_idx];
    }

    bool tfidf = scheme != FeatureScheme::Count;
    const double n_docs = static_cast<double>(corpus.size());
    for (size_t d = 0; d < corpus.size(); ++d) {
        auto& row = row_counts[d];
        if (tfidf) {
            double norm_sq = 0.0;
            for (auto& [term_idx, w] : row) {
                double idf = std::log((1.0 + n_docs) / (1.0 + static_cast<double>(doc_freq[term_idx]))) + 1.0;
                w *= idf;
                norm_sq += w * w;
            }
            if (norm_sq > 0.0) {
                double inv = 1.0 / std::sqrt(norm_sq);
                for (auto& [_, w] : row) w *= inv;
            }
        }
        for (const auto& [term_idx, w] : row) {
            if (w != 0.0) m.values.push_back(Triple{d, term_idx, w});
        }
    }
    return m;
}

void write_matrix_tsv(const std::string& path, const FeatureMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write matrix file: " + path);
    char buf[64];
    for (const Triple& t : m.values) {
        if (m.scheme == FeatureScheme::Count) {
            std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(t.weight));
        } else {
            std::snprintf(buf, sizeof(buf), "%.17g", t.weight);
        }
        out << t.doc << '\t' << t.term << '\t' << buf << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

void write_vocab_tsv(const std::string& path, const Vocabulary& vocab) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write vocabulary file: " + path);
    for (size_t i = 0; i < vocab.terms.size(); ++i) {
        out << vocab.terms[i] << '\t' << i << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

FeatureMatrix select_rows(const FeatureMatrix& m, const std::vector<size_t>& rows) {
    FeatureMatrix out;
    out.rows = rows.size();
    out.scheme = m.scheme;
    out.vocab = m.vocab;

    std::unordered_map<size_t, size_t> remap;
    remap.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) remap.emplace(rows[i], i);

    for (const Triple& t : m.values) {
        auto it = remap.find(t.doc);
        if (it == remap.end()) continue;
        out.values.push_back(Triple{it->second, t.term, t.weight});
    }
    std::sort(out.values.begin(), out.values.end(), [](const Triple& a, const Triple& b) {
        return a.doc != b.doc ? a.doc < b.doc : a.term < b.term;
    });
    return out;
}

}  // namespace hinglish
