#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hinglish/classify.hpp"
#include "hinglish/corpus.hpp"
#include "hinglish/distance.hpp"
#include "hinglish/errors.hpp"
#include "hinglish/features.hpp"
#include "hinglish/kb.hpp"
#include "hinglish/langid.hpp"
#include "hinglish/lexicon.hpp"
#include "hinglish/pipeline.hpp"
#include "hinglish/rescue.hpp"
#include "hinglish/translit.hpp"
#include "hinglish/unicode.hpp"

namespace py = pybind11;
using namespace hinglish;

namespace {

LangidResources make_resources(const KnowledgeBase& kb, const Dictionary& en,
                               const Dictionary& hi, const FrequencyModel& freq_en,
                               const FrequencyModel& freq_hi) {
    return LangidResources{&kb, &en, &hi, &freq_en, &freq_hi};
}

Lang lang_from_string(const std::string& s) {
    if (s == "english" || s == "en") return Lang::English;
    if (s == "hindi" || s == "devanagari_hindi" || s == "hi") return Lang::DevanagariHindi;
    throw ValidationError("unknown language: '" + s + "'");
}

py::dict report_to_dict(const EvalReport& rep) {
    return py::module_::import("json").attr("loads")(rep.to_json().dump()).cast<py::dict>();
}

}  // namespace

PYBIND11_MODULE(hinglish, m) {
    m.doc() = "Hindi-English code-switched text normalization: word-level language "
              "identification, Levenshtein rescue of Roman-Hindi spellings, and "
              "Roman-to-Devanagari transliteration that keeps English intact.";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    m.def("clean_text", &clean_text, py::arg("raw"));
    m.def("lev_distance",
          static_cast<size_t (*)(std::string_view, std::string_view)>(&lev_distance),
          py::arg("s1"), py::arg("s2"));
    m.def("lev_similarity",
          static_cast<double (*)(std::string_view, std::string_view)>(&lev_similarity),
          py::arg("s1"), py::arg("s2"));
    m.def("nfc", &nfc, py::arg("text"));

    py::class_<Dictionary>(m, "Dictionary")
        .def_static(
            "load",
            [](const std::string& path, const std::string& lang, int max_dist) {
                return Dictionary::load(path, lang_from_string(lang), max_dist);
            },
            py::arg("path"), py::arg("language"), py::arg("max_suggest_distance") = 1)
        .def(py::init([](const std::string& lang, const std::vector<std::string>& words,
                         int max_dist) {
                 return Dictionary(lang_from_string(lang), {words.begin(), words.end()},
                                   max_dist);
             }),
             py::arg("language"), py::arg("words"), py::arg("max_suggest_distance") = 1)
        .def("detect", &Dictionary::detect, py::arg("word"))
        .def(
            "suggest",
            [](const Dictionary& d, const std::string& word) { return d.suggest(word); },
            py::arg("word"))
        .def("__len__", &Dictionary::size);

    py::class_<FrequencyModel>(m, "FrequencyModel")
        .def_static(
            "load",
            [](const std::string& path, const std::string& lang) {
                return FrequencyModel::load(path, lang_from_string(lang));
            },
            py::arg("path"), py::arg("language"))
        .def("frequency", &FrequencyModel::frequency, py::arg("word"))
        .def("total", &FrequencyModel::total)
        .def("__len__", &FrequencyModel::size);

    py::class_<BuildReport>(m, "BuildReport")
        .def_readonly("loaded", &BuildReport::loaded)
        .def_readonly("from_sentences", &BuildReport::from_sentences)
        .def_readonly("skipped_unaligned", &BuildReport::skipped_unaligned)
        .def_readonly("malformed", &BuildReport::malformed)
        .def_readonly("conflicts", &BuildReport::conflicts)
        .def_readonly("pruned", &BuildReport::pruned)
        .def_readonly("final", &BuildReport::final_entries);

    py::class_<KnowledgeBase>(m, "KnowledgeBase")
        .def_static("load", &KnowledgeBase::load, py::arg("path"))
        .def_static("from_pairs", &KnowledgeBase::from_pairs, py::arg("pairs"))
        .def_static(
            "build",
            [](const std::vector<std::string>& pair_files,
               const std::vector<std::string>& sentence_files, const std::string& profanity,
               const Dictionary& en, const Dictionary& hi) {
                BuildReport rep;
                KnowledgeBase kb = KnowledgeBase::build(
                    KbSources{pair_files, sentence_files, profanity}, en, hi, &rep);
                return py::make_tuple(kb, rep);
            },
            py::arg("pair_files"), py::arg("sentence_files"), py::arg("profanity_file"),
            py::arg("en_dict"), py::arg("hi_dict"))
        .def("save", &KnowledgeBase::save, py::arg("path"))
        .def("lookup", &KnowledgeBase::lookup, py::arg("word"))
        .def("__len__", &KnowledgeBase::size);

    py::class_<TaggedToken>(m, "TaggedToken")
        .def_readonly("surface", &TaggedToken::surface)
        .def_readonly("corrected", &TaggedToken::corrected)
        .def_property_readonly(
            "tag", [](const TaggedToken& t) { return std::string(to_string(t.tag)); })
        .def_readonly("devanagari", &TaggedToken::devanagari)
        .def_readonly("trace", &TaggedToken::trace)
        .def("__repr__", [](const TaggedToken& t) {
            return "TaggedToken('" + t.surface + "', " + std::string(to_string(t.tag)) + ")";
        });

    m.def(
        "tag_word",
        [](const std::string& word, const KnowledgeBase& kb, const Dictionary& en,
           const Dictionary& hi, const FrequencyModel& freq_en, const FrequencyModel& freq_hi) {
            return tag_word(word, make_resources(kb, en, hi, freq_en, freq_hi));
        },
        py::arg("word"), py::arg("kb"), py::arg("en_dict"), py::arg("hi_dict"),
        py::arg("freq_en"), py::arg("freq_hi"));
    m.def(
        "tag_tokens",
        [](const std::string& text, const KnowledgeBase& kb, const Dictionary& en,
           const Dictionary& hi, const FrequencyModel& freq_en, const FrequencyModel& freq_hi) {
            return tag_tokens(text, make_resources(kb, en, hi, freq_en, freq_hi));
        },
        py::arg("text"), py::arg("kb"), py::arg("en_dict"), py::arg("hi_dict"),
        py::arg("freq_en"), py::arg("freq_hi"));

    m.def(
        "rescue",
        [](const std::vector<TaggedToken>& tokens, const KnowledgeBase& kb, double threshold) {
            return rescue_all(tokens, kb, RescueConfig{threshold});
        },
        py::arg("tokens"), py::arg("kb"), py::arg("threshold") = 0.70);

    py::class_<CharRuleTable>(m, "CharRuleTable")
        .def_static("default_table", [] { return CharRuleTable::default_table(); })
        .def_static("load", &CharRuleTable::load, py::arg("path"))
        .def("save", &CharRuleTable::save, py::arg("path"))
        .def("translit", &CharRuleTable::translit, py::arg("word"));

    m.def("moh_transform", &moh_transform, py::arg("tokens"));
    m.def(
        "simulate",
        [](const std::string& variant, const std::vector<TaggedToken>& tokens,
           const KnowledgeBase& profanity, const CharRuleTable& rules) {
            return simulate(variant_from_string(variant), tokens, profanity, rules);
        },
        py::arg("variant"), py::arg("tokens"), py::arg("profanity"), py::arg("rules"));

    m.def(
        "featurize",
        [](const std::vector<std::string>& corpus, const std::string& scheme, int ngram_lo,
           int ngram_hi, size_t min_df) {
            FeatureScheme s = scheme_from_string(scheme);
            NgramRange range{ngram_lo, ngram_hi};
            Vocabulary vocab = fit_vocabulary(corpus, s, range, min_df);
            FeatureMatrix mat = transform(corpus, vocab, s, range);
            std::vector<std::tuple<size_t, size_t, double>> triples;
            triples.reserve(mat.values.size());
            for (const Triple& t : mat.values) triples.emplace_back(t.doc, t.term, t.weight);
            return py::make_tuple(vocab.terms, triples);
        },
        py::arg("corpus"), py::arg("scheme"), py::arg("ngram_lo") = 2, py::arg("ngram_hi") = 3,
        py::arg("min_df") = 1);

    m.def(
        "train_eval",
        [](const std::vector<std::string>& texts, const std::vector<std::string>& labels,
           const std::string& scheme, const std::string& classifier, uint64_t seed,
           double test_fraction) {
            FeatureScheme s = scheme_from_string(scheme);
            NgramRange range{2, 3};
            Vocabulary vocab = fit_vocabulary(texts, s, range, 1);
            FeatureMatrix all = transform(texts, vocab, s, range);
            Split split = make_split(labels, seed, test_fraction, true);
            std::vector<std::string> y_train, y_test;
            for (size_t i : split.train) y_train.push_back(labels[i]);
            for (size_t i : split.test) y_test.push_back(labels[i]);
            FeatureMatrix x_train = select_rows(all, split.train);
            FeatureMatrix x_test = select_rows(all, split.test);
            EvalReport rep;
            if (classifier == "nb") {
                rep = evaluate(NaiveBayes::train(x_train, y_train), x_test, y_test);
            } else if (classifier == "logreg") {
                rep = evaluate(LogisticRegression::train(x_train, y_train), x_test, y_test);
            } else {
                throw ValidationError("unknown classifier: " + classifier);
            }
            return report_to_dict(rep);
        },
        py::arg("texts"), py::arg("labels"), py::arg("scheme") = "count",
        py::arg("classifier") = "nb", py::arg("seed") = 42, py::arg("test_fraction") = 0.2);

    m.def(
        "run_pipeline",
        [](const std::string& config_path, const std::map<std::string, std::string>& overrides) {
            PipelineConfig cfg = config_path.empty() ? PipelineConfig{}
                                                     : PipelineConfig::from_file(config_path);
            for (const auto& [k, v] : overrides) cfg.set(k, v);
            Manifest manifest = run_pipeline(cfg);
            return py::module_::import("json")
                .attr("loads")(manifest.to_json().dump())
                .cast<py::dict>();
        },
        py::arg("config_path") = std::string(),
        py::arg("overrides") = std::map<std::string, std::string>{});

    m.attr("__version__") = std::string(kVersion);
}
