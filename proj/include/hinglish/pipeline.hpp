#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hinglish/classify.hpp"
#include "hinglish/corpus.hpp"
#include "hinglish/features.hpp"
#include "hinglish/kb.hpp"
#include "hinglish/langid.hpp"
#include "hinglish/rescue.hpp"
#include "hinglish/translit.hpp"

namespace hinglish {

inline constexpr std::string_view kVersion = "0.1.0";

struct PipelineConfig {
    // resources
    std::string corpus;
    std::string kb;
    std::string en_dict;
    std::string hi_dict;
    std::string freq_en;
    std::string freq_hi;
    std::string profanity;  // optional
    std::string rules;      // optional; default rule table when empty

    // corpus schema
    std::string text_column = "text";
    std::string label_column = "label";
    std::string id_column;  // optional
    char delimiter = ',';

    // pipeline knobs
    double threshold = 0.70;
    TransformVariant variant = TransformVariant::Moh;
    std::vector<FeatureScheme> schemes = {FeatureScheme::Count};
    std::vector<std::string> classifiers = {"nb"};  // nb | logreg
    uint64_t seed = 42;
    double test_fraction = 0.2;
    size_t min_df = 1;
    NgramRange word_ngrams{2, 3};
    NgramRange char_ngrams{2, 3};
    double nb_alpha = 1.0;
    size_t lr_epochs = 200;
    double lr_rate = 0.5;
    double lr_l2 = 1e-4;
    bool emit_trace = false;

    std::string out_dir = "out";

    // `key = value` lines, '#' comments. Unknown keys are validation errors.
    static PipelineConfig from_file(const std::string& path);
    void set(const std::string& key, const std::string& value);

    // Canonical sorted key=value rendering; hashed into the manifest.
    std::string canonical_text() const;

    // Checks values and that every referenced file exists. `need` lists the
    // resource fields the invoking command actually uses.
    void validate(const std::vector<std::string>& need) const;
};

struct StageTiming {
    std::string name;
    int64_t millis = 0;
};

struct Manifest {
    std::string config_hash;
    uint64_t seed = 0;
    std::string status = "ok";
    std::string failed_stage;
    std::vector<StageTiming> stages;
    // artifact name -> {path, fnv1a64}
    std::vector<std::pair<std::string, std::pair<std::string, std::string>>> artifacts;
    nlohmann::ordered_json config;

    nlohmann::ordered_json to_json() const;
    void write(const std::string& path) const;
};

// Stage functions. Each one reads and writes files so that chained CLI calls
// and a single `pipeline` run produce byte-identical artifacts.

struct CleanResult {
    LoadReport load;
    size_t dropped_after_clean = 0;
};
CleanResult stage_clean(const PipelineConfig& cfg, const std::string& out_csv);

struct TagTimings {
    int64_t tag_millis = 0;
    int64_t rescue_millis = 0;
};
void stage_tag(const PipelineConfig& cfg, const std::string& cleaned_csv,
               const std::string& out_jsonl, const std::string& trace_path = "",
               TagTimings* timings = nullptr);

void stage_transform(const PipelineConfig& cfg, const std::string& tagged_jsonl,
                     const std::string& cleaned_csv, const std::string& out_csv);

// One features/vocab TSV pair per scheme; returns the artifact paths.
std::vector<std::string> stage_featurize(const PipelineConfig& cfg,
                                         const std::string& transformed_csv,
                                         const std::string& out_dir);

struct TrainEvalTimings {
    int64_t split_millis = 0;
    int64_t train_millis = 0;
    int64_t evaluate_millis = 0;
};
void stage_train_eval(const PipelineConfig& cfg, const std::string& transformed_csv,
                      const std::string& report_json, const std::string& report_txt,
                      TrainEvalTimings* timings = nullptr);

BuildReport cmd_build_kb(const KbSources& sources, const std::string& en_dict_path,
                         const std::string& hi_dict_path, const std::string& out_kb,
                         const std::string& report_json = "");

// clean -> tag -> rescue -> transform -> featurize -> split -> train ->
// evaluate, writing every artifact plus manifest.json under cfg.out_dir.
// On stage failure the manifest records the failed stage and the exception
// is rethrown.
Manifest run_pipeline(const PipelineConfig& cfg);

// Tagged-token JSONL wire format: {id, tokens:[{surface, corrected, tag,
// devanagari?}]}.
nlohmann::ordered_json tokens_to_json(const std::string& id,
                                      const std::vector<TaggedToken>& tokens);
std::vector<TaggedToken> tokens_from_json(const nlohmann::json& line);

}  // namespace hinglish
