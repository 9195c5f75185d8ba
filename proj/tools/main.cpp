#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hinglish/errors.hpp"
#include "hinglish/pipeline.hpp"

namespace fs = std::filesystem;
using namespace hinglish;

namespace {

struct Cli {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;

    PipelineConfig resolve() const {
        PipelineConfig cfg = config_path.empty() ? PipelineConfig{}
                                                 : PipelineConfig::from_file(config_path);
        for (const auto& [key, value] : overrides) cfg.set(key, value);
        return cfg;
    }
};

void add_common_options(CLI::App* sub, Cli& cli) {
    sub->add_option("--config", cli.config_path, "key = value config file; flags win");
    auto opt = [sub, &cli](const std::string& flag, const std::string& key,
                           const std::string& help) {
        sub->add_option_function<std::string>(
            flag, [&cli, key](const std::string& v) { cli.overrides.emplace_back(key, v); },
            help);
    };
    opt("--corpus", "corpus", "input corpus (CSV/TSV with header)");
    opt("--kb", "kb", "knowledge base TSV (roman<TAB>devanagari)");
    opt("--en-dict", "en_dict", "English wordlist, one word per line");
    opt("--hi-dict", "hi_dict", "Devanagari wordlist, one word per line");
    opt("--freq-en", "freq_en", "English frequency TSV (word<TAB>count)");
    opt("--freq-hi", "freq_hi", "Roman-Hindi frequency TSV (word<TAB>count)");
    opt("--profanity", "profanity", "profanity pair TSV");
    opt("--rules", "rules", "char transliteration rules TSV (default: built-in table)");
    opt("--threshold", "threshold", "rescue similarity threshold in (0,1), default 0.70");
    opt("--variant", "variant", "moh|indic|indic-p|indic-skip-en-p");
    opt("--scheme", "schemes", "feature scheme list: count,tfidf_word,tfidf_word_ngram,tfidf_char_ngram");
    opt("--classifier", "classifiers", "classifier list: nb,logreg");
    opt("--seed", "seed", "seed for split and run manifest");
    opt("--test-fraction", "test_fraction", "held-out fraction, default 0.2");
    opt("--out", "out", "output directory, default ./out");
    opt("--text-column", "text_column", "corpus text column, default 'text'");
    opt("--label-column", "label_column", "corpus label column, default 'label'");
    opt("--id-column", "id_column", "corpus id column (default: row numbers)");
    opt("--delimiter", "delimiter", "corpus delimiter, one char or 'tab'");
    opt("--min-df", "min_df", "min document frequency for vocabulary terms");
    opt("--nb-alpha", "nb_alpha", "Naive Bayes smoothing, default 1.0");
    opt("--lr-epochs", "lr_epochs", "logistic regression epochs");
    opt("--lr-rate", "lr_rate", "logistic regression learning rate");
    opt("--lr-l2", "lr_l2", "logistic regression L2 strength");
    sub->add_flag_callback(
        "--trace", [&cli] { cli.overrides.emplace_back("trace", "true"); },
        "emit rescue trace JSONL");
}

std::string in_or(const std::string& explicit_path, const PipelineConfig& cfg,
                  const char* name) {
    return explicit_path.empty() ? cfg.out_dir + "/" + name : explicit_path;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hindi-English code-switched text normalization pipeline"};
    app.require_subcommand(1);

    Cli cli;

    // build-kb has its own source flags on top of the shared set
    std::vector<std::string> kb_pairs, kb_sentences;
    std::string kb_report;
    CLI::App* build_kb = app.add_subcommand("build-kb", "build the transliteration knowledge base");
    add_common_options(build_kb, cli);
    build_kb->add_option("--pairs", kb_pairs, "word pair TSV file(s)");
    build_kb->add_option("--sentences", kb_sentences, "sentence pair TSV file(s)");
    build_kb->add_option("--report", kb_report, "where to write the build report JSON");

    std::string stage_input, stage_cleaned;
    CLI::App* clean = app.add_subcommand("clean", "load and clean the corpus");
    add_common_options(clean, cli);

    CLI::App* tag = app.add_subcommand("tag", "language-identify and rescue tokens");
    add_common_options(tag, cli);
    tag->add_option("--input", stage_input, "cleaned corpus (default <out>/cleaned.csv)");

    CLI::App* transform = app.add_subcommand("transform", "assemble output text (default variant: moh)");
    add_common_options(transform, cli);
    transform->add_option("--input", stage_input, "tagged JSONL (default <out>/tagged.jsonl)");
    transform->add_option("--cleaned", stage_cleaned, "cleaned corpus (default <out>/cleaned.csv)");

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "run a transliteration simulation variant");
    add_common_options(simulate_cmd, cli);
    simulate_cmd->add_option("--input", stage_input, "tagged JSONL (default <out>/tagged.jsonl)");
    simulate_cmd->add_option("--cleaned", stage_cleaned, "cleaned corpus (default <out>/cleaned.csv)");

    CLI::App* featurize = app.add_subcommand("featurize", "export feature matrices");
    add_common_options(featurize, cli);
    featurize->add_option("--input", stage_input, "transformed corpus (default <out>/transformed.csv)");

    CLI::App* train_eval = app.add_subcommand("train-eval", "train classifiers and evaluate");
    add_common_options(train_eval, cli);
    train_eval->add_option("--input", stage_input, "transformed corpus (default <out>/transformed.csv)");

    CLI::App* pipeline = app.add_subcommand("pipeline", "run every stage end to end");
    add_common_options(pipeline, cli);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        PipelineConfig cfg = cli.resolve();

        if (build_kb->parsed()) {
            cfg.validate({"en_dict", "hi_dict"});
            if (kb_pairs.empty() && kb_sentences.empty() && cfg.profanity.empty()) {
                throw ValidationError("build-kb needs at least one source (--pairs/--sentences/--profanity)");
            }
            fs::create_directories(cfg.out_dir);
            KbSources sources{kb_pairs, kb_sentences, cfg.profanity};
            BuildReport rep = cmd_build_kb(sources, cfg.en_dict, cfg.hi_dict,
                                           cfg.out_dir + "/kb.tsv", kb_report);
            std::cout << "kb written: " << cfg.out_dir + "/kb.tsv" << "\n"
                      << "loaded=" << rep.loaded << " from_sentences=" << rep.from_sentences
                      << " skipped_unaligned=" << rep.skipped_unaligned
                      << " malformed=" << rep.malformed << " conflicts=" << rep.conflicts
                      << " pruned=" << rep.pruned << " final=" << rep.final_entries << "\n";
        } else if (clean->parsed()) {
            cfg.validate({"corpus"});
            fs::create_directories(cfg.out_dir);
            CleanResult res = stage_clean(cfg, cfg.out_dir + "/cleaned.csv");
            std::cout << "rows=" << res.load.rows_read << " posts=" << res.load.posts
                      << " dropped_empty=" << res.load.dropped_empty
                      << " malformed=" << res.load.malformed
                      << " dropped_after_clean=" << res.dropped_after_clean << "\n";
            for (const std::string& w : res.load.warnings) std::cerr << w << "\n";
        } else if (tag->parsed()) {
            cfg.validate({"kb", "en_dict", "hi_dict", "freq_en", "freq_hi"});
            fs::create_directories(cfg.out_dir);
            std::string input = in_or(stage_input, cfg, "cleaned.csv");
            std::string trace = cfg.emit_trace ? cfg.out_dir + "/rescue_trace.jsonl" : "";
            stage_tag(cfg, input, cfg.out_dir + "/tagged.jsonl", trace);
            std::cout << "tagged: " << cfg.out_dir + "/tagged.jsonl" << "\n";
        } else if (transform->parsed() || simulate_cmd->parsed()) {
            cfg.validate({});
            fs::create_directories(cfg.out_dir);
            std::string input = in_or(stage_input, cfg, "tagged.jsonl");
            std::string cleaned = in_or(stage_cleaned, cfg, "cleaned.csv");
            stage_transform(cfg, input, cleaned, cfg.out_dir + "/transformed.csv");
            std::cout << "transformed (" << to_string(cfg.variant)
                      << "): " << cfg.out_dir + "/transformed.csv" << "\n";
        } else if (featurize->parsed()) {
            cfg.validate({});
            fs::create_directories(cfg.out_dir);
            std::string input = in_or(stage_input, cfg, "transformed.csv");
            for (const std::string& f : stage_featurize(cfg, input, cfg.out_dir)) {
                std::cout << "wrote: " << f << "\n";
            }
        } else if (train_eval->parsed()) {
            cfg.validate({});
            fs::create_directories(cfg.out_dir);
            std::string input = in_or(stage_input, cfg, "transformed.csv");
            stage_train_eval(cfg, input, cfg.out_dir + "/eval_report.json",
                             cfg.out_dir + "/eval_report.txt");
            std::cout << "report: " << cfg.out_dir + "/eval_report.json" << "\n";
        } else if (pipeline->parsed()) {
            Manifest manifest = run_pipeline(cfg);
            std::cout << "pipeline ok, manifest: " << cfg.out_dir + "/manifest.json" << "\n";
            for (const StageTiming& s : manifest.stages) {
                std::cout << "  " << s.name << ": " << s.millis << " ms\n";
            }
        }
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
