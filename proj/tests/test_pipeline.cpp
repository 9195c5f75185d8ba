#include "doctest.h"

#include <cstdlib>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hinglish/errors.hpp"
#include "hinglish/pipeline.hpp"
#include "hinglish/unicode.hpp"
#include "support.hpp"

using namespace hinglish;
using test_support::TempDir;
using test_support::read_file;

namespace {

PipelineConfig fixture_config(const std::string& out_dir) {
    PipelineConfig cfg;
    cfg.corpus = test_support::data_path("corpus_small.csv");
    cfg.kb = test_support::data_path("kb.tsv");
    cfg.en_dict = test_support::data_path("en_words.txt");
    cfg.hi_dict = test_support::data_path("hi_words.txt");
    cfg.freq_en = test_support::data_path("freq_en.tsv");
    cfg.freq_hi = test_support::data_path("freq_hi.tsv");
    cfg.profanity = test_support::data_path("profanity.tsv");
    cfg.seed = 11;
    cfg.test_fraction = 0.3;
    cfg.out_dir = out_dir;
    return cfg;
}

#ifdef HINGLISH_CLI_PATH
int run_cli(const std::string& args) {
    std::string cmd = std::string(HINGLISH_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return rc < 0 ? rc : WEXITSTATUS(rc);
}
#endif

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("config file parsing, overrides and validation") {
    TempDir tmp;
    test_support::write_file(tmp.file("run.conf"),
                             "# fixture config\n"
                             "threshold = 0.8\n"
                             "variant = indic-p\n"
                             "schemes = count, tfidf_word\n"
                             "seed = 99\n");
    PipelineConfig cfg = PipelineConfig::from_file(tmp.file("run.conf"));
    CHECK(cfg.threshold == 0.8);
    CHECK(cfg.variant == TransformVariant::IndicP);
    CHECK(cfg.schemes.size() == 2);
    CHECK(cfg.seed == 99);

    cfg.set("threshold", "0.6");  // flag override wins
    CHECK(cfg.threshold == 0.6);

    CHECK_THROWS_AS(cfg.set("bogus_key", "1"), ValidationError);
    test_support::write_file(tmp.file("bad.conf"), "no equals sign here\n");
    CHECK_THROWS_AS(PipelineConfig::from_file(tmp.file("bad.conf")), ParseError);
}

TEST_CASE("invalid threshold fails validation before any file is touched") {
    PipelineConfig cfg = fixture_config("/nonexistent/should/not/matter");
    cfg.threshold = 1.5;
    CHECK_THROWS_AS(cfg.validate({}), ValidationError);
    cfg.threshold = 0.7;
    cfg.kb = "/nonexistent/kb.tsv";
    CHECK_THROWS_AS(cfg.validate({"kb"}), ValidationError);
}

TEST_CASE("pipeline writes every artifact and an 8-stage manifest") {
    TempDir tmp;
    PipelineConfig cfg = fixture_config(tmp.dir());
    Manifest manifest = run_pipeline(cfg);

    REQUIRE(manifest.stages.size() == 8);
    const char* expected[] = {"clean", "tag",   "rescue", "transform",
                              "featurize", "split", "train",  "evaluate"};
    for (size_t i = 0; i < 8; ++i) CHECK(manifest.stages[i].name == expected[i]);

    for (const char* f : {"cleaned.csv", "tagged.jsonl", "transformed.csv",
                          "features_count.tsv", "vocab_count.tsv", "eval_report.json",
                          "eval_report.txt", "manifest.json"}) {
        CHECK(std::filesystem::exists(tmp.file(f)));
    }

    // every artifact is listed with a content hash
    auto j = nlohmann::json::parse(read_file(tmp.file("manifest.json")));
    CHECK(j["status"] == "ok");
    for (const char* f : {"cleaned.csv", "tagged.jsonl", "transformed.csv",
                          "eval_report.json"}) {
        CHECK(j["artifacts"].contains(f));
        CHECK(j["artifacts"][f]["fnv1a64"].get<std::string>().size() == 16);
    }
}

TEST_CASE("reruns with the same config are byte-identical") {
    TempDir a, b;
    PipelineConfig ca = fixture_config(a.dir());
    PipelineConfig cb = fixture_config(b.dir());
    cb.out_dir = b.dir();
    Manifest ma = run_pipeline(ca);
    Manifest mb = run_pipeline(cb);

    CHECK(read_file(a.file("eval_report.json")) == read_file(b.file("eval_report.json")));
    CHECK(read_file(a.file("tagged.jsonl")) == read_file(b.file("tagged.jsonl")));
    CHECK(read_file(a.file("transformed.csv")) == read_file(b.file("transformed.csv")));
    // artifact hashes agree even though the manifests carry timings
    REQUIRE(ma.artifacts.size() == mb.artifacts.size());
    for (size_t i = 0; i < ma.artifacts.size(); ++i) {
        CHECK(ma.artifacts[i].first == mb.artifacts[i].first);
        CHECK(ma.artifacts[i].second.second == mb.artifacts[i].second.second);
    }
}

TEST_CASE("chained stages equal the single pipeline run byte for byte") {
    TempDir whole, staged;
    PipelineConfig cfg = fixture_config(whole.dir());
    run_pipeline(cfg);

    PipelineConfig scfg = fixture_config(staged.dir());
    stage_clean(scfg, staged.file("cleaned.csv"));
    stage_tag(scfg, staged.file("cleaned.csv"), staged.file("tagged.jsonl"));
    stage_transform(scfg, staged.file("tagged.jsonl"), staged.file("cleaned.csv"),
                    staged.file("transformed.csv"));
    stage_featurize(scfg, staged.file("transformed.csv"), staged.dir());
    stage_train_eval(scfg, staged.file("transformed.csv"), staged.file("eval_report.json"),
                     staged.file("eval_report.txt"));

    for (const char* f : {"cleaned.csv", "tagged.jsonl", "transformed.csv",
                          "features_count.tsv", "vocab_count.tsv", "eval_report.json",
                          "eval_report.txt"}) {
        CHECK(read_file(whole.file(f)) == read_file(staged.file(f)));
    }
}

TEST_CASE("tagged jsonl uses the documented wire format") {
    TempDir tmp;
    PipelineConfig cfg = fixture_config(tmp.dir());
    run_pipeline(cfg);
    std::istringstream lines(read_file(tmp.file("tagged.jsonl")));
    std::string line;
    size_t rows = 0;
    std::set<std::string> seen_tags;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        ++rows;
        auto j = nlohmann::json::parse(line);
        REQUIRE(j.contains("id"));
        REQUIRE(j.contains("tokens"));
        for (const auto& tok : j["tokens"]) {
            CHECK(tok.contains("surface"));
            CHECK(tok.contains("corrected"));
            std::string tag = tok["tag"].get<std::string>();
            seen_tags.insert(tag);
            CHECK(tag != "OOV");  // rescue ran
            if (tag == "ROM_HINDI" || tag == "DEV_HINDI") CHECK(tok.contains("devanagari"));
        }
    }
    CHECK(rows == 10);
    CHECK(seen_tags.count("ROM_HINDI"));
    CHECK(seen_tags.count("ENGLISH"));
}

TEST_CASE("moh output tokens are devanagari, dictionary english, or NA passthrough") {
    TempDir tmp;
    PipelineConfig cfg = fixture_config(tmp.dir());
    run_pipeline(cfg);

    // NA surfaces straight from the tagged file
    std::set<std::string> na_surfaces;
    std::istringstream tagged(read_file(tmp.file("tagged.jsonl")));
    std::string line;
    while (std::getline(tagged, line)) {
        if (line.empty()) continue;
        for (const auto& tok : nlohmann::json::parse(line)["tokens"]) {
            if (tok["tag"] == "NA") na_surfaces.insert(tok["surface"].get<std::string>());
        }
    }

    Dictionary en = Dictionary::load(cfg.en_dict, Lang::English);
    CorpusSchema schema;
    schema.text_column = "text";
    schema.id_column = "id";
    schema.label_column = "label";
    for (const Post& p : load_posts(tmp.file("transformed.csv"), schema)) {
        for (const std::string& token : split_whitespace(p.text)) {
            bool devanagari_or_digits = !contains_ascii_letter(token);
            bool english = en.detect(token);
            bool na = na_surfaces.count(token) > 0;
            CHECK((devanagari_or_digits || english || na));
        }
    }
}

TEST_CASE("rescue trace jsonl carries surface, matched_key, similarity, tag") {
    TempDir tmp;
    PipelineConfig cfg = fixture_config(tmp.dir());
    cfg.emit_trace = true;
    run_pipeline(cfg);

    std::istringstream lines(read_file(tmp.file("rescue_trace.jsonl")));
    std::string line;
    size_t rescued = 0, na = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        REQUIRE(j.contains("surface"));
        REQUIRE(j.contains("matched_key"));
        REQUIRE(j.contains("similarity"));
        REQUIRE(j.contains("tag"));
        if (j["tag"] == "ROM_HINDI") {
            ++rescued;
            CHECK(j["similarity"].get<double>() > cfg.threshold);
            CHECK_FALSE(j["matched_key"].is_null());
        } else {
            ++na;
            CHECK(j["tag"] == "NA");
        }
    }
    // the fixture corpus contains rescuable variants (lye, namastey)
    CHECK(rescued >= 2);
}

TEST_CASE("failed stage is recorded in the manifest") {
    TempDir tmp;
    PipelineConfig cfg = fixture_config(tmp.dir());
    cfg.label_column = "nope";
    CHECK_THROWS(run_pipeline(cfg));
    auto j = nlohmann::json::parse(read_file(tmp.file("manifest.json")));
    CHECK(j["status"] == "failed");
    CHECK(j["failed_stage"] == "clean");
}

TEST_CASE("build-kb writes the kb and its report") {
    TempDir tmp;
    test_support::write_file(tmp.file("pairs.tsv"),
                             "namaste\tनमस्ते\nempowered\tसशक्त\n");
    KbSources sources{{tmp.file("pairs.tsv")}, {}, test_support::data_path("profanity.tsv")};
    BuildReport rep = cmd_build_kb(sources, test_support::data_path("en_words.txt"),
                                   test_support::data_path("hi_words.txt"),
                                   tmp.file("kb.tsv"), tmp.file("report.json"));
    CHECK(rep.pruned == 1);  // "empowered" pruned against the shipped dictionaries
    KnowledgeBase kb = KnowledgeBase::load(tmp.file("kb.tsv"));
    CHECK(kb.lookup("haramkor") == "हरामखोर");
    CHECK_FALSE(kb.lookup("empowered").has_value());
    auto j = nlohmann::json::parse(read_file(tmp.file("report.json")));
    CHECK(j["pruned"] == 1);
    CHECK(j["final"] == kb.size());

    // pruning soundness over the whole result
    Dictionary en = Dictionary::load(test_support::data_path("en_words.txt"), Lang::English);
    Dictionary hi = Dictionary::load(test_support::data_path("hi_words.txt"),
                                     Lang::DevanagariHindi);
    for (const auto& [key, value] : kb.entries()) {
        CHECK_FALSE((en.detect(key) && !hi.detect(value)));
    }
}

TEST_CASE("in-memory dictionaries enforce their script invariant") {
    CHECK_THROWS_AS(Dictionary(Lang::English, {"hello", "नमस्ते"}), ValidationError);
    CHECK_THROWS_AS(Dictionary(Lang::DevanagariHindi, {"hello"}), ValidationError);
}

#ifdef HINGLISH_CLI_PATH

TEST_CASE("cli: tag on an empty corpus exits 0 with empty jsonl") {
    TempDir tmp;
    test_support::write_file(tmp.file("empty.csv"), "");
    int rc = run_cli("tag --corpus " + tmp.file("empty.csv") +
                     " --kb " + test_support::data_path("kb.tsv") +
                     " --en-dict " + test_support::data_path("en_words.txt") +
                     " --hi-dict " + test_support::data_path("hi_words.txt") +
                     " --freq-en " + test_support::data_path("freq_en.tsv") +
                     " --freq-hi " + test_support::data_path("freq_hi.tsv") +
                     " --input " + tmp.file("empty.csv") +
                     " --out " + tmp.dir());
    CHECK(rc == 0);
    CHECK(read_file(tmp.file("tagged.jsonl")).empty());
}

TEST_CASE("cli: validation failures exit 1, missing files exit validation too") {
    TempDir tmp;
    int rc = run_cli("pipeline --corpus " + test_support::data_path("corpus_small.csv") +
                     " --kb " + test_support::data_path("kb.tsv") +
                     " --en-dict " + test_support::data_path("en_words.txt") +
                     " --hi-dict " + test_support::data_path("hi_words.txt") +
                     " --freq-en " + test_support::data_path("freq_en.tsv") +
                     " --freq-hi " + test_support::data_path("freq_hi.tsv") +
                     " --threshold 1.5 --out " + tmp.dir());
    CHECK(rc == 1);
    CHECK_FALSE(std::filesystem::exists(tmp.file("cleaned.csv")));  // no I/O happened

    int rc2 = run_cli("clean --corpus /nonexistent.csv --out " + tmp.dir());
    CHECK(rc2 == 1);
}

TEST_CASE("cli: full pipeline run exits 0 and simulate keeps english") {
    TempDir tmp;
    std::string common = " --kb " + test_support::data_path("kb.tsv") +
                         " --en-dict " + test_support::data_path("en_words.txt") +
                         " --hi-dict " + test_support::data_path("hi_words.txt") +
                         " --freq-en " + test_support::data_path("freq_en.tsv") +
                         " --freq-hi " + test_support::data_path("freq_hi.tsv") +
                         " --profanity " + test_support::data_path("profanity.tsv") +
                         " --seed 11 --test-fraction 0.3 --out " + tmp.dir();
    int rc = run_cli("pipeline --corpus " + test_support::data_path("corpus_small.csv") +
                     common);
    CHECK(rc == 0);

    int rc2 = run_cli("simulate --variant indic-skip-en-p" + common);
    CHECK(rc2 == 0);
    std::string transformed = read_file(tmp.file("transformed.csv"));
    CHECK(transformed.find("journalist") != std::string::npos);
    CHECK(transformed.find("हरामखोर") != std::string::npos);
}

#endif  // HINGLISH_CLI_PATH

}  // TEST_SUITE
