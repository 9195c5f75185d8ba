#include "hinglish/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hinglish/distance.hpp"
#include "hinglish/errors.hpp"
#include "hinglish/hash.hpp"
#include "hinglish/unicode.hpp"

namespace fs = std::filesystem;

namespace hinglish {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

// Intermediate artifacts are always id,text[,label] CSVs.
std::vector<Post> read_intermediate(const std::string& path) {
    std::ifstream probe(path, std::ios::binary);
    if (!probe) throw IoError("cannot open file: " + path);
    std::string header;
    std::getline(probe, header);
    probe.close();

    CorpusSchema schema;
    schema.text_column = "text";
    schema.id_column = "id";
    if (header.find("label") != std::string::npos) schema.label_column = "label";
    return load_posts(path, schema);
}

struct Resources {
    KnowledgeBase kb;
    Dictionary en_dict;
    Dictionary hi_dict;
    FrequencyModel freq_en;
    FrequencyModel freq_hi;

    LangidResources view() const {
        return LangidResources{&kb, &en_dict, &hi_dict, &freq_en, &freq_hi};
    }
};

Resources load_resources(const PipelineConfig& cfg) {
    Resources r;
    r.kb = KnowledgeBase::load(cfg.kb);
    r.en_dict = Dictionary::load(cfg.en_dict, Lang::English);
    r.hi_dict = Dictionary::load(cfg.hi_dict, Lang::DevanagariHindi);
    r.freq_en = FrequencyModel::load(cfg.freq_en, Lang::English);
    r.freq_hi = FrequencyModel::load(cfg.freq_hi, Lang::English);  // Roman-side lookups
    return r;
}

KnowledgeBase load_profanity(const PipelineConfig& cfg) {
    if (cfg.profanity.empty()) return KnowledgeBase();
    return KnowledgeBase::load(cfg.profanity);
}

CharRuleTable load_rules(const PipelineConfig& cfg) {
    if (cfg.rules.empty()) return CharRuleTable::default_table();
    return CharRuleTable::load(cfg.rules);
}

std::string json_number(double v) {
    nlohmann::ordered_json j = v;
    return j.dump();
}

}  // namespace

PipelineConfig PipelineConfig::from_file(const std::string& path) {
    PipelineConfig cfg;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        // trim
        size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);
        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError(path, line_no, "expected key = value");
        }
        auto trim = [](std::string s) {
            size_t b2 = s.find_first_not_of(" \t");
            if (b2 == std::string::npos) return std::string();
            size_t e2 = s.find_last_not_of(" \t");
            return s.substr(b2, e2 - b2 + 1);
        };
        try {
            cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const ValidationError& err) {
            throw ParseError(path, line_no, err.what());
        }
    }
    return cfg;
}

void PipelineConfig::set(const std::string& key, const std::string& value) {
    auto parse_double = [&](const char* name) {
        try {
            return std::stod(value);
        } catch (const std::exception&) {
            throw ValidationError(std::string(name) + " is not a number: '" + value + "'");
        }
    };
    auto parse_uint = [&](const char* name) -> uint64_t {
        try {
            return std::stoull(value);
        } catch (const std::exception&) {
            throw ValidationError(std::string(name) + " is not an integer: '" + value + "'");
        }
    };
    auto parse_list = [&] {
        std::vector<std::string> items;
        std::string cur;
        for (char c : value) {
            if (c == ',') {
                if (!cur.empty()) items.push_back(cur);
                cur.clear();
            } else if (c != ' ') {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) items.push_back(cur);
        return items;
    };

    if (key == "corpus") corpus = value;
    else if (key == "kb") kb = value;
    else if (key == "en_dict") en_dict = value;
    else if (key == "hi_dict") hi_dict = value;
    else if (key == "freq_en") freq_en = value;
    else if (key == "freq_hi") freq_hi = value;
    else if (key == "profanity") profanity = value;
    else if (key == "rules") rules = value;
    else if (key == "out") out_dir = value;
    else if (key == "text_column") text_column = value;
    else if (key == "label_column") label_column = value;
    else if (key == "id_column") id_column = value;
    else if (key == "delimiter") {
        if (value == "tab" || value == "\\t") delimiter = '\t';
        else if (value.size() == 1) delimiter = value[0];
        else throw ValidationError("delimiter must be one character or 'tab'");
    } else if (key == "threshold") threshold = parse_double("threshold");
    else if (key == "variant") variant = variant_from_string(value);
    else if (key == "schemes" || key == "scheme") {
        schemes.clear();
        for (const std::string& s : parse_list()) schemes.push_back(scheme_from_string(s));
        if (schemes.empty()) throw ValidationError("scheme list is empty");
    } else if (key == "classifiers" || key == "classifier") {
        classifiers = parse_list();
        if (classifiers.empty()) throw ValidationError("classifier list is empty");
    } else if (key == "seed") seed = parse_uint("seed");
    else if (key == "test_fraction") test_fraction = parse_double("test_fraction");
    else if (key == "min_df") min_df = parse_uint("min_df");
    else if (key == "word_ngram_lo") word_ngrams.lo = static_cast<int>(parse_uint(key.c_str()));
    else if (key == "word_ngram_hi") word_ngrams.hi = static_cast<int>(parse_uint(key.c_str()));
    else if (key == "char_ngram_lo") char_ngrams.lo = static_cast<int>(parse_uint(key.c_str()));
    else if (key == "char_ngram_hi") char_ngrams.hi = static_cast<int>(parse_uint(key.c_str()));
    else if (key == "nb_alpha") nb_alpha = parse_double("nb_alpha");
    else if (key == "lr_epochs") lr_epochs = parse_uint("lr_epochs");
    else if (key == "lr_rate") lr_rate = parse_double("lr_rate");
    else if (key == "lr_l2") lr_l2 = parse_double("lr_l2");
    else if (key == "trace") emit_trace = (value == "true" || value == "1");
    else throw ValidationError("unknown config key: '" + key + "'");
}

std::string PipelineConfig::canonical_text() const {
    std::ostringstream out;
    out << "char_ngram_hi=" << char_ngrams.hi << '\n'
        << "char_ngram_lo=" << char_ngrams.lo << '\n';
    std::string cls;
    for (size_t i = 0; i < classifiers.size(); ++i) {
        if (i) cls += ',';
        cls += classifiers[i];
    }
    out << "classifiers=" << cls << '\n'
        << "corpus=" << corpus << '\n'
        << "delimiter=" << delimiter << '\n'
        << "en_dict=" << en_dict << '\n'
        << "freq_en=" << freq_en << '\n'
        << "freq_hi=" << freq_hi << '\n'
        << "hi_dict=" << hi_dict << '\n'
        << "id_column=" << id_column << '\n'
        << "kb=" << kb << '\n'
        << "label_column=" << label_column << '\n'
        << "lr_epochs=" << lr_epochs << '\n'
        << "lr_l2=" << json_number(lr_l2) << '\n'
        << "lr_rate=" << json_number(lr_rate) << '\n'
        << "min_df=" << min_df << '\n'
        << "nb_alpha=" << json_number(nb_alpha) << '\n'
        << "out=" << out_dir << '\n'
        << "profanity=" << profanity << '\n'
        << "rules=" << rules << '\n';
    std::string sch;
    for (size_t i = 0; i < schemes.size(); ++i) {
        if (i) sch += ',';
        sch += to_string(schemes[i]);
    }
    out << "schemes=" << sch << '\n'
        << "seed=" << seed << '\n'
        << "test_fraction=" << json_number(test_fraction) << '\n'
        << "text_column=" << text_column << '\n'
        << "threshold=" << json_number(threshold) << '\n'
        << "trace=" << (emit_trace ? "true" : "false") << '\n'
        << "variant=" << to_string(variant) << '\n'
        << "word_ngram_hi=" << word_ngrams.hi << '\n'
        << "word_ngram_lo=" << word_ngrams.lo << '\n';
    return out.str();
}

void PipelineConfig::validate(const std::vector<std::string>& need) const {
    if (!(threshold > 0.0 && threshold < 1.0)) {
        throw ValidationError("threshold must be in (0,1), got " + json_number(threshold));
    }
    if (test_fraction < 0.0 || test_fraction > 1.0) {
        throw ValidationError("test_fraction must be in [0,1]");
    }
    if (word_ngrams.lo <= 0 || word_ngrams.hi < word_ngrams.lo) {
        throw ValidationError("word n-gram range is invalid");
    }
    if (char_ngrams.lo <= 0 || char_ngrams.hi < char_ngrams.lo) {
        throw ValidationError("char n-gram range is invalid");
    }
    if (nb_alpha <= 0.0) throw ValidationError("nb_alpha must be positive");
    if (lr_rate <= 0.0) throw ValidationError("lr_rate must be positive");
    if (lr_l2 < 0.0) throw ValidationError("lr_l2 must be nonnegative");
    for (const std::string& c : classifiers) {
        if (c != "nb" && c != "logreg") {
            throw ValidationError("unknown classifier: '" + c + "' (expected nb|logreg)");
        }
    }
    for (const std::string& field : need) {
        const std::string* path = nullptr;
        if (field == "corpus") path = &corpus;
        else if (field == "kb") path = &kb;
        else if (field == "en_dict") path = &en_dict;
        else if (field == "hi_dict") path = &hi_dict;
        else if (field == "freq_en") path = &freq_en;
        else if (field == "freq_hi") path = &freq_hi;
        else if (field == "profanity") path = &profanity;
        else if (field == "rules") path = &rules;
        if (!path) continue;
        if (path->empty()) throw ValidationError("required path not set: " + field);
        if (!fs::exists(*path)) {
            throw ValidationError(field + " file does not exist: " + *path);
        }
    }
}

nlohmann::ordered_json Manifest::to_json() const {
    nlohmann::ordered_json j;
    j["version"] = std::string(kVersion);
    j["config_hash"] = config_hash;
    j["seed"] = seed;
    j["status"] = status;
    if (!failed_stage.empty()) j["failed_stage"] = failed_stage;
    nlohmann::ordered_json stage_list = nlohmann::ordered_json::array();
    for (const StageTiming& s : stages) {
        stage_list.push_back({{"name", s.name}, {"millis", s.millis}});
    }
    j["stages"] = stage_list;
    nlohmann::ordered_json arts;
    for (const auto& [name, pair] : artifacts) {
        arts[name] = {{"path", pair.first}, {"fnv1a64", pair.second}};
    }
    j["artifacts"] = arts;
    j["config"] = config;
    return j;
}

void Manifest::write(const std::string& path) const {
    write_file(path, to_json().dump(2) + "\n");
}

nlohmann::ordered_json tokens_to_json(const std::string& id,
                                      const std::vector<TaggedToken>& tokens) {
    nlohmann::ordered_json j;
    j["id"] = id;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TaggedToken& t : tokens) {
        nlohmann::ordered_json tok;
        tok["surface"] = t.surface;
        tok["corrected"] = t.corrected;
        tok["tag"] = std::string(to_string(t.tag));
        if (t.devanagari) tok["devanagari"] = *t.devanagari;
        arr.push_back(std::move(tok));
    }
    j["tokens"] = std::move(arr);
    return j;
}

std::vector<TaggedToken> tokens_from_json(const nlohmann::json& line) {
    std::vector<TaggedToken> out;
    for (const auto& tok : line.at("tokens")) {
        TaggedToken t;
        t.surface = tok.at("surface").get<std::string>();
        t.corrected = tok.at("corrected").get<std::string>();
        t.tag = tag_from_string(tok.at("tag").get<std::string>());
        if (tok.contains("devanagari")) t.devanagari = tok.at("devanagari").get<std::string>();
        out.push_back(std::move(t));
    }
    return out;
}

CleanResult stage_clean(const PipelineConfig& cfg, const std::string& out_csv) {
    CorpusSchema schema;
    schema.text_column = cfg.text_column;
    schema.delimiter = cfg.delimiter;
    if (!cfg.label_column.empty()) schema.label_column = cfg.label_column;
    if (!cfg.id_column.empty()) schema.id_column = cfg.id_column;

    CleanResult result;
    std::vector<Post> posts = load_posts(cfg.corpus, schema, &result.load);
    std::vector<Post> cleaned = clean_posts(posts, &result.dropped_after_clean);
    write_posts_csv(out_csv, cleaned);
    return result;
}

void stage_tag(const PipelineConfig& cfg, const std::string& cleaned_csv,
               const std::string& out_jsonl, const std::string& trace_path,
               TagTimings* timings) {
    Resources res = load_resources(cfg);
    RescueConfig rescue_cfg{cfg.threshold};
    rescue_cfg.validate();

    std::vector<Post> posts = read_intermediate(cleaned_csv);

    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::vector<TaggedToken>> tagged;
    tagged.reserve(posts.size());
    for (const Post& p : posts) tagged.push_back(tag_post(p, res.view()));
    auto t1 = std::chrono::steady_clock::now();

    std::ostringstream out;
    std::ostringstream trace;
    for (size_t i = 0; i < posts.size(); ++i) {
        std::vector<TaggedToken> rescued;
        rescued.reserve(tagged[i].size());
        for (const TaggedToken& t : tagged[i]) {
            TaggedToken r = rescue_token(t, res.kb, rescue_cfg);
            if (!trace_path.empty() && t.tag == LanguageTag::Oov) {
                nlohmann::ordered_json tj;
                tj["surface"] = t.surface;
                if (r.tag == LanguageTag::RomHindi) {
                    tj["matched_key"] = r.corrected;
                    tj["similarity"] = lev_similarity(t.corrected, r.corrected);
                } else {
                    tj["matched_key"] = nullptr;
                    tj["similarity"] = nullptr;
                }
                tj["tag"] = std::string(to_string(r.tag));
                trace << tj.dump() << '\n';
            }
            rescued.push_back(std::move(r));
        }
        out << tokens_to_json(posts[i].id, rescued).dump() << '\n';
    }
    auto t2 = std::chrono::steady_clock::now();
    if (timings) {
        timings->tag_millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        timings->rescue_millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(t2 - t1).count();
    }
    write_file(out_jsonl, out.str());
    if (!trace_path.empty()) write_file(trace_path, trace.str());
}

void stage_transform(const PipelineConfig& cfg, const std::string& tagged_jsonl,
                     const std::string& cleaned_csv, const std::string& out_csv) {
    KnowledgeBase profanity = load_profanity(cfg);
    CharRuleTable rules = load_rules(cfg);
    std::vector<Post> posts = read_intermediate(cleaned_csv);

    std::string content = read_file(tagged_jsonl);
    std::istringstream lines(content);
    std::string line;
    std::vector<Post> transformed;
    size_t i = 0;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        if (i >= posts.size()) {
            throw ValidationError("tagged file has more rows than the corpus: " + tagged_jsonl);
        }
        std::string id = j.at("id").get<std::string>();
        if (id != posts[i].id) {
            throw ValidationError("tagged row id '" + id + "' does not match corpus id '" +
                                  posts[i].id + "'");
        }
        std::vector<TaggedToken> tokens = tokens_from_json(j);
        Post p;
        p.id = id;
        p.text = simulate(cfg.variant, tokens, profanity, rules);
        p.label = posts[i].label;
        transformed.push_back(std::move(p));
        ++i;
    }
    if (i != posts.size()) {
        throw ValidationError("tagged file has fewer rows than the corpus: " + tagged_jsonl);
    }
    write_posts_csv(out_csv, transformed);
}

std::vector<std::string> stage_featurize(const PipelineConfig& cfg,
                                         const std::string& transformed_csv,
                                         const std::string& out_dir) {
    std::vector<Post> posts = read_intermediate(transformed_csv);
    std::vector<std::string> texts;
    texts.reserve(posts.size());
    for (const Post& p : posts) texts.push_back(p.text);

    std::vector<std::string> written;
    for (FeatureScheme scheme : cfg.schemes) {
        NgramRange range =
            scheme == FeatureScheme::TfidfCharNgram ? cfg.char_ngrams : cfg.word_ngrams;
        Vocabulary vocab = fit_vocabulary(texts, scheme, range, cfg.min_df);
        FeatureMatrix m = transform(texts, vocab, scheme, range);
        std::string base = out_dir + "/features_" + std::string(to_string(scheme));
        write_matrix_tsv(base + ".tsv", m);
        write_vocab_tsv(out_dir + "/vocab_" + std::string(to_string(scheme)) + ".tsv", vocab);
        written.push_back(base + ".tsv");
        written.push_back(out_dir + "/vocab_" + std::string(to_string(scheme)) + ".tsv");
    }
    return written;
}

namespace {

int64_t millis_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

nlohmann::ordered_json eval_grid(const PipelineConfig& cfg,
                                 const std::vector<std::string>& texts,
                                 const std::vector<std::string>& labels,
                                 std::string* table_out, TrainEvalTimings* timings) {
    auto split_start = std::chrono::steady_clock::now();
    Split split = make_split(labels, cfg.seed, cfg.test_fraction, true);
    std::vector<std::string> y_train, y_test;
    for (size_t i : split.train) y_train.push_back(labels[i]);
    for (size_t i : split.test) y_test.push_back(labels[i]);
    if (timings) timings->split_millis = millis_since(split_start);

    nlohmann::ordered_json results;
    std::ostringstream table;
    for (const std::string& clf : cfg.classifiers) {
        for (FeatureScheme scheme : cfg.schemes) {
            NgramRange range =
                scheme == FeatureScheme::TfidfCharNgram ? cfg.char_ngrams : cfg.word_ngrams;
            Vocabulary vocab = fit_vocabulary(texts, scheme, range, cfg.min_df);
            FeatureMatrix all = transform(texts, vocab, scheme, range);
            FeatureMatrix x_train = select_rows(all, split.train);
            FeatureMatrix x_test = select_rows(all, split.test);

            auto train_start = std::chrono::steady_clock::now();
            EvalReport report;
            if (clf == "nb") {
                NaiveBayes model = NaiveBayes::train(x_train, y_train, cfg.nb_alpha);
                if (timings) timings->train_millis += millis_since(train_start);
                auto eval_start = std::chrono::steady_clock::now();
                report = evaluate(model, x_test, y_test);
                if (timings) timings->evaluate_millis += millis_since(eval_start);
            } else {
                LogRegOptions opts;
                opts.l2 = cfg.lr_l2;
                opts.epochs = cfg.lr_epochs;
                opts.lr = cfg.lr_rate;
                opts.seed = cfg.seed;
                LogisticRegression model = LogisticRegression::train(x_train, y_train, opts);
                if (timings) timings->train_millis += millis_since(train_start);
                auto eval_start = std::chrono::steady_clock::now();
                report = evaluate(model, x_test, y_test);
                if (timings) timings->evaluate_millis += millis_since(eval_start);
            }
            std::string key = clf + "/" + std::string(to_string(scheme));
            results[key] = report.to_json();
            table << "== " << key << " ==\n" << report.to_table() << '\n';
        }
    }
    if (table_out) *table_out = table.str();
    return results;
}

}  // namespace

void stage_train_eval(const PipelineConfig& cfg, const std::string& transformed_csv,
                      const std::string& report_json, const std::string& report_txt,
                      TrainEvalTimings* timings) {
    std::vector<Post> posts = read_intermediate(transformed_csv);
    std::vector<std::string> texts;
    std::vector<std::string> labels;
    for (const Post& p : posts) {
        if (!p.label) {
            throw ValidationError("post '" + p.id + "' has no label; train-eval needs labels");
        }
        texts.push_back(p.text);
        labels.push_back(*p.label);
    }
    if (texts.empty()) throw ValidationError("no labeled posts to train on");

    std::string table;
    nlohmann::ordered_json results = eval_grid(cfg, texts, labels, &table, timings);
    write_file(report_json, results.dump(2) + "\n");
    write_file(report_txt, table);
}

BuildReport cmd_build_kb(const KbSources& sources, const std::string& en_dict_path,
                         const std::string& hi_dict_path, const std::string& out_kb,
                         const std::string& report_json) {
    Dictionary en_dict = Dictionary::load(en_dict_path, Lang::English);
    Dictionary hi_dict = Dictionary::load(hi_dict_path, Lang::DevanagariHindi);
    BuildReport report;
    KnowledgeBase kb = KnowledgeBase::build(sources, en_dict, hi_dict, &report);
    kb.save(out_kb);
    if (!report_json.empty()) {
        nlohmann::ordered_json j;
        j["loaded"] = report.loaded;
        j["from_sentences"] = report.from_sentences;
        j["skipped_unaligned"] = report.skipped_unaligned;
        j["malformed"] = report.malformed;
        j["conflicts"] = report.conflicts;
        j["pruned"] = report.pruned;
        j["final"] = report.final_entries;
        write_file(report_json, j.dump(2) + "\n");
    }
    return report;
}

Manifest run_pipeline(const PipelineConfig& cfg) {
    cfg.validate({"corpus", "kb", "en_dict", "hi_dict", "freq_en", "freq_hi"});

    fs::create_directories(cfg.out_dir);
    Manifest manifest;
    manifest.config_hash = fnv1a64_hex(cfg.canonical_text());
    manifest.seed = cfg.seed;
    {
        std::istringstream lines(cfg.canonical_text());
        std::string line;
        while (std::getline(lines, line)) {
            size_t eq = line.find('=');
            manifest.config[line.substr(0, eq)] = line.substr(eq + 1);
        }
    }

    const std::string cleaned_csv = cfg.out_dir + "/cleaned.csv";
    const std::string tagged_jsonl = cfg.out_dir + "/tagged.jsonl";
    const std::string trace_jsonl = cfg.emit_trace ? cfg.out_dir + "/rescue_trace.jsonl" : "";
    const std::string transformed_csv = cfg.out_dir + "/transformed.csv";
    const std::string report_json = cfg.out_dir + "/eval_report.json";
    const std::string report_txt = cfg.out_dir + "/eval_report.txt";

    auto add_artifact = [&](const std::string& name, const std::string& path) {
        manifest.artifacts.emplace_back(name,
                                        std::make_pair(path, fnv1a64_hex(read_file(path))));
    };
    auto timed = [&](const std::string& name, auto&& fn) {
        auto start = std::chrono::steady_clock::now();
        fn();
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        manifest.stages.push_back(StageTiming{name, elapsed});
    };

    std::string current_stage = "clean";
    try {
        timed("clean", [&] { stage_clean(cfg, cleaned_csv); });
        add_artifact("cleaned.csv", cleaned_csv);

        current_stage = "tag";
        TagTimings tag_timings;
        stage_tag(cfg, cleaned_csv, tagged_jsonl, trace_jsonl, &tag_timings);
        manifest.stages.push_back(StageTiming{"tag", tag_timings.tag_millis});
        manifest.stages.push_back(StageTiming{"rescue", tag_timings.rescue_millis});
        add_artifact("tagged.jsonl", tagged_jsonl);
        if (!trace_jsonl.empty()) add_artifact("rescue_trace.jsonl", trace_jsonl);

        current_stage = "transform";
        timed("transform", [&] {
            stage_transform(cfg, tagged_jsonl, cleaned_csv, transformed_csv);
        });
        add_artifact("transformed.csv", transformed_csv);

        current_stage = "featurize";
        std::vector<std::string> feature_files;
        timed("featurize", [&] {
            feature_files = stage_featurize(cfg, transformed_csv, cfg.out_dir);
        });
        for (const std::string& f : feature_files) {
            add_artifact(fs::path(f).filename().string(), f);
        }

        current_stage = "train-eval";
        TrainEvalTimings te_timings;
        stage_train_eval(cfg, transformed_csv, report_json, report_txt, &te_timings);
        manifest.stages.push_back(StageTiming{"split", te_timings.split_millis});
        manifest.stages.push_back(StageTiming{"train", te_timings.train_millis});
        manifest.stages.push_back(StageTiming{"evaluate", te_timings.evaluate_millis});
        add_artifact("eval_report.json", report_json);
        add_artifact("eval_report.txt", report_txt);
    } catch (const std::exception&) {
        manifest.status = "failed";
        manifest.failed_stage = current_stage;
        manifest.write(cfg.out_dir + "/manifest.json");
        throw;
    }

    manifest.write(cfg.out_dir + "/manifest.json");
    return manifest;
}

}  // namespace hinglish
