#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hinglish {

// One social-media post, the unit flowing through the pipeline.
struct Post {
    std::string id;
    std::string text;
    std::optional<std::string> label;
};

struct CorpusSchema {
    std::string text_column = "text";
    std::optional<std::string> label_column;
    std::optional<std::string> id_column;
    char delimiter = ',';
};

struct LoadReport {
    size_t rows_read = 0;       // data rows seen (header excluded)
    size_t posts = 0;           // posts produced
    size_t dropped_empty = 0;   // rows whose text cell was empty
    size_t malformed = 0;       // rows with the wrong field count
    std::vector<std::string> warnings;  // one entry per malformed row, with line number
};

// Loads a delimited corpus (CSV/TSV with header, RFC-4180 quoting). Rows with
// empty text are dropped and counted; malformed rows are skipped, counted and
// reported in the warnings. Text is NFC-normalized on load.
// Throws ValidationError when a schema column is missing from the header,
// IoError when the file cannot be read.
std::vector<Post> load_posts(const std::string& path, const CorpusSchema& schema,
                             LoadReport* report = nullptr);

// The cleaning steps, in order: lowercase (ASCII), drop URL tokens
// (http://, https://, www. prefixes) and @-mention tokens, strip every
// codepoint outside {ASCII letters, Devanagari block, ASCII digits,
// apostrophe, whitespace}, truncate runs of >2 identical codepoints to 2,
// collapse whitespace, trim. Total and idempotent; input is NFC-normalized
// first so Devanagari comparisons downstream are stable.
std::string clean_text(std::string_view raw);

// Applies clean_text to every post and drops posts that clean to empty text.
std::vector<Post> clean_posts(const std::vector<Post>& posts, size_t* dropped_empty = nullptr);

// Writes posts as CSV with header id,text,label (label column omitted when no
// post carries one). The reverse of load_posts with the matching schema.
void write_posts_csv(const std::string& path, const std::vector<Post>& posts);

}  // namespace hinglish
