#include "hinglish/corpus.hpp"

#include <fstream>
#include <sstream>

#include "hinglish/errors.hpp"
#include "hinglish/unicode.hpp"

namespace hinglish {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

bool is_url_token(std::string_view token) {
    return starts_with(token, "http://") || starts_with(token, "https://") ||
           starts_with(token, "www.");
}

bool is_mention_token(std::string_view token) {
    return !token.empty() && token.front() == '@';
}

bool is_kept_codepoint(char32_t c) {
    return (c >= 'a' && c <= 'z') || is_devanagari(c) || is_ascii_digit(c) || c == '\'';
}

// Parses RFC-4180-style delimited text: quoted fields may contain the
// delimiter, doubled quotes and newlines.
std::vector<std::vector<std::string>> parse_delimited(const std::string& content,
                                                      char delimiter,
                                                      std::vector<size_t>* line_numbers) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_started_quoted = false;
    size_t line = 1;
    size_t row_start_line = 1;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started_quoted = false;
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
        if (line_numbers) line_numbers->push_back(row_start_line);
        row_start_line = line;
    };

    for (size_t i = 0; i < content.size(); ++i) {
        char c = content[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < content.size() && content[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
        } else if (c == '"' && field.empty() && !field_started_quoted) {
            in_quotes = true;
            field_started_quoted = true;
        } else if (c == delimiter) {
            end_field();
        } else if (c == '\r') {
            // swallowed; \r\n and bare \n both end the row at the \n
        } else if (c == '\n') {
            ++line;
            end_row();
        } else {
            field.push_back(c);
        }
    }
    if (!field.empty() || !row.empty() || field_started_quoted) end_row();
    return rows;
}

std::string csv_escape(const std::string& field, char delimiter) {
    bool needs_quote = field.find(delimiter) != std::string::npos ||
                       field.find('"') != std::string::npos ||
                       field.find('\n') != std::string::npos ||
                       field.find('\r') != std::string::npos;
    if (!needs_quote) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::vector<Post> load_posts(const std::string& path, const CorpusSchema& schema,
                             LoadReport* report) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();

    std::vector<size_t> line_numbers;
    auto rows = parse_delimited(content, schema.delimiter, &line_numbers);
    if (rows.empty()) {
        // Zero-byte input is an empty corpus, not a schema violation.
        if (report) *report = LoadReport{};
        return {};
    }

    const auto& header = rows.front();
    auto column_of = [&](const std::string& name) -> std::optional<size_t> {
        for (size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) return i;
        }
        return std::nullopt;
    };

    auto text_col = column_of(schema.text_column);
    if (!text_col) {
        throw ValidationError("text column '" + schema.text_column + "' not found in header of " + path);
    }
    std::optional<size_t> label_col, id_col;
    if (schema.label_column) {
        label_col = column_of(*schema.label_column);
        if (!label_col) {
            throw ValidationError("label column '" + *schema.label_column + "' not found in header of " + path);
        }
    }
    if (schema.id_column) {
        id_col = column_of(*schema.id_column);
        if (!id_col) {
            throw ValidationError("id column '" + *schema.id_column + "' not found in header of " + path);
        }
    }

    LoadReport local;
    std::vector<Post> posts;
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() == 1 && row[0].empty()) continue;  // blank line
        ++local.rows_read;
        if (row.size() != header.size()) {
            ++local.malformed;
            local.warnings.push_back(path + ":" + std::to_string(line_numbers[r]) +
                                     ": expected " + std::to_string(header.size()) +
                                     " fields, got " + std::to_string(row.size()));
            continue;
        }
        if (row[*text_col].empty()) {
            ++local.dropped_empty;
            continue;
        }
        Post p;
        p.id = id_col ? row[*id_col] : std::to_string(local.rows_read);
        p.text = nfc(row[*text_col]);
        if (label_col) p.label = row[*label_col];
        posts.push_back(std::move(p));
    }
    local.posts = posts.size();
    if (report) *report = std::move(local);
    return posts;
}

std::string clean_text(std::string_view raw) {
    std::string lowered = to_lower_ascii(nfc(raw));

    std::vector<std::string> kept_tokens;
    for (const std::string& token : split_whitespace(lowered)) {
        if (is_url_token(token) || is_mention_token(token)) continue;

        std::vector<char32_t> cps = decode_utf8(token);
        std::vector<char32_t> filtered;
        filtered.reserve(cps.size());
        for (char32_t c : cps) {
            if (is_kept_codepoint(c)) filtered.push_back(c);
        }

        // Truncate runs of more than two identical codepoints.
        std::vector<char32_t> deduped;
        deduped.reserve(filtered.size());
        size_t run = 0;
        for (char32_t c : filtered) {
            if (!deduped.empty() && deduped.back() == c) {
                ++run;
            } else {
                run = 1;
            }
            if (run <= 2) deduped.push_back(c);
        }

        if (!deduped.empty()) kept_tokens.push_back(encode_utf8(deduped));
    }
    return join_tokens(kept_tokens);
}

std::vector<Post> clean_posts(const std::vector<Post>& posts, size_t* dropped_empty) {
    std::vector<Post> out;
    out.reserve(posts.size());
    size_t dropped = 0;
    for (const Post& p : posts) {
        std::string cleaned = clean_text(p.text);
        if (cleaned.empty()) {
            ++dropped;
            continue;
        }
        out.push_back(Post{p.id, std::move(cleaned), p.label});
    }
    if (dropped_empty) *dropped_empty = dropped;
    return out;
}

void write_posts_csv(const std::string& path, const std::vector<Post>& posts) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write corpus file: " + path);
    bool any_label = false;
    for (const Post& p : posts) {
        if (p.label) any_label = true;
    }
    out << (any_label ? "id,text,label\n" : "id,text\n");
    for (const Post& p : posts) {
        out << csv_escape(p.id, ',') << ',' << csv_escape(p.text, ',');
        if (any_label) out << ',' << csv_escape(p.label.value_or(""), ',');
        out << '\n';
    }
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace hinglish
