#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace hinglish {

// Levenshtein distance (unit-cost insert/delete/substitute) over Unicode
// codepoints, two-row dynamic programming.
size_t lev_distance(std::string_view s1, std::string_view s2);
size_t lev_distance(const std::vector<char32_t>& a, const std::vector<char32_t>& b);

// 1 - distance / max(codepoint length). Two empty strings are identical: 1.
double lev_similarity(std::string_view s1, std::string_view s2);
double lev_similarity(const std::vector<char32_t>& a, const std::vector<char32_t>& b);

}  // namespace hinglish
