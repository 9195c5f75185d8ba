#include "hinglish/distance.hpp"

#include <algorithm>

#include "hinglish/unicode.hpp"

namespace hinglish {

size_t lev_distance(const std::vector<char32_t>& a, const std::vector<char32_t>& b) {
    const std::vector<char32_t>& shorter = a.size() <= b.size() ? a : b;
    const std::vector<char32_t>& longer = a.size() <= b.size() ? b : a;
    const size_t n = shorter.size();

    std::vector<size_t> prev(n + 1), cur(n + 1);
    for (size_t i = 0; i <= n; ++i) prev[i] = i;

    for (size_t j = 1; j <= longer.size(); ++j) {
        cur[0] = j;
        for (size_t i = 1; i <= n; ++i) {
            size_t sub = prev[i - 1] + (shorter[i - 1] == longer[j - 1] ? 0 : 1);
            cur[i] = std::min({prev[i] + 1, cur[i - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

size_t lev_distance(std::string_view s1, std::string_view s2) {
    return lev_distance(decode_utf8(s1), decode_utf8(s2));
}

double lev_similarity(const std::vector<char32_t>& a, const std::vector<char32_t>& b) {
    size_t max_len = std::max(a.size(), b.size());
    if (max_len == 0) return 1.0;
    return 1.0 - static_cast<double>(lev_distance(a, b)) / static_cast<double>(max_len);
}

double lev_similarity(std::string_view s1, std::string_view s2) {
    return lev_similarity(decode_utf8(s1), decode_utf8(s2));
}

}  // namespace hinglish
