#include "doctest.h"

#include "hinglish/rng.hpp"
#include "hinglish/unicode.hpp"

using namespace hinglish;

TEST_SUITE("unicode") {

TEST_CASE("utf8 round trip") {
    for (std::string s : {std::string("hello"), std::string("नमस्ते"),
                          std::string("mixed नमस्ते text 123"), std::string("")}) {
        bool ok = false;
        auto cps = decode_utf8(s, &ok);
        CHECK(ok);
        CHECK(encode_utf8(cps) == s);
    }
}

TEST_CASE("malformed utf8 decodes to replacements") {
    bool ok = true;
    auto cps = decode_utf8("a\xC3(", &ok);  // truncated 2-byte sequence
    CHECK_FALSE(ok);
    REQUIRE(cps.size() == 3);
    CHECK(cps[0] == U'a');
    CHECK(cps[1] == 0xFFFD);
    CHECK(cps[2] == U'(');

    // overlong encoding of '/'
    decode_utf8("\xC0\xAF", &ok);
    CHECK_FALSE(ok);
}

TEST_CASE("codepoint count") {
    CHECK(codepoint_count("") == 0);
    CHECK(codepoint_count("abc") == 3);
    CHECK(codepoint_count("नमस्ते") == 6);  // न म स ् त े
}

TEST_CASE("script predicates") {
    CHECK(contains_devanagari("abcनxyz"));
    CHECK_FALSE(contains_devanagari("abc xyz 123"));
    CHECK(contains_ascii_letter("123a"));
    CHECK_FALSE(contains_ascii_letter("123 ।"));
}

// Expected values frozen from Python unicodedata.normalize('NFC', ...).
TEST_CASE("nfc matches the reference on Devanagari") {
    // U+0958..095F are composition exclusions: they stay decomposed
    CHECK(nfc("क़") == "क़");           // qa -> ka + nukta
    CHECK(nfc("ज़") == "ज़");           // za -> ja + nukta
    CHECK(nfc("क़") == "क़");     // ka + nukta unchanged
    // U+0929/0931/0934 do recompose
    CHECK(nfc("ऩ") == "ऩ");           // na + nukta -> nnna
    CHECK(nfc("ऱ") == "ऱ");           // ra + nukta -> rra
    CHECK(nfc("ऴ") == "ऴ");           // lla + nukta -> llla
    CHECK(nfc("ऩ") == "ऩ");
    // canonical reordering: virama (ccc 9) after nukta (ccc 7)
    CHECK(nfc("क़्") == "क़्");
    // ordering + composition together
    CHECK(nfc("ऩ्") == "ऩ्");
}

TEST_CASE("nfc leaves NFC-stable text alone") {
    for (std::string s : {std::string("नमस्ते"), std::string("सच्चा"), std::string("नहीं"),
                          std::string("हरामखोर"), std::string("plain ascii 42'")}) {
        CHECK(nfc(s) == s);
    }
}

TEST_CASE("nfc is idempotent on random Devanagari-ish input") {
    Rng rng(99);
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<char32_t> cps;
        size_t len = rng.below(12);
        for (size_t i = 0; i < len; ++i) {
            switch (rng.below(4)) {
                case 0: cps.push_back(static_cast<char32_t>(0x0900 + rng.below(0x80))); break;
                case 1: cps.push_back(static_cast<char32_t>('a' + rng.below(26))); break;
                case 2: cps.push_back(0x093C); break;
                default: cps.push_back(0x094D); break;
            }
        }
        std::string s = encode_utf8(cps);
        std::string once = nfc(s);
        CHECK(nfc(once) == once);
    }
}

TEST_CASE("whitespace split and join") {
    auto t = split_whitespace("  a\tb\n c  ");
    REQUIRE(t.size() == 3);
    CHECK(t[0] == "a");
    CHECK(t[2] == "c");
    CHECK(join_tokens(t) == "a b c");
    CHECK(split_whitespace("").empty());
    CHECK(split_whitespace("   ").empty());
}

}  // TEST_SUITE
