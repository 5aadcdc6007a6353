// tests/test_textnorm.cpp

// Copyright 2026  Bangla Speech Toolkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <string>
#include <vector>

#include "bst/rng.hpp"
#include "bst/textnorm.hpp"
#include "bst/unicode.hpp"

using namespace bst;

namespace {

// Random text over the alphabets normalization has to cope with.
std::string random_messy_text(Rng& rng) {
  std::u32string s;
  int len = rng.uniform_int(0, 60);
  for (int i = 0; i < len; ++i) {
    switch (rng.uniform_int(0, 6)) {
      case 0: s.push_back(static_cast<char32_t>(rng.uniform_int('a', 'z')));
        break;
      case 1:
        s.push_back(static_cast<char32_t>(rng.uniform_int(0x0985, 0x09B9)));
        break;
      case 2: s.push_back(static_cast<char32_t>(rng.uniform_int('0', '9')));
        break;
      case 3: s.push_back(U' '); break;
      case 4: s.push_back(U'​'); break;
      case 5: s.push_back(rng.bernoulli(0.5) ? U'।' : U','); break;
      default: s.push_back(rng.bernoulli(0.5) ? U'\n' : U'\t'); break;
    }
  }
  return encode_utf8(s);
}

}  // namespace

TEST_SUITE_BEGIN("textnorm");

TEST_CASE("cardinals match the numeral chart") {
  CHECK(bangla_cardinal(0) == "শূন্য");
  CHECK(bangla_cardinal(5) == "পাঁচ");
  CHECK(bangla_cardinal(7) == "সাত");
  CHECK(bangla_cardinal(10) == "দশ");
  CHECK(bangla_cardinal(19) == "উনিশ");
  CHECK(bangla_cardinal(42) == "বিয়াল্লিশ");
  CHECK(bangla_cardinal(71) == "একাত্তর");
  CHECK(bangla_cardinal(99) == "নিরানব্বই");
  CHECK(bangla_cardinal(100) == "একশো");
  CHECK(bangla_cardinal(205) == "দুইশো পাঁচ");
  CHECK(bangla_cardinal(1000) == "এক হাজার");
  CHECK(bangla_cardinal(2500) == "দুই হাজার পাঁচশো");
  CHECK(bangla_cardinal(100000) == "এক লাখ");
  CHECK(bangla_cardinal(10000000) == "এক কোটি");
  CHECK(bangla_cardinal(12345678) ==
        "এক কোটি তেইশ লাখ পঁয়তাল্লিশ হাজার ছয়শো আটাত্তর");
}

TEST_CASE("year reading splits into century pair and remainder") {
  CHECK(bangla_year(1971) == "উনিশশো একাত্তর");
  CHECK(bangla_year(2005) == "বিশশো পাঁচ");
  CHECK(bangla_year(1900) == "উনিশশো");
  CHECK(bangla_year(1065) == "দশশো পঁয়ষট্টি");
  CHECK_THROWS(bangla_year(999));
  CHECK_THROWS(bangla_year(10000));
}

TEST_CASE("digit runs convert in place") {
  NormConfig cfg;
  CHECK(digits_to_bangla_words("5", cfg) == "পাঁচ");
  CHECK(digits_to_bangla_words("abc", cfg) == "abc");
  CHECK(digits_to_bangla_words("1971", cfg) == "উনিশশো একাত্তর");
  CHECK(digits_to_bangla_words("2500", cfg) == "দুই হাজার পাঁচশো");
  CHECK(digits_to_bangla_words("৫", cfg) == "৫");  // Bangla digits untouched
}

TEST_CASE("year range boundaries decide the reading") {
  NormConfig cfg;
  CHECK(digits_to_bangla_words("1000", cfg) == "দশশো");
  CHECK(digits_to_bangla_words("2099", cfg) == "বিশশো নিরানব্বই");
  CHECK(digits_to_bangla_words("0999", cfg) ==
        bangla_cardinal(999));  // below range: plain cardinal
  CHECK(digits_to_bangla_words("2100", cfg) == "দুই হাজার একশো");
  cfg.year_lo = 1971;
  cfg.year_hi = 1971;
  CHECK(digits_to_bangla_words("1971", cfg) == "উনিশশো একাত্তর");
  CHECK(digits_to_bangla_words("1972", cfg) ==
        "এক হাজার নয়শো বাহাত্তর");
}

TEST_CASE("converted words get separating spaces") {
  NormConfig cfg;
  CHECK(digits_to_bangla_words("মোট5টি", cfg) == "মোট পাঁচ টি");
  CHECK(digits_to_bangla_words("5 টাকা", cfg) == "পাঁচ টাকা");
  CHECK(digits_to_bangla_words("x5", cfg) == "x পাঁচ");
}

TEST_CASE("overlong digit runs are left alone and flagged") {
  NormConfig cfg;
  std::vector<std::string> warnings;
  std::string thirteen(13, '7');
  CHECK(digits_to_bangla_words(thirteen, cfg, &warnings) == thirteen);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find(thirteen) != std::string::npos);
  // Twelve digits is still converted.
  warnings.clear();
  std::string twelve(12, '9');
  CHECK(digits_to_bangla_words(twelve, cfg, &warnings) != twelve);
  CHECK(warnings.empty());
}

TEST_CASE("script filter deletes everything outside the allowed set") {
  NormConfig cfg;
  CHECK(filter_bengali("হ্যালো hello ।", cfg) == "হ্যালো  ।");
  CHECK(filter_bengali("ABC123", cfg) == "123");
  CHECK(filter_bengali("আমি ভাত খাই", cfg) == "আমি ভাত খাই");
}

TEST_CASE("script filter output stays within the allowed scalar set") {
  NormConfig cfg;
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::string out = filter_bengali(random_messy_text(rng), cfg);
    for (char32_t c : decode_utf8(out)) {
      bool allowed = is_bengali(c) || is_ascii_digit(c) || is_ascii_space(c) ||
                     cfg.allowed_punct.find(c) != std::u32string::npos;
      CHECK(allowed);
    }
  }
}

TEST_CASE("custom punctuation set is honored") {
  NormConfig cfg;
  cfg.allowed_punct = U"!";
  CHECK(filter_bengali("ক! খ।", cfg) == "ক! খ");
}

TEST_CASE("whitespace collapses to single spaces") {
  CHECK(collapse_whitespace("ক  খ") == "ক খ");
  CHECK(collapse_whitespace(" ক\n খ ") == "ক খ");
  CHECK(collapse_whitespace("") == "");
  CHECK(collapse_whitespace("   \t\n ") == "");
  CHECK(collapse_whitespace("a\t\tb\r\nc") == "a b c");
}

TEST_CASE("unicode cleanup removes zero-width characters and applies NFC") {
  NormConfig cfg;
  CHECK(clean_unicode(encode_utf8(U"ক​খ"), cfg) == "কখ");
  CHECK(clean_unicode(encode_utf8(U"﻿ক"), cfg) == "ক");
  CHECK(clean_unicode(encode_utf8(U"কো"), cfg) ==
        encode_utf8(U"কো"));
  CHECK(clean_unicode("plain", cfg) == "plain");
}

TEST_CASE("joiner stripping is configurable") {
  NormConfig cfg;
  std::string joined = encode_utf8(U"র‍যা");
  cfg.strip_joiners = true;
  CHECK(clean_unicode(joined, cfg) == encode_utf8(U"রযা"));
  cfg.strip_joiners = false;
  CHECK(clean_unicode(joined, cfg) == joined);
}

TEST_CASE("full normalization composes the steps") {
  NormConfig cfg;
  CHECK(normalize_transcript("hello  5 টাকা", cfg) == "পাঁচ টাকা");
  CHECK(normalize_transcript("", cfg) == "");
  CHECK(normalize_transcript("আমি ভাত খাই", cfg) == "আমি ভাত খাই");
  CHECK(normalize_transcript("১৯৭১ সালে 1971", cfg) ==
        "১৯৭১ সালে উনিশশো একাত্তর");
}

TEST_CASE("normalization equals the composition of its stages") {
  NormConfig cfg;
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = random_messy_text(rng);
    std::string composed = collapse_whitespace(
        filter_bengali(digits_to_bangla_words(clean_unicode(text, cfg), cfg),
                       cfg));
    CHECK(normalize_transcript(text, cfg) == composed);
  }
}

TEST_CASE("normalization is idempotent") {
  NormConfig cfg;
  Rng rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    std::string once = normalize_transcript(random_messy_text(rng), cfg);
    CHECK(normalize_transcript(once, cfg) == once);
  }
}

TEST_CASE("no ASCII digits survive digit conversion") {
  NormConfig cfg;
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    std::string out = digits_to_bangla_words(random_messy_text(rng), cfg);
    for (char32_t c : decode_utf8(out)) CHECK(!is_ascii_digit(c));
  }
}

TEST_SUITE_END();
