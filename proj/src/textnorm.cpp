// src/textnorm.cpp

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

#include "bst/textnorm.hpp"

#include <algorithm>
#include <stdexcept>

#include "bst/unicode.hpp"

namespace bst {

namespace {

// Bangla cardinals 0..99. Every value below one hundred has its own word.
const char* const kOnes[100] = {
    "শূন্য",      "এক",        "দুই",        "তিন",       "চার",
    "পাঁচ",       "ছয়",        "সাত",       "আট",        "নয়",
    "দশ",        "এগারো",     "বারো",      "তেরো",      "চৌদ্দ",
    "পনেরো",     "ষোলো",      "সতেরো",     "আঠারো",     "উনিশ",
    "বিশ",       "একুশ",      "বাইশ",      "তেইশ",      "চব্বিশ",
    "পঁচিশ",      "ছাব্বিশ",    "সাতাশ",     "আঠাশ",      "ঊনত্রিশ",
    "ত্রিশ",      "একত্রিশ",    "বত্রিশ",     "তেত্রিশ",    "চৌত্রিশ",
    "পঁয়ত্রিশ",    "ছত্রিশ",     "সাঁইত্রিশ",   "আটত্রিশ",    "ঊনচল্লিশ",
    "চল্লিশ",     "একচল্লিশ",   "বিয়াল্লিশ",   "তেতাল্লিশ",   "চুয়াল্লিশ",
    "পঁয়তাল্লিশ",  "ছেচল্লিশ",   "সাতচল্লিশ",  "আটচল্লিশ",   "ঊনপঞ্চাশ",
    "পঞ্চাশ",     "একান্ন",     "বাহান্ন",     "তিপ্পান্ন",    "চুয়ান্ন",
    "পঞ্চান্ন",    "ছাপ্পান্ন",    "সাতান্ন",    "আটান্ন",     "ঊনষাট",
    "ষাট",       "একষট্টি",    "বাষট্টি",     "তেষট্টি",    "চৌষট্টি",
    "পঁয়ষট্টি",    "ছেষট্টি",    "সাতষট্টি",   "আটষট্টি",    "ঊনসত্তর",
    "সত্তর",      "একাত্তর",    "বাহাত্তর",    "তিয়াত্তর",   "চুয়াত্তর",
    "পঁচাত্তর",    "ছিয়াত্তর",   "সাতাত্তর",   "আটাত্তর",    "ঊনআশি",
    "আশি",       "একাশি",     "বিরাশি",    "তিরাশি",    "চুরাশি",
    "পঁচাশি",     "ছিয়াশি",    "সাতাশি",    "আটাশি",     "ঊননব্বই",
    "নব্বই",      "একানব্বই",   "বিরানব্বই",   "তিরানব্বই",   "চুরানব্বই",
    "পঁচানব্বই",   "ছিয়ানব্বই",  "সাতানব্বই",  "আটানব্বই",   "নিরানব্বই"};

const char* kHundredSuffix = "শো";  // attaches directly to the multiplier
const char* kThousand = "হাজার";
const char* kLakh = "লাখ";
const char* kCrore = "কোটি";

void append_word(std::string* out, const std::string& w) {
  if (!out->empty()) out->push_back(' ');
  out->append(w);
}

// Cardinal below one crore (10^7): lakh / thousand / hundred groups.
void cardinal_below_crore(uint64_t n, std::string* out) {
  if (n >= 100000) {
    append_word(out, kOnes[n / 100000]);
    append_word(out, kLakh);
    n %= 100000;
  }
  if (n >= 1000) {
    append_word(out, kOnes[n / 1000]);
    append_word(out, kThousand);
    n %= 1000;
  }
  if (n >= 100) {
    append_word(out, std::string(kOnes[n / 100]) + kHundredSuffix);
    n %= 100;
  }
  if (n > 0) append_word(out, kOnes[n]);
}

}  // namespace

std::string bangla_cardinal(uint64_t n) {
  if (n == 0) return kOnes[0];
  std::string out;
  if (n >= 10000000ull) {
    // The crore multiplier itself reads as a full cardinal (lakh-crore etc).
    out = bangla_cardinal(n / 10000000ull);
    append_word(&out, kCrore);
    n %= 10000000ull;
  }
  cardinal_below_crore(n, &out);
  return out;
}

std::string bangla_year(int year) {
  if (year < 1000 || year > 9999)
    throw std::invalid_argument("year reading needs a four-digit value");
  int century = year / 100;
  int rem = year % 100;
  std::string out = std::string(kOnes[century]) + kHundredSuffix;
  if (rem != 0) {
    out.push_back(' ');
    out.append(kOnes[rem]);
  }
  return out;
}

std::string digits_to_bangla_words(std::string_view text, const NormConfig& cfg,
                                   std::vector<std::string>* warnings) {
  std::u32string in = decode_utf8(text);
  std::u32string out;
  out.reserve(in.size() + 16);
  size_t i = 0;
  while (i < in.size()) {
    if (!is_ascii_digit(in[i])) {
      out.push_back(in[i]);
      ++i;
      continue;
    }
    size_t j = i;
    while (j < in.size() && is_ascii_digit(in[j])) ++j;
    size_t run_len = j - i;
    if (run_len > 12) {
      if (warnings)
        warnings->push_back("digit run '" +
                            encode_utf8(std::u32string(in, i, run_len)) +
                            "' (" + std::to_string(run_len) +
                            " digits) left unchanged");
      out.append(in, i, run_len);
      i = j;
      continue;
    }
    uint64_t value = 0;
    for (size_t k = i; k < j; ++k) value = value * 10 + (in[k] - U'0');
    std::string words;
    if (run_len == 4 && value >= static_cast<uint64_t>(cfg.year_lo) &&
        value <= static_cast<uint64_t>(cfg.year_hi)) {
      words = bangla_year(static_cast<int>(value));
    } else {
      words = bangla_cardinal(value);
    }
    if (!out.empty() && !is_ascii_space(out.back())) out.push_back(U' ');
    out += decode_utf8(words);
    if (j < in.size() && !is_ascii_space(in[j])) out.push_back(U' ');
    i = j;
  }
  return encode_utf8(out);
}

std::string filter_bengali(std::string_view text, const NormConfig& cfg) {
  std::u32string in = decode_utf8(text);
  std::u32string out;
  out.reserve(in.size());
  for (char32_t c : in) {
    if (is_bengali(c) || is_ascii_digit(c) || is_ascii_space(c) ||
        cfg.allowed_punct.find(c) != std::u32string::npos) {
      out.push_back(c);
    }
  }
  return encode_utf8(out);
}

std::string collapse_whitespace(std::string_view text) {
  // ASCII whitespace bytes never occur inside multi-byte UTF-8 sequences,
  // so this is safe at the byte level.
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (is_ascii_space(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() &&
             is_ascii_space(static_cast<unsigned char>(text[i])))
        ++i;
      if (!out.empty() && i < text.size()) out.push_back(' ');
    } else {
      out.push_back(text[i]);
      ++i;
    }
  }
  return out;
}

std::string clean_unicode(std::string_view text, const NormConfig& cfg) {
  std::u32string in = decode_utf8(text);
  std::u32string kept;
  kept.reserve(in.size());
  for (char32_t c : in) {
    if (c == 0x200B || c == 0xFEFF) continue;
    if (cfg.strip_joiners && (c == 0x200C || c == 0x200D)) continue;
    kept.push_back(c);
  }
  // Stripping joiners first lets NFC compose across where they stood.
  return nfc_utf8(encode_utf8(kept));
}

std::string normalize_transcript(std::string_view text, const NormConfig& cfg,
                                 std::vector<std::string>* warnings) {
  return collapse_whitespace(
      filter_bengali(digits_to_bangla_words(clean_unicode(text, cfg), cfg, warnings), cfg));
}

}  // namespace bst
