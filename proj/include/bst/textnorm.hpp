// include/bst/textnorm.hpp

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

#ifndef BST_TEXTNORM_HPP_
#define BST_TEXTNORM_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bst {

struct NormConfig {
  // Four-digit runs inside [year_lo, year_hi] read as calendar years.
  int year_lo = 1000;
  int year_hi = 2099;
  // Punctuation that survives script filtering.
  std::u32string allowed_punct = U"।.,?!-";  // danda . , ? ! -
  // Also strip ZWNJ/ZWJ (they are orthographically meaningful in Bangla,
  // so this is configurable).
  bool strip_joiners = true;
};

/// Standard Bangla cardinal reading of a non-negative integer
/// (up to 12 decimal digits).
std::string bangla_cardinal(uint64_t n);

/// Calendar-year reading: century pair + "শো" + two-digit remainder.
std::string bangla_year(int year);

/// Replaces every maximal ASCII-digit run with its Bangla word form.
/// Runs longer than 12 digits are left unchanged and reported through
/// `warnings` when given.
std::string digits_to_bangla_words(std::string_view text, const NormConfig& cfg,
                                   std::vector<std::string>* warnings = nullptr);

/// Deletes every scalar outside the Bengali block, ASCII digits,
/// whitespace, and cfg.allowed_punct.
std::string filter_bengali(std::string_view text, const NormConfig& cfg);

/// Collapses each whitespace run to one space and trims the ends.
std::string collapse_whitespace(std::string_view text);

/// NFC plus zero-width character removal (U+200B, U+FEFF always;
/// U+200C/U+200D when cfg.strip_joiners).
std::string clean_unicode(std::string_view text, const NormConfig& cfg);

/// clean_unicode -> digits_to_bangla_words -> filter_bengali ->
/// collapse_whitespace.
std::string normalize_transcript(std::string_view text, const NormConfig& cfg,
                                 std::vector<std::string>* warnings = nullptr);

}  // namespace bst

#endif  // BST_TEXTNORM_HPP_
