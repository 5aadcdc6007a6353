// include/bst/unicode.hpp

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

#ifndef BST_UNICODE_HPP_
#define BST_UNICODE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace bst {

/// Decodes UTF-8 into Unicode scalar values. Malformed sequences become
/// U+FFFD, one replacement per bad byte.
std::u32string decode_utf8(std::string_view s);

std::string encode_utf8(std::u32string_view s);

/// Canonical composition (NFC) of a UTF-8 string.
std::string nfc_utf8(std::string_view s);

constexpr bool is_bengali(char32_t c) { return c >= 0x0980 && c <= 0x09FF; }

constexpr bool is_ascii_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

constexpr bool is_ascii_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' ||
         c == U'\f';
}

/// Whitespace-delimited tokens of a UTF-8 string.
std::vector<std::string> split_words(std::string_view text);

}  // namespace bst

#endif  // BST_UNICODE_HPP_
