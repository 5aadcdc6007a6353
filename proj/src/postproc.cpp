// src/postproc.cpp

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

#include "bst/postproc.hpp"

#include <algorithm>
#include <vector>

#include "bst/textnorm.hpp"
#include "bst/unicode.hpp"

namespace bst {

namespace {

bool spans_equal(const std::vector<std::string>& w, size_t a, size_t b,
                 size_t n) {
  for (size_t k = 0; k < n; ++k)
    if (w[a + k] != w[b + k]) return false;
  return true;
}

// Phrase runs: n-word phrase repeated >= min_repeats times keeps one copy.
bool collapse_phrases(std::vector<std::string>* words, int n,
                      int min_repeats) {
  bool changed = false;
  size_t un = static_cast<size_t>(n);
  size_t i = 0;
  while (i + 2 * un <= words->size()) {
    size_t repeats = 1;
    while (i + (repeats + 1) * un <= words->size() &&
           spans_equal(*words, i, i + repeats * un, un))
      ++repeats;
    if (repeats >= static_cast<size_t>(min_repeats)) {
      words->erase(words->begin() + i + un,
                   words->begin() + i + repeats * un);
      changed = true;
      // stay at i: the collapsed copy may still repeat with what follows
    } else {
      ++i;
    }
  }
  return changed;
}

// Single-word runs of length >= min_repeats keep `keep` copies.
bool collapse_word_runs(std::vector<std::string>* words, int min_repeats,
                        int keep) {
  bool changed = false;
  size_t i = 0;
  while (i < words->size()) {
    size_t j = i + 1;
    while (j < words->size() && (*words)[j] == (*words)[i]) ++j;
    size_t run = j - i;
    if (run >= static_cast<size_t>(min_repeats)) {
      words->erase(words->begin() + i + keep, words->begin() + j);
      changed = true;
      i += keep;
    } else {
      i = j;
    }
  }
  return changed;
}

// A pattern is primitive when it is not itself a whole number of copies
// of a shorter pattern; only primitive grams collapse, otherwise a long
// even-length run like "hahahaha..." would stop at two copies of "haha"
// instead of reaching "ha".
bool is_primitive(const std::u32string& s, size_t pos, size_t g) {
  for (size_t d = 1; d <= g / 2; ++d) {
    if (g % d != 0) continue;
    bool periodic = true;
    for (size_t k = d; k < g && periodic; ++k)
      periodic = s[pos + k] == s[pos + k - d];
    if (periodic) return false;
  }
  return true;
}

// In-word character n-gram runs, longest gram first.
bool collapse_ngrams(std::u32string* word, const DedupConfig& cfg) {
  bool changed = false;
  int gmax = std::min<int>(cfg.ngram_max_chars,
                           static_cast<int>(word->size()) / cfg.ngram_min_repeats);
  for (int g = gmax; g >= cfg.ngram_min_chars; --g) {
    size_t ug = static_cast<size_t>(g);
    size_t i = 0;
    while (i + ug * static_cast<size_t>(cfg.ngram_min_repeats) <=
           word->size()) {
      if (!is_primitive(*word, i, ug)) {
        ++i;
        continue;
      }
      size_t repeats = 1;
      while (i + (repeats + 1) * ug <= word->size() &&
             word->compare(i, ug, *word, i + repeats * ug, ug) == 0)
        ++repeats;
      if (repeats >= static_cast<size_t>(cfg.ngram_min_repeats)) {
        word->erase(i + ug, (repeats - 1) * ug);
        changed = true;
      } else {
        ++i;
      }
    }
  }
  return changed;
}

}  // namespace

std::string dedup_text(std::string_view text, const DedupConfig& cfg) {
  std::vector<std::string> words = split_words(text);
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    bool changed = false;
    for (int n = cfg.max_phrase_words; n >= 2; --n)
      changed |= collapse_phrases(&words, n, cfg.phrase_min_repeats);
    changed |= collapse_word_runs(&words, cfg.word_min_repeats,
                                  cfg.word_keep_copies);
    for (auto& w : words) {
      std::u32string u = decode_utf8(w);
      if (collapse_ngrams(&u, cfg)) {
        w = encode_utf8(u);
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(' ');
    out += words[i];
  }
  return out;
}

std::string strip_markers(std::string_view text) {
  std::string replaced;
  replaced.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (i + 1 < text.size() && text[i] == '>' && text[i + 1] == '>') {
      replaced.push_back(' ');
      i += 2;
    } else {
      replaced.push_back(text[i]);
      ++i;
    }
  }
  return collapse_whitespace(replaced);
}

std::string postprocess_transcript(std::string_view text,
                                   const DedupConfig& cfg) {
  NormConfig norm;
  return collapse_whitespace(
      strip_markers(dedup_text(clean_unicode(text, norm), cfg)));
}

}  // namespace bst
