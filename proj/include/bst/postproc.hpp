// include/bst/postproc.hpp

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

#ifndef BST_POSTPROC_HPP_
#define BST_POSTPROC_HPP_

#include <string>
#include <string_view>

namespace bst {

struct DedupConfig {
  int max_phrase_words = 10;   // longest repeated phrase searched for
  int phrase_min_repeats = 2;  // phrase run collapses to one copy
  int word_min_repeats = 3;    // single-word run this long ...
  int word_keep_copies = 2;    // ... collapses to this many copies
  int ngram_min_chars = 2;
  int ngram_max_chars = 10;
  int ngram_min_repeats = 3;   // in-word n-gram run collapses to one copy
  int max_iterations = 10;     // bound on the fixpoint loop
};

/// Collapses hallucinated repetitions: repeated multi-word phrases,
/// single-word runs, and in-word character n-gram runs. Iterates the
/// three rules to a fixpoint.
std::string dedup_text(std::string_view text, const DedupConfig& cfg);

/// Removes every ">>" speaker-change marker and re-collapses whitespace.
std::string strip_markers(std::string_view text);

/// clean_unicode -> dedup_text -> strip_markers -> collapse_whitespace.
std::string postprocess_transcript(std::string_view text,
                                   const DedupConfig& cfg);

}  // namespace bst

#endif  // BST_POSTPROC_HPP_
