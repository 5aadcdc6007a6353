// include/bst/alignment.hpp

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

#ifndef BST_ALIGNMENT_HPP_
#define BST_ALIGNMENT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace bst {

struct AlignConfig {
  // Candidate span starts are searched within +/- this many words of the
  // running pointer.
  int window_words = 5;
  // Candidate span lengths range over the hypothesis word count +/- this.
  int span_delta_words = 3;
  // Spans scoring below this (0-100) are flagged, never dropped.
  int low_confidence_threshold = 50;
};

struct AlignedChunk {
  int chunk_index = 0;
  int gt_start_word = 0;
  int gt_end_word = 0;  // exclusive; start == end marks an empty sentinel
  double score = 0.0;   // 0-100
  bool low_confidence = false;
};

// Normalized indel similarity over Unicode scalar values:
// 100 * 2*LCS(a,b) / (|a|+|b|); both strings empty scores 100.
double indel_ratio(std::string_view a, std::string_view b);

// Sequential fuzzy alignment of per-chunk hypotheses onto the ground-truth
// word list.  A pointer tracks the expected position; each hypothesis is
// matched to the in-window span maximizing indel_ratio against the
// space-joined ground-truth words.  Ties prefer, in order: start closest to
// the pointer, length closest to the hypothesis word count, smaller start.
// Emitted spans are clipped so they never precede the previous chunk's end;
// once the pointer exhausts the transcript, remaining chunks receive an
// empty-span sentinel with low_confidence set.
std::vector<AlignedChunk> align_chunks(const std::vector<std::string>& gt_words,
                                       const std::vector<std::string>& hyps,
                                       const AlignConfig& cfg = {});

}  // namespace bst

#endif  // BST_ALIGNMENT_HPP_
