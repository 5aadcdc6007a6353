// src/alignment.cpp

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

#include "bst/alignment.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "bst/unicode.hpp"

namespace bst {

namespace {

size_t lcs_length(const std::u32string& a, const std::u32string& b) {
  // Two-row DP; keep the shorter string on the inner dimension.
  const std::u32string& s = a.size() <= b.size() ? a : b;
  const std::u32string& t = a.size() <= b.size() ? b : a;
  std::vector<size_t> prev(s.size() + 1, 0), cur(s.size() + 1, 0);
  for (size_t i = 1; i <= t.size(); ++i) {
    for (size_t j = 1; j <= s.size(); ++j) {
      cur[j] = t[i - 1] == s[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[s.size()];
}

std::string join_words(const std::vector<std::string>& words, int begin,
                       int end) {
  std::string out;
  for (int i = begin; i < end; ++i) {
    if (i > begin) out.push_back(' ');
    out += words[i];
  }
  return out;
}

}  // namespace

double indel_ratio(std::string_view a, std::string_view b) {
  std::u32string ua = decode_utf8(a);
  std::u32string ub = decode_utf8(b);
  if (ua.empty() && ub.empty()) return 100.0;
  size_t lcs = lcs_length(ua, ub);
  return 100.0 * 2.0 * lcs / (ua.size() + ub.size());
}

std::vector<AlignedChunk> align_chunks(const std::vector<std::string>& gt_words,
                                       const std::vector<std::string>& hyps,
                                       const AlignConfig& cfg) {
  if (gt_words.empty())
    throw std::runtime_error("align_chunks: ground-truth word list is empty");
  int gt_n = static_cast<int>(gt_words.size());

  std::vector<AlignedChunk> out;
  out.reserve(hyps.size());
  int pointer = 0;
  int prev_end = 0;
  for (size_t ci = 0; ci < hyps.size(); ++ci) {
    AlignedChunk chunk;
    chunk.chunk_index = static_cast<int>(ci);
    if (pointer >= gt_n) {
      // Pointer exhausted: remaining chunks get the empty-span sentinel.
      chunk.gt_start_word = gt_n;
      chunk.gt_end_word = gt_n;
      chunk.score = 0.0;
      chunk.low_confidence = true;
      out.push_back(chunk);
      continue;
    }

    int hyp_len = static_cast<int>(split_words(hyps[ci]).size());
    int s_lo = std::max(0, pointer - cfg.window_words);
    int s_hi = std::min(gt_n - 1, pointer + cfg.window_words);
    int l_lo = std::max(1, hyp_len - cfg.span_delta_words);
    int l_hi = hyp_len + cfg.span_delta_words;

    double best_score = -1.0;
    int best_s = s_lo, best_l = 1;
    for (int s = s_lo; s <= s_hi; ++s) {
      // Lengths clamp at the transcript end, which collapses the top of the
      // range to a single candidate.
      int max_l = gt_n - s;
      int lo = std::min(l_lo, max_l);
      int hi = std::min(l_hi, max_l);
      for (int l = lo; l <= hi; ++l) {
        double score = indel_ratio(join_words(gt_words, s, s + l), hyps[ci]);
        bool better = false;
        if (score > best_score + 1e-12) {
          better = true;
        } else if (score > best_score - 1e-12) {
          int d_new = std::abs(s - pointer), d_old = std::abs(best_s - pointer);
          int f_new = std::abs(l - hyp_len), f_old = std::abs(best_l - hyp_len);
          better = d_new < d_old ||
                   (d_new == d_old &&
                    (f_new < f_old || (f_new == f_old && s < best_s)));
        }
        if (better) {
          best_score = score;
          best_s = s;
          best_l = l;
        }
      }
    }

    pointer = best_s + best_l;
    // Reading order: clip the emitted span so it never precedes the
    // previous chunk's end.  The pointer keeps the unclipped position.
    chunk.gt_start_word = std::max(best_s, prev_end);
    chunk.gt_end_word = std::max(best_s + best_l, chunk.gt_start_word);
    chunk.score = best_score;
    chunk.low_confidence = best_score < cfg.low_confidence_threshold ||
                           chunk.gt_start_word == chunk.gt_end_word;
    prev_end = std::max(prev_end, chunk.gt_end_word);
    out.push_back(chunk);
  }
  return out;
}

}  // namespace bst
