// tests/testkit.hpp

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

// Independent oracles and fixtures for the test and acceptance suites.
//
// Everything here deliberately avoids sharing algorithms with the library
// under test: edit counts come from enumerating monotone alignments, DER from
// a millisecond frame grid with brute-force speaker mapping, and alignment
// from a plain restatement of the span-search rule with its own similarity
// code.  Agreement between the fast implementations and these slow ones is
// what the acceptance suite certifies.

#ifndef BST_TESTS_TESTKIT_HPP_
#define BST_TESTS_TESTKIT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "bst/alignment.hpp"
#include "bst/diar.hpp"

namespace bst {
namespace testkit {

struct EditCounts {
  int substitutions = 0;
  int deletions = 0;
  int insertions = 0;
};

// Minimal (S+D+I, D+I) over every monotone alignment, found by enumerating
// index-subset pairs.  Only defined for word lists of length <= 10.
EditCounts brute_force_edit(const std::vector<std::string>& ref,
                            const std::vector<std::string>& hyp);

// LCS length by checking every subsequence of the shorter string against the
// longer one.  Only defined when the shorter side has <= 20 scalars.
int subset_lcs(const std::u32string& a, const std::u32string& b);

// Normalized indel similarity recomputed from a full-matrix LCS.
double naive_indel_ratio(const std::string& a, const std::string& b);

// Plain restatement of the sequential span search: enumerate every candidate
// in the window, score with naive_indel_ratio, apply the documented
// tie-break.  Mirrors align_chunks output exactly.
std::vector<AlignedChunk> naive_align(const std::vector<std::string>& gt_words,
                                      const std::vector<std::string>& hyps,
                                      const AlignConfig& cfg = {});

// Frame-discretized DER with brute-force optimal speaker mapping.  Supports
// the same collar and UEM semantics as metrics::der.  At most 6 speakers per
// side (the mapping search is exhaustive).
double frame_der(const std::vector<DiarizationSegment>& ref,
                 const std::vector<DiarizationSegment>& hyp,
                 double frame_s = 0.001, double collar_s = 0.0,
                 std::optional<std::pair<double, double>> uem = std::nullopt);

struct SyntheticCorpus {
  std::vector<std::string> gt_words;
  std::vector<std::string> chunk_hyps;
  std::vector<std::pair<int, int>> true_spans;  // [start, end) word indices
  double noise_rate = 0.0;
};

// Random ground truth cut into consecutive chunks; each hypothesis word is
// independently replaced with a fresh random word at noise_rate.
SyntheticCorpus gen_synthetic_alignment_case(int num_words,
                                             int chunk_len_words,
                                             double noise_rate, uint64_t seed);

// --- signal measurement -----------------------------------------------------

double rms(const Eigen::ArrayXf& x);

// Peak of the Hann-windowed magnitude spectrum, in Hz.
double dominant_freq(const Eigen::ArrayXf& x, int fs);

// Least-squares slope of octave-band power (dB) against octave number,
// over bands [f, 2f) tiling [f_lo, f_hi).
double octave_band_slope_db(const Eigen::ArrayXf& x, int fs, double f_lo,
                            double f_hi);

// Time (seconds) at which the Schroeder backward-integrated energy decay
// curve first reaches -60 dB.
double edc_minus60_time(const Eigen::ArrayXf& h, int fs);

// A pure sine tone, unit amplitude.
Eigen::ArrayXf sine(double freq_hz, double seconds, int fs);

// Path of a checked-in fixture file.
std::string data_path(const std::string& name);

}  // namespace testkit
}  // namespace bst

#endif  // BST_TESTS_TESTKIT_HPP_
