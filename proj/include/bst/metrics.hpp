// include/bst/metrics.hpp

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

#ifndef BST_METRICS_HPP_
#define BST_METRICS_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "bst/diar.hpp"

namespace bst {

struct WerReport {
  int substitutions = 0;
  int deletions = 0;
  int insertions = 0;
  int ref_words = 0;
  double wer = 0.0;  // (S + D + I) / N
};

struct DerReport {
  double false_alarm_s = 0.0;
  double missed_s = 0.0;
  double confusion_s = 0.0;
  double total_s = 0.0;  // reference speech inside the scoring region
  double der = 0.0;      // (FA + MISS + CONF) / TOTAL
  std::map<std::string, std::string> mapping;  // hyp speaker -> ref speaker
};

struct RtfReport {
  double inference_s = 0.0;
  double audio_s = 0.0;
  double rtf = 0.0;  // T / D
};

// Word error rate from a minimal-cost word-level edit alignment with unit
// costs.  Among minimal alignments, substitutions are preferred over
// insert+delete pairs.  Both sides are normalized (NFC) and split on
// whitespace; an empty reference is an error since N = 0 leaves the rate
// undefined.
WerReport wer(std::string_view ref, std::string_view hyp);

// Column index assigned to each row minimizing total cost over a square
// matrix (Hungarian method, O(n^3)).  Exposed so the assignment step can be
// validated directly against brute-force permutation search.
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost);

// Diarization error rate by exact sweep-line interval arithmetic (no frame
// discretization).  The hypothesis-to-reference speaker mapping is the
// one-to-one assignment maximizing total scored overlap.  A collar excludes
// +/-collar_s around every reference segment boundary from scoring; an
// optional UEM interval restricts scoring to [first, second].
DerReport der(const std::vector<DiarizationSegment>& ref,
              const std::vector<DiarizationSegment>& hyp,
              double collar_s = 0.0,
              std::optional<std::pair<double, double>> uem = std::nullopt);

// Real-time factor T / D; both inputs must be positive.
RtfReport rtf(double inference_time_s, double audio_duration_s);

}  // namespace bst

#endif  // BST_METRICS_HPP_
