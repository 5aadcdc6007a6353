// include/bst/diar.hpp

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

#ifndef BST_DIAR_HPP_
#define BST_DIAR_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bst {

struct DiarizationSegment {
  double start_s = 0.0;
  double end_s = 0.0;
  std::string speaker;

  double duration() const { return end_s - start_s; }
  bool operator==(const DiarizationSegment&) const = default;
};

// Times rounded half-to-even at the third decimal and printed with exactly
// three decimals; used by every diarization text format so golden files
// stay byte-stable.
std::string format_seconds(double x);

// Rows of "HH:MM:SS[.fff],HH:MM:SS[.fff],speaker"; an optional header row is
// detected by a non-numeric first field.  Throws with row and column on
// malformed times, empty speakers, or end <= start.
std::vector<DiarizationSegment> parse_annotation_csv(std::string_view content);

// Single-label overlap policy: the earlier-starting segment (ties broken by
// input order) keeps a contested region; later segments are truncated from
// the left, and segments emptied by truncation are dropped.
std::vector<DiarizationSegment> resolve_overlaps(
    std::vector<DiarizationSegment> segments);

// One SPEAKER record per segment, ordered by onset:
// SPEAKER <uri> 1 <onset> <duration> <NA> <NA> <speaker> <NA> <NA>
std::string write_rttm(const std::string& uri,
                       std::vector<DiarizationSegment> segments);

// Reads SPEAKER records grouped by uri; other record types are skipped.
// Throws with a line number on malformed records.
std::map<std::string, std::vector<DiarizationSegment>> parse_rttm(
    std::string_view content);

// Single full-file scoring region: "<uri> 1 0.000 <duration>".
std::string write_uem(const std::string& uri, double duration_s);

// Reads "<uri> <channel> <onset> <offset>" lines into per-uri scoring
// intervals; the inverse of write_uem.
std::map<std::string, std::pair<double, double>> parse_uem(
    std::string_view content);

// One uri per line, input order, trailing newline.
std::string write_lst(const std::vector<std::string>& uris);

// YAML-layout corpus manifest in the shape diarization toolchains expect:
// an audio path template plus per-split LST/RTTM/UEM paths and uri lists.
// Requires the train, development, and test splits to all be present.
std::string emit_corpus_manifest(
    const std::map<std::string, std::vector<std::string>>& splits,
    const std::string& root);

// Keeps segments whose duration is >= min_s (boundary inclusive).
std::vector<DiarizationSegment> filter_min_duration(
    std::vector<DiarizationSegment> segments, double min_s = 0.3);

// JSON array of {"start", "end", "speaker"} with times rounded to three
// decimals, and its inverse.
std::string segments_to_json(const std::vector<DiarizationSegment>& segments);
std::vector<DiarizationSegment> segments_from_json(std::string_view content);

}  // namespace bst

#endif  // BST_DIAR_HPP_
