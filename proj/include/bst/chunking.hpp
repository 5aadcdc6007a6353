// include/bst/chunking.hpp

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

#ifndef BST_CHUNKING_HPP_
#define BST_CHUNKING_HPP_

#include <vector>

#include "bst/audio_io.hpp"

namespace bst {

struct ChunkConfig {
  double chunk_seconds = 25.0;
  // Training tails shorter than this are discarded.
  double min_tail_seconds = 0.5;
  // Training tails whose RMS falls below this are discarded as near-silent.
  double silence_rms_threshold = 1e-4;
};

struct ChunkRecord {
  int index = 0;
  double start_s = 0.0;
  // End of real (unpadded) content; for padded inference chunks this is the
  // source end, not start_s + chunk_seconds.
  double end_s = 0.0;
  AudioBuffer samples;
  bool padded = false;
};

// Consecutive chunk_seconds slices.  The final short fragment is dropped iff
// it is shorter than min_tail_seconds or its RMS is below the silence
// threshold; kept fragments stay at their natural length.  Never pads.
std::vector<ChunkRecord> chunk_for_training(const AudioBuffer& buffer,
                                            const ChunkConfig& cfg = {});

// Every chunk holds exactly chunk_seconds of samples; the last is zero-padded
// and flagged.  Nothing is dropped, however short.
std::vector<ChunkRecord> chunk_for_inference(const AudioBuffer& buffer,
                                             const ChunkConfig& cfg = {});

}  // namespace bst

#endif  // BST_CHUNKING_HPP_
