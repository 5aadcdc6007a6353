// include/bst/audio_io.hpp

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

#ifndef BST_AUDIO_IO_HPP_
#define BST_AUDIO_IO_HPP_

#include <string>

#include <Eigen/Core>

namespace bst {

// Mono audio held as float amplitudes in [-1, 1] (clipping only ever
// introduced deliberately by the augmentation stage).
struct AudioBuffer {
  Eigen::ArrayXf samples;
  int sample_rate = 16000;

  double duration_seconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// Reads a PCM16/24/32 or float32 WAV at any rate/channel count, downmixes
// multi-channel input by channel mean, and resamples to target_rate.
// Throws std::runtime_error on unreadable files, unsupported encodings,
// or zero-length audio.
AudioBuffer load_audio(const std::string& path, int target_rate = 16000);

// Writes 16-bit PCM mono WAV at the buffer's sample rate.  A load of the
// written file recovers samples within one quantization step (1/32768).
void save_audio(const AudioBuffer& buffer, const std::string& path);

// Band-limited windowed-sinc resampling.  Output length is
// round(len * target_rate / sample_rate); a same-rate call is the identity.
AudioBuffer resample(const AudioBuffer& buffer, int target_rate);

// Rate-agnostic resampling kernel; ratio = output rate / input rate.  Also
// serves as the playback-speed changer inside pitch shifting, where the
// ratio is not a quotient of two integer rates.
Eigen::ArrayXf resample_ratio(const Eigen::ArrayXf& x, double ratio);

// Scales so max |sample| equals target_peak; all-zero input is returned
// unchanged.  target_peak must lie in (0, 1].
AudioBuffer peak_normalize(const AudioBuffer& buffer, float target_peak);

}  // namespace bst

#endif  // BST_AUDIO_IO_HPP_
