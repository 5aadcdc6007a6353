// include/bst/augment.hpp

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

#ifndef BST_AUGMENT_HPP_
#define BST_AUGMENT_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "bst/audio_io.hpp"
#include "bst/rng.hpp"

namespace bst {

// Segment-level augmentation parameters.  Each enabled window draws every
// effect independently with its probability; effects stack in a fixed order.
struct AugmentConfig {
  double coverage = 0.30;         // fraction of the clip to cover with windows
  double window_lo_s = 3.0;
  double window_hi_s = 6.0;
  double p_noise = 0.65;
  double p_echo = 0.55;
  double p_reverb = 0.60;
  double p_clip = 0.30;
  double p_bandpass = 0.20;
  double p_pitch = 0.25;
  double p_stretch = 0.25;
  double snr_lo_db = 5.0;
  double snr_hi_db = 20.0;
  int echo_taps_lo = 2;
  int echo_taps_hi = 4;
  double echo_delay_lo_ms = 150.0;
  double echo_delay_hi_ms = 800.0;
  double echo_decay_lo = 0.4;
  double echo_decay_hi = 0.75;
  double rt60_small_lo_s = 0.2;
  double rt60_small_hi_s = 0.4;
  double rt60_medium_lo_s = 0.4;
  double rt60_medium_hi_s = 0.8;
  double rt60_large_lo_s = 0.8;
  double rt60_large_hi_s = 1.5;
  double clip_frac_lo = 0.3;
  double clip_frac_hi = 0.7;
  double band_lo_hz = 300.0;
  double band_hi_hz = 3400.0;
  double pitch_lo_semitones = -3.0;
  double pitch_hi_semitones = 3.0;
  double stretch_lo_rate = 0.80;
  double stretch_hi_rate = 1.20;
};

enum class NoiseKind { kWhite, kPink };
enum class RoomSize { kSmall, kMedium, kLarge };

struct RirSpec {
  RoomSize room_size = RoomSize::kMedium;
  double rt60_s = 0.5;
  int fs = 16000;
};

struct EchoTap {
  double delay_ms = 0.0;
  double amplitude = 0.0;
};

// Everything needed to apply one window's effects, frozen at planning time
// so that application order and worker scheduling cannot perturb results.
struct WindowDraw {
  double start_s = 0.0;
  double end_s = 0.0;
  bool noise = false;
  NoiseKind noise_kind = NoiseKind::kWhite;
  double snr_db = 0.0;
  uint64_t noise_seed = 0;
  bool echo = false;
  std::vector<EchoTap> echo_taps;
  bool reverb = false;
  RirSpec rir;
  uint64_t rir_seed = 0;
  bool clip = false;
  double clip_frac = 0.0;
  bool bandpass = false;
  bool pitch = false;
  double pitch_semitones = 0.0;
  bool stretch = false;
  double stretch_rate = 1.0;
};

struct AugmentPlan {
  uint64_t seed = 0;
  std::vector<WindowDraw> windows;  // non-overlapping, ordered by start
};

// Samples non-overlapping windows until their cumulative length reaches
// coverage * duration or no window-length gap remains, then draws effects
// and parameters per window.  Pure function of (duration, cfg, seed).
AugmentPlan plan_augmentation(double duration_s, const AugmentConfig& cfg,
                              uint64_t seed);

// White: i.i.d. uniform [-1,1].  Pink: white shaped by a fixed 3-pole
// recursive 1/f approximation.  Both peak-normalized to 1.0.
Eigen::ArrayXf gen_noise(Eigen::Index n, NoiseKind kind, Rng& rng);

// Scales noise to the requested SNR against seg power, then sums.  An
// all-zero segment gets noise at a fixed -40 dBFS instead.
Eigen::ArrayXf mix_noise(const Eigen::ArrayXf& seg,
                         const Eigen::ArrayXf& noise, double snr_db);

// y[n] = x[n] + sum_k a_k * x[n - d_k]; tails beyond the segment end are
// truncated, so length is preserved.
Eigen::ArrayXf apply_echo(const Eigen::ArrayXf& seg,
                          const std::vector<EchoTap>& taps, int fs);

// Exponentially decaying Gaussian noise with a unit direct path at h[0];
// length = round(rt60 * fs).  h[0] is the global peak after scaling.
Eigen::ArrayXf synth_rir(const RirSpec& spec, Rng& rng);

// Full linear convolution truncated to len(seg); FFT-based when the
// impulse response is long, direct otherwise.  Both paths agree to 1e-6.
Eigen::ArrayXf convolve_rir(const Eigen::ArrayXf& seg,
                            const Eigen::ArrayXf& rir);

// Hard clip into [-threshold, threshold].
Eigen::ArrayXf apply_clip(const Eigen::ArrayXf& seg, float threshold);

// Linear-phase windowed-sinc FIR band-pass (513 taps, Hann), zero-phase by
// group-delay compensation.
Eigen::ArrayXf apply_bandpass(const Eigen::ArrayXf& seg, double low_hz,
                              double high_hz, int fs);

// Phase-vocoder time stretch (STFT 1024/256, Hann): output length is
// round(len / rate) and pitch is preserved.
Eigen::ArrayXf time_stretch(const Eigen::ArrayXf& seg, double rate, int fs);

// Pitch shift by the given semitones at constant duration: a time stretch
// by 1/r followed by a playback-speed change of r, r = 2^(semitones/12).
Eigen::ArrayXf pitch_shift(const Eigen::ArrayXf& seg, double semitones,
                           int fs);

// Runs plan_augmentation and applies each window's drawn effects in the
// order noise, echo, reverb, clip, bandpass, pitch, stretch; every
// processed window is peak-normalized back to its original peak (0.5 when
// the original was silent) and written back in place.  Samples outside the
// windows are bit-identical to the input.
AudioBuffer augment_clip(const AudioBuffer& buffer, const AugmentConfig& cfg,
                         uint64_t seed);

}  // namespace bst

#endif  // BST_AUGMENT_HPP_
