// src/stretch.cpp

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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "bst/augment.hpp"

namespace bst {

namespace {

constexpr int kFftSize = 1024;
constexpr int kHop = 256;  // analysis hop; synthesis hop varies with rate

double wrap_phase(double x) {
  return x - 2.0 * M_PI * std::round(x / (2.0 * M_PI));
}

}  // namespace

Eigen::ArrayXf time_stretch(const Eigen::ArrayXf& seg, double rate,
                            int /*fs*/) {
  if (!(rate >= 0.5 && rate <= 2.0))
    throw std::runtime_error("time_stretch: rate must be in [0.5, 2.0]");
  Eigen::Index n = seg.size();
  if (n == 0) return seg;
  Eigen::Index out_len = static_cast<Eigen::Index>(std::llround(n / rate));
  if (out_len == 0) return Eigen::ArrayXf(0);

  // Zero-pad one full window so synthesis always covers out_len; padded
  // frames carry no energy and only ever contribute trailing silence.
  Eigen::Index padded = n + kFftSize;
  std::vector<double> x(padded, 0.0);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = seg[i];
  int frames = static_cast<int>((padded - kFftSize) / kHop) + 1;

  std::vector<double> window(kFftSize);
  for (int i = 0; i < kFftSize; ++i)
    window[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * i / kFftSize);

  constexpr int kBins = kFftSize / 2 + 1;
  std::vector<double> omega(kBins);
  for (int k = 0; k < kBins; ++k) omega[k] = 2.0 * M_PI * k / kFftSize;

  Eigen::Index last_pos = static_cast<Eigen::Index>(
      std::llround(static_cast<double>(frames - 1) * kHop / rate));
  std::vector<double> acc(last_pos + kFftSize, 0.0);
  std::vector<double> weight(last_pos + kFftSize, 0.0);

  Eigen::FFT<double> fft;
  std::vector<double> frame(kFftSize);
  std::vector<std::complex<double>> spectrum, synth(kFftSize), synth_time;
  std::vector<double> prev_phase(kBins, 0.0), psi(kBins, 0.0);
  Eigen::Index prev_pos = 0;

  for (int t = 0; t < frames; ++t) {
    Eigen::Index in_pos = static_cast<Eigen::Index>(t) * kHop;
    for (int i = 0; i < kFftSize; ++i) frame[i] = x[in_pos + i] * window[i];
    fft.fwd(spectrum, frame);

    Eigen::Index out_pos = static_cast<Eigen::Index>(
        std::llround(static_cast<double>(t) * kHop / rate));
    for (int k = 0; k < kBins; ++k) {
      double phase = std::arg(spectrum[k]);
      if (t == 0) {
        psi[k] = phase;
      } else {
        // Instantaneous frequency from the analysis phase increment,
        // re-accumulated over the (different) synthesis hop.
        double dev = wrap_phase(phase - prev_phase[k] - omega[k] * kHop);
        double inst = omega[k] + dev / kHop;
        psi[k] += static_cast<double>(out_pos - prev_pos) * inst;
      }
      prev_phase[k] = phase;
      synth[k] = std::polar(std::abs(spectrum[k]), psi[k]);
    }
    for (int k = 1; k < kFftSize / 2; ++k)
      synth[kFftSize - k] = std::conj(synth[k]);
    fft.inv(synth_time, synth);

    for (int i = 0; i < kFftSize; ++i) {
      acc[out_pos + i] += synth_time[i].real() * window[i];
      weight[out_pos + i] += window[i] * window[i];
    }
    prev_pos = out_pos;
  }

  Eigen::ArrayXf out = Eigen::ArrayXf::Zero(out_len);
  Eigen::Index copy = std::min<Eigen::Index>(out_len,
                                             static_cast<Eigen::Index>(acc.size()));
  for (Eigen::Index i = 0; i < copy; ++i)
    out[i] = weight[i] > 1e-8 ? static_cast<float>(acc[i] / weight[i]) : 0.0f;
  return out;
}

Eigen::ArrayXf pitch_shift(const Eigen::ArrayXf& seg, double semitones,
                           int fs) {
  if (!(semitones >= -12.0 && semitones <= 12.0))
    throw std::runtime_error("pitch_shift: semitones must be in [-12, 12]");
  Eigen::Index n = seg.size();
  if (n == 0) return seg;
  double r = std::pow(2.0, semitones / 12.0);
  // Stretch duration by r at constant pitch, then change playback speed by
  // r: duration returns to the original while pitch scales by r.
  Eigen::ArrayXf stretched = time_stretch(seg, 1.0 / r, fs);
  Eigen::ArrayXf shifted = resample_ratio(stretched, 1.0 / r);
  // Rounding can leave the result one sample off; pin the exact length.
  Eigen::ArrayXf out = Eigen::ArrayXf::Zero(n);
  Eigen::Index copy = std::min(n, shifted.size());
  out.head(copy) = shifted.head(copy);
  return out;
}

}  // namespace bst
