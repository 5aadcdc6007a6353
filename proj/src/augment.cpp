// src/augment.cpp

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

#include "bst/augment.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace bst {

namespace {

struct Gap {
  double lo, hi;
  double length() const { return hi - lo; }
};

// Free intervals of [0, duration] not covered by the chosen windows.
std::vector<Gap> free_gaps(double duration_s,
                           const std::vector<WindowDraw>& windows) {
  std::vector<Gap> gaps;
  double cursor = 0.0;
  for (const WindowDraw& w : windows) {
    if (w.start_s > cursor) gaps.push_back({cursor, w.start_s});
    cursor = w.end_s;
  }
  if (cursor < duration_s) gaps.push_back({cursor, duration_s});
  return gaps;
}

void draw_effects(WindowDraw* w, const AugmentConfig& cfg, Rng& rng) {
  w->noise = rng.bernoulli(cfg.p_noise);
  if (w->noise) {
    w->noise_kind = rng.bernoulli(0.5) ? NoiseKind::kPink : NoiseKind::kWhite;
    w->snr_db = rng.uniform(cfg.snr_lo_db, cfg.snr_hi_db);
    w->noise_seed = rng.next_u64();
  }
  w->echo = rng.bernoulli(cfg.p_echo);
  if (w->echo) {
    int taps = rng.uniform_int(cfg.echo_taps_lo, cfg.echo_taps_hi);
    double decay = rng.uniform(cfg.echo_decay_lo, cfg.echo_decay_hi);
    for (int k = 1; k <= taps; ++k) {
      EchoTap tap;
      tap.delay_ms = rng.uniform(cfg.echo_delay_lo_ms, cfg.echo_delay_hi_ms);
      tap.amplitude = std::pow(decay, k);
      w->echo_taps.push_back(tap);
    }
  }
  w->reverb = rng.bernoulli(cfg.p_reverb);
  if (w->reverb) {
    int room = rng.uniform_int(0, 2);
    w->rir.room_size = static_cast<RoomSize>(room);
    switch (w->rir.room_size) {
      case RoomSize::kSmall:
        w->rir.rt60_s = rng.uniform(cfg.rt60_small_lo_s, cfg.rt60_small_hi_s);
        break;
      case RoomSize::kMedium:
        w->rir.rt60_s = rng.uniform(cfg.rt60_medium_lo_s, cfg.rt60_medium_hi_s);
        break;
      case RoomSize::kLarge:
        w->rir.rt60_s = rng.uniform(cfg.rt60_large_lo_s, cfg.rt60_large_hi_s);
        break;
    }
    w->rir_seed = rng.next_u64();
  }
  w->clip = rng.bernoulli(cfg.p_clip);
  if (w->clip) w->clip_frac = rng.uniform(cfg.clip_frac_lo, cfg.clip_frac_hi);
  w->bandpass = rng.bernoulli(cfg.p_bandpass);
  w->pitch = rng.bernoulli(cfg.p_pitch);
  if (w->pitch)
    w->pitch_semitones =
        rng.uniform(cfg.pitch_lo_semitones, cfg.pitch_hi_semitones);
  w->stretch = rng.bernoulli(cfg.p_stretch);
  if (w->stretch)
    w->stretch_rate = rng.uniform(cfg.stretch_lo_rate, cfg.stretch_hi_rate);
}

}  // namespace

AugmentPlan plan_augmentation(double duration_s, const AugmentConfig& cfg,
                              uint64_t seed) {
  if (!(duration_s > 0.0))
    throw std::runtime_error("plan_augmentation: duration must be positive");
  AugmentPlan plan;
  plan.seed = seed;
  Rng rng(seed);

  double target = cfg.coverage * duration_s;
  double covered = 0.0;
  while (covered < target) {
    std::vector<Gap> gaps = free_gaps(duration_s, plan.windows);
    double largest = 0.0;
    for (const Gap& g : gaps) largest = std::max(largest, g.length());
    if (largest < cfg.window_lo_s) break;

    double len = rng.uniform(cfg.window_lo_s, cfg.window_hi_s);
    len = std::min(len, largest);

    // Uniform over the union of feasible start positions.
    double measure = 0.0;
    for (const Gap& g : gaps)
      if (g.length() >= len) measure += g.length() - len;
    double start = -1.0;
    if (measure <= 0.0) {
      // Only exact fits remain (len was clamped to the largest gap).
      for (const Gap& g : gaps)
        if (g.length() >= len) {
          start = g.lo;
          break;
        }
    } else {
      double u = rng.uniform(0.0, measure);
      for (const Gap& g : gaps) {
        if (g.length() < len) continue;
        double room = g.length() - len;
        if (u <= room) {
          start = g.lo + u;
          break;
        }
        u -= room;
      }
      if (start < 0.0) start = gaps.back().hi - len;  // float-edge fallback
    }

    WindowDraw w;
    w.start_s = start;
    w.end_s = start + len;
    draw_effects(&w, cfg, rng);
    auto pos = std::upper_bound(
        plan.windows.begin(), plan.windows.end(), w,
        [](const WindowDraw& a, const WindowDraw& b) {
          return a.start_s < b.start_s;
        });
    plan.windows.insert(pos, std::move(w));
    covered += len;
  }
  return plan;
}

Eigen::ArrayXf gen_noise(Eigen::Index n, NoiseKind kind, Rng& rng) {
  if (n <= 0) throw std::runtime_error("gen_noise: n must be positive");
  Eigen::ArrayXf out(n);
  if (kind == NoiseKind::kWhite) {
    for (Eigen::Index i = 0; i < n; ++i)
      out[i] = static_cast<float>(rng.uniform(-1.0, 1.0));
  } else {
    // Paul Kellet's economy 3-pole pink filter over white noise; the pole
    // constants give -3 dB/octave within about 0.3 dB across the audio band.
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      double white = rng.uniform(-1.0, 1.0);
      b0 = 0.99765 * b0 + white * 0.0990460;
      b1 = 0.96300 * b1 + white * 0.2965164;
      b2 = 0.57000 * b2 + white * 1.0526913;
      out[i] = static_cast<float>(b0 + b1 + b2 + white * 0.1848);
    }
  }
  float peak = out.abs().maxCoeff();
  if (peak > 0.0f) out /= peak;
  return out;
}

Eigen::ArrayXf mix_noise(const Eigen::ArrayXf& seg,
                         const Eigen::ArrayXf& noise, double snr_db) {
  if (seg.size() != noise.size())
    throw std::runtime_error("mix_noise: length mismatch");
  double seg_power = seg.cast<double>().square().mean();
  double noise_power = noise.cast<double>().square().mean();
  if (noise_power <= 0.0) return seg;
  double scale;
  if (seg_power <= 0.0) {
    // Silent segment: target a fixed -40 dBFS noise floor instead of an
    // undefined SNR.
    scale = std::pow(10.0, -40.0 / 20.0) / std::sqrt(noise_power);
  } else {
    scale = std::sqrt(seg_power / (noise_power * std::pow(10.0, snr_db / 10.0)));
  }
  return seg + noise * static_cast<float>(scale);
}

Eigen::ArrayXf apply_echo(const Eigen::ArrayXf& seg,
                          const std::vector<EchoTap>& taps, int fs) {
  Eigen::ArrayXf out = seg;
  for (const EchoTap& tap : taps) {
    Eigen::Index d = static_cast<Eigen::Index>(
        std::llround(tap.delay_ms / 1000.0 * fs));
    if (d <= 0 || d >= seg.size()) continue;
    out.tail(seg.size() - d) +=
        static_cast<float>(tap.amplitude) * seg.head(seg.size() - d);
  }
  return out;
}

Eigen::ArrayXf synth_rir(const RirSpec& spec, Rng& rng) {
  if (!(spec.rt60_s > 0.0) || spec.fs <= 0)
    throw std::runtime_error("synth_rir: invalid spec");
  Eigen::Index len = static_cast<Eigen::Index>(
      std::llround(spec.rt60_s * spec.fs));
  len = std::max<Eigen::Index>(len, 1);
  Eigen::ArrayXf h(len);
  h[0] = 1.0f;
  // exp(-6.908 t / rt60) puts the energy envelope 60 dB down at t = rt60.
  double decay = 6.908 / (spec.fs * spec.rt60_s);
  float tail_peak = 0.0f;
  for (Eigen::Index i = 1; i < len; ++i) {
    h[i] = static_cast<float>(rng.gaussian() * std::exp(-decay * i));
    tail_peak = std::max(tail_peak, std::abs(h[i]));
  }
  // Keep the direct path at exactly 1.0 and the global peak with it: the
  // random tail is scaled just below unity rather than the whole response
  // being divided by a tail excursion.
  if (tail_peak > 0.0f && len > 1)
    h.tail(len - 1) *= 0.99f / tail_peak;
  return h;
}

Eigen::ArrayXf convolve_rir(const Eigen::ArrayXf& seg,
                            const Eigen::ArrayXf& rir) {
  if (seg.size() == 0 || rir.size() == 0)
    throw std::runtime_error("convolve_rir: empty input");
  Eigen::Index n = seg.size(), m = rir.size();
  Eigen::ArrayXf out(n);
  if (m <= 256) {
    for (Eigen::Index i = 0; i < n; ++i) {
      double acc = 0.0;
      Eigen::Index k_hi = std::min<Eigen::Index>(i, m - 1);
      for (Eigen::Index k = 0; k <= k_hi; ++k)
        acc += static_cast<double>(rir[k]) * seg[i - k];
      out[i] = static_cast<float>(acc);
    }
    return out;
  }
  // Overlap-free single FFT: zero-pad both to the next power of two that
  // fits the full convolution, multiply spectra, and truncate.
  Eigen::Index full = n + m - 1;
  Eigen::Index size = 1;
  while (size < full) size <<= 1;
  std::vector<double> a(size, 0.0), b(size, 0.0);
  for (Eigen::Index i = 0; i < n; ++i) a[i] = seg[i];
  for (Eigen::Index i = 0; i < m; ++i) b[i] = rir[i];
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> fa, fb;
  fft.fwd(fa, a);
  fft.fwd(fb, b);
  for (size_t i = 0; i < fa.size(); ++i) fa[i] *= fb[i];
  std::vector<double> conv;
  fft.inv(conv, fa);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = static_cast<float>(conv[i]);
  return out;
}

Eigen::ArrayXf apply_clip(const Eigen::ArrayXf& seg, float threshold) {
  if (!(threshold > 0.0f))
    throw std::runtime_error("apply_clip: threshold must be positive");
  return seg.min(threshold).max(-threshold);
}

Eigen::ArrayXf apply_bandpass(const Eigen::ArrayXf& seg, double low_hz,
                              double high_hz, int fs) {
  if (!(0.0 < low_hz && low_hz < high_hz && high_hz < fs / 2.0))
    throw std::runtime_error("apply_bandpass: need 0 < low < high < fs/2");
  constexpr int kTaps = 513;
  constexpr int kCenter = kTaps / 2;
  auto sinc = [](double t) {
    return std::abs(t) < 1e-12 ? 1.0 : std::sin(M_PI * t) / (M_PI * t);
  };
  // Band-pass as the difference of two low-pass prototypes, Hann-windowed.
  double fl = 2.0 * low_hz / fs, fh = 2.0 * high_hz / fs;
  std::vector<double> h(kTaps);
  for (int k = 0; k < kTaps; ++k) {
    int t = k - kCenter;
    double hann = 0.5 - 0.5 * std::cos(2.0 * M_PI * k / (kTaps - 1));
    h[k] = (fh * sinc(fh * t) - fl * sinc(fl * t)) * hann;
  }
  // Zero phase: the filter is linear-phase with group delay kCenter, so the
  // output is read shifted by kCenter samples.
  Eigen::Index n = seg.size();
  Eigen::ArrayXf out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int k = 0; k < kTaps; ++k) {
      Eigen::Index j = i + kCenter - k;
      if (j >= 0 && j < n) acc += h[k] * seg[j];
    }
    out[i] = static_cast<float>(acc);
  }
  return out;
}

AudioBuffer augment_clip(const AudioBuffer& buffer, const AugmentConfig& cfg,
                         uint64_t seed) {
  if (buffer.samples.size() == 0 || buffer.sample_rate <= 0)
    throw std::runtime_error("augment_clip: invalid buffer");
  AugmentPlan plan = plan_augmentation(buffer.duration_seconds(), cfg, seed);
  AudioBuffer out = buffer;
  int fs = buffer.sample_rate;

  for (const WindowDraw& w : plan.windows) {
    Eigen::Index begin = static_cast<Eigen::Index>(std::llround(w.start_s * fs));
    Eigen::Index end = static_cast<Eigen::Index>(std::llround(w.end_s * fs));
    begin = std::clamp<Eigen::Index>(begin, 0, buffer.samples.size());
    end = std::clamp<Eigen::Index>(end, begin, buffer.samples.size());
    Eigen::Index len = end - begin;
    if (len == 0) continue;
    if (!w.noise && !w.echo && !w.reverb && !w.clip && !w.bandpass &&
        !w.pitch && !w.stretch) {
      continue;  // every effect lost its coin toss: leave the window alone
    }

    Eigen::ArrayXf seg = out.samples.segment(begin, len);
    float orig_peak = seg.abs().maxCoeff();

    if (w.noise) {
      Rng noise_rng(w.noise_seed);
      seg = mix_noise(seg, gen_noise(len, w.noise_kind, noise_rng), w.snr_db);
    }
    if (w.echo) seg = apply_echo(seg, w.echo_taps, fs);
    if (w.reverb) {
      Rng rir_rng(w.rir_seed);
      RirSpec spec = w.rir;
      spec.fs = fs;
      seg = convolve_rir(seg, synth_rir(spec, rir_rng));
    }
    if (w.clip) {
      float peak = seg.abs().maxCoeff();
      if (peak > 0.0f)
        seg = apply_clip(seg, static_cast<float>(w.clip_frac) * peak);
    }
    if (w.bandpass) seg = apply_bandpass(seg, cfg.band_lo_hz, cfg.band_hi_hz, fs);
    if (w.pitch) seg = pitch_shift(seg, w.pitch_semitones, fs);
    if (w.stretch) {
      Eigen::ArrayXf stretched = time_stretch(seg, w.stretch_rate, fs);
      // The window is a fixed region of a longer stream: re-fit the
      // stretched audio by trimming or zero-padding to the window length.
      Eigen::ArrayXf refit = Eigen::ArrayXf::Zero(len);
      refit.head(std::min(len, stretched.size())) =
          stretched.head(std::min(len, stretched.size()));
      seg = std::move(refit);
    }

    float target = orig_peak < 1e-6f ? 0.5f : orig_peak;
    float peak = seg.abs().maxCoeff();
    if (peak > 0.0f) seg *= target / peak;
    out.samples.segment(begin, len) = seg;
  }
  return out;
}

}  // namespace bst
