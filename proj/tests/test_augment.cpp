// tests/test_augment.cpp

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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "bst/augment.hpp"
#include "bst/rng.hpp"
#include "testkit.hpp"

using namespace bst;

namespace {

AudioBuffer random_clip(double seconds, uint64_t seed, int fs = 16000) {
  Rng rng(seed);
  AudioBuffer buf;
  buf.sample_rate = fs;
  buf.samples =
      Eigen::ArrayXf(static_cast<Eigen::Index>(std::llround(seconds * fs)));
  for (Eigen::Index i = 0; i < buf.samples.size(); ++i)
    buf.samples[i] = static_cast<float>(rng.uniform(-0.5, 0.5));
  return buf;
}

double measured_snr_db(const Eigen::ArrayXf& seg, const Eigen::ArrayXf& mixed) {
  Eigen::ArrayXf added = mixed - seg;
  double p_seg = seg.cast<double>().square().mean();
  double p_noise = added.cast<double>().square().mean();
  return 10.0 * std::log10(p_seg / p_noise);
}

}  // namespace

TEST_SUITE_BEGIN("augment");

TEST_CASE("plans hit the coverage target with windows in range") {
  AugmentConfig cfg;
  Rng seeds(1);
  for (int trial = 0; trial < 50; ++trial) {
    double duration = 20.0 + 100.0 * seeds.uniform();
    AugmentPlan plan = plan_augmentation(duration, cfg, seeds.next_u64());
    double covered = 0.0;
    double prev_end = 0.0;
    for (const WindowDraw& w : plan.windows) {
      CHECK(w.start_s >= prev_end - 1e-9);  // sorted and non-overlapping
      CHECK(w.end_s > w.start_s);
      CHECK(w.end_s <= duration + 1e-9);
      double len = w.end_s - w.start_s;
      CHECK(len >= cfg.window_lo_s - 1e-9);
      CHECK(len <= cfg.window_hi_s + 1e-9);
      covered += len;
      prev_end = w.end_s;
    }
    CHECK(covered >= cfg.coverage * duration - 1e-9);
    // One extra window at most beyond the target.
    CHECK(covered <= cfg.coverage * duration + cfg.window_hi_s);
  }
}

TEST_CASE("plans are deterministic in the seed") {
  AugmentConfig cfg;
  AugmentPlan a = plan_augmentation(60.0, cfg, 99);
  AugmentPlan b = plan_augmentation(60.0, cfg, 99);
  REQUIRE(a.windows.size() == b.windows.size());
  for (size_t i = 0; i < a.windows.size(); ++i) {
    CHECK(a.windows[i].start_s == b.windows[i].start_s);
    CHECK(a.windows[i].end_s == b.windows[i].end_s);
    CHECK(a.windows[i].noise == b.windows[i].noise);
    CHECK(a.windows[i].snr_db == b.windows[i].snr_db);
    CHECK(a.windows[i].noise_seed == b.windows[i].noise_seed);
    CHECK(a.windows[i].stretch_rate == b.windows[i].stretch_rate);
  }
  AugmentPlan c = plan_augmentation(60.0, cfg, 100);
  bool all_equal = a.windows.size() == c.windows.size();
  if (all_equal) {
    for (size_t i = 0; i < a.windows.size(); ++i)
      if (a.windows[i].start_s != c.windows[i].start_s) all_equal = false;
  }
  CHECK(!all_equal);
}

TEST_CASE("short clips get no windows") {
  AugmentConfig cfg;
  AugmentPlan plan = plan_augmentation(2.0, cfg, 7);  // below window_lo_s
  CHECK(plan.windows.empty());
}

TEST_CASE("drawn parameters respect their configured ranges") {
  AugmentConfig cfg;
  Rng seeds(2);
  for (int trial = 0; trial < 30; ++trial) {
    AugmentPlan plan = plan_augmentation(90.0, cfg, seeds.next_u64());
    for (const WindowDraw& w : plan.windows) {
      if (w.noise) {
        CHECK(w.snr_db >= cfg.snr_lo_db);
        CHECK(w.snr_db <= cfg.snr_hi_db);
      }
      if (w.echo) {
        CHECK(static_cast<int>(w.echo_taps.size()) >= cfg.echo_taps_lo);
        CHECK(static_cast<int>(w.echo_taps.size()) <= cfg.echo_taps_hi);
        double prev_amp = 1.0;
        for (const EchoTap& tap : w.echo_taps) {
          CHECK(tap.delay_ms >= cfg.echo_delay_lo_ms);
          CHECK(tap.delay_ms <= cfg.echo_delay_hi_ms);
          CHECK(tap.amplitude > 0.0);
          CHECK(tap.amplitude <= cfg.echo_decay_hi * prev_amp + 1e-12);
          prev_amp = tap.amplitude;
        }
      }
      if (w.reverb) {
        double lo = cfg.rt60_small_lo_s, hi = cfg.rt60_large_hi_s;
        CHECK(w.rir.rt60_s >= lo);
        CHECK(w.rir.rt60_s <= hi);
        switch (w.rir.room_size) {
          case RoomSize::kSmall:
            CHECK(w.rir.rt60_s <= cfg.rt60_small_hi_s);
            break;
          case RoomSize::kMedium:
            CHECK(w.rir.rt60_s >= cfg.rt60_medium_lo_s);
            CHECK(w.rir.rt60_s <= cfg.rt60_medium_hi_s);
            break;
          case RoomSize::kLarge:
            CHECK(w.rir.rt60_s >= cfg.rt60_large_lo_s);
            break;
        }
      }
      if (w.clip) {
        CHECK(w.clip_frac >= cfg.clip_frac_lo);
        CHECK(w.clip_frac <= cfg.clip_frac_hi);
      }
      if (w.pitch) {
        CHECK(w.pitch_semitones >= cfg.pitch_lo_semitones);
        CHECK(w.pitch_semitones <= cfg.pitch_hi_semitones);
      }
      if (w.stretch) {
        CHECK(w.stretch_rate >= cfg.stretch_lo_rate);
        CHECK(w.stretch_rate <= cfg.stretch_hi_rate);
      }
    }
  }
}

TEST_CASE("white and pink noise are peak-normalized") {
  Rng rng(5);
  for (NoiseKind kind : {NoiseKind::kWhite, NoiseKind::kPink}) {
    Eigen::ArrayXf noise = gen_noise(65536, kind, rng);
    CHECK(noise.abs().maxCoeff() == doctest::Approx(1.0f));
  }
}

TEST_CASE("pink noise rolls off at about -3 dB per octave") {
  Rng rng(6);
  Eigen::ArrayXf pink = gen_noise(65536, NoiseKind::kPink, rng);
  double slope = testkit::octave_band_slope_db(pink, 16000, 100.0, 4000.0);
  CHECK(slope == doctest::Approx(-3.0).epsilon(0.5));
  Eigen::ArrayXf white = gen_noise(65536, NoiseKind::kWhite, rng);
  double flat = testkit::octave_band_slope_db(white, 16000, 100.0, 4000.0);
  CHECK(std::abs(flat) < 1.0);
}

TEST_CASE("noise mixing lands on the requested SNR") {
  Rng rng(7);
  Eigen::ArrayXf seg = testkit::sine(440.0, 1.0, 16000) * 0.3f;
  for (double snr : {5.0, 12.5, 20.0}) {
    Eigen::ArrayXf noise = gen_noise(seg.size(), NoiseKind::kWhite, rng);
    Eigen::ArrayXf mixed = mix_noise(seg, noise, snr);
    CHECK(measured_snr_db(seg, mixed) == doctest::Approx(snr).epsilon(1e-6));
  }
}

TEST_CASE("silent segments get a fixed noise floor") {
  Rng rng(8);
  Eigen::ArrayXf silent = Eigen::ArrayXf::Zero(16000);
  Eigen::ArrayXf noise = gen_noise(16000, NoiseKind::kWhite, rng);
  Eigen::ArrayXf mixed = mix_noise(silent, noise, 10.0);
  CHECK(testkit::rms(mixed) == doctest::Approx(0.01).epsilon(1e-6));
}

TEST_CASE("echo adds delayed copies at the drawn amplitudes") {
  Eigen::ArrayXf impulse = Eigen::ArrayXf::Zero(16000);
  impulse[0] = 1.0f;
  std::vector<EchoTap> taps = {{200.0, 0.5}, {500.0, 0.25}};
  Eigen::ArrayXf echoed = apply_echo(impulse, taps, 16000);
  REQUIRE(echoed.size() == impulse.size());
  CHECK(echoed[0] == doctest::Approx(1.0));
  CHECK(echoed[3200] == doctest::Approx(0.5));
  CHECK(echoed[8000] == doctest::Approx(0.25));
  // Everything else is untouched.
  CHECK(echoed[100] == doctest::Approx(0.0));
}

TEST_CASE("echo taps beyond the segment are ignored") {
  Eigen::ArrayXf impulse = Eigen::ArrayXf::Zero(1000);
  impulse[0] = 1.0f;
  std::vector<EchoTap> taps = {{500.0, 0.5}};  // 8000 samples at 16 kHz
  Eigen::ArrayXf echoed = apply_echo(impulse, taps, 16000);
  for (Eigen::Index i = 1; i < echoed.size(); ++i)
    CHECK(echoed[i] == 0.0f);
}

TEST_CASE("synthetic impulse responses decay at the requested rate") {
  Rng rng(9);
  for (double rt60 : {0.2, 0.5, 1.0, 1.5}) {
    RirSpec spec;
    spec.rt60_s = rt60;
    spec.fs = 16000;
    Eigen::ArrayXf h = synth_rir(spec, rng);
    CHECK(h[0] == doctest::Approx(1.0));
    CHECK(h.abs().maxCoeff() == doctest::Approx(1.0));
    double t60 = testkit::edc_minus60_time(h, spec.fs);
    CHECK(t60 == doctest::Approx(rt60).epsilon(0.10));
  }
}

TEST_CASE("direct and FFT convolution paths agree") {
  Rng rng(10);
  Eigen::ArrayXf seg(4000);
  for (Eigen::Index i = 0; i < seg.size(); ++i)
    seg[i] = static_cast<float>(rng.uniform(-0.5, 0.5));
  // 256 taps stays on the direct path; 257 takes the FFT path.  Build a
  // 257-tap response whose last tap is zero so both compute the same thing.
  Eigen::ArrayXf short_rir(256), long_rir(257);
  for (Eigen::Index i = 0; i < 256; ++i) {
    short_rir[i] = static_cast<float>(rng.uniform(-0.1, 0.1));
    long_rir[i] = short_rir[i];
  }
  long_rir[256] = 0.0f;
  Eigen::ArrayXf direct = convolve_rir(seg, short_rir);
  Eigen::ArrayXf fft = convolve_rir(seg, long_rir);
  REQUIRE(direct.size() == seg.size());
  REQUIRE(fft.size() == seg.size());
  for (Eigen::Index i = 0; i < seg.size(); ++i)
    CHECK(direct[i] == doctest::Approx(fft[i]).epsilon(1e-5));
}

TEST_CASE("clipping limits the waveform symmetrically") {
  Eigen::ArrayXf seg = testkit::sine(100.0, 0.1, 16000);
  Eigen::ArrayXf clipped = apply_clip(seg, 0.6f);
  CHECK(clipped.maxCoeff() == doctest::Approx(0.6f));
  CHECK(clipped.minCoeff() == doctest::Approx(-0.6f));
  for (Eigen::Index i = 0; i < seg.size(); ++i)
    if (std::abs(seg[i]) < 0.6f) CHECK(clipped[i] == seg[i]);
}

TEST_CASE("bandpass keeps the passband and rejects the stopband") {
  Eigen::ArrayXf in_band = testkit::sine(1000.0, 1.0, 16000);
  Eigen::ArrayXf low_tone = testkit::sine(100.0, 1.0, 16000);
  Eigen::ArrayXf pass = apply_bandpass(in_band, 300.0, 3400.0, 16000);
  Eigen::ArrayXf stop = apply_bandpass(low_tone, 300.0, 3400.0, 16000);
  // Compare steady-state sections, away from the filter warm-up.
  auto center_rms = [](const Eigen::ArrayXf& x) {
    return testkit::rms(x.segment(x.size() / 4, x.size() / 2));
  };
  double pass_db = 20.0 * std::log10(center_rms(pass) / center_rms(in_band));
  double stop_db = 20.0 * std::log10(center_rms(stop) / center_rms(low_tone));
  CHECK(std::abs(pass_db) < 1.0);
  CHECK(stop_db < -20.0);
}

TEST_CASE("time stretch changes length, not pitch") {
  Eigen::ArrayXf tone = testkit::sine(440.0, 2.0, 16000);
  for (double rate : {0.8, 1.2}) {
    Eigen::ArrayXf stretched = time_stretch(tone, rate, 16000);
    long long expected = std::llround(static_cast<double>(tone.size()) / rate);
    CHECK(std::abs(static_cast<long long>(stretched.size()) - expected) <=
          256);  // within one hop
    CHECK(testkit::dominant_freq(stretched, 16000) ==
          doctest::Approx(440.0).epsilon(0.02));
  }
}

TEST_CASE("pitch shift changes pitch, not length") {
  Eigen::ArrayXf tone = testkit::sine(440.0, 2.0, 16000);
  Eigen::ArrayXf up = pitch_shift(tone, 3.0, 16000);
  CHECK(up.size() == tone.size());
  CHECK(testkit::dominant_freq(up, 16000) ==
        doctest::Approx(523.25).epsilon(0.02));
  Eigen::ArrayXf down = pitch_shift(tone, -12.0, 16000);
  CHECK(down.size() == tone.size());
  CHECK(testkit::dominant_freq(down, 16000) ==
        doctest::Approx(220.0).epsilon(0.02));
}

TEST_CASE("augmentation is deterministic in the seed") {
  AugmentConfig cfg;
  AudioBuffer clip = random_clip(30.0, 11);
  AudioBuffer a = augment_clip(clip, cfg, 1357);
  AudioBuffer b = augment_clip(clip, cfg, 1357);
  REQUIRE(a.samples.size() == b.samples.size());
  for (Eigen::Index i = 0; i < a.samples.size(); ++i)
    CHECK(a.samples[i] == b.samples[i]);
}

TEST_CASE("zero effect probabilities leave the clip bit-identical") {
  AugmentConfig cfg;
  cfg.p_noise = cfg.p_echo = cfg.p_reverb = cfg.p_clip = 0.0;
  cfg.p_bandpass = cfg.p_pitch = cfg.p_stretch = 0.0;
  AudioBuffer clip = random_clip(30.0, 12);
  AudioBuffer out = augment_clip(clip, cfg, 2468);
  REQUIRE(out.samples.size() == clip.samples.size());
  for (Eigen::Index i = 0; i < out.samples.size(); ++i)
    CHECK(out.samples[i] == clip.samples[i]);
}

TEST_CASE("samples outside windows never change") {
  AugmentConfig cfg;
  AudioBuffer clip = random_clip(45.0, 13);
  uint64_t seed = 8080;
  AugmentPlan plan = plan_augmentation(clip.duration_seconds(), cfg, seed);
  AudioBuffer out = augment_clip(clip, cfg, seed);
  int fs = clip.sample_rate;
  for (Eigen::Index i = 0; i < clip.samples.size(); ++i) {
    double t = static_cast<double>(i) / fs;
    bool inside = false;
    for (const WindowDraw& w : plan.windows)
      // Keep clear of the rounding at window edges.
      if (t >= w.start_s - 1.0 / fs && t <= w.end_s + 1.0 / fs) inside = true;
    if (!inside) CHECK(out.samples[i] == clip.samples[i]);
  }
}

TEST_CASE("each window's peak is restored to its original level") {
  AugmentConfig cfg;
  cfg.p_noise = 1.0;  // guarantee every window is touched
  AudioBuffer clip = random_clip(30.0, 14);
  uint64_t seed = 909;
  AugmentPlan plan = plan_augmentation(clip.duration_seconds(), cfg, seed);
  AudioBuffer out = augment_clip(clip, cfg, seed);
  int fs = clip.sample_rate;
  for (const WindowDraw& w : plan.windows) {
    Eigen::Index begin = static_cast<Eigen::Index>(std::llround(w.start_s * fs));
    Eigen::Index end = static_cast<Eigen::Index>(std::llround(w.end_s * fs));
    float before = clip.samples.segment(begin, end - begin).abs().maxCoeff();
    float after = out.samples.segment(begin, end - begin).abs().maxCoeff();
    CHECK(after == doctest::Approx(before).epsilon(1e-4));
  }
}

TEST_SUITE_END();
