// src/audio_io.cpp

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

#include "bst/audio_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace bst {

namespace {

constexpr uint16_t kFormatPcm = 0x0001;
constexpr uint16_t kFormatFloat = 0x0003;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint32_t read_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
         static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

uint16_t read_u16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | p[1] << 8);
}

int32_t decode_pcm24(const uint8_t* p) {
  int32_t v = p[0] | p[1] << 8 | p[2] << 16;
  if (v & 0x800000) v -= 0x1000000;
  return v;
}

}  // namespace

AudioBuffer load_audio(const std::string& path, int target_rate) {
  if (target_rate <= 0)
    throw std::runtime_error("load_audio: target_rate must be positive");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_audio: cannot open " + path);
  std::vector<uint8_t> raw((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
  if (raw.size() < 12 || std::memcmp(raw.data(), "RIFF", 4) != 0 ||
      std::memcmp(raw.data() + 8, "WAVE", 4) != 0)
    throw std::runtime_error("load_audio: not a RIFF/WAVE file: " + path);

  uint16_t format_tag = 0, channels = 0, bits = 0;
  uint32_t rate = 0;
  const uint8_t* data = nullptr;
  size_t data_len = 0;
  bool have_fmt = false;

  size_t pos = 12;
  while (pos + 8 <= raw.size()) {
    const uint8_t* hdr = raw.data() + pos;
    uint32_t chunk_len = read_u32(hdr + 4);
    const uint8_t* body = hdr + 8;
    size_t avail = raw.size() - pos - 8;
    size_t len = std::min<size_t>(chunk_len, avail);
    if (std::memcmp(hdr, "fmt ", 4) == 0 && len >= 16) {
      format_tag = read_u16(body);
      channels = read_u16(body + 2);
      rate = read_u32(body + 4);
      bits = read_u16(body + 14);
      if (format_tag == kFormatExtensible && len >= 40)
        format_tag = read_u16(body + 24);  // first two bytes of SubFormat GUID
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = body;
      data_len = len;
    }
    pos += 8 + len + (len & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data == nullptr)
    throw std::runtime_error("load_audio: missing fmt/data chunk: " + path);
  if (channels == 0 || rate == 0)
    throw std::runtime_error("load_audio: malformed fmt chunk: " + path);
  bool is_float = format_tag == kFormatFloat;
  if (format_tag != kFormatPcm && !is_float)
    throw std::runtime_error("load_audio: unsupported encoding in " + path);
  if ((is_float && bits != 32) ||
      (!is_float && bits != 16 && bits != 24 && bits != 32))
    throw std::runtime_error("load_audio: unsupported bit depth in " + path);

  size_t bytes_per_sample = bits / 8;
  size_t frame_bytes = bytes_per_sample * channels;
  size_t frames = data_len / frame_bytes;
  if (frames == 0) throw std::runtime_error("load_audio: zero-length audio");

  // Downmix by channel mean while decoding; accumulate in double so large
  // channel counts do not lose precision.
  Eigen::ArrayXf mono(frames);
  for (size_t f = 0; f < frames; ++f) {
    const uint8_t* frame = data + f * frame_bytes;
    double acc = 0.0;
    for (size_t c = 0; c < channels; ++c) {
      const uint8_t* s = frame + c * bytes_per_sample;
      if (is_float) {
        float v;
        std::memcpy(&v, s, 4);
        acc += v;
      } else if (bits == 16) {
        acc += static_cast<int16_t>(read_u16(s)) / 32768.0;
      } else if (bits == 24) {
        acc += decode_pcm24(s) / 8388608.0;
      } else {
        acc += static_cast<int32_t>(read_u32(s)) / 2147483648.0;
      }
    }
    mono[f] = static_cast<float>(acc / channels);
  }

  AudioBuffer buf{std::move(mono), static_cast<int>(rate)};
  return resample(buf, target_rate);
}

void save_audio(const AudioBuffer& buffer, const std::string& path) {
  if (buffer.sample_rate <= 0)
    throw std::runtime_error("save_audio: invalid sample rate");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("save_audio: cannot open " + path);

  uint32_t n = static_cast<uint32_t>(buffer.samples.size());
  uint32_t rate = static_cast<uint32_t>(buffer.sample_rate);
  uint32_t data_bytes = n * 2;
  uint32_t byte_rate = rate * 2;

  uint8_t hdr[44];
  std::memcpy(hdr, "RIFF", 4);
  uint32_t riff_len = 36 + data_bytes;
  std::memcpy(hdr + 4, &riff_len, 4);
  std::memcpy(hdr + 8, "WAVEfmt ", 8);
  uint32_t fmt_len = 16;
  std::memcpy(hdr + 16, &fmt_len, 4);
  uint16_t tag = kFormatPcm, channels = 1, block = 2, bits = 16;
  std::memcpy(hdr + 20, &tag, 2);
  std::memcpy(hdr + 22, &channels, 2);
  std::memcpy(hdr + 24, &rate, 4);
  std::memcpy(hdr + 28, &byte_rate, 4);
  std::memcpy(hdr + 32, &block, 2);
  std::memcpy(hdr + 34, &bits, 2);
  std::memcpy(hdr + 36, "data", 4);
  std::memcpy(hdr + 40, &data_bytes, 4);
  out.write(reinterpret_cast<const char*>(hdr), 44);

  std::vector<int16_t> pcm(n);
  for (uint32_t i = 0; i < n; ++i) {
    double v = std::llround(buffer.samples[i] * 32768.0);
    pcm[i] = static_cast<int16_t>(std::clamp(v, -32768.0, 32767.0));
  }
  out.write(reinterpret_cast<const char*>(pcm.data()), data_bytes);
  if (!out) throw std::runtime_error("save_audio: write failed: " + path);
}

AudioBuffer resample(const AudioBuffer& buffer, int target_rate) {
  if (target_rate <= 0)
    throw std::runtime_error("resample: target_rate must be positive");
  if (target_rate == buffer.sample_rate) return buffer;
  double ratio = static_cast<double>(target_rate) / buffer.sample_rate;
  return {resample_ratio(buffer.samples, ratio), target_rate};
}

Eigen::ArrayXf resample_ratio(const Eigen::ArrayXf& x, double ratio) {
  if (!(ratio > 0.0))
    throw std::runtime_error("resample_ratio: ratio must be positive");
  Eigen::Index n = x.size();
  Eigen::Index out_len = static_cast<Eigen::Index>(std::llround(n * ratio));
  Eigen::ArrayXf y(out_len);

  // Band-limited interpolation: each output sample is a Blackman-windowed
  // sinc sum over its input neighborhood.  When downsampling, the sinc is
  // widened (cutoff scaled by the ratio) so it also anti-aliases.
  constexpr int kHalfTaps = 32;
  double scale = std::min(1.0, ratio);
  double half_width = kHalfTaps / scale;
  for (Eigen::Index i = 0; i < out_len; ++i) {
    double center = i / ratio;
    Eigen::Index lo =
        std::max<Eigen::Index>(0, static_cast<Eigen::Index>(
                                      std::ceil(center - half_width)));
    Eigen::Index hi =
        std::min<Eigen::Index>(n - 1, static_cast<Eigen::Index>(
                                          std::floor(center + half_width)));
    double acc = 0.0;
    for (Eigen::Index j = lo; j <= hi; ++j) {
      double u = j - center;
      double t = scale * u;
      double sinc = std::abs(t) < 1e-12 ? 1.0 : std::sin(M_PI * t) / (M_PI * t);
      double w = u / half_width;  // in [-1, 1]
      double window = 0.42 + 0.5 * std::cos(M_PI * w) +
                      0.08 * std::cos(2.0 * M_PI * w);
      acc += x[j] * scale * sinc * window;
    }
    y[i] = static_cast<float>(acc);
  }
  return y;
}

AudioBuffer peak_normalize(const AudioBuffer& buffer, float target_peak) {
  if (!(target_peak > 0.0f && target_peak <= 1.0f))
    throw std::runtime_error("peak_normalize: target_peak must be in (0,1]");
  if (buffer.samples.size() == 0) return buffer;
  float peak = buffer.samples.abs().maxCoeff();
  if (peak == 0.0f) return buffer;
  AudioBuffer out = buffer;
  out.samples *= target_peak / peak;
  return out;
}

}  // namespace bst
