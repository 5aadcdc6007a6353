// src/chunking.cpp

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

#include "bst/chunking.hpp"

#include <cmath>
#include <stdexcept>

namespace bst {

namespace {

void check(const AudioBuffer& buffer, const ChunkConfig& cfg) {
  if (buffer.samples.size() == 0)
    throw std::runtime_error("chunking: empty buffer");
  if (!(cfg.chunk_seconds > cfg.min_tail_seconds && cfg.min_tail_seconds > 0))
    throw std::runtime_error(
        "chunking: need chunk_seconds > min_tail_seconds > 0");
}

double rms(const Eigen::ArrayXf& x) {
  return std::sqrt(x.cast<double>().square().mean());
}

ChunkRecord make_record(const AudioBuffer& buffer, int index,
                        Eigen::Index begin, Eigen::Index len) {
  ChunkRecord rec;
  rec.index = index;
  rec.start_s = static_cast<double>(begin) / buffer.sample_rate;
  rec.end_s = static_cast<double>(begin + len) / buffer.sample_rate;
  rec.samples = {buffer.samples.segment(begin, len), buffer.sample_rate};
  return rec;
}

}  // namespace

std::vector<ChunkRecord> chunk_for_training(const AudioBuffer& buffer,
                                            const ChunkConfig& cfg) {
  check(buffer, cfg);
  Eigen::Index chunk_len = static_cast<Eigen::Index>(
      std::llround(cfg.chunk_seconds * buffer.sample_rate));
  Eigen::Index n = buffer.samples.size();

  std::vector<ChunkRecord> chunks;
  Eigen::Index begin = 0;
  int index = 0;
  while (n - begin >= chunk_len) {
    chunks.push_back(make_record(buffer, index++, begin, chunk_len));
    begin += chunk_len;
  }
  Eigen::Index tail = n - begin;
  if (tail > 0) {
    double tail_s = static_cast<double>(tail) / buffer.sample_rate;
    AudioBuffer frag{buffer.samples.segment(begin, tail), buffer.sample_rate};
    bool drop = tail_s < cfg.min_tail_seconds ||
                rms(frag.samples) < cfg.silence_rms_threshold;
    if (!drop) chunks.push_back(make_record(buffer, index, begin, tail));
  }
  return chunks;
}

std::vector<ChunkRecord> chunk_for_inference(const AudioBuffer& buffer,
                                             const ChunkConfig& cfg) {
  check(buffer, cfg);
  Eigen::Index chunk_len = static_cast<Eigen::Index>(
      std::llround(cfg.chunk_seconds * buffer.sample_rate));
  Eigen::Index n = buffer.samples.size();

  std::vector<ChunkRecord> chunks;
  for (Eigen::Index begin = 0; begin < n; begin += chunk_len) {
    Eigen::Index real = std::min(chunk_len, n - begin);
    ChunkRecord rec = make_record(buffer, static_cast<int>(chunks.size()),
                                  begin, real);
    if (real < chunk_len) {
      Eigen::ArrayXf padded = Eigen::ArrayXf::Zero(chunk_len);
      padded.head(real) = rec.samples.samples;
      rec.samples.samples = std::move(padded);
      rec.padded = true;
    }
    chunks.push_back(std::move(rec));
  }
  return chunks;
}

}  // namespace bst
