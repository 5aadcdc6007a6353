// src/cli.cpp

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

#include "bst/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "bst/diar.hpp"
#include "bst/metrics.hpp"
#include "bst/rng.hpp"
#include "bst/unicode.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace bst {

namespace {

bool log_enabled() {
  const char* level = std::getenv("BST_LOG");
  if (level == nullptr) return true;
  std::string v(level);
  return v != "quiet" && v != "error" && v != "off";
}

void log_info(std::ostream& err, const std::string& message) {
  if (log_enabled()) err << "[bst] " << message << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> read_lines(const std::string& path) {
  std::string content = read_file(path);
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(content);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// All file outputs go through write-temp-then-rename so a crash never
// leaves a half-written artifact behind.
void write_file_atomic(const std::string& path, const std::string& content) {
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  fs::rename(tmp, path);
}

void save_audio_atomic(const AudioBuffer& buffer, const std::string& path) {
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  std::string tmp = path + ".tmp";
  save_audio(buffer, tmp);
  fs::rename(tmp, path);
}

std::string stem_of(const std::string& path) {
  return fs::path(path).stem().string();
}

// Hypothesis files carry one hypothesis per line, either plain text or a
// JSON object with a "text" field.
std::string hypothesis_text(const std::string& line) {
  std::string trimmed = collapse_whitespace(line);
  if (!trimmed.empty() && trimmed.front() == '{')
    return json::parse(trimmed).at("text").get<std::string>();
  return trimmed;
}

bool parse_bool(const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::runtime_error("expected a boolean, got '" + value + "'");
}

// Runs fn(i) for i in [0, count) on `workers` threads.  Results must be
// written to pre-sized slots so completion order cannot matter.
void parallel_for(int workers, size_t count,
                  const std::function<void(size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(count);
  int spawn = std::min<int>(workers, static_cast<int>(count));
  for (int t = 0; t < spawn; ++t) {
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
}

ordered_json chunk_to_json(const std::string& uri, const ChunkRecord& rec) {
  ordered_json row;
  row["uri"] = uri;
  row["index"] = rec.index;
  row["start_s"] = rec.start_s;
  row["end_s"] = rec.end_s;
  row["padded"] = rec.padded;
  return row;
}

ordered_json wer_to_json(const WerReport& rep) {
  ordered_json obj;
  obj["wer"] = rep.wer;
  obj["substitutions"] = rep.substitutions;
  obj["deletions"] = rep.deletions;
  obj["insertions"] = rep.insertions;
  obj["ref_words"] = rep.ref_words;
  return obj;
}

ordered_json der_to_json(const DerReport& rep) {
  ordered_json obj;
  obj["der"] = rep.der;
  obj["false_alarm_s"] = rep.false_alarm_s;
  obj["missed_s"] = rep.missed_s;
  obj["confusion_s"] = rep.confusion_s;
  obj["total_s"] = rep.total_s;
  obj["mapping"] = rep.mapping;
  return obj;
}

const char* room_name(RoomSize room) {
  switch (room) {
    case RoomSize::kSmall: return "small";
    case RoomSize::kMedium: return "medium";
    case RoomSize::kLarge: return "large";
  }
  return "medium";
}

ordered_json plan_to_json(const std::string& uri, const AugmentPlan& plan) {
  ordered_json obj;
  obj["uri"] = uri;
  obj["seed"] = plan.seed;
  ordered_json windows = ordered_json::array();
  for (const WindowDraw& w : plan.windows) {
    ordered_json jw;
    jw["start_s"] = w.start_s;
    jw["end_s"] = w.end_s;
    ordered_json effects = ordered_json::array();
    if (w.noise) {
      effects.push_back({{"effect", "noise"},
                         {"kind", w.noise_kind == NoiseKind::kPink ? "pink"
                                                                   : "white"},
                         {"snr_db", w.snr_db}});
    }
    if (w.echo) {
      ordered_json taps = ordered_json::array();
      for (const EchoTap& tap : w.echo_taps)
        taps.push_back({{"delay_ms", tap.delay_ms},
                        {"amplitude", tap.amplitude}});
      effects.push_back({{"effect", "echo"}, {"taps", taps}});
    }
    if (w.reverb)
      effects.push_back({{"effect", "reverb"},
                         {"room", room_name(w.rir.room_size)},
                         {"rt60_s", w.rir.rt60_s}});
    if (w.clip)
      effects.push_back({{"effect", "clip"}, {"clip_frac", w.clip_frac}});
    if (w.bandpass) effects.push_back({{"effect", "bandpass"}});
    if (w.pitch)
      effects.push_back({{"effect", "pitch"},
                         {"semitones", w.pitch_semitones}});
    if (w.stretch)
      effects.push_back({{"effect", "stretch"}, {"rate", w.stretch_rate}});
    jw["effects"] = std::move(effects);
    windows.push_back(std::move(jw));
  }
  obj["windows"] = std::move(windows);
  return obj;
}

// ---------------------------------------------------------------------------
// Subcommand implementations.  Every handler is a thin composition of module
// calls plus I/O; no pipeline logic lives only here.
// ---------------------------------------------------------------------------

int run_chunk(const PipelineConfig& cfg, const std::vector<std::string>& inputs,
              bool inference, const std::string& out_dir, std::ostream& out,
              std::ostream& err) {
  for (const std::string& input : inputs) {
    std::string uri = stem_of(input);
    AudioBuffer audio = load_audio(input);
    std::vector<ChunkRecord> chunks =
        inference ? chunk_for_inference(audio, cfg.chunk)
                  : chunk_for_training(audio, cfg.chunk);
    for (const ChunkRecord& rec : chunks) {
      if (!out_dir.empty()) {
        char name[64];
        std::snprintf(name, sizeof name, "%s_%04d.wav", uri.c_str(),
                      rec.index);
        save_audio_atomic(rec.samples, (fs::path(out_dir) / name).string());
      }
      out << chunk_to_json(uri, rec).dump() << "\n";
    }
    log_info(err, uri + ": " + std::to_string(chunks.size()) + " chunks");
  }
  return 0;
}

int run_align(const PipelineConfig& cfg, const std::string& gt_path,
              const std::string& hyp_path, const std::string& uri,
              std::ostream& out, std::ostream& err) {
  std::vector<std::string> gt_words = split_words(read_file(gt_path));
  std::vector<std::string> hyps;
  for (const std::string& line : read_lines(hyp_path))
    hyps.push_back(hypothesis_text(line));
  std::vector<AlignedChunk> aligned = align_chunks(gt_words, hyps, cfg.align);
  int low = 0;
  for (const AlignedChunk& chunk : aligned) {
    ordered_json row;
    row["uri"] = uri;
    row["chunk_index"] = chunk.chunk_index;
    row["gt_start_word"] = chunk.gt_start_word;
    row["gt_end_word"] = chunk.gt_end_word;
    row["score"] = chunk.score;
    row["low_confidence"] = chunk.low_confidence;
    std::string text;
    for (int i = chunk.gt_start_word; i < chunk.gt_end_word; ++i) {
      if (i > chunk.gt_start_word) text.push_back(' ');
      text += gt_words[i];
    }
    row["text"] = text;
    if (chunk.low_confidence) ++low;
    out << row.dump() << "\n";
  }
  log_info(err, uri + ": " + std::to_string(aligned.size()) + " chunks, " +
                    std::to_string(low) + " low-confidence");
  return 0;
}

int run_normalize(const PipelineConfig& cfg,
                  const std::vector<std::string>& inputs, std::istream& in,
                  std::ostream& out, std::ostream& err) {
  std::vector<std::string> warnings;
  if (inputs.empty()) {
    std::stringstream buf;
    buf << in.rdbuf();
    out << normalize_transcript(buf.str(), cfg.norm, &warnings) << "\n";
  } else {
    for (const std::string& input : inputs)
      out << normalize_transcript(read_file(input), cfg.norm, &warnings)
          << "\n";
  }
  for (const std::string& w : warnings) err << "[bst] warning: " << w << "\n";
  return 0;
}

int run_postprocess(const PipelineConfig& cfg,
                    const std::vector<std::string>& inputs, std::istream& in,
                    std::ostream& out) {
  if (inputs.empty()) {
    std::stringstream buf;
    buf << in.rdbuf();
    out << postprocess_transcript(buf.str(), cfg.dedup) << "\n";
  } else {
    for (const std::string& input : inputs)
      out << postprocess_transcript(read_file(input), cfg.dedup) << "\n";
  }
  return 0;
}

int run_augment(const PipelineConfig& cfg,
                const std::vector<std::string>& inputs,
                const std::string& out_dir, bool dump_plan, std::ostream& out,
                std::ostream& err) {
  std::vector<ordered_json> plans(inputs.size());
  parallel_for(cfg.workers, inputs.size(), [&](size_t i) {
    std::string uri = stem_of(inputs[i]);
    uint64_t seed = derive_seed(cfg.global_seed, uri);
    AudioBuffer audio = load_audio(inputs[i]);
    if (dump_plan) {
      plans[i] = plan_to_json(
          uri, plan_augmentation(audio.duration_seconds(), cfg.augment, seed));
      return;
    }
    AudioBuffer augmented = augment_clip(audio, cfg.augment, seed);
    save_audio_atomic(augmented,
                      (fs::path(out_dir) / (uri + ".wav")).string());
    plans[i] = plan_to_json(
        uri, plan_augmentation(audio.duration_seconds(), cfg.augment, seed));
  });
  for (size_t i = 0; i < inputs.size(); ++i) {
    out << plans[i].dump() << "\n";
    log_info(err, stem_of(inputs[i]) + ": augmented");
  }
  return 0;
}

int run_convert(const std::string& from, const std::string& to,
                const std::vector<std::string>& inputs, std::string uri,
                double duration, bool resolve, const std::string& root,
                const std::map<std::string, std::vector<std::string>>& splits,
                std::ostream& out) {
  if (to == "manifest") {
    out << emit_corpus_manifest(splits, root);
    return 0;
  }
  if (to == "lst") {
    std::vector<std::string> uris;
    for (const std::string& input : inputs) uris.push_back(stem_of(input));
    out << write_lst(uris);
    return 0;
  }
  if (inputs.size() != 1)
    throw std::runtime_error("convert: expected exactly one input file");
  if (uri.empty()) uri = stem_of(inputs[0]);

  std::vector<DiarizationSegment> segments;
  if (from == "csv") {
    segments = parse_annotation_csv(read_file(inputs[0]));
  } else if (from == "rttm") {
    auto by_uri = parse_rttm(read_file(inputs[0]));
    if (by_uri.size() == 1) {
      uri = by_uri.begin()->first;
      segments = by_uri.begin()->second;
    } else if (by_uri.count(uri)) {
      segments = by_uri.at(uri);
    } else {
      throw std::runtime_error("convert: uri '" + uri + "' not in RTTM");
    }
  } else {
    throw std::runtime_error("convert: unsupported --from '" + from + "'");
  }
  if (resolve) segments = resolve_overlaps(std::move(segments));

  if (to == "rttm") {
    out << write_rttm(uri, segments);
  } else if (to == "uem") {
    double total = duration;
    if (total <= 0.0)
      for (const DiarizationSegment& s : segments)
        total = std::max(total, s.end_s);
    out << write_uem(uri, total);
  } else if (to == "json") {
    out << segments_to_json(segments) << "\n";
  } else {
    throw std::runtime_error("convert: unsupported --to '" + to + "'");
  }
  return 0;
}

int run_filter_diar(const std::string& input, double min_duration,
                    bool resolve, std::ostream& out) {
  auto by_uri = parse_rttm(read_file(input));
  for (auto& [uri, segments] : by_uri) {
    if (resolve) segments = resolve_overlaps(std::move(segments));
    out << write_rttm(uri, filter_min_duration(std::move(segments),
                                               min_duration));
  }
  return 0;
}

std::vector<std::string> text_files_in(const std::string& dir) {
  std::vector<std::string> files;
  for (const fs::directory_entry& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".txt")
      files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

int run_score_wer(const std::string& ref_path, const std::string& hyp_path,
                  bool raw, const PipelineConfig& cfg, std::ostream& out) {
  auto score_pair = [&](const std::string& ref_file,
                        const std::string& hyp_file) {
    std::string ref = read_file(ref_file), hyp = read_file(hyp_file);
    if (!raw) {
      ref = normalize_transcript(ref, cfg.norm);
      hyp = normalize_transcript(hyp, cfg.norm);
    }
    return wer(ref, hyp);
  };
  if (!fs::is_directory(ref_path)) {
    out << wer_to_json(score_pair(ref_path, hyp_path)).dump() << "\n";
    return 0;
  }
  ordered_json files = ordered_json::object();
  long total_errors = 0, total_words = 0;
  int s = 0, d = 0, i = 0;
  for (const std::string& ref_file : text_files_in(ref_path)) {
    fs::path hyp_file = fs::path(hyp_path) / fs::path(ref_file).filename();
    if (!fs::exists(hyp_file)) continue;
    WerReport rep = score_pair(ref_file, hyp_file.string());
    files[stem_of(ref_file)] = wer_to_json(rep);
    total_errors += rep.substitutions + rep.deletions + rep.insertions;
    total_words += rep.ref_words;
    s += rep.substitutions;
    d += rep.deletions;
    i += rep.insertions;
  }
  if (total_words == 0) throw std::runtime_error("score wer: no matched files");
  ordered_json report;
  report["files"] = std::move(files);
  ordered_json agg;
  agg["wer"] = static_cast<double>(total_errors) / total_words;
  agg["substitutions"] = s;
  agg["deletions"] = d;
  agg["insertions"] = i;
  agg["ref_words"] = total_words;
  report["aggregate"] = std::move(agg);
  out << report.dump() << "\n";
  return 0;
}

int run_score_der(const std::string& ref_path, const std::string& hyp_path,
                  double collar, const std::string& uem_path,
                  std::ostream& out) {
  auto ref_by_uri = parse_rttm(read_file(ref_path));
  std::map<std::string, std::vector<DiarizationSegment>> hyp_by_uri;
  std::string hyp_content = read_file(hyp_path);
  if (fs::path(hyp_path).extension() == ".json") {
    // A bare JSON segment array scores against a single-uri reference.
    if (ref_by_uri.size() != 1)
      throw std::runtime_error(
          "score der: JSON hypothesis needs a single-uri reference");
    hyp_by_uri[ref_by_uri.begin()->first] = segments_from_json(hyp_content);
  } else {
    hyp_by_uri = parse_rttm(hyp_content);
  }
  std::map<std::string, std::pair<double, double>> uem;
  if (!uem_path.empty()) uem = parse_uem(read_file(uem_path));

  ordered_json files = ordered_json::object();
  DerReport agg;
  for (const auto& [uri, ref_segments] : ref_by_uri) {
    std::vector<DiarizationSegment> hyp_segments;
    if (auto it = hyp_by_uri.find(uri); it != hyp_by_uri.end())
      hyp_segments = it->second;
    std::optional<std::pair<double, double>> interval;
    if (auto it = uem.find(uri); it != uem.end()) interval = it->second;
    DerReport rep = der(ref_segments, hyp_segments, collar, interval);
    files[uri] = der_to_json(rep);
    agg.false_alarm_s += rep.false_alarm_s;
    agg.missed_s += rep.missed_s;
    agg.confusion_s += rep.confusion_s;
    agg.total_s += rep.total_s;
  }
  if (ref_by_uri.empty())
    throw std::runtime_error("score der: reference RTTM is empty");
  agg.der = (agg.false_alarm_s + agg.missed_s + agg.confusion_s) / agg.total_s;
  if (ref_by_uri.size() == 1) {
    out << files.begin().value().dump() << "\n";
    return 0;
  }
  ordered_json report;
  report["files"] = std::move(files);
  ordered_json jagg = der_to_json(agg);
  jagg.erase("mapping");  // per-file mappings are not comparable corpus-wide
  report["aggregate"] = std::move(jagg);
  out << report.dump() << "\n";
  return 0;
}

int run_score_rtf(double time_s, double duration_s, std::ostream& out) {
  RtfReport rep = rtf(time_s, duration_s);
  ordered_json obj;
  obj["rtf"] = rep.rtf;
  obj["inference_s"] = rep.inference_s;
  obj["audio_s"] = rep.audio_s;
  out << obj.dump() << "\n";
  return 0;
}

int run_prepare_asr(const PipelineConfig& cfg, const std::string& audio_path,
                    const std::string& gt_path, const std::string& hyps_path,
                    const std::string& out_dir, std::ostream& out,
                    std::ostream& err) {
  std::string uri = stem_of(audio_path);
  AudioBuffer audio = load_audio(audio_path);
  std::vector<ChunkRecord> chunks = chunk_for_training(audio, cfg.chunk);

  std::vector<std::string> hyps;
  for (const std::string& line : read_lines(hyps_path))
    hyps.push_back(hypothesis_text(line));
  if (hyps.size() != chunks.size())
    throw std::runtime_error(
        "prepare-asr: " + std::to_string(chunks.size()) + " chunks but " +
        std::to_string(hyps.size()) + " hypotheses in " + hyps_path);

  std::vector<std::string> gt_words = split_words(read_file(gt_path));
  std::vector<AlignedChunk> aligned = align_chunks(gt_words, hyps, cfg.align);

  std::vector<std::string> warnings;
  for (size_t i = 0; i < chunks.size(); ++i) {
    char name[64];
    std::snprintf(name, sizeof name, "%s_%04d.wav", uri.c_str(),
                  chunks[i].index);
    std::string wav_path = (fs::path(out_dir) / name).string();
    save_audio_atomic(chunks[i].samples, wav_path);

    std::string span;
    for (int w = aligned[i].gt_start_word; w < aligned[i].gt_end_word; ++w) {
      if (w > aligned[i].gt_start_word) span.push_back(' ');
      span += gt_words[w];
    }
    ordered_json row;
    row["audio"] = wav_path;
    row["start_s"] = chunks[i].start_s;
    row["end_s"] = chunks[i].end_s;
    row["text"] = normalize_transcript(span, cfg.norm, &warnings);
    row["score"] = aligned[i].score;
    out << row.dump() << "\n";
  }
  for (const std::string& w : warnings) err << "[bst] warning: " << w << "\n";
  log_info(err, uri + ": " + std::to_string(chunks.size()) +
                    " training rows written to " + out_dir);
  return 0;
}

int run_prepare_diar(const std::vector<std::string>& csv_inputs,
                     const std::string& out_dir, int dev_count,
                     std::ostream& out, std::ostream& err) {
  if (csv_inputs.empty())
    throw std::runtime_error("prepare-diar: no input CSV files");
  if (dev_count < 0 || dev_count > static_cast<int>(csv_inputs.size()))
    throw std::runtime_error("prepare-diar: bad --dev-count");

  struct Entry {
    std::string uri;
    std::vector<DiarizationSegment> segments;
    double duration = 0.0;
  };
  std::vector<Entry> entries;
  for (const std::string& input : csv_inputs) {
    Entry e;
    e.uri = stem_of(input);
    e.segments = resolve_overlaps(parse_annotation_csv(read_file(input)));
    for (const DiarizationSegment& s : e.segments)
      e.duration = std::max(e.duration, s.end_s);
    entries.push_back(std::move(e));
  }

  // The last dev_count files are the development split; the rest train.
  size_t split_at = entries.size() - static_cast<size_t>(dev_count);
  std::map<std::string, std::vector<std::string>> splits = {
      {"train", {}}, {"development", {}}, {"test", {}}};
  std::map<std::string, std::string> rttm = {{"train", ""},
                                             {"development", ""},
                                             {"test", ""}};
  std::map<std::string, std::string> uem = rttm;
  for (size_t i = 0; i < entries.size(); ++i) {
    const std::string split = i < split_at ? "train" : "development";
    splits[split].push_back(entries[i].uri);
    rttm[split] += write_rttm(entries[i].uri, entries[i].segments);
    uem[split] += write_uem(entries[i].uri, entries[i].duration);
  }

  for (const char* split : {"train", "development", "test"}) {
    write_file_atomic((fs::path(out_dir) / "rttm" / (std::string(split) +
                                                     ".rttm")).string(),
                      rttm[split]);
    write_file_atomic((fs::path(out_dir) / "uem" / (std::string(split) +
                                                    ".uem")).string(),
                      uem[split]);
    std::string lst =
        splits[split].empty() ? "" : write_lst(splits[split]);
    write_file_atomic((fs::path(out_dir) / "lists" / (std::string(split) +
                                                      ".lst")).string(),
                      lst);
  }
  write_file_atomic((fs::path(out_dir) / "database.yml").string(),
                    emit_corpus_manifest(splits, out_dir));

  ordered_json summary;
  summary["train"] = splits["train"];
  summary["development"] = splits["development"];
  summary["test"] = splits["test"];
  summary["manifest"] = (fs::path(out_dir) / "database.yml").string();
  out << summary.dump() << "\n";
  log_info(err, "corpus written to " + out_dir);
  return 0;
}

}  // namespace

PipelineConfig load_pipeline_config(const std::string& path) {
  PipelineConfig cfg;
  std::vector<std::string> lines = read_lines(path);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string trimmed = collapse_whitespace(line);
    if (trimmed.empty()) continue;
    size_t eq = trimmed.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(i + 1) +
                               ": expected key=value");
    std::string key = collapse_whitespace(trimmed.substr(0, eq));
    std::string value = collapse_whitespace(trimmed.substr(eq + 1));
    try {
      apply_config_entry(&cfg, key, value);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(i + 1) + ": " +
                               e.what());
    }
  }
  return cfg;
}

void apply_config_entry(PipelineConfig* cfg, const std::string& key,
                        const std::string& value) {
  auto as_f = [&] { return std::stod(value); };
  auto as_i = [&] { return std::stoi(value); };

  if (key == "global_seed") cfg->global_seed = std::stoull(value);
  else if (key == "workers") cfg->workers = as_i();
  else if (key == "chunk_seconds") cfg->chunk.chunk_seconds = as_f();
  else if (key == "min_tail_seconds") cfg->chunk.min_tail_seconds = as_f();
  else if (key == "silence_rms_threshold")
    cfg->chunk.silence_rms_threshold = as_f();
  else if (key == "window_words") cfg->align.window_words = as_i();
  else if (key == "span_delta_words") cfg->align.span_delta_words = as_i();
  else if (key == "low_confidence_threshold")
    cfg->align.low_confidence_threshold = as_i();
  else if (key == "year_lo") cfg->norm.year_lo = as_i();
  else if (key == "year_hi") cfg->norm.year_hi = as_i();
  else if (key == "allowed_punct")
    cfg->norm.allowed_punct = decode_utf8(value);
  else if (key == "strip_joiners") cfg->norm.strip_joiners = parse_bool(value);
  else if (key == "coverage") cfg->augment.coverage = as_f();
  else if (key == "window_lo_s") cfg->augment.window_lo_s = as_f();
  else if (key == "window_hi_s") cfg->augment.window_hi_s = as_f();
  else if (key == "p_noise") cfg->augment.p_noise = as_f();
  else if (key == "p_echo") cfg->augment.p_echo = as_f();
  else if (key == "p_reverb") cfg->augment.p_reverb = as_f();
  else if (key == "p_clip") cfg->augment.p_clip = as_f();
  else if (key == "p_bandpass") cfg->augment.p_bandpass = as_f();
  else if (key == "p_pitch") cfg->augment.p_pitch = as_f();
  else if (key == "p_stretch") cfg->augment.p_stretch = as_f();
  else if (key == "snr_lo_db") cfg->augment.snr_lo_db = as_f();
  else if (key == "snr_hi_db") cfg->augment.snr_hi_db = as_f();
  else if (key == "echo_taps_lo") cfg->augment.echo_taps_lo = as_i();
  else if (key == "echo_taps_hi") cfg->augment.echo_taps_hi = as_i();
  else if (key == "echo_delay_lo_ms") cfg->augment.echo_delay_lo_ms = as_f();
  else if (key == "echo_delay_hi_ms") cfg->augment.echo_delay_hi_ms = as_f();
  else if (key == "echo_decay_lo") cfg->augment.echo_decay_lo = as_f();
  else if (key == "echo_decay_hi") cfg->augment.echo_decay_hi = as_f();
  else if (key == "rt60_small_lo_s") cfg->augment.rt60_small_lo_s = as_f();
  else if (key == "rt60_small_hi_s") cfg->augment.rt60_small_hi_s = as_f();
  else if (key == "rt60_medium_lo_s") cfg->augment.rt60_medium_lo_s = as_f();
  else if (key == "rt60_medium_hi_s") cfg->augment.rt60_medium_hi_s = as_f();
  else if (key == "rt60_large_lo_s") cfg->augment.rt60_large_lo_s = as_f();
  else if (key == "rt60_large_hi_s") cfg->augment.rt60_large_hi_s = as_f();
  else if (key == "clip_frac_lo") cfg->augment.clip_frac_lo = as_f();
  else if (key == "clip_frac_hi") cfg->augment.clip_frac_hi = as_f();
  else if (key == "band_lo_hz") cfg->augment.band_lo_hz = as_f();
  else if (key == "band_hi_hz") cfg->augment.band_hi_hz = as_f();
  else if (key == "pitch_lo_semitones")
    cfg->augment.pitch_lo_semitones = as_f();
  else if (key == "pitch_hi_semitones")
    cfg->augment.pitch_hi_semitones = as_f();
  else if (key == "stretch_lo_rate") cfg->augment.stretch_lo_rate = as_f();
  else if (key == "stretch_hi_rate") cfg->augment.stretch_hi_rate = as_f();
  else if (key == "max_phrase_words") cfg->dedup.max_phrase_words = as_i();
  else if (key == "phrase_min_repeats") cfg->dedup.phrase_min_repeats = as_i();
  else if (key == "word_min_repeats") cfg->dedup.word_min_repeats = as_i();
  else if (key == "word_keep_copies") cfg->dedup.word_keep_copies = as_i();
  else if (key == "ngram_min_chars") cfg->dedup.ngram_min_chars = as_i();
  else if (key == "ngram_max_chars") cfg->dedup.ngram_max_chars = as_i();
  else if (key == "ngram_min_repeats") cfg->dedup.ngram_min_repeats = as_i();
  else if (key == "max_iterations") cfg->dedup.max_iterations = as_i();
  else throw std::runtime_error("unknown config key '" + key + "'");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Bangla long-form speech data engineering toolkit"};
  app.set_version_flag("--version", "bst 0.1.0");
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "Flat key=value config file (flags override it)");

  // chunk
  CLI::App* chunk = app.add_subcommand(
      "chunk", "Split WAVs into fixed-length segments");
  bool inference = false;
  std::string chunk_out_dir;
  std::vector<std::string> chunk_inputs;
  chunk->add_flag("--inference", inference,
                  "Zero-pad the final chunk instead of applying the training "
                  "drop policy");
  chunk->add_option("--out-dir", chunk_out_dir, "Write chunk WAVs here");
  chunk->add_option("inputs", chunk_inputs, "Input WAV files")
      ->required()
      ->check(CLI::ExistingFile);

  // align
  CLI::App* align = app.add_subcommand(
      "align", "Assign chunk hypotheses ground-truth word spans");
  std::string align_gt, align_hyp, align_uri = "corpus";
  align->add_option("--gt", align_gt, "Ground-truth transcript (plain text)")
      ->required()
      ->check(CLI::ExistingFile);
  align->add_option("--hyp", align_hyp,
                    "Hypotheses, one per chunk per line (text or JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  align->add_option("--uri", align_uri, "Recording identifier");

  // normalize
  CLI::App* normalize = app.add_subcommand(
      "normalize", "Normalize Bangla transcript text");
  std::vector<std::string> normalize_inputs;
  normalize->add_option("inputs", normalize_inputs,
                        "Text files (default: stdin)")
      ->check(CLI::ExistingFile);

  // postprocess
  CLI::App* postprocess = app.add_subcommand(
      "postprocess", "Clean ASR output (dedup, markers, Unicode hygiene)");
  std::vector<std::string> postprocess_inputs;
  postprocess->add_option("inputs", postprocess_inputs,
                          "Text files (default: stdin)")
      ->check(CLI::ExistingFile);

  // augment
  CLI::App* augment = app.add_subcommand(
      "augment", "Apply stochastic segment-level augmentation");
  uint64_t seed = 0;
  std::string augment_out_dir = ".";
  bool dump_plan = false;
  int workers_flag = 0;
  std::vector<std::string> augment_inputs;
  augment->add_option("--seed", seed, "Global seed (per-file seeds derive "
                                      "from it and the uri)");
  augment->add_option("--out-dir", augment_out_dir,
                      "Write augmented WAVs here");
  augment->add_flag("--plan-only", dump_plan,
                    "Print plans without writing audio");
  augment->add_option("--workers", workers_flag, "Parallel file workers");
  augment->add_option("inputs", augment_inputs, "Input WAV files")
      ->required()
      ->check(CLI::ExistingFile);

  // convert
  CLI::App* convert = app.add_subcommand(
      "convert", "Convert among CSV, RTTM, UEM, LST, JSON, manifest");
  std::string from = "csv", to = "rttm", convert_uri, convert_root = ".";
  double convert_duration = 0.0;
  bool convert_resolve = false;
  std::vector<std::string> convert_inputs, train_uris, dev_uris, test_uris;
  convert->add_option("--from", from, "Input format: csv|rttm");
  convert->add_option("--to", to,
                      "Output format: rttm|uem|lst|json|manifest");
  convert->add_option("--uri", convert_uri, "Recording identifier "
                                            "(default: file stem)");
  convert->add_option("--duration", convert_duration,
                      "Total duration for UEM output");
  convert->add_flag("--resolve-overlaps", convert_resolve,
                    "Apply the single-label overlap policy first");
  convert->add_option("--root", convert_root, "Manifest root directory");
  convert->add_option("--train", train_uris, "Manifest train uris");
  convert->add_option("--development", dev_uris, "Manifest development uris");
  convert->add_option("--test", test_uris, "Manifest test uris");
  convert->add_option("inputs", convert_inputs, "Input files");

  // filter-diar
  CLI::App* filter = app.add_subcommand(
      "filter-diar", "Drop ultra-short segments from an RTTM");
  std::string filter_input;
  double min_duration = 0.3;
  bool filter_resolve = false;
  filter->add_option("input", filter_input, "Input RTTM")
      ->required()
      ->check(CLI::ExistingFile);
  filter->add_option("--min-duration", min_duration,
                     "Keep segments at least this long (seconds)");
  filter->add_flag("--resolve-overlaps", filter_resolve,
                   "Apply the single-label overlap policy first");

  // score
  CLI::App* score = app.add_subcommand("score", "Compute WER, DER, or RTF");
  score->require_subcommand(1);
  CLI::App* score_wer = score->add_subcommand("wer", "Word error rate");
  std::string wer_ref, wer_hyp;
  bool wer_raw = false;
  score_wer->add_option("--ref", wer_ref, "Reference text file or directory")
      ->required();
  score_wer->add_option("--hyp", wer_hyp, "Hypothesis text file or directory")
      ->required();
  score_wer->add_flag("--raw", wer_raw,
                      "Score verbatim without transcript normalization");
  CLI::App* score_der = score->add_subcommand("der",
                                              "Diarization error rate");
  std::string der_ref, der_hyp, der_uem;
  double collar = 0.0;
  score_der->add_option("--ref", der_ref, "Reference RTTM")
      ->required()
      ->check(CLI::ExistingFile);
  score_der->add_option("--hyp", der_hyp, "Hypothesis RTTM or JSON segments")
      ->required()
      ->check(CLI::ExistingFile);
  score_der->add_option("--collar", collar,
                        "Seconds excluded around reference boundaries");
  score_der->add_option("--uem", der_uem, "UEM scoring regions")
      ->check(CLI::ExistingFile);
  CLI::App* score_rtf = score->add_subcommand("rtf", "Real-time factor");
  double rtf_time = 0.0, rtf_duration = 0.0;
  score_rtf->add_option("--time", rtf_time, "Inference wall time (seconds)")
      ->required();
  score_rtf->add_option("--duration", rtf_duration,
                        "Audio duration (seconds)")
      ->required();

  // prepare-asr
  CLI::App* prepare_asr = app.add_subcommand(
      "prepare-asr", "Chunk, align, and normalize one recording into "
                     "training rows");
  std::string pa_audio, pa_gt, pa_hyps, pa_out_dir;
  prepare_asr->add_option("--audio", pa_audio, "Input WAV")
      ->required()
      ->check(CLI::ExistingFile);
  prepare_asr->add_option("--gt", pa_gt, "Ground-truth transcript")
      ->required()
      ->check(CLI::ExistingFile);
  prepare_asr->add_option("--hyps", pa_hyps,
                          "Chunk hypotheses, one per line")
      ->required()
      ->check(CLI::ExistingFile);
  prepare_asr->add_option("--out-dir", pa_out_dir, "Chunk WAV directory")
      ->required();

  // prepare-diar
  CLI::App* prepare_diar = app.add_subcommand(
      "prepare-diar", "Build RTTM/UEM/LST/manifest corpus from CSVs");
  std::string pd_out_dir;
  int dev_count = 2;
  std::vector<std::string> pd_inputs;
  prepare_diar->add_option("--out-dir", pd_out_dir, "Corpus root directory")
      ->required();
  prepare_diar->add_option("--dev-count", dev_count,
                           "Reserve this many trailing files for the "
                           "development split");
  prepare_diar->add_option("inputs", pd_inputs, "Annotation CSVs in corpus "
                                                "order")
      ->required()
      ->check(CLI::ExistingFile);

  std::vector<const char*> argv;
  argv.push_back("bst");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    err << "Run with --help for usage.\n";
    return 2;
  }

  try {
    PipelineConfig cfg;
    if (!config_path.empty()) cfg = load_pipeline_config(config_path);
    if (augment->count("--seed")) cfg.global_seed = seed;
    if (workers_flag > 0) cfg.workers = workers_flag;

    if (*chunk)
      return run_chunk(cfg, chunk_inputs, inference, chunk_out_dir, out, err);
    if (*align) return run_align(cfg, align_gt, align_hyp, align_uri, out, err);
    if (*normalize)
      return run_normalize(cfg, normalize_inputs, std::cin, out, err);
    if (*postprocess)
      return run_postprocess(cfg, postprocess_inputs, std::cin, out);
    if (*augment)
      return run_augment(cfg, augment_inputs, augment_out_dir, dump_plan, out,
                         err);
    if (*convert) {
      std::map<std::string, std::vector<std::string>> splits;
      if (to == "manifest") {
        splits["train"] = train_uris;
        splits["development"] = dev_uris;
        splits["test"] = test_uris;
      }
      return run_convert(from, to, convert_inputs, convert_uri,
                         convert_duration, convert_resolve, convert_root,
                         splits, out);
    }
    if (*filter)
      return run_filter_diar(filter_input, min_duration, filter_resolve, out);
    if (*score_wer) return run_score_wer(wer_ref, wer_hyp, wer_raw, cfg, out);
    if (*score_der)
      return run_score_der(der_ref, der_hyp, collar, der_uem, out);
    if (*score_rtf) return run_score_rtf(rtf_time, rtf_duration, out);
    if (*prepare_asr)
      return run_prepare_asr(cfg, pa_audio, pa_gt, pa_hyps, pa_out_dir, out,
                             err);
    if (*prepare_diar)
      return run_prepare_diar(pd_inputs, pd_out_dir, dev_count, out, err);
    err << "unknown subcommand\n";
    return 2;
  } catch (const std::exception& e) {
    err << "[bst] error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bst
