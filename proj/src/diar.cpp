// src/diar.cpp

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

#include "bst/diar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bst {

namespace {

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t begin = 0;
  while (true) {
    size_t end = s.find(sep, begin);
    if (end == std::string_view::npos) {
      out.emplace_back(s.substr(begin));
      return out;
    }
    out.emplace_back(s.substr(begin, end - begin));
    begin = end + 1;
  }
}

bool parse_double(const std::string& s, double* out) {
  try {
    size_t used = 0;
    *out = std::stod(s, &used);
    return used == s.size() && !s.empty();
  } catch (const std::exception&) {
    return false;
  }
}

// "HH:MM:SS" with optional fractional seconds.
bool parse_hms(const std::string& text, double* out) {
  std::vector<std::string> parts = split(trim(text), ':');
  if (parts.size() != 3) return false;
  double h, m, s;
  if (!parse_double(parts[0], &h) || !parse_double(parts[1], &m) ||
      !parse_double(parts[2], &s))
    return false;
  if (h < 0 || m < 0 || s < 0) return false;
  *out = h * 3600.0 + m * 60.0 + s;
  return true;
}

bool contains_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n") != std::string_view::npos;
}

double round3(double x) { return std::nearbyint(x * 1000.0) / 1000.0; }

}  // namespace

std::string format_seconds(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", round3(x));
  return buf;
}

std::vector<DiarizationSegment> parse_annotation_csv(
    std::string_view content) {
  if (content.size() >= 3 && content.substr(0, 3) == "\xEF\xBB\xBF")
    content.remove_prefix(3);  // UTF-8 BOM
  std::vector<DiarizationSegment> out;
  std::vector<std::string> rows = split(content, '\n');
  for (size_t r = 0; r < rows.size(); ++r) {
    std::string row = trim(rows[r]);
    if (row.empty()) continue;
    std::vector<std::string> cols = split(row, ',');
    if (out.empty() && r == 0 && !cols.empty()) {
      std::string first = trim(cols[0]);
      // Header rows start with a field that is not a time.
      if (!first.empty() && !std::isdigit(static_cast<unsigned char>(first[0])))
        continue;
    }
    if (cols.size() < 3)
      throw std::runtime_error("parse_annotation_csv: row " +
                               std::to_string(r + 1) + ": expected 3 columns");
    DiarizationSegment seg;
    if (!parse_hms(cols[0], &seg.start_s))
      throw std::runtime_error("parse_annotation_csv: row " +
                               std::to_string(r + 1) +
                               ", column 1: malformed time '" + trim(cols[0]) +
                               "'");
    if (!parse_hms(cols[1], &seg.end_s))
      throw std::runtime_error("parse_annotation_csv: row " +
                               std::to_string(r + 1) +
                               ", column 2: malformed time '" + trim(cols[1]) +
                               "'");
    seg.speaker = trim(cols[2]);
    if (seg.speaker.empty())
      throw std::runtime_error("parse_annotation_csv: row " +
                               std::to_string(r + 1) +
                               ", column 3: empty speaker");
    if (seg.end_s <= seg.start_s)
      throw std::runtime_error("parse_annotation_csv: row " +
                               std::to_string(r + 1) + ": end before start");
    out.push_back(std::move(seg));
  }
  return out;
}

std::vector<DiarizationSegment> resolve_overlaps(
    std::vector<DiarizationSegment> segments) {
  std::stable_sort(segments.begin(), segments.end(),
                   [](const DiarizationSegment& a, const DiarizationSegment& b) {
                     return a.start_s < b.start_s;
                   });
  std::vector<DiarizationSegment> out;
  double frontier = -std::numeric_limits<double>::infinity();
  for (DiarizationSegment& seg : segments) {
    double start = std::max(seg.start_s, frontier);
    frontier = std::max(frontier, seg.end_s);
    if (start >= seg.end_s) continue;  // fully swallowed
    seg.start_s = start;
    out.push_back(std::move(seg));
  }
  return out;
}

std::string write_rttm(const std::string& uri,
                       std::vector<DiarizationSegment> segments) {
  if (uri.empty() || contains_whitespace(uri))
    throw std::runtime_error("write_rttm: uri must be non-empty and "
                             "whitespace-free: '" + uri + "'");
  std::stable_sort(segments.begin(), segments.end(),
                   [](const DiarizationSegment& a, const DiarizationSegment& b) {
                     return a.start_s < b.start_s;
                   });
  std::string out;
  for (const DiarizationSegment& seg : segments) {
    if (!(seg.end_s > seg.start_s))
      throw std::runtime_error("write_rttm: segment end must follow start");
    if (seg.speaker.empty() || contains_whitespace(seg.speaker))
      throw std::runtime_error("write_rttm: speaker must be non-empty and "
                               "whitespace-free: '" + seg.speaker + "'");
    out += "SPEAKER " + uri + " 1 " + format_seconds(seg.start_s) + " " +
           format_seconds(seg.duration()) + " <NA> <NA> " + seg.speaker +
           " <NA> <NA>\n";
  }
  return out;
}

std::map<std::string, std::vector<DiarizationSegment>> parse_rttm(
    std::string_view content) {
  std::map<std::string, std::vector<DiarizationSegment>> out;
  std::vector<std::string> lines = split(content, '\n');
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::vector<std::string> f;
    std::string tok;
    while (fields >> tok) f.push_back(tok);
    if (f[0] != "SPEAKER") continue;  // only SPEAKER records carry turns
    std::string where = "parse_rttm: line " + std::to_string(i + 1);
    if (f.size() < 8) throw std::runtime_error(where + ": too few fields");
    double onset, dur;
    if (!parse_double(f[3], &onset))
      throw std::runtime_error(where + ": bad onset '" + f[3] + "'");
    if (!parse_double(f[4], &dur) || dur <= 0)
      throw std::runtime_error(where + ": bad duration '" + f[4] + "'");
    out[f[1]].push_back({onset, onset + dur, f[7]});
  }
  return out;
}

std::string write_uem(const std::string& uri, double duration_s) {
  if (uri.empty() || contains_whitespace(uri))
    throw std::runtime_error("write_uem: uri must be non-empty and "
                             "whitespace-free: '" + uri + "'");
  if (!(duration_s > 0.0))
    throw std::runtime_error("write_uem: duration must be positive");
  return uri + " 1 0.000 " + format_seconds(duration_s) + "\n";
}

std::map<std::string, std::pair<double, double>> parse_uem(
    std::string_view content) {
  std::map<std::string, std::pair<double, double>> out;
  std::vector<std::string> lines = split(content, '\n');
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string uri, channel, onset_text, offset_text;
    if (!(fields >> uri >> channel >> onset_text >> offset_text))
      throw std::runtime_error("parse_uem: line " + std::to_string(i + 1) +
                               ": expected 4 fields");
    double onset, offset;
    if (!parse_double(onset_text, &onset) ||
        !parse_double(offset_text, &offset) || offset <= onset)
      throw std::runtime_error("parse_uem: line " + std::to_string(i + 1) +
                               ": bad interval");
    out[uri] = {onset, offset};
  }
  return out;
}

std::string write_lst(const std::vector<std::string>& uris) {
  if (uris.empty()) throw std::runtime_error("write_lst: no uris");
  std::string out;
  for (const std::string& uri : uris) {
    if (uri.empty() || contains_whitespace(uri))
      throw std::runtime_error("write_lst: uri must be non-empty and "
                               "whitespace-free: '" + uri + "'");
    out += uri + "\n";
  }
  return out;
}

std::string emit_corpus_manifest(
    const std::map<std::string, std::vector<std::string>>& splits,
    const std::string& root) {
  static const char* kRequired[] = {"train", "development", "test"};
  for (const char* split : kRequired)
    if (splits.find(split) == splits.end())
      throw std::runtime_error(std::string("emit_corpus_manifest: missing "
                                           "split '") + split + "'");
  std::string out;
  out += "Databases:\n";
  out += "  corpus: " + root + "/audio/{uri}.wav\n";
  out += "\n";
  out += "Protocols:\n";
  out += "  corpus:\n";
  out += "    SpeakerDiarization:\n";
  out += "      main:\n";
  for (const char* split : kRequired) {
    std::string name(split);
    out += "        " + name + ":\n";
    out += "          uri: " + root + "/lists/" + name + ".lst\n";
    out += "          annotation: " + root + "/rttm/" + name + ".rttm\n";
    out += "          annotated: " + root + "/uem/" + name + ".uem\n";
    out += "          uris: [";
    const std::vector<std::string>& uris = splits.at(name);
    for (size_t i = 0; i < uris.size(); ++i) {
      if (i) out += ", ";
      out += uris[i];
    }
    out += "]\n";
  }
  return out;
}

std::vector<DiarizationSegment> filter_min_duration(
    std::vector<DiarizationSegment> segments, double min_s) {
  std::vector<DiarizationSegment> out;
  for (DiarizationSegment& seg : segments)
    if (seg.duration() >= min_s) out.push_back(std::move(seg));
  return out;
}

std::string segments_to_json(const std::vector<DiarizationSegment>& segments) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const DiarizationSegment& seg : segments) {
    nlohmann::ordered_json obj;
    obj["start"] = round3(seg.start_s);
    obj["end"] = round3(seg.end_s);
    obj["speaker"] = seg.speaker;
    arr.push_back(std::move(obj));
  }
  return arr.dump();
}

std::vector<DiarizationSegment> segments_from_json(std::string_view content) {
  nlohmann::json arr = nlohmann::json::parse(content);
  if (!arr.is_array())
    throw std::runtime_error("segments_from_json: expected a JSON array");
  std::vector<DiarizationSegment> out;
  for (const nlohmann::json& obj : arr) {
    DiarizationSegment seg;
    seg.start_s = obj.at("start").get<double>();
    seg.end_s = obj.at("end").get<double>();
    seg.speaker = obj.at("speaker").get<std::string>();
    out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace bst
