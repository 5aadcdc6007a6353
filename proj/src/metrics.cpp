// src/metrics.cpp

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

#include "bst/metrics.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "bst/unicode.hpp"

namespace bst {

namespace {

// Lexicographic edit objective: minimize total edits first, then the number
// of deletions+insertions.  This makes substitutions win over insert+delete
// pairs among equal-cost alignments, and it pins the (S, D, I) decomposition
// without a backtrace: with cost and D+I fixed, D - I = |ref| - |hyp| fixes
// D and I, and S = cost - (D + I).
struct EditCell {
  int cost = 0;
  int indel = 0;
  bool operator<(const EditCell& o) const {
    return cost != o.cost ? cost < o.cost : indel < o.indel;
  }
};

}  // namespace

WerReport wer(std::string_view ref, std::string_view hyp) {
  std::vector<std::string> r = split_words(nfc_utf8(ref));
  std::vector<std::string> h = split_words(nfc_utf8(hyp));
  if (r.empty())
    throw std::runtime_error("wer: empty reference, N=0 undefined");

  size_t n = r.size(), m = h.size();
  std::vector<EditCell> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j)
    prev[j] = {static_cast<int>(j), static_cast<int>(j)};
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = {static_cast<int>(i), static_cast<int>(i)};
    for (size_t j = 1; j <= m; ++j) {
      EditCell best = prev[j - 1];
      if (r[i - 1] != h[j - 1]) best.cost += 1;  // substitute (or match)
      EditCell del{prev[j].cost + 1, prev[j].indel + 1};
      EditCell ins{cur[j - 1].cost + 1, cur[j - 1].indel + 1};
      best = std::min(best, std::min(del, ins));
      cur[j] = best;
    }
    std::swap(prev, cur);
  }

  EditCell final = prev[m];
  int d_minus_i = static_cast<int>(n) - static_cast<int>(m);
  WerReport rep;
  rep.deletions = (final.indel + d_minus_i) / 2;
  rep.insertions = final.indel - rep.deletions;
  rep.substitutions = final.cost - final.indel;
  rep.ref_words = static_cast<int>(n);
  rep.wer = static_cast<double>(final.cost) / n;
  return rep;
}

std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols())
    throw std::runtime_error("min_cost_assignment: matrix must be square");
  int n = static_cast<int>(cost.rows());
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // Potentials formulation; p[j] is the row matched to column j (1-based,
  // 0 = unmatched), built one row at a time via shortest augmenting paths.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

namespace {

// One maximal interval over which all active speaker sets are constant.
struct Region {
  double duration = 0.0;
  std::vector<int> refs;  // active reference speaker ids
  std::vector<int> hyps;  // active hypothesis speaker ids
};

std::vector<std::string> speaker_names(
    const std::vector<DiarizationSegment>& segments) {
  std::set<std::string> names;
  for (const DiarizationSegment& s : segments) names.insert(s.speaker);
  return {names.begin(), names.end()};
}

// Splits the time axis at every segment, collar, and UEM boundary, and
// keeps the scored regions with their active speaker-id sets.
std::vector<Region> build_regions(const std::vector<DiarizationSegment>& ref,
                                  const std::vector<DiarizationSegment>& hyp,
                                  const std::vector<std::string>& ref_names,
                                  const std::vector<std::string>& hyp_names,
                                  double collar_s,
                                  std::optional<std::pair<double, double>> uem) {
  std::vector<std::pair<double, double>> collars;
  if (collar_s > 0.0) {
    for (const DiarizationSegment& s : ref) {
      collars.emplace_back(s.start_s - collar_s, s.start_s + collar_s);
      collars.emplace_back(s.end_s - collar_s, s.end_s + collar_s);
    }
  }

  std::vector<double> bounds;
  for (const DiarizationSegment& s : ref) {
    bounds.push_back(s.start_s);
    bounds.push_back(s.end_s);
  }
  for (const DiarizationSegment& s : hyp) {
    bounds.push_back(s.start_s);
    bounds.push_back(s.end_s);
  }
  for (const auto& c : collars) {
    bounds.push_back(c.first);
    bounds.push_back(c.second);
  }
  if (uem) {
    bounds.push_back(uem->first);
    bounds.push_back(uem->second);
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  auto id_of = [](const std::vector<std::string>& names,
                  const std::string& name) {
    return static_cast<int>(std::lower_bound(names.begin(), names.end(),
                                             name) - names.begin());
  };

  std::vector<Region> regions;
  for (size_t b = 0; b + 1 < bounds.size(); ++b) {
    double t1 = bounds[b], t2 = bounds[b + 1];
    if (uem && (t1 < uem->first || t2 > uem->second)) continue;
    bool excluded = false;
    for (const auto& c : collars)
      if (c.first <= t1 && t2 <= c.second) {
        excluded = true;
        break;
      }
    if (excluded) continue;

    Region region;
    region.duration = t2 - t1;
    std::set<int> r_active, h_active;
    for (const DiarizationSegment& s : ref)
      if (s.start_s <= t1 && t2 <= s.end_s)
        r_active.insert(id_of(ref_names, s.speaker));
    for (const DiarizationSegment& s : hyp)
      if (s.start_s <= t1 && t2 <= s.end_s)
        h_active.insert(id_of(hyp_names, s.speaker));
    if (r_active.empty() && h_active.empty()) continue;
    region.refs.assign(r_active.begin(), r_active.end());
    region.hyps.assign(h_active.begin(), h_active.end());
    regions.push_back(std::move(region));
  }
  return regions;
}

}  // namespace

DerReport der(const std::vector<DiarizationSegment>& ref,
              const std::vector<DiarizationSegment>& hyp, double collar_s,
              std::optional<std::pair<double, double>> uem) {
  std::vector<std::string> ref_names = speaker_names(ref);
  std::vector<std::string> hyp_names = speaker_names(hyp);
  std::vector<Region> regions =
      build_regions(ref, hyp, ref_names, hyp_names, collar_s, uem);

  // Scored overlap durations feed the optimal one-to-one speaker mapping.
  Eigen::MatrixXd overlap =
      Eigen::MatrixXd::Zero(ref_names.size(), hyp_names.size());
  for (const Region& region : regions)
    for (int r : region.refs)
      for (int h : region.hyps) overlap(r, h) += region.duration;

  // Maximize overlap as a square min-cost problem padded with zeros.
  Eigen::Index spk = std::max(overlap.rows(), overlap.cols());
  std::vector<int> hyp_to_ref(hyp_names.size(), -1);
  if (spk > 0) {
    Eigen::MatrixXd cost = Eigen::MatrixXd::Zero(spk, spk);
    cost.topLeftCorner(overlap.rows(), overlap.cols()) = -overlap;
    std::vector<int> ref_to_col = min_cost_assignment(cost);
    for (Eigen::Index r = 0; r < overlap.rows(); ++r) {
      int h = ref_to_col[static_cast<int>(r)];
      if (h >= 0 && h < overlap.cols() && overlap(r, h) > 0.0)
        hyp_to_ref[h] = static_cast<int>(r);
    }
  }

  DerReport rep;
  for (const Region& region : regions) {
    int nr = static_cast<int>(region.refs.size());
    int nh = static_cast<int>(region.hyps.size());
    rep.total_s += region.duration * nr;
    int correct = 0;
    for (int h : region.hyps) {
      int r = hyp_to_ref[h];
      if (r >= 0 &&
          std::binary_search(region.refs.begin(), region.refs.end(), r))
        ++correct;
    }
    rep.missed_s += region.duration * std::max(0, nr - nh);
    rep.false_alarm_s += region.duration * std::max(0, nh - nr);
    rep.confusion_s += region.duration * (std::min(nr, nh) - correct);
  }
  if (rep.total_s <= 0.0)
    throw std::runtime_error("der: no reference speech in scoring region");
  rep.der = (rep.false_alarm_s + rep.missed_s + rep.confusion_s) / rep.total_s;
  for (size_t h = 0; h < hyp_names.size(); ++h)
    if (hyp_to_ref[h] >= 0) rep.mapping[hyp_names[h]] = ref_names[hyp_to_ref[h]];
  return rep;
}

RtfReport rtf(double inference_time_s, double audio_duration_s) {
  if (!(inference_time_s > 0.0) || !(audio_duration_s > 0.0))
    throw std::runtime_error("rtf: inputs must be positive");
  return {inference_time_s, audio_duration_s,
          inference_time_s / audio_duration_s};
}

}  // namespace bst
