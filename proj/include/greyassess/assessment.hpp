// Copyright 2026 The Greyassess Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GREYASSESS_ASSESSMENT_HPP
#define GREYASSESS_ASSESSMENT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "greyassess/error.hpp"
#include "greyassess/grade_scale.hpp"
#include "greyassess/grey_number.hpp"

namespace greyassess {

/// Per-grade counts for one group of assessed objects.
class GradeDistribution {
 public:
  using Count = std::int64_t;

  GradeDistribution() = default;

  /// Throws DomainError on a negative count.
  GradeDistribution(std::initializer_list<std::pair<const std::string, Count>> counts) {
    for (const auto& [label, count] : counts) set(label, count);
  }

  void set(const std::string& label, Count count) {
    if (count < 0) throw DomainError("grade count for '" + label + "' is negative");
    counts_[label] = count;
  }

  void add(const std::string& label, Count count = 1) { set(label, this->count(label) + count); }

  /// 0 for labels never set.
  Count count(std::string_view label) const {
    const auto it = counts_.find(std::string(label));
    return it == counts_.end() ? 0 : it->second;
  }

  Count total() const noexcept {
    Count n = 0;
    for (const auto& [label, c] : counts_) n += c;
    return n;
  }

  const std::map<std::string, Count>& counts() const noexcept { return counts_; }

  /// Labels with a nonzero count that the scale does not define.
  std::vector<std::string> unknown_labels(const GradeScale& scale) const {
    std::vector<std::string> out;
    for (const auto& [label, c] : counts_) {
      if (c > 0 && !scale.has_label(label)) out.push_back(label);
    }
    return out;
  }

  // Labels with count 0 compare equal to absent labels.
  friend bool operator==(const GradeDistribution& x, const GradeDistribution& y) {
    auto nonzero = [](const GradeDistribution& d) {
      std::map<std::string, Count> m;
      for (const auto& [label, c] : d.counts_) {
        if (c != 0) m.emplace(label, c);
      }
      return m;
    };
    return nonzero(x) == nonzero(y);
  }

 private:
  std::map<std::string, Count> counts_;
};

/// Raw numeric scores per subject, subjects in first-appearance order.
class ScoreSheet {
 public:
  struct Subject {
    std::string id;
    std::vector<double> scores;

    friend bool operator==(const Subject&, const Subject&) = default;
  };

  ScoreSheet() = default;
  explicit ScoreSheet(std::vector<Subject> subjects) : subjects_(std::move(subjects)) {}

  void add(const std::string& subject_id, double score) {
    for (auto& s : subjects_) {
      if (s.id == subject_id) {
        s.scores.push_back(score);
        return;
      }
    }
    subjects_.push_back({subject_id, {score}});
  }

  const std::vector<Subject>& subjects() const noexcept { return subjects_; }

  std::size_t score_count() const noexcept {
    std::size_t n = 0;
    for (const auto& s : subjects_) n += s.scores.size();
    return n;
  }

  friend bool operator==(const ScoreSheet&, const ScoreSheet&) = default;

 private:
  std::vector<Subject> subjects_;
};

struct AssessmentReport {
  std::string group_id;
  std::int64_t n = 0;
  GreyNumber mean_gn;
  double whitened = 0.0;
  std::string grade;
  GradeDistribution distribution;
  double t_used = 0.5;
  GradeScale scale;
};

/// Mean grey number M = (1/n) * sum over grades g of count(g) * interval(g).
///
/// Accumulation always runs in scale order, so the result does not depend on
/// how the distribution was filled. Throws EmptyDistribution when n = 0 and
/// UnknownLabel for counts against labels the scale does not define.
inline GreyNumber mean_gn(const GradeDistribution& dist, const GradeScale& scale) {
  if (const auto unknown = dist.unknown_labels(scale); !unknown.empty()) {
    throw UnknownLabel(unknown.front());
  }
  const auto n = dist.total();
  if (n <= 0) throw EmptyDistribution();

  GreyNumber sum;
  for (const auto& e : scale.entries()) {
    const auto c = dist.count(e.label);
    if (c > 0) sum = add(sum, scalar_mul(static_cast<double>(c), e.interval));
  }
  return scalar_mul(1.0 / static_cast<double>(n), sum);
}

inline AssessmentReport assess(const GradeDistribution& dist, const GradeScale& scale,
                               WhiteningParameter t = WhiteningParameter::midpoint(),
                               std::string group_id = {}) {
  AssessmentReport r;
  r.group_id = std::move(group_id);
  r.mean_gn = mean_gn(dist, scale);
  r.n = dist.total();
  r.t_used = t.value();
  r.whitened = whiten(r.mean_gn, t);
  r.grade = classify_score(scale, r.whitened);
  for (const auto& e : scale.entries()) r.distribution.set(e.label, dist.count(e.label));
  r.scale = scale;
  return r;
}

namespace detail {

inline void check_sheet(const ScoreSheet& sheet, const GradeScale& scale) {
  for (const auto& s : sheet.subjects()) {
    for (const double x : s.scores) {
      if (!std::isfinite(x) || !scale.domain().contains(x)) {
        throw DomainError("subject '" + s.id + "': score " + format_trimmed(x, 4) +
                          " lies outside the score domain [" + format_trimmed(scale.domain().min, 4) +
                          ", " + format_trimmed(scale.domain().max, 4) + "]");
      }
    }
  }
}

}  // namespace detail

/// Pools every score of every subject and counts the grade of each.
inline GradeDistribution scores_to_distribution(const ScoreSheet& sheet, const GradeScale& scale) {
  detail::check_sheet(sheet, scale);
  GradeDistribution d;
  for (const auto& e : scale.entries()) d.set(e.label, 0);
  for (const auto& s : sheet.subjects()) {
    for (const double x : s.scores) d.add(classify_score(scale, x));
  }
  return d;
}

/// Arithmetic mean of all pooled scores. Throws DomainError on an empty sheet.
inline double raw_mean(const ScoreSheet& sheet) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& s : sheet.subjects()) {
    for (const double x : s.scores) {
      sum += x;
      ++n;
    }
  }
  if (n == 0) throw DomainError("score sheet contains no scores");
  return sum / static_cast<double>(n);
}

struct ExtremeCaseMeans {
  double minimal = 0.0;  // every score replaced by its grade's lower bound
  double maximal = 0.0;  // every score replaced by its grade's upper bound
};

/// Mean score when each score is moved to the lowest / highest score of its
/// grade. These are the endpoints of the mean grey number of the sheet's
/// distribution, computed here directly from the scores.
inline ExtremeCaseMeans extreme_case_means(const ScoreSheet& sheet, const GradeScale& scale) {
  detail::check_sheet(sheet, scale);
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 0;
  for (const auto& s : sheet.subjects()) {
    for (const double x : s.scores) {
      const auto& gn = scale.entries()[classify_index(scale, x)].interval;
      lo += gn.lower();
      hi += gn.upper();
      ++n;
    }
  }
  if (n == 0) throw DomainError("score sheet contains no scores");
  return {lo / static_cast<double>(n), hi / static_cast<double>(n)};
}

inline constexpr double kTieTolerance = 1e-9;

struct RankedGroup {
  AssessmentReport report;
  std::size_t rank = 1;  // 1-based; tied groups share a rank
  bool tied = false;     // shares its rank with at least one other group
};

/// Sorts reports by whitened value, best first. Groups within kTieTolerance of
/// the first group of their block share a rank. All reports must come from
/// the same scale and t, otherwise MixedScale is thrown.
inline std::vector<RankedGroup> compare_groups(const std::vector<AssessmentReport>& reports) {
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (!(reports[i].scale == reports[0].scale)) {
      throw MixedScale("report '" + reports[i].group_id + "' was produced under a different grade scale");
    }
    if (reports[i].t_used != reports[0].t_used) {
      throw MixedScale("report '" + reports[i].group_id + "' was whitened with a different t");
    }
  }

  std::vector<RankedGroup> out;
  out.reserve(reports.size());
  for (const auto& r : reports) out.push_back({r, 1, false});
  std::stable_sort(out.begin(), out.end(), [](const RankedGroup& x, const RankedGroup& y) {
    return x.report.whitened > y.report.whitened;
  });

  std::size_t block_start = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i > 0 && std::abs(out[block_start].report.whitened - out[i].report.whitened) < kTieTolerance) {
      out[i].rank = out[block_start].rank;
      out[i].tied = out[block_start].tied = true;
    } else {
      block_start = i;
      out[i].rank = i + 1;
    }
  }
  return out;
}

}  // namespace greyassess

#endif  // GREYASSESS_ASSESSMENT_HPP
