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

#ifndef GREYASSESS_REPORT_HPP
#define GREYASSESS_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "greyassess/assessment.hpp"
#include "greyassess/grade_scale.hpp"
#include "greyassess/grey_number.hpp"
#include "greyassess/tfn.hpp"

namespace greyassess {

/// Two decimals, halves rounded away from zero. The value is first snapped to
/// 1e-9 so that results like 70.875 which land a few ulps below the half still
/// round up, as they would in exact arithmetic.
inline std::string format_2dp(double v) {
  const double snapped = std::round(v * 1e9) / 1e9;
  const double rounded = std::round(snapped * 100.0) / 100.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", rounded);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

inline std::string format_gn_2dp(const GreyNumber& x) {
  return "[" + format_2dp(x.lower()) + ", " + format_2dp(x.upper()) + "]";
}

/// Counts in scale order, e.g. "A=20 B=15 C=7 D=10 F=8".
inline std::string format_distribution(const GradeDistribution& d, const GradeScale& scale) {
  std::string s;
  for (const auto& e : scale.entries()) {
    if (!s.empty()) s += ' ';
    s += e.label + "=" + std::to_string(d.count(e.label));
  }
  return s;
}

/// Two-line human-readable summary, numbers rounded to 2 decimals.
inline std::string render_text(const AssessmentReport& r) {
  std::string s = r.group_id + ": n=" + std::to_string(r.n) + " M=" + format_gn_2dp(r.mean_gn) +
                  " w(M)=" + format_2dp(r.whitened) + " grade=" + r.grade;
  if (r.t_used != 0.5) s += " t=" + detail::format_shortest(r.t_used);
  s += "\n  distribution: " + format_distribution(r.distribution, r.scale) + "\n";
  return s;
}

/// Report object with full-precision numbers:
/// {"group", "n", "mean_gn": {"lower", "upper"}, "whitened", "grade", "t",
///  "distribution": {label: count}}
inline nlohmann::ordered_json to_json(const AssessmentReport& r) {
  nlohmann::ordered_json dist = nlohmann::ordered_json::object();
  for (const auto& e : r.scale.entries()) dist[e.label] = r.distribution.count(e.label);
  // Labels outside the scale only occur for hand-built reports.
  for (const auto& [label, c] : r.distribution.counts()) {
    if (!dist.contains(label)) dist[label] = c;
  }
  return {
      {"group", r.group_id},
      {"n", r.n},
      {"mean_gn", {{"lower", r.mean_gn.lower()}, {"upper", r.mean_gn.upper()}}},
      {"whitened", r.whitened},
      {"grade", r.grade},
      {"t", r.t_used},
      {"distribution", dist},
  };
}

/// Inverse of to_json() for the numeric and label fields. The scale is not
/// part of the schema and is left empty.
inline AssessmentReport report_from_json(const nlohmann::ordered_json& j) {
  AssessmentReport r;
  r.group_id = j.at("group").get<std::string>();
  r.n = j.at("n").get<std::int64_t>();
  r.mean_gn = make(j.at("mean_gn").at("lower").get<double>(), j.at("mean_gn").at("upper").get<double>());
  r.whitened = j.at("whitened").get<double>();
  r.grade = j.at("grade").get<std::string>();
  r.t_used = j.at("t").get<double>();
  for (const auto& [label, c] : j.at("distribution").items()) {
    r.distribution.set(label, c.get<GradeDistribution::Count>());
  }
  return r;
}

inline nlohmann::ordered_json to_json(const EquivalenceReport& e) {
  return {
      {"grey_value", e.grey_value},
      {"fuzzy_value", e.fuzzy_value},
      {"fuzzy_peak", e.fuzzy_peak},
      {"difference", e.difference},
      {"pass", e.pass},
  };
}

}  // namespace greyassess

#endif  // GREYASSESS_REPORT_HPP
