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

#ifndef GREYASSESS_GRADE_SCALE_HPP
#define GREYASSESS_GRADE_SCALE_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "greyassess/error.hpp"
#include "greyassess/grey_number.hpp"

namespace greyassess {

struct ScoreDomain {
  double min = 0.0;
  double max = 100.0;

  bool contains(double score) const noexcept { return min <= score && score <= max; }
  friend bool operator==(const ScoreDomain&, const ScoreDomain&) = default;
};

struct GradeEntry {
  std::string label;
  GreyNumber interval;

  friend bool operator==(const GradeEntry&, const GradeEntry&) = default;
};

/// Ordered mapping from linguistic grades to score intervals, highest grade
/// first. A GradeScale may be constructed in an invalid state so that
/// validate_scale() can report on it; use GradeScale::checked() (or the file
/// loaders) to obtain one that is guaranteed valid.
class GradeScale {
 public:
  GradeScale() = default;
  GradeScale(std::vector<GradeEntry> entries, ScoreDomain domain = {})
      : entries_(std::move(entries)), domain_(domain) {}

  /// Throws InvalidScale listing every violation.
  static GradeScale checked(std::vector<GradeEntry> entries, ScoreDomain domain = {});

  const std::vector<GradeEntry>& entries() const noexcept { return entries_; }
  const ScoreDomain& domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// Position of `label` in scale order (0 = highest grade).
  std::optional<std::size_t> index_of(std::string_view label) const noexcept {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].label == label) return i;
    }
    return std::nullopt;
  }

  bool has_label(std::string_view label) const noexcept { return index_of(label).has_value(); }

  friend bool operator==(const GradeScale&, const GradeScale&) = default;

 private:
  std::vector<GradeEntry> entries_;
  ScoreDomain domain_;
};

/// A (label, interval) scale: A [85,100], B [75,84], C [60,74], D [50,59],
/// F [0,49] over the domain [0, 100].
inline GradeScale default_scale() {
  return GradeScale({{"A", make(85, 100)},
                     {"B", make(75, 84)},
                     {"C", make(60, 74)},
                     {"D", make(50, 59)},
                     {"F", make(0, 49)}});
}

/// The stricter variant: A [90,100], B [80,89], C [70,79], D [60,69], F [0,59].
inline GradeScale strict_scale() {
  return GradeScale({{"A", make(90, 100)},
                     {"B", make(80, 89)},
                     {"C", make(70, 79)},
                     {"D", make(60, 69)},
                     {"F", make(0, 59)}});
}

struct ScaleViolation {
  enum class Kind {
    kTooFewGrades,
    kInvalidDomain,
    kEmptyLabel,
    kDuplicateLabel,
    kOverlap,
    kNotDescending,
    kOutsideDomain,
    kCoverage,
  };

  Kind kind;
  std::vector<std::string> labels;
  std::string message;
};

/// Checks every GradeScale invariant and returns all violations found (empty
/// when the scale is valid). Never throws.
inline std::vector<ScaleViolation> validate_scale(const GradeScale& scale) {
  using Kind = ScaleViolation::Kind;
  std::vector<ScaleViolation> out;
  const auto& es = scale.entries();
  const auto& dom = scale.domain();

  if (es.size() < 2) {
    out.push_back({Kind::kTooFewGrades, {},
                   "a scale needs at least 2 grades, found " + std::to_string(es.size())});
  }
  if (!(std::isfinite(dom.min) && std::isfinite(dom.max) && dom.min < dom.max)) {
    out.push_back({Kind::kInvalidDomain, {},
                   "score domain [" + detail::format_trimmed(dom.min, 4) + ", " +
                       detail::format_trimmed(dom.max, 4) + "] is not a proper interval"});
  }

  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].label.empty()) {
      out.push_back({Kind::kEmptyLabel, {}, "grade #" + std::to_string(i + 1) + " has an empty label"});
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!es[i].label.empty() && es[i].label == es[j].label) {
        out.push_back({Kind::kDuplicateLabel, {es[i].label}, "label '" + es[i].label + "' is used more than once"});
        break;
      }
    }
  }

  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto& x = es[i].interval;
      const auto& y = es[j].interval;
      if (std::max(x.lower(), y.lower()) <= std::min(x.upper(), y.upper())) {
        out.push_back({Kind::kOverlap, {es[i].label, es[j].label},
                       "grades '" + es[i].label + "' " + to_string(x) + " and '" + es[j].label + "' " +
                           to_string(y) + " overlap"});
      }
    }
  }

  for (std::size_t i = 0; i + 1 < es.size(); ++i) {
    const auto& hi = es[i];
    const auto& lo = es[i + 1];
    const bool overlapping = std::max(hi.interval.lower(), lo.interval.lower()) <=
                             std::min(hi.interval.upper(), lo.interval.upper());
    if (!overlapping && !(hi.interval.lower() > lo.interval.upper())) {
      out.push_back({Kind::kNotDescending, {hi.label, lo.label},
                     "grade '" + hi.label + "' must lie strictly above the next grade '" + lo.label + "'"});
    }
  }

  for (const auto& e : es) {
    if (e.interval.lower() < dom.min || e.interval.upper() > dom.max) {
      out.push_back({Kind::kOutsideDomain, {e.label},
                     "grade '" + e.label + "' " + to_string(e.interval) + " leaves the score domain"});
    }
  }

  if (!es.empty()) {
    const auto& lowest = es.back();
    const auto& highest = es.front();
    if (lowest.interval.lower() != dom.min) {
      out.push_back({Kind::kCoverage, {lowest.label},
                     "lowest grade '" + lowest.label + "' starts at " +
                         detail::format_trimmed(lowest.interval.lower(), 4) + " instead of the domain minimum " +
                         detail::format_trimmed(dom.min, 4)});
    }
    if (highest.interval.upper() != dom.max) {
      out.push_back({Kind::kCoverage, {highest.label},
                     "highest grade '" + highest.label + "' ends at " +
                         detail::format_trimmed(highest.interval.upper(), 4) + " instead of the domain maximum " +
                         detail::format_trimmed(dom.max, 4)});
    }
  }
  return out;
}

inline GradeScale GradeScale::checked(std::vector<GradeEntry> entries, ScoreDomain domain) {
  GradeScale scale(std::move(entries), domain);
  const auto violations = validate_scale(scale);
  if (!violations.empty()) {
    std::string msg = "invalid grade scale:";
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw InvalidScale(msg);
  }
  return scale;
}

/// The closed interval registered for `label`; throws UnknownLabel.
inline const GreyNumber& grade_to_gn(const GradeScale& scale, std::string_view label) {
  const auto i = scale.index_of(label);
  if (!i) throw UnknownLabel(std::string(label));
  return scale.entries()[*i].interval;
}

/// Scale position of the grade containing `score`.
///
/// Grades partition the domain by their lower bounds: a score belongs to the
/// highest grade whose lower bound it reaches. This closes the real-valued
/// gaps between the stored intervals (84.5 is a B under the default scale)
/// and agrees with closed-interval membership on the scale's own points.
/// Throws DomainError for scores outside the domain.
inline std::size_t classify_index(const GradeScale& scale, double score) {
  if (!scale.domain().contains(score)) {
    throw DomainError("score " + detail::format_trimmed(score, 4) + " lies outside the score domain [" +
                      detail::format_trimmed(scale.domain().min, 4) + ", " +
                      detail::format_trimmed(scale.domain().max, 4) + "]");
  }
  const auto& es = scale.entries();
  if (es.empty()) throw InvalidScale("cannot classify against an empty scale");
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (score >= es[i].interval.lower()) return i;
  }
  return es.size() - 1;
}

inline const std::string& classify_score(const GradeScale& scale, double score) {
  return scale.entries()[classify_index(scale, score)].label;
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Parses a complete token as a finite double. Accepts a leading '+'.
inline std::optional<double> parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace detail

/// Reads the plain-text scale format without validating the result:
///
///     # comment
///     domain 0 100        (optional, first non-comment line only)
///     A 85 100
///     B 75 84
///     ...
///
/// Entries are listed highest grade first. Throws ParseError on lines that do
/// not fit the format.
inline GradeScale parse_scale_unchecked(std::istream& in) {
  std::vector<GradeEntry> entries;
  ScoreDomain domain;
  bool seen_content = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto tok = detail::split_ws(line);
    if (tok.size() != 3) {
      throw ParseError(line_no, "expected '<LABEL> <lower> <upper>', got '" + std::string(line) + "'");
    }
    const auto lo = detail::parse_real(tok[1]);
    const auto hi = detail::parse_real(tok[2]);
    if (!lo || !hi) throw ParseError(line_no, "bounds must be finite numbers");
    if (tok[0] == "domain") {
      if (seen_content) throw ParseError(line_no, "'domain' must be the first entry");
      domain = {*lo, *hi};
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (*lo > *hi) {
      throw ParseError(line_no, "grade '" + std::string(tok[0]) + "' has lower bound above upper bound");
    }
    entries.push_back({std::string(tok[0]), make(*lo, *hi)});
  }
  if (entries.empty()) throw ParseError(0, "scale file contains no grades");
  return GradeScale(std::move(entries), domain);
}

/// As parse_scale_unchecked(), then throws InvalidScale if any invariant is
/// violated.
inline GradeScale parse_scale(std::istream& in) {
  auto scale = parse_scale_unchecked(in);
  return GradeScale::checked(scale.entries(), scale.domain());
}

inline GradeScale parse_scale(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_scale(in);
}

inline GradeScale load_scale_file(const std::string& path, bool validate = true) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scale file '" + path + "'");
  try {
    return validate ? parse_scale(in) : parse_scale_unchecked(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

/// Writes `scale` in the format parse_scale() reads. The domain line is
/// emitted only when it differs from the default [0, 100].
inline void write_scale(std::ostream& out, const GradeScale& scale) {
  if (!(scale.domain() == ScoreDomain{})) {
    out << "domain " << detail::format_shortest(scale.domain().min) << ' '
        << detail::format_shortest(scale.domain().max) << '\n';
  }
  for (const auto& e : scale.entries()) {
    out << e.label << ' ' << detail::format_shortest(e.interval.lower()) << ' '
        << detail::format_shortest(e.interval.upper()) << '\n';
  }
}

}  // namespace greyassess

#endif  // GREYASSESS_GRADE_SCALE_HPP
