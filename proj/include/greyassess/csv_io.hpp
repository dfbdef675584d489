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

#ifndef GREYASSESS_CSV_IO_HPP
#define GREYASSESS_CSV_IO_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "greyassess/assessment.hpp"
#include "greyassess/error.hpp"
#include "greyassess/grade_scale.hpp"

namespace greyassess {

struct GroupCounts {
  std::string group;
  GradeDistribution distribution;

  friend bool operator==(const GroupCounts&, const GroupCounts&) = default;
};

// Groups in order of first appearance in the file.
using CountsTable = std::vector<GroupCounts>;

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Iterates the data rows of a CSV stream: checks the header, skips blank and
// '#' lines, and hands (line number, fields) to `row`.
template <typename RowFn>
std::size_t for_each_csv_row(std::istream& in, std::string_view expected_header, RowFn&& row) {
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t rows = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      auto fields = split_commas(line);
      std::string joined;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) joined += ',';
        joined += fields[i];
      }
      if (joined != expected_header) {
        throw ParseError(line_no, "expected header '" + std::string(expected_header) + "', got '" +
                                      std::string(line) + "'");
      }
      header_seen = true;
      continue;
    }
    row(line_no, split_commas(line));
    ++rows;
  }
  if (!header_seen) throw ParseError(0, "missing header '" + std::string(expected_header) + "'");
  if (rows == 0) throw ParseError(0, "no data rows");
  return rows;
}

}  // namespace detail

/// Reads a `group,grade,count` table. Every group receives all grades of
/// `scale`, with 0 for grades the file does not mention.
inline CountsTable load_counts_csv(std::istream& in, const GradeScale& scale) {
  CountsTable table;
  std::set<std::pair<std::string, std::string>> seen;
  detail::for_each_csv_row(in, "group,grade,count", [&](std::size_t line_no, const auto& f) {
    if (f.size() != 3) {
      throw ParseError(line_no, "expected 3 fields (group,grade,count), got " + std::to_string(f.size()));
    }
    const std::string group(f[0]);
    const std::string grade(f[1]);
    if (group.empty()) throw ParseError(line_no, "empty group name");
    if (!scale.has_label(grade)) throw ParseError(line_no, "unknown grade '" + grade + "'");

    std::int64_t count = 0;
    const auto [ptr, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), count);
    if (ec != std::errc() || ptr != f[2].data() + f[2].size()) {
      throw ParseError(line_no, "count '" + std::string(f[2]) + "' is not an integer");
    }
    if (count < 0) throw ParseError(line_no, "negative count " + std::string(f[2]));
    if (!seen.emplace(group, grade).second) {
      throw ParseError(line_no, "duplicate row for group '" + group + "', grade '" + grade + "'");
    }

    auto it = std::find_if(table.begin(), table.end(), [&](const GroupCounts& g) { return g.group == group; });
    if (it == table.end()) {
      GroupCounts fresh{group, {}};
      for (const auto& e : scale.entries()) fresh.distribution.set(e.label, 0);
      table.push_back(std::move(fresh));
      it = std::prev(table.end());
    }
    it->distribution.set(grade, count);
  });
  return table;
}

inline CountsTable load_counts_csv(const std::string& path, const GradeScale& scale) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open counts file '" + path + "'");
  try {
    return load_counts_csv(in, scale);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

/// Writes `table` in the format load_counts_csv() reads, grades in scale
/// order, zero counts included.
inline void write_counts_csv(std::ostream& out, const CountsTable& table, const GradeScale& scale) {
  out << "group,grade,count\n";
  for (const auto& g : table) {
    for (const auto& e : scale.entries()) {
      out << g.group << ',' << e.label << ',' << g.distribution.count(e.label) << '\n';
    }
  }
}

/// Reads a `subject,score` table into a ScoreSheet. Scores must be finite and
/// inside `domain`.
inline ScoreSheet load_scores_csv(std::istream& in, const ScoreDomain& domain = {}) {
  ScoreSheet sheet;
  detail::for_each_csv_row(in, "subject,score", [&](std::size_t line_no, const auto& f) {
    if (f.size() != 2) {
      throw ParseError(line_no, "expected 2 fields (subject,score), got " + std::to_string(f.size()));
    }
    if (f[0].empty()) throw ParseError(line_no, "empty subject id");
    const auto score = detail::parse_real(f[1]);
    if (!score) throw ParseError(line_no, "score '" + std::string(f[1]) + "' is not a number");
    if (!domain.contains(*score)) {
      throw ParseError(line_no, "score " + std::string(f[1]) + " of subject '" + std::string(f[0]) +
                                    "' lies outside the score domain [" + detail::format_trimmed(domain.min, 4) +
                                    ", " + detail::format_trimmed(domain.max, 4) + "]");
    }
    sheet.add(std::string(f[0]), *score);
  });
  return sheet;
}

inline ScoreSheet load_scores_csv(const std::string& path, const ScoreDomain& domain = {}) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scores file '" + path + "'");
  try {
    return load_scores_csv(in, domain);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path);
  }
}

}  // namespace greyassess

#endif  // GREYASSESS_CSV_IO_HPP
