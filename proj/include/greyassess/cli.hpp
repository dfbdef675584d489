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

#ifndef GREYASSESS_CLI_HPP
#define GREYASSESS_CLI_HPP

#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "greyassess/assessment.hpp"
#include "greyassess/csv_io.hpp"
#include "greyassess/error.hpp"
#include "greyassess/expression.hpp"
#include "greyassess/grade_scale.hpp"
#include "greyassess/report.hpp"
#include "greyassess/tfn.hpp"

namespace greyassess::cli {

enum ExitCode : int { kOk = 0, kDataError = 1, kUsageError = 2 };

struct Options {
  std::string scale_path;
  double t = 0.5;
  std::string format = "text";
  bool check_tfn = false;

  std::string counts_path;
  std::string scores_path;
  std::string group = "all";
  bool per_subject = false;

  std::string expression;
};

namespace detail {

inline GradeScale active_scale(const Options& o) {
  return o.scale_path.empty() ? default_scale() : load_scale_file(o.scale_path);
}

inline std::vector<AssessmentReport> assess_counts(const CountsTable& table, const GradeScale& scale,
                                                   WhiteningParameter t) {
  std::vector<AssessmentReport> out;
  for (const auto& g : table) out.push_back(assess(g.distribution, scale, t, g.group));
  return out;
}

inline std::vector<std::pair<std::string, GradeDistribution>> per_subject_distributions(const ScoreSheet& sheet,
                                                                                       const GradeScale& scale) {
  std::vector<std::pair<std::string, GradeDistribution>> out;
  for (const auto& s : sheet.subjects()) {
    out.emplace_back(s.id, scores_to_distribution(ScoreSheet({s}), scale));
  }
  return out;
}

inline std::string tfn_line(const std::string& group, const GradeDistribution& d, const GradeScale& scale) {
  const auto eq = check_equivalence(d, scale);
  const auto m = tfn_mean(d, scale);
  char diff[32];
  std::snprintf(diff, sizeof diff, "%.3g", eq.difference);
  return "tfn check " + group + ": M=(" + format_2dp(m.a()) + ", " + format_2dp(m.b()) + ", " + format_2dp(m.c()) +
         ") defuzzified=" + format_2dp(eq.fuzzy_value) + " grey=" + format_2dp(eq.grey_value) +
         " difference=" + diff + (eq.pass ? " PASS" : " FAIL") + "\n";
}

inline nlohmann::ordered_json tfn_json(const std::string& group, const GradeDistribution& d, const GradeScale& scale) {
  const auto m = tfn_mean(d, scale);
  auto j = to_json(check_equivalence(d, scale));
  nlohmann::ordered_json out = {{"group", group}, {"tfn_mean", {{"a", m.a()}, {"b", m.b()}, {"c", m.c()}}}};
  out.update(j);
  return out;
}

inline int run_assess(const Options& o, std::ostream& out) {
  const auto scale = active_scale(o);
  const WhiteningParameter t(o.t);
  const bool json = o.format == "json";
  nlohmann::ordered_json doc = {{"reports", nlohmann::ordered_json::array()}};
  std::string text;

  std::vector<std::pair<std::string, GradeDistribution>> groups;
  std::optional<ScoreSheet> sheet;
  if (!o.counts_path.empty()) {
    for (auto& g : load_counts_csv(o.counts_path, scale)) groups.emplace_back(g.group, g.distribution);
  } else {
    sheet = load_scores_csv(o.scores_path, scale.domain());
    groups.emplace_back(o.group, scores_to_distribution(*sheet, scale));
    if (o.per_subject) {
      for (auto& g : per_subject_distributions(*sheet, scale)) groups.push_back(std::move(g));
    }
  }

  std::vector<AssessmentReport> reports;
  for (const auto& [id, d] : groups) reports.push_back(assess(d, scale, t, id));
  for (const auto& r : reports) {
    text += render_text(r);
    doc["reports"].push_back(to_json(r));
  }

  if (sheet) {
    const double raw = raw_mean(*sheet);
    const auto ext = extreme_case_means(*sheet, scale);
    const auto& pooled = reports.front();
    text += "raw mean: " + format_2dp(raw) + " (grade " + classify_score(scale, raw) + ")\n";
    text += "raw mean - w(M): " + format_2dp(raw - pooled.whitened) + "\n";
    text += "extreme cases: minimal " + format_2dp(ext.minimal) + ", maximal " + format_2dp(ext.maximal) + "\n";
    doc["raw_mean"] = raw;
    doc["raw_mean_grade"] = classify_score(scale, raw);
    doc["raw_minus_whitened"] = raw - pooled.whitened;
    doc["extreme_case_means"] = {{"minimal", ext.minimal}, {"maximal", ext.maximal}};
  }

  bool tfn_ok = true;
  if (o.check_tfn) {
    doc["tfn_check"] = nlohmann::ordered_json::array();
    for (const auto& [id, d] : groups) {
      text += tfn_line(id, d, scale);
      auto j = tfn_json(id, d, scale);
      tfn_ok = tfn_ok && j.at("pass").get<bool>();
      doc["tfn_check"].push_back(std::move(j));
    }
  }

  if (json) {
    out << doc.dump(2) << "\n";
  } else {
    out << text;
  }
  return tfn_ok ? kOk : kDataError;
}

inline int run_compare(const Options& o, std::ostream& out) {
  const auto scale = active_scale(o);
  const WhiteningParameter t(o.t);
  std::vector<AssessmentReport> reports;
  if (!o.counts_path.empty()) {
    reports = assess_counts(load_counts_csv(o.counts_path, scale), scale, t);
  } else {
    const auto sheet = load_scores_csv(o.scores_path, scale.domain());
    for (const auto& [id, d] : per_subject_distributions(sheet, scale)) reports.push_back(assess(d, scale, t, id));
  }
  const auto ranking = compare_groups(reports);

  if (o.format == "json") {
    nlohmann::ordered_json doc = {{"ranking", nlohmann::ordered_json::array()}};
    for (const auto& g : ranking) {
      doc["ranking"].push_back({{"rank", g.rank}, {"tied", g.tied}, {"report", to_json(g.report)}});
    }
    out << doc.dump(2) << "\n";
    return kOk;
  }
  for (const auto& g : ranking) {
    out << g.rank << (g.tied ? "= " : ". ") << g.report.group_id << ": w(M)=" << format_2dp(g.report.whitened)
        << " M=" << format_gn_2dp(g.report.mean_gn) << " grade=" << g.report.grade << "\n";
  }
  return kOk;
}

inline int run_validate_scale(const Options& o, const std::string& file, std::ostream& out) {
  const std::string path = file.empty() ? o.scale_path : file;
  const auto scale = path.empty() ? default_scale() : load_scale_file(path, /*validate=*/false);
  const auto violations = validate_scale(scale);
  const std::string name = path.empty() ? "built-in scale" : path;

  if (o.format == "json") {
    nlohmann::ordered_json doc = {{"scale", name}, {"valid", violations.empty()}};
    doc["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : violations) doc["violations"].push_back({{"message", v.message}, {"labels", v.labels}});
    out << doc.dump(2) << "\n";
  } else if (violations.empty()) {
    out << name << ": valid (" << scale.size() << " grades, domain [" << greyassess::detail::format_trimmed(scale.domain().min, 4)
        << ", " << greyassess::detail::format_trimmed(scale.domain().max, 4) << "])\n";
  } else {
    out << name << ": invalid\n";
    for (const auto& v : violations) out << "  - " << v.message << "\n";
  }
  return violations.empty() ? kOk : kDataError;
}

inline int run_calc(const Options& o, std::ostream& out, std::ostream& err) {
  Expression expr = Expression::number(0);
  try {
    expr = parse_gn_expression(o.expression);
  } catch (const SyntaxError& e) {
    err << "error: syntax error at offset " << e.offset() << ": " << e.detail() << "\n"
        << "  " << o.expression << "\n"
        << "  " << std::string(e.offset(), ' ') << "^\n";
    return kDataError;
  }
  const auto value = eval_gn_expression(expr);
  if (o.format == "json") {
    nlohmann::ordered_json doc = {{"expression", to_string(expr)},
                                  {"lower", value.lower()},
                                  {"upper", value.upper()},
                                  {"whitened", whiten(value, WhiteningParameter(o.t))}};
    out << doc.dump(2) << "\n";
  } else {
    out << to_string(value) << "\n";
  }
  return kOk;
}

}  // namespace detail

/// Runs the command line `args` (args[0] is the program name). Returns the
/// process exit status: 0 success, 1 data or validation error, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grey-number assessment of graded groups", args.empty() ? "greyassess" : args.front()};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--scale", o.scale_path, "Grade scale file (default: built-in A/B/C/D/F scale)");
  app.add_option("--t", o.t, "Whitening parameter in [0, 1]")->check(CLI::Range(0.0, 1.0));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--check-tfn", o.check_tfn, "Also run the triangular fuzzy number equivalence check");

  auto* assess_cmd = app.add_subcommand("assess", "Assess groups from grade counts or raw scores");
  auto* counts = assess_cmd->add_option("--counts", o.counts_path, "CSV with header group,grade,count");
  auto* scores = assess_cmd->add_option("--scores", o.scores_path, "CSV with header subject,score");
  counts->excludes(scores);
  assess_cmd->add_option("--group", o.group, "Group name for the pooled scores report");
  assess_cmd->add_flag("--per-subject", o.per_subject, "With --scores, also assess each subject on its own");

  auto* compare_cmd = app.add_subcommand("compare", "Rank groups by whitened mean grey number");
  auto* ccounts = compare_cmd->add_option("--counts", o.counts_path, "CSV with header group,grade,count");
  auto* cscores = compare_cmd->add_option("--scores", o.scores_path, "CSV with header subject,score (one group per subject)");
  ccounts->excludes(cscores);

  std::string scale_file;
  auto* validate_cmd = app.add_subcommand("validate-scale", "Check a grade scale file");
  validate_cmd->add_option("file", scale_file, "Scale file (default: --scale or the built-in scale)");

  auto* calc_cmd = app.add_subcommand("calc", "Evaluate a grey-number expression such as '[1,2] * ([3,4] + 1)'");
  calc_cmd->add_option("expression", o.expression, "Expression")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("greyassess");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsageError;
  }

  try {
    if (assess_cmd->parsed() || compare_cmd->parsed()) {
      const char* name = assess_cmd->parsed() ? "assess" : "compare";
      if (o.counts_path.empty() == o.scores_path.empty()) {
        err << "usage error: " << name << " needs exactly one of --counts or --scores\n";
        return kUsageError;
      }
      return assess_cmd->parsed() ? detail::run_assess(o, out) : detail::run_compare(o, out);
    }
    if (validate_cmd->parsed()) return detail::run_validate_scale(o, scale_file, out);
    if (calc_cmd->parsed()) return detail::run_calc(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
  return kUsageError;
}

}  // namespace greyassess::cli

#endif  // GREYASSESS_CLI_HPP
