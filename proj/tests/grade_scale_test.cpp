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

#include "greyassess/grade_scale.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace greyassess {
namespace {

using Kind = ScaleViolation::Kind;

bool has_violation(const std::vector<ScaleViolation>& vs, Kind kind, std::vector<std::string> labels = {}) {
  return std::any_of(vs.begin(), vs.end(), [&](const ScaleViolation& v) {
    return v.kind == kind && (labels.empty() || v.labels == labels);
  });
}

TEST(GradeScaleTest, DefaultScale) {
  const auto s = default_scale();
  EXPECT_EQ(s.size(), 5u);
  EXPECT_EQ(grade_to_gn(s, "A"), make(85, 100));
  EXPECT_EQ(grade_to_gn(s, "B"), make(75, 84));
  EXPECT_EQ(grade_to_gn(s, "C"), make(60, 74));
  EXPECT_EQ(grade_to_gn(s, "D"), make(50, 59));
  EXPECT_EQ(grade_to_gn(s, "F"), make(0, 49));
  EXPECT_TRUE(validate_scale(s).empty());
}

TEST(GradeScaleTest, StrictScale) {
  const auto s = strict_scale();
  EXPECT_EQ(grade_to_gn(s, "A"), make(90, 100));
  EXPECT_EQ(grade_to_gn(s, "F"), make(0, 59));
  EXPECT_TRUE(validate_scale(s).empty());
}

TEST(GradeScaleTest, UnknownLabel) {
  EXPECT_THROW(grade_to_gn(default_scale(), "Z"), UnknownLabel);
  // Case-sensitive.
  EXPECT_THROW(grade_to_gn(default_scale(), "a"), UnknownLabel);
}

TEST(GradeScaleTest, DetectsOverlap) {
  const GradeScale s({{"A", make(85, 100)}, {"B", make(80, 90)}, {"F", make(0, 79)}});
  const auto vs = validate_scale(s);
  EXPECT_TRUE(has_violation(vs, Kind::kOverlap, {"A", "B"}));
  EXPECT_FALSE(has_violation(vs, Kind::kOverlap, {"B", "F"}));
}

TEST(GradeScaleTest, DetectsCoverageGapAtDomainMinimum) {
  const GradeScale s({{"A", make(50, 100)}, {"F", make(10, 49)}});
  const auto vs = validate_scale(s);
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_TRUE(has_violation(vs, Kind::kCoverage, {"F"}));
}

TEST(GradeScaleTest, DetectsOtherViolations) {
  EXPECT_TRUE(has_violation(validate_scale(GradeScale({{"A", make(0, 100)}})), Kind::kTooFewGrades));
  EXPECT_TRUE(has_violation(validate_scale(GradeScale({{"A", make(50, 100)}, {"A", make(0, 49)}})),
                            Kind::kDuplicateLabel, {"A"}));
  EXPECT_TRUE(has_violation(validate_scale(GradeScale({{"", make(50, 100)}, {"F", make(0, 49)}})), Kind::kEmptyLabel));
  EXPECT_TRUE(has_violation(validate_scale(GradeScale({{"F", make(0, 49)}, {"A", make(50, 100)}})),
                            Kind::kNotDescending, {"F", "A"}));
  EXPECT_TRUE(has_violation(validate_scale(GradeScale({{"A", make(50, 120)}, {"F", make(0, 49)}})),
                            Kind::kOutsideDomain, {"A"}));
  EXPECT_TRUE(has_violation(validate_scale(GradeScale({{"A", make(50, 100)}, {"F", make(0, 49)}}, {100, 0})),
                            Kind::kInvalidDomain));
}

TEST(GradeScaleTest, CheckedThrowsWithAllViolations) {
  try {
    GradeScale::checked({{"A", make(85, 100)}, {"B", make(80, 90)}, {"F", make(10, 79)}});
    FAIL() << "expected InvalidScale";
  } catch (const InvalidScale& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("overlap"), std::string::npos);
    EXPECT_NE(msg.find("domain minimum"), std::string::npos);
  }
}

TEST(GradeScaleTest, ClassifyBoundaries) {
  const auto s = default_scale();
  EXPECT_EQ(classify_score(s, 100), "A");
  EXPECT_EQ(classify_score(s, 85), "A");
  EXPECT_EQ(classify_score(s, 84), "B");
  EXPECT_EQ(classify_score(s, 75), "B");
  EXPECT_EQ(classify_score(s, 74), "C");
  EXPECT_EQ(classify_score(s, 60), "C");
  EXPECT_EQ(classify_score(s, 59), "D");
  EXPECT_EQ(classify_score(s, 50), "D");
  EXPECT_EQ(classify_score(s, 49), "F");
  EXPECT_EQ(classify_score(s, 0), "F");
}

TEST(GradeScaleTest, ClassifyFallsIntoGapsByLowerBound) {
  const auto s = default_scale();
  // 84.5 lies between B's upper bound 84 and A's lower bound 85: below A's
  // threshold, at or above B's, hence B.
  EXPECT_EQ(classify_score(s, 84.5), "B");
  EXPECT_EQ(classify_score(s, 84.999), "B");
  EXPECT_EQ(classify_score(s, 49.5), "F");
  EXPECT_EQ(classify_score(s, 74.3), "C");
}

TEST(GradeScaleTest, ClassifyRejectsOutOfDomain) {
  EXPECT_THROW(classify_score(default_scale(), -0.5), DomainError);
  EXPECT_THROW(classify_score(default_scale(), 100.5), DomainError);
  EXPECT_THROW(classify_score(default_scale(), std::nan("")), DomainError);
}

TEST(GradeScalePropertyTest, MidpointsAndWhitenedGradesClassifyToThemselves) {
  for (const auto& s : {default_scale(), strict_scale()}) {
    for (const auto& e : s.entries()) {
      EXPECT_EQ(classify_score(s, (e.interval.lower() + e.interval.upper()) / 2), e.label);
      EXPECT_EQ(classify_score(s, whiten(grade_to_gn(s, e.label))), e.label);
    }
  }
}

TEST(GradeScalePropertyTest, AgreesWithClosedIntervalsOnIntegers) {
  const auto s = default_scale();
  for (int score = 0; score <= 100; ++score) {
    int hits = 0;
    std::string member;
    for (const auto& e : s.entries()) {
      if (e.interval.contains(score)) {
        ++hits;
        member = e.label;
      }
    }
    ASSERT_EQ(hits, 1) << score;
    EXPECT_EQ(classify_score(s, score), member) << score;
  }
}

TEST(GradeScalePropertyTest, ClassificationIsMonotone) {
  testing::Rng rng(5);
  const auto s = default_scale();
  for (int i = 0; i < 5000; ++i) {
    double x = rng.uniform(0, 100);
    double y = rng.uniform(0, 100);
    if (x > y) std::swap(x, y);
    // Lower index means higher grade.
    ASSERT_GE(classify_index(s, x), classify_index(s, y));
  }
}

TEST(GradeScaleTest, ParsesScaleFile) {
  const auto s = parse_scale(std::string_view(
      "# default\n"
      "A 85 100\n"
      "B 75 84\n"
      "C 60 74\n"
      "D 50 59\n"
      "F 0 49\n"));
  EXPECT_EQ(s, default_scale());
}

TEST(GradeScaleTest, ParsesDomainLine) {
  const auto s = parse_scale(std::string_view("domain 0 10\nhigh 5 10\nlow 0 4\n"));
  EXPECT_EQ(s.domain(), (ScoreDomain{0, 10}));
  EXPECT_EQ(classify_score(s, 4.5), "low");
  EXPECT_EQ(classify_score(s, 5), "high");
  EXPECT_THROW(classify_score(s, 11), DomainError);
}

TEST(GradeScaleTest, ScaleFileErrors) {
  try {
    parse_scale(std::string_view("A 85 100\nB 75\n"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_scale(std::string_view("A 85 x\nF 0 84\n")), ParseError);
  EXPECT_THROW(parse_scale(std::string_view("A 100 85\nF 0 84\n")), ParseError);
  EXPECT_THROW(parse_scale(std::string_view("A 85 100\ndomain 0 100\n")), ParseError);
  EXPECT_THROW(parse_scale(std::string_view("# nothing\n")), ParseError);
  EXPECT_THROW(parse_scale(std::string_view("A 85 100\nB 80 90\nF 0 79\n")), InvalidScale);

  std::istringstream overlapping("A 85 100\nB 80 90\nF 0 79\n");
  EXPECT_EQ(validate_scale(parse_scale_unchecked(overlapping)).size(), 1u);
}

TEST(GradeScaleTest, WriteThenParseGivesSameScale) {
  for (const auto& s : {default_scale(), GradeScale({{"hi", make(0.5, 1)}, {"lo", make(0.1, 0.3)}}, {0.1, 1})}) {
    std::ostringstream out;
    write_scale(out, s);
    std::istringstream in(out.str());
    EXPECT_EQ(parse_scale_unchecked(in), s) << out.str();
  }
}

}  // namespace
}  // namespace greyassess
