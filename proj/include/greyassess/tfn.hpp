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

#ifndef GREYASSESS_TFN_HPP
#define GREYASSESS_TFN_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "greyassess/assessment.hpp"
#include "greyassess/error.hpp"
#include "greyassess/grade_scale.hpp"
#include "greyassess/grey_number.hpp"

namespace greyassess {

/// Triangular fuzzy number (a, b, c): support [a, c], peak at b. Only the
/// triple is kept; membership functions are never evaluated.
class TriangularFuzzyNumber {
 public:
  TriangularFuzzyNumber(double a, double b, double c) : a_(a), b_(b), c_(c) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !(a <= b && b <= c)) {
      throw InvalidInterval("triangular fuzzy number requires finite a <= b <= c");
    }
  }

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

  friend bool operator==(const TriangularFuzzyNumber&, const TriangularFuzzyNumber&) = default;

 private:
  double a_;
  double b_;
  double c_;
};

/// (lower, midpoint, upper) of the grade's interval.
inline TriangularFuzzyNumber grade_to_tfn(const GradeScale& scale, std::string_view label) {
  const auto& gn = grade_to_gn(scale, label);
  return {gn.lower(), (gn.lower() + gn.upper()) / 2.0, gn.upper()};
}

/// Componentwise count-weighted average of the grade TFNs.
inline TriangularFuzzyNumber tfn_mean(const GradeDistribution& dist, const GradeScale& scale) {
  if (const auto unknown = dist.unknown_labels(scale); !unknown.empty()) {
    throw UnknownLabel(unknown.front());
  }
  const auto n = dist.total();
  if (n <= 0) throw EmptyDistribution();

  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  for (const auto& e : scale.entries()) {
    const auto k = static_cast<double>(dist.count(e.label));
    if (k == 0.0) continue;
    const auto tfn = grade_to_tfn(scale, e.label);
    a += k * tfn.a();
    b += k * tfn.b();
    c += k * tfn.c();
  }
  const double nn = static_cast<double>(n);
  a /= nn;
  b /= nn;
  c /= nn;
  // Averaging preserves a <= b <= c mathematically; absorb rounding noise.
  b = std::clamp(b, a, c);
  return {a, b, c};
}

/// Representative value (a + c) / 2.
inline double defuzzify(const TriangularFuzzyNumber& m) noexcept { return (m.a() + m.c()) / 2.0; }

inline constexpr double kEquivalenceTolerance = 1e-9;

struct EquivalenceReport {
  double grey_value = 0.0;   // whiten(mean_gn, 1/2)
  double fuzzy_value = 0.0;  // defuzzify(tfn_mean)
  double fuzzy_peak = 0.0;   // b component of tfn_mean
  double difference = 0.0;   // |grey_value - fuzzy_value|
  bool pass = false;
};

/// Runs the grey-number and the triangular-fuzzy-number assessments side by
/// side and checks that their representative values agree within
/// kEquivalenceTolerance.
inline EquivalenceReport check_equivalence(const GradeDistribution& dist, const GradeScale& scale) {
  EquivalenceReport r;
  r.grey_value = whiten(mean_gn(dist, scale), WhiteningParameter::midpoint());
  const auto m = tfn_mean(dist, scale);
  r.fuzzy_value = defuzzify(m);
  r.fuzzy_peak = m.b();
  r.difference = std::abs(r.grey_value - r.fuzzy_value);
  r.pass = r.difference <= kEquivalenceTolerance;
  return r;
}

}  // namespace greyassess

#endif  // GREYASSESS_TFN_HPP
