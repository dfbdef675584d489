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

#include "greyassess/grey_number.hpp"

#include <cmath>
#include <limits>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace greyassess {
namespace {

TEST(GreyNumberTest, MakeBuildsInterval) {
  const auto x = make(3, 5);
  EXPECT_EQ(x.lower(), 3);
  EXPECT_EQ(x.upper(), 5);
  EXPECT_FALSE(x.is_white());
}

TEST(GreyNumberTest, DegenerateIntervalIsWhite) {
  const auto x = make(4, 4);
  EXPECT_EQ(x, make(4, 4));
  EXPECT_TRUE(is_white(x));
  EXPECT_TRUE(is_white(make(0, 0)));
  EXPECT_FALSE(is_white(make(4, 4.0001)));
  EXPECT_TRUE(is_white(GreyNumber(7.5)));
}

TEST(GreyNumberTest, RejectsReversedOrNonFiniteEndpoints) {
  EXPECT_THROW(make(5, 3), InvalidInterval);
  EXPECT_THROW(make(0, std::numeric_limits<double>::infinity()), InvalidInterval);
  EXPECT_THROW(make(-std::numeric_limits<double>::infinity(), 0), InvalidInterval);
  EXPECT_THROW(make(std::nan(""), 1), InvalidInterval);
}

TEST(GreyNumberTest, Addition) {
  EXPECT_EQ(make(1, 2) + make(3, 4), make(4, 6));
  EXPECT_EQ(add(make(0, 0), make(2.5, 7)), make(2.5, 7));
  EXPECT_EQ(make(-1, 2) + make(-3, 5), make(-4, 7));
}

TEST(GreyNumberTest, Subtraction) {
  EXPECT_EQ(make(4, 6) - make(1, 2), make(2, 5));
  EXPECT_EQ(sub(make(2.5, 7), make(0, 0)), make(2.5, 7));
  // A - A is not [0, 0] in interval arithmetic.
  EXPECT_EQ(make(1, 2) - make(1, 2), make(-1, 1));
}

TEST(GreyNumberTest, Multiplication) {
  EXPECT_EQ(make(1, 2) * make(3, 4), make(3, 8));
  EXPECT_EQ(make(-1, 2) * make(3, 4), make(-4, 8));
  EXPECT_EQ(mul(make(1, 1), make(-2.5, 7)), make(-2.5, 7));
  EXPECT_EQ(make(-3, -1) * make(-2, 4), make(-12, 6));
}

TEST(GreyNumberTest, Division) {
  EXPECT_EQ(make(1, 2) / make(4, 5), make(0.2, 0.5));
  EXPECT_EQ(div(make(-2.5, 7), make(1, 1)), make(-2.5, 7));
  EXPECT_EQ(make(1, 2) / make(-2, -1), make(-2, -0.5));
}

TEST(GreyNumberTest, DivisionByZeroContainingInterval) {
  EXPECT_THROW(make(1, 2) / make(-1, 1), DivisionByZeroInterval);
  EXPECT_THROW(make(1, 2) / make(0, 1), DivisionByZeroInterval);
  EXPECT_THROW(make(1, 2) / make(-1, 0), DivisionByZeroInterval);
  EXPECT_THROW(make(1, 2) / make(0, 0), DivisionByZeroInterval);
}

TEST(GreyNumberTest, ScalarMultiplication) {
  EXPECT_EQ(scalar_mul(2.0, make(3, 5)), make(6, 10));
  EXPECT_EQ(scalar_mul(1.0, make(-2.5, 7)), make(-2.5, 7));
  const auto m = scalar_mul(1.0 / 60.0, make(3745, 4760));
  EXPECT_NEAR(m.lower(), 62.416666666666667, 1e-12);
  EXPECT_NEAR(m.upper(), 79.333333333333333, 1e-12);
}

TEST(GreyNumberTest, ScalarMultiplicationRejectsNonPositiveFactor) {
  EXPECT_THROW(scalar_mul(0.0, make(1, 2)), DomainError);
  EXPECT_THROW(scalar_mul(-1.0, make(1, 2)), DomainError);
  EXPECT_THROW(scalar_mul(std::nan(""), make(1, 2)), DomainError);
}

TEST(GreyNumberTest, Whitening) {
  EXPECT_DOUBLE_EQ(whiten(make(62.42, 79.33)), 70.875);
  EXPECT_DOUBLE_EQ(whiten(make(62.42, 79.33), WhiteningParameter(0.5)), 70.875);
  EXPECT_EQ(whiten(make(0.1, 0.3), WhiteningParameter(0)), 0.1);
  EXPECT_EQ(whiten(make(0.1, 0.3), WhiteningParameter(1)), 0.3);
  for (double t : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
    EXPECT_EQ(whiten(make(4, 4), WhiteningParameter(t)), 4.0) << "t=" << t;
  }
}

TEST(GreyNumberTest, WhiteningParameterRange) {
  EXPECT_THROW(WhiteningParameter(-0.01), DomainError);
  EXPECT_THROW(WhiteningParameter(1.01), DomainError);
  EXPECT_THROW(WhiteningParameter(std::nan("")), DomainError);
  EXPECT_EQ(WhiteningParameter::midpoint().value(), 0.5);
}

TEST(GreyNumberTest, Rendering) {
  EXPECT_EQ(to_string(make(3, 5)), "[3, 5]");
  EXPECT_EQ(to_string(make(0.2, 0.5)), "[0.2, 0.5]");
  EXPECT_EQ(to_string(scalar_mul(1.0 / 60.0, make(3745, 4760))), "[62.4167, 79.3333]");
  EXPECT_EQ(to_string(make(-0.00001, 0)), "[0, 0]");
}

TEST(GreyNumberTest, FloatInstantiation) {
  const BasicGreyNumber<float> x(1.0f, 2.0f);
  const BasicGreyNumber<float> y(3.0f, 4.0f);
  EXPECT_EQ(x * y, (BasicGreyNumber<float>(3.0f, 8.0f)));
  EXPECT_FLOAT_EQ(whiten(x), 1.5f);
}

// Inclusion: every x op y with x in A, y in B lies in A op B.
TEST(GreyNumberPropertyTest, InclusionForAllOperators) {
  testing::Rng rng(20261017);
  for (int i = 0; i < 1000; ++i) {
    const auto a = rng.interval(-100, 100);
    const auto b = rng.interval(-100, 100);
    const auto d = rng.nonzero_interval(-100, 100);
    const auto sum = a + b, diff = a - b, prod = a * b, quot = a / d;
    for (int k = 0; k < 20; ++k) {
      const double x = rng.point_in(a);
      const double y = rng.point_in(b);
      const double z = rng.point_in(d);
      ASSERT_TRUE(sum.contains(x + y));
      ASSERT_TRUE(diff.contains(x - y));
      ASSERT_TRUE(prod.contains(x * y));
      ASSERT_TRUE(quot.contains(x / z));
    }
    // Endpoint samples are where rounding bites first.
    ASSERT_TRUE(prod.contains(a.lower() * b.upper()));
    ASSERT_TRUE(quot.contains(a.upper() / d.lower()));
  }
}

TEST(GreyNumberPropertyTest, ResultsAreValidCommutativeAndDeterministic) {
  testing::Rng rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto a = rng.interval(-100, 100);
    const auto b = rng.interval(-100, 100);
    EXPECT_LE((a - b).lower(), (a - b).upper());
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * b, a * b);
    const double k = rng.uniform(1e-3, 50);
    EXPECT_EQ(scalar_mul(k, a), mul(GreyNumber(k), a));
  }
}

TEST(GreyNumberPropertyTest, WhitenIsBoundedAndMonotoneInT) {
  testing::Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto a = rng.interval(-100, 100);
    double prev = -std::numeric_limits<double>::infinity();
    for (int s = 0; s <= 100; ++s) {
      const double w = whiten(a, WhiteningParameter(s / 100.0));
      ASSERT_GE(w, a.lower());
      ASSERT_LE(w, a.upper());
      ASSERT_GE(w, prev);
      prev = w;
    }
  }
}

}  // namespace
}  // namespace greyassess
