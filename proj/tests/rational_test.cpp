// Copyright 2026 The Caudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "caudit/rational.hpp"

#include <cmath>

#include "caudit/error.hpp"
#include "gtest/gtest.h"

namespace caudit {
namespace {

TEST(RationalTest, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(-2, -4), Rational(1, 2));
  EXPECT_EQ(Rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_EQ(Rational(1, 3).str(), "1/3");
  EXPECT_EQ(Rational(3).frac_str(), "3/1");
}

TEST(RationalTest, Parse) {
  EXPECT_EQ(Rational::parse("3/9"), Rational(1, 3));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
  EXPECT_THROW(Rational::parse(""), Error);
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("a/b"), Error);
  EXPECT_THROW(Rational::parse("1.5"), Error);
}

TEST(RationalTest, Arithmetic) {
  const Rational a(1, 3);
  const Rational b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_THROW(a / Rational(0), Error);
  EXPECT_LT(b, a);
}

TEST(RationalTest, LogMatchesDouble) {
  EXPECT_NEAR(Rational(3).log(), std::log(3.0), 1e-12);
  EXPECT_NEAR(Rational(1, 4).log(), std::log(0.25), 1e-12);
  // Operands far outside double range still get a finite, accurate log.
  Rational huge(1);
  for (int i = 0; i < 200; ++i) huge *= Rational(1000);
  EXPECT_NEAR(huge.log(), 200 * std::log(1000.0), 1e-6);
}

TEST(RationalTest, RatioBound) {
  EXPECT_EQ(Ratio::bound(Rational(1, 3), Rational(1, 6)),
            Ratio::finite(Rational(2)));
  EXPECT_TRUE(Ratio::bound(Rational(0), Rational(0)).is_vacuous());
  EXPECT_TRUE(Ratio::bound(Rational(1, 2), Rational(0)).is_infinite());
  EXPECT_THROW(Ratio::bound(Rational(-1), Rational(1)), Error);
}

TEST(RationalTest, RatioOrderingAndBounds) {
  const Ratio two = Ratio::finite(Rational(2));
  const Ratio three = Ratio::finite(Rational(3));
  EXPECT_TRUE(two <= three);
  EXPECT_FALSE(three <= two);
  EXPECT_TRUE(three <= Ratio::infinite());
  EXPECT_FALSE(Ratio::infinite() <= three);
  EXPECT_TRUE(Ratio::vacuous() <= two);
  EXPECT_TRUE(two.within(Rational(2)));
  EXPECT_FALSE(two.within(Rational(1)));
  EXPECT_FALSE(Ratio::infinite().within(Rational(1000)));
  EXPECT_TRUE(Ratio::vacuous().within(Rational(1)));
  EXPECT_EQ(three.squared(), Ratio::finite(Rational(9)));
  EXPECT_TRUE(Ratio::infinite().squared().is_infinite());
}

TEST(RationalTest, RatioDisplay) {
  EXPECT_EQ(Ratio::finite(Rational(3)).str(), "3/1");
  EXPECT_EQ(Ratio::infinite().str(), "inf");
  EXPECT_EQ(Ratio::finite(Rational(3)).epsilon_str(), "1.098612");
  EXPECT_EQ(Ratio::one().epsilon_str(), "0.000000");
  EXPECT_EQ(Ratio::infinite().epsilon_str(), "inf");
}

TEST(RationalTest, ExpUpperBound) {
  // The bound is exact-rational, at least e^x, and within 0.1% for small x.
  struct Case {
    Rational x;
    double exact;
  } cases[] = {
      {Rational(0), 1.0},
      {Rational(1), M_E},
      {Rational(1, 2), std::exp(0.5)},
      {Rational(3), std::exp(3.0)},
      {Rational(11, 10), std::exp(1.1)},
  };
  for (const auto& c : cases) {
    const Rational u = exp_upper_bound(c.x);
    // The >= guarantee is exact in rationals; the double round-trip here can
    // shave an ulp, hence the tiny slack.
    EXPECT_GE(u.to_double(), c.exact * (1 - 1e-12)) << "x=" << c.x.str();
    EXPECT_LE(u.to_double(), c.exact * 1.001) << "x=" << c.x.str();
  }
  EXPECT_THROW(exp_upper_bound(Rational(-1)), Error);
}

}  // namespace
}  // namespace caudit
