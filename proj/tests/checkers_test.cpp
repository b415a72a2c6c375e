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

#include "caudit/checkers.hpp"

#include "caudit/engine.hpp"
#include "caudit/error.hpp"
#include "caudit/generator.hpp"
#include "caudit/mechlib.hpp"
#include "gtest/gtest.h"
#include "oracle.hpp"
#include "test_models.hpp"

namespace caudit {
namespace {

Rational replay(const ProbCausalModel& pm, const ProbeQuery& q) {
  QueryContext ctx;
  if (!q.do_assignments.empty()) {
    ctx.interventions = Intervention::of(pm.model, q.do_assignments);
  }
  ctx.condition = q.given;
  return probability(pm, ctx, q.event);
}

// Every cited probability must reproduce exactly, and a failing witness must
// actually violate its bound.
void expect_witness_reverifies(const ProbCausalModel& pm, const PropertyReport& r) {
  ASSERT_TRUE(r.witness.has_value()) << r.property;
  EXPECT_EQ(replay(pm, r.witness->lhs), r.witness->lhs.prob) << r.property;
  EXPECT_EQ(replay(pm, r.witness->rhs), r.witness->rhs.prob) << r.property;
  if (!r.holds && r.witness->bound) {
    EXPECT_GT(r.witness->lhs.prob, *r.witness->bound * r.witness->rhs.prob)
        << r.property;
  }
}

AnalysisFrame constant_output_frame() {
  return test::analysis(R"(
domain b { 0 1 }
domain o { lo hi }
background X : b
endog Xh : b = id(X)
endog O : o = const(lo)
dist {
  X=0 : 1/2
  X=1 : 1/2
}
frame { sensitive: X  output: O }
)");
}

AnalysisFrame ignores_sensitive_frame() {
  // s(x, a) = a.
  return test::analysis(R"(
domain b { 0 1 }
background X : b
background A : b
endog Xh : b = id(X)
endog Ah : b = id(A)
endog O : b = id(Ah)
dist {
  X=0 A=0 : 1/4
  X=0 A=1 : 1/4
  X=1 A=0 : 1/4
  X=1 A=1 : 1/4
}
frame { sensitive: X  others: A  output: O }
)");
}

TEST(NoninterferenceTest, ConstantOutputHolds) {
  const PropertyReport r = check_noninterference(constant_output_frame());
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.tightest.is_one());
}

TEST(NoninterferenceTest, ProjectionHolds) {
  const PropertyReport r = check_noninterference(ignores_sensitive_frame());
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.tightest.is_one());
}

TEST(NoninterferenceTest, AppendixFailsWithFirstWitness) {
  const AnalysisFrame f = appendix_model();
  const PropertyReport r = check_noninterference(f);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.tightest.is_infinite());
  ASSERT_TRUE(r.witness.has_value());
  // Scan order is x1, x2, context, output: the first violating pair is 0 vs 1.
  EXPECT_EQ(r.witness->lhs.do_assignments[0],
            (std::pair<std::string, std::string>{"Xh", "0"}));
  EXPECT_EQ(r.witness->rhs.do_assignments[0],
            (std::pair<std::string, std::string>{"Xh", "1"}));
  EXPECT_EQ(r.witness->lhs.event.str(), "O=nonpositive");
  expect_witness_reverifies(f.pm, r);
}

TEST(NoninterferenceTest, MeasureRandomizedResponse) {
  EXPECT_EQ(measure_noninterference(randomized_response(Rational(1, 4))).tightest,
            Ratio::finite(Rational(3)));
  EXPECT_EQ(measure_noninterference(randomized_response(Rational(1, 3))).tightest,
            Ratio::finite(Rational(2)));
}

TEST(NoninterferenceTest, MeasureMatchesOracle) {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.randomized = true;
    cfg.fresh_r = true;
    const AnalysisFrame f = generate_frame(cfg);
    EXPECT_EQ(measure_noninterference(f).tightest, oracle::noninterference_ratio(f))
        << "seed=" << seed;
  }
}

TEST(NoninterferenceTest, DeterministicDependentIsInfinite) {
  const PropertyReport r = measure_noninterference(appendix_model());
  EXPECT_TRUE(r.tightest.is_infinite());
}

TEST(NoninterferenceTest, MeasureRequiresFreshRandomness) {
  const AnalysisFrame f = test::analysis(R"(
domain b { 0 1 }
background X : b
background R : b
endog Xh : b = id(X)
endog O : b = table(Xh, R) {
  0 0 -> 0
  0 1 -> 1
  1 0 -> 1
  1 1 -> 0
}
dist {
  X=0 R=0 : 1/2
  X=1 R=1 : 1/2
}
frame { sensitive: X  randomness: R  output: O }
)");
  try {
    measure_noninterference(f);
    FAIL() << "non-fresh randomness accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kRandomnessNotFresh);
  }
  // The plain check still works; it only reads the randomness marginal.
  EXPECT_TRUE(check_noninterference(f).holds);
}

TEST(CausalIrrelevanceTest, IgnoringSensitiveGivesOne) {
  const PropertyReport r = check_causal_irrelevance(ignores_sensitive_frame());
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.tightest.is_one());
}

TEST(CausalIrrelevanceTest, AppendixIsInfinite) {
  const AnalysisFrame f = appendix_model();
  const PropertyReport r = check_causal_irrelevance(f);
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.tightest.is_infinite());
  expect_witness_reverifies(f.pm, r);
}

TEST(CausalIrrelevanceTest, RandomizedResponseIsThree) {
  const AnalysisFrame f = randomized_response(Rational(1, 4));
  EXPECT_EQ(measure_causal_irrelevance(f).tightest, Ratio::finite(Rational(3)));
  EXPECT_TRUE(check_causal_irrelevance(f, Rational(3)).holds);
  const PropertyReport tight = check_causal_irrelevance(f, Rational(2999, 1000));
  EXPECT_FALSE(tight.holds);
  expect_witness_reverifies(f.pm, tight);
}

TEST(CausalIrrelevanceTest, MatchesOracle) {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.randomized = (seed % 2) == 0;
    cfg.correlate_x_a = (seed % 3) == 0;
    cfg.fresh_r = false;
    const AnalysisFrame f = generate_frame(cfg);
    EXPECT_EQ(measure_causal_irrelevance(f).tightest, oracle::causal_ratio(f))
        << "seed=" << seed;
  }
}

TEST(CausalIrrelevanceTest, BoundBelowOneRejected) {
  EXPECT_THROW(check_causal_irrelevance(appendix_model(), Rational(1, 2)), Error);
}

TEST(AssocIndependenceTest, IndependentProjectionIsOne) {
  const PropertyReport r = check_assoc_independence(ignores_sensitive_frame());
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.tightest.is_one());
}

TEST(AssocIndependenceTest, AppendixIsInfinite) {
  const AnalysisFrame f = appendix_model();
  const PropertyReport r = measure_assoc_independence(f);
  EXPECT_TRUE(r.tightest.is_infinite());
  expect_witness_reverifies(f.pm, r);
}

TEST(AssocIndependenceTest, HiringRatesGiveFiveFourths) {
  const AnalysisFrame f =
      hiring_model({{"g1", Rational(1, 2)}, {"g2", Rational(2, 5)}},
                   {{"g1", Rational(1, 2)}, {"g2", Rational(1, 2)}});
  // hire: (1/2)/(2/5) = 5/4; reject: (3/5)/(1/2) = 6/5; the max is 5/4.
  EXPECT_EQ(measure_assoc_independence(f).tightest, Ratio::finite(Rational(5, 4)));
}

TEST(AssocIndependenceTest, DegenerateSensitiveIsVacuous) {
  const AnalysisFrame f = appendix_model({{"0", Rational(1)}});
  const PropertyReport r = check_assoc_independence(f);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.tightest.is_one());
  EXPECT_NE(r.notes.find("degenerate"), std::string::npos);
}

TEST(AssocIndependenceTest, MatchesOracle) {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.correlate_x_a = true;
    cfg.randomized = (seed % 2) == 0;
    const AnalysisFrame f = generate_frame(cfg);
    EXPECT_EQ(measure_assoc_independence(f).tightest, oracle::assoc_ratio(f))
        << "seed=" << seed;
  }
}

TEST(AssocOnXTest, IndependentOutputIsOne) {
  const PropertyReport r =
      check_assoc_independence_on_x(ignores_sensitive_frame(), Rational(1));
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.tightest.is_one());
}

TEST(AssocOnXTest, AppendixPosteriorJump) {
  const AnalysisFrame f = appendix_model();
  // Observing nonpositive pins X=0: posterior 1 against prior 1/3 is a jump
  // of 3, and the vanishing posterior on X=1 makes the overall ratio
  // infinite.
  const Rational posterior = probability(
      f.pm, QueryContext(Proposition::eq("O", "nonpositive")), Proposition::eq("X", "0"));
  EXPECT_EQ(posterior, Rational(1));
  EXPECT_EQ(Ratio::bound(posterior, Rational(1, 3)), Ratio::finite(Rational(3)));
  const PropertyReport r = measure_assoc_independence_on_x(f);
  EXPECT_TRUE(r.tightest.is_infinite());
  expect_witness_reverifies(f.pm, r);
}

TEST(AssocOnXTest, RandomizedResponsePosteriorRatioIsTwo) {
  // Posteriors for rr(1/4) with a uniform bit are 3/4 and 1/4 against priors
  // of 1/2; the worst direction is prior/posterior = 2.
  const AnalysisFrame f = randomized_response(Rational(1, 4));
  const PropertyReport r = measure_assoc_independence_on_x(f);
  EXPECT_EQ(r.tightest, Ratio::finite(Rational(2)));
  EXPECT_EQ(oracle::assoc_on_x_ratio(f), Ratio::finite(Rational(2)));
}

TEST(AssocOnXTest, MatchesOracle) {
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.correlate_x_a = (seed % 2) == 0;
    cfg.randomized = (seed % 3) == 0;
    const AnalysisFrame f = generate_frame(cfg);
    EXPECT_EQ(measure_assoc_independence_on_x(f).tightest,
              oracle::assoc_on_x_ratio(f))
        << "seed=" << seed;
  }
}

TEST(DifferentialPrivacyTest, NoiselessIdentityFailsAnyBound) {
  const DatabaseFrame f = database_release(1, std::nullopt, Aggregate::kIdentity);
  const PropertyReport r = check_differential_privacy(f, Rational(1000000));
  EXPECT_FALSE(r.holds);
  EXPECT_TRUE(r.tightest.is_infinite());
  expect_witness_reverifies(f.pm, r);
}

TEST(DifferentialPrivacyTest, TwoRowNoisyIdentityHoldsAtThree) {
  const DatabaseFrame f = database_release(2, Rational(1, 4), Aggregate::kIdentity);
  EXPECT_TRUE(check_differential_privacy(f, Rational(3)).holds);
  const PropertyReport close = check_differential_privacy(f, Rational(2999, 1000));
  EXPECT_FALSE(close.holds);
  EXPECT_EQ(close.tightest, Ratio::finite(Rational(3)));
  expect_witness_reverifies(f.pm, close);
}

TEST(DifferentialPrivacyTest, ConstantReleaseHoldsAtOne) {
  const DatabaseFrame f = test::database(R"(
domain cell { 0 1 bot }
domain o { token }
background D1 : cell
endog Dh1 : cell = id(D1)
endog O : o = const(token)
dist {
  D1=0 : 1/2
  D1=1 : 1/2
}
dbframe { rows: D1  output: O  bot: value }
)");
  const PropertyReport r = check_differential_privacy(f, Rational(1));
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.tightest.is_one());
}

TEST(DifferentialPrivacyTest, MatchesOracleBothBotModes) {
  for (const BotMode mode : {BotMode::kValue, BotMode::kRemoved}) {
    DatabaseFrame f = database_release(2, Rational(1, 3), Aggregate::kSum);
    f.bot_mode = mode;
    EXPECT_EQ(measure_differential_privacy(f).tightest, oracle::dp_ratio(f));
  }
}

TEST(Rule80Test, BoundaryHoldsExactly) {
  const AnalysisFrame f =
      hiring_model({{"g1", Rational(1, 2)}, {"g2", Rational(2, 5)}},
                   {{"g1", Rational(1, 2)}, {"g2", Rational(1, 2)}});
  const PropertyReport r = check_80_rule(f, "hire");
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.tightest, Ratio::finite(Rational(5, 4)));
  EXPECT_EQ(oracle::rule80_ratio(f, "hire"), Ratio::finite(Rational(5, 4)));
}

TEST(Rule80Test, SkewedRatesFail) {
  const AnalysisFrame f =
      hiring_model({{"g1", Rational(1, 2)}, {"g2", Rational(39, 100)}},
                   {{"g1", Rational(1, 2)}, {"g2", Rational(1, 2)}});
  const PropertyReport r = check_80_rule(f, "hire");
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.tightest, Ratio::finite(Rational(50, 39)));
  expect_witness_reverifies(f.pm, r);
}

TEST(Rule80Test, EqualRatesHoldWithRatioOne) {
  const AnalysisFrame f =
      hiring_model({{"g1", Rational(1, 3)}, {"g2", Rational(1, 3)}},
                   {{"g1", Rational(1, 2)}, {"g2", Rational(1, 2)}});
  const PropertyReport r = check_80_rule(f, "hire");
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.tightest.is_one());
}

TEST(Rule80Test, PositiveOnlyCheckCanDisagreeWithAllOutcomes) {
  // Selection rates 9/10 vs 18/25 pass on the positive outcome exactly, but
  // the rejection rates 1/10 vs 7/25 violate 5/4; the notes must flag it.
  const AnalysisFrame f =
      hiring_model({{"g1", Rational(9, 10)}, {"g2", Rational(18, 25)}},
                   {{"g1", Rational(1, 2)}, {"g2", Rational(1, 2)}});
  const PropertyReport r = check_80_rule(f, "hire");
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.tightest, Ratio::finite(Rational(5, 4)));
  EXPECT_NE(r.notes.find("does not hold"), std::string::npos);
  EXPECT_NE(r.notes.find("disagrees"), std::string::npos);
}

TEST(Rule80Test, ErrorsOnBadArguments) {
  const AnalysisFrame f = appendix_model();
  EXPECT_THROW(check_80_rule(f, "no-such-outcome"), Error);
  const AnalysisFrame degenerate = appendix_model({{"0", Rational(1)}});
  try {
    check_80_rule(degenerate, "positive");
    FAIL() << "degenerate group structure accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDegenerateSensitive);
  }
}

MetricBounds uniform_metric(const AnalysisFrame& f, const Rational& k) {
  MetricBounds metric;
  const Domain& xdom = *f.pm.model.variable(f.sensitive_input).domain;
  for (int i = 0; i < xdom.size(); ++i) {
    for (int j = i + 1; j < xdom.size(); ++j) {
      metric.set(xdom.value(i), xdom.value(j), k);
    }
  }
  return metric;
}

TEST(LipschitzTest, UnitMetricReducesToCausalIrrelevance) {
  const AnalysisFrame f = randomized_response(Rational(1, 4));
  const PropertyReport r = check_lipschitz(f, uniform_metric(f, Rational(1)));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.tightest, measure_causal_irrelevance(f).tightest);
}

TEST(LipschitzTest, BoundsAtThreeHoldAndAtTwoFail) {
  const AnalysisFrame f = randomized_response(Rational(1, 4));
  EXPECT_TRUE(check_lipschitz(f, uniform_metric(f, Rational(3))).holds);
  const PropertyReport r = check_lipschitz(f, uniform_metric(f, Rational(2)));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness->bound, Rational(2));
  expect_witness_reverifies(f.pm, r);
}

TEST(LipschitzTest, MetricValidation) {
  const AnalysisFrame f = appendix_model();
  MetricBounds missing;
  missing.set("0", "1", Rational(2));
  EXPECT_THROW(check_lipschitz(f, missing), Error);  // no (0,2) or (1,2) bound

  MetricBounds below_one = uniform_metric(f, Rational(1));
  below_one.set("0", "1", Rational(1, 2));
  EXPECT_THROW(check_lipschitz(f, below_one), Error);

  MetricBounds asymmetric = uniform_metric(f, Rational(2));
  asymmetric.set("1", "0", Rational(3));
  EXPECT_THROW(check_lipschitz(f, asymmetric), Error);

  MetricBounds bad_diagonal = uniform_metric(f, Rational(2));
  bad_diagonal.set("0", "0", Rational(2));
  EXPECT_THROW(check_lipschitz(f, bad_diagonal), Error);
}

TEST(ReportTest, MaxWitnessAttachedToMeasures) {
  const AnalysisFrame f = randomized_response(Rational(1, 4));
  const PropertyReport r = measure_noninterference(f);
  ASSERT_TRUE(r.witness.has_value());
  // The max pair cites probabilities 3/4 vs 1/4.
  EXPECT_EQ(r.witness->lhs.prob, Rational(3, 4));
  EXPECT_EQ(r.witness->rhs.prob, Rational(1, 4));
  expect_witness_reverifies(f.pm, r);
}

}  // namespace
}  // namespace caudit
