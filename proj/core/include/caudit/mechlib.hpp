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

#ifndef CAUDIT_MECHLIB_HPP_
#define CAUDIT_MECHLIB_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "caudit/frames.hpp"
#include "caudit/proposition.hpp"
#include "caudit/rational.hpp"

namespace caudit {

// Canonical fixtures. All randomness is a fresh background variable with
// rational thresholds; nothing here ever samples, so every fixture property
// is exactly decidable.

// The three-input positivity checker: sensitive x in {0, 1, 2}, output
// whether x is positive, a single-value dummy other attribute. The prior over
// x is a parameter (uniform by default); nonnegative entries summing to 1.
AnalysisFrame appendix_model(
    const std::map<std::string, Rational>& prior = {
        {"0", Rational(1, 3)}, {"1", Rational(1, 3)}, {"2", Rational(1, 3)}});

// Binary randomized response: report the sensitive bit unchanged with
// probability 1 - flip, flipped otherwise. Requires 0 < flip < 1/2. The
// tightest noninterference ratio is (1 - flip) / flip.
AnalysisFrame randomized_response(const Rational& flip);

// Group hiring with exact per-group selection rates, realized by one fresh
// uniform lottery variable with rational thresholds. `rates` maps group ->
// hire rate in [0, 1]; `weights` maps group -> positive population share
// (sums to 1). Groups appear in the given order.
AnalysisFrame hiring_model(const std::vector<std::pair<std::string, Rational>>& rates,
                           const std::vector<std::pair<std::string, Rational>>& weights);

enum class Aggregate { kIdentity, kSum, kParity };

// A k-row binary database release (k <= 4). Rows are uniform independent
// bits; the BOT row value contributes as 0. With `per_row_flip` set, each
// row's bit is flipped independently with that probability before
// aggregation; absent means a noiseless release.
DatabaseFrame database_release(int rows, std::optional<Rational> per_row_flip,
                               Aggregate aggregate);

// Two independent uniform bit rows, output their XOR. The output alone never
// settles either bit, which makes this the standard witness-construction
// exercise.
AnalysisFrame xor_release_model();

// The released-average parable at desk scale: a target height, two measured
// subgroup members, and the exact subgroup average as output. Ships with the
// attribute of interest and the auxiliary knowledge ("the target is two
// below the average") that turns the harmless release into a disclosure.
struct AverageDisclosureFixture {
  AnalysisFrame frame;
  Proposition phi;             // target_height = 62
  Proposition aux_background;  // target is two below the released average
  std::string closing_output;  // the observation that settles phi given aux
};

AverageDisclosureFixture average_disclosure_model();

// Catalog entry tying a fixture to its declared parameters and, when one is
// claimed, the exact tightest ratio of its headline measurement.
struct MechanismSpec {
  std::string name;
  std::vector<std::pair<std::string, Rational>> parameters;
  std::optional<Rational> nominal_ratio;
  std::string headline;  // the measurement nominal_ratio refers to
  std::function<std::variant<AnalysisFrame, DatabaseFrame>()> build;
};

// Every shipped fixture, in corpus order.
std::vector<MechanismSpec> mechanism_catalog();

}  // namespace caudit

#endif  // CAUDIT_MECHLIB_HPP_
