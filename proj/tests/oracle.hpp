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

#ifndef CAUDIT_TESTS_ORACLE_HPP_
#define CAUDIT_TESTS_ORACLE_HPP_

// Brute-force reference implementations used only by tests. Everything here
// enumerates worlds straight off the background distribution with a
// recursive substitution evaluator; none of it touches the engine's world
// tables, topological order, or checker scans. Slow and obvious on purpose.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "caudit/frames.hpp"
#include "caudit/proposition.hpp"
#include "caudit/rational.hpp"

namespace caudit::oracle {

// Forced values by variable index (simulates do() without building a model).
using Forced = std::map<VarIndex, ValueIndex>;

// Value of one variable in the world determined by `background`, evaluating
// parents recursively by substitution.
ValueIndex value_of(const CausalModel& m, VarIndex v,
                    const Assignment& background, const Forced& forced);

// All worlds with their masses.
std::vector<std::pair<Assignment, Rational>> worlds(const ProbCausalModel& pm,
                                                    const Forced& forced);

// Name-resolving proposition evaluation (no compilation step).
bool eval_prop(const Proposition& p, const CausalModel& m, const Assignment& world);

// Pr[phi | given, forced]; nullopt when the conditioning mass is zero.
std::optional<Rational> probability(const ProbCausalModel& pm, const Forced& forced,
                                    const Proposition& given, const Proposition& phi);

// Tightest directional ratios, folded the brute-force way.
Ratio noninterference_ratio(const AnalysisFrame& f);
Ratio causal_ratio(const AnalysisFrame& f);
Ratio assoc_ratio(const AnalysisFrame& f);
Ratio assoc_on_x_ratio(const AnalysisFrame& f);
Ratio dp_ratio(const DatabaseFrame& f);
Ratio rule80_ratio(const AnalysisFrame& f, const std::string& positive_value);

struct OpennessResult {
  bool consistent = false;
  bool open = false;   // meaningful when consistent
  Rational mass;
};

OpennessResult openness(const ProbCausalModel& pm, const Proposition& context,
                        const Proposition& phi);

// Freshness by the quantified definition: Pr[R=r | phi] equals the marginal
// for every proposition-definable event phi over the other background
// variables with positive mass. Exponential in the background support; only
// for small models.
bool fresh_by_quantification(const ProbCausalModel& pm, VarIndex r);

}  // namespace caudit::oracle

#endif  // CAUDIT_TESTS_ORACLE_HPP_
